#include "pgcs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <limits>
#include <sstream>
#include <string_view>

#include "pgcs/errors.hpp"

namespace pgcs {

using nlohmann::json;

namespace {

json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json& j, const char* key) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-infinity") return -std::numeric_limits<double>::infinity();
    throw ConfigError(std::string("field '") + key + "' is not a number: " + s);
  }
  if (!j.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  return j.get<double>();
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected json or csv)");
}

json config_to_json(const ExperimentConfig& config) {
  const ExperimentConfig c = config.resolved();
  json methods = json::array();
  for (Method m : c.methods) methods.push_back(std::string(to_string(m)));
  json j = {
      {"function", c.function},
      {"dimension", c.dimension},
      {"start", c.start},
      {"methods", methods},
      {"seeds", c.seeds},
      {"target", number(c.target)},
      {"max_outer_iters", c.max_outer_iters},
      {"wave", {{"a", number(c.wave.lower)}, {"b", number(c.wave.upper)}, {"period", c.wave.period},
                {"sd_cap", number(c.wave.sd_cap)}}},
      {"powell", {{"xtol", c.powell.xtol}, {"ftol", c.powell.ftol}, {"max_iters", *c.powell.max_iters},
                  {"max_evals", *c.powell.max_evals}}},
  };
  if (!c.preset.empty()) j["preset"] = c.preset;
  return j;
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> known, const std::string& where) {
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

}  // namespace

ExperimentConfig config_from_json(const json& input) {
  if (!input.is_object()) throw ConfigError("experiment config must be a JSON object");
  // A whole report replays its own config.
  const json& j = input.contains("config_echo") ? input.at("config_echo") : input;
  if (!j.is_object()) throw ConfigError("config_echo must be a JSON object");
  reject_unknown_keys(j,
                      {"preset", "function", "dimension", "start", "methods", "seeds", "target", "max_outer_iters",
                       "wave", "powell"},
                      "experiment config");
  if (j.contains("wave") && j.at("wave").is_object())
    reject_unknown_keys(j.at("wave"), {"a", "b", "period", "sd_cap"}, "wave");
  if (j.contains("powell") && j.at("powell").is_object())
    reject_unknown_keys(j.at("powell"), {"xtol", "ftol", "max_iters", "max_evals"}, "powell");
  ExperimentConfig c;
  try {
    if (j.contains("preset")) c = make_preset(j.at("preset").get<std::string>());
    if (j.contains("function")) {
      c.function = j.at("function").get<std::string>();
      if (!j.contains("preset")) c.dimension = default_dimension(c.function);
    }
    if (j.contains("dimension")) c.dimension = j.at("dimension").get<std::size_t>();
    if (j.contains("start")) {
      c.start = j.at("start").get<Vector>();
    } else if (c.start.size() != c.dimension || !j.contains("preset")) {
      c.start = default_start(c.function, c.dimension);
    }
    if (j.contains("methods")) {
      c.methods.clear();
      for (const auto& m : j.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
    }
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("target")) c.target = read_number(j.at("target"), "target");
    if (j.contains("max_outer_iters")) c.max_outer_iters = j.at("max_outer_iters").get<std::uint64_t>();
    if (j.contains("wave")) {
      const json& w = j.at("wave");
      if (w.contains("a")) c.wave.lower = read_number(w.at("a"), "wave.a");
      if (w.contains("b")) c.wave.upper = read_number(w.at("b"), "wave.b");
      if (w.contains("period")) c.wave.period = w.at("period").get<std::size_t>();
      if (w.contains("sd_cap")) c.wave.sd_cap = read_number(w.at("sd_cap"), "wave.sd_cap");
    }
    if (j.contains("powell")) {
      const json& p = j.at("powell");
      if (p.contains("xtol")) c.powell.xtol = read_number(p.at("xtol"), "powell.xtol");
      if (p.contains("ftol")) c.powell.ftol = read_number(p.at("ftol"), "powell.ftol");
      if (p.contains("max_iters") && !p.at("max_iters").is_null()) c.powell.max_iters = p.at("max_iters").get<std::uint64_t>();
      if (p.contains("max_evals") && !p.at("max_evals").is_null()) c.powell.max_evals = p.at("max_evals").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed experiment config: ") + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

json row_to_json(const ReportRow& row) {
  return {
      {"method", row.method},
      {"function", row.function},
      {"dimension", row.dimension},
      {"seed", row.seed ? json(*row.seed) : json(nullptr)},
      {"final_position", row.final_position},
      {"final_value", row.final_value},
      {"outer_iterations", row.outer_iterations},
      {"evaluations", row.evaluations},
      {"refinements", row.refinements},
      {"wall_time", row.wall_time},
      {"termination_reason", row.termination_reason},
  };
}

json report_json(const std::vector<ReportRow>& rows, const ExperimentConfig& config) {
  json out_rows = json::array();
  for (const auto& r : rows) out_rows.push_back(row_to_json(r));
  return {{"schema_version", kReportSchemaVersion}, {"config_echo", config_to_json(config)}, {"rows", out_rows}};
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.method << ',' << r.function << ',' << r.dimension << ',';
    if (r.seed) out << *r.seed;
    out << ',';
    for (std::size_t i = 0; i < r.final_position.size(); ++i) {
      if (i) out << ';';
      out << fmt17(r.final_position[i]);
    }
    out << ',' << fmt17(r.final_value) << ',' << r.outer_iterations << ',' << r.evaluations << ','
        << r.refinements << ',' << fmt17(r.wall_time) << ',' << r.termination_reason << '\n';
  }
  return out.str();
}

void emit_report(const std::vector<ReportRow>& rows, const ExperimentConfig& config, ReportFormat format,
                 const std::string& destination) {
  if (rows.empty()) throw ConfigError("refusing to write an empty report");
  const std::string text = format == ReportFormat::Json ? report_json(rows, config).dump(2) + "\n" : report_csv(rows);
  if (destination.empty() || destination == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(destination, std::ios::trunc);
  if (!out) throw IoError("cannot open report destination for writing: " + destination);
  out << text;
  out.flush();
  if (!out) throw IoError("failed while writing report to: " + destination);
}

std::string format_table(const ExperimentConfig& config, const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << (config.preset.empty() ? config.function : config.preset) << " (" << config.function << ", d = "
      << config.dimension << ")\n";
  out << "Method   Optima [position..., value]\n";

  auto render = [](const ReportRow& r) {
    std::string s = "[";
    for (double v : r.final_position) s += fmt_short(v) + ", ";
    s += fmt_short(r.final_value) + "]";
    return s;
  };

  std::vector<std::string> summaries;
  for (const char* label : {"pgcs", "gcs", "powell"}) {
    std::vector<const ReportRow*> mine;
    for (const auto& r : rows) {
      if (r.method == label) mine.push_back(&r);
    }
    if (mine.empty()) continue;
    std::stable_sort(mine.begin(), mine.end(),
                     [](const ReportRow* a, const ReportRow* b) { return a->final_value < b->final_value; });
    const ReportRow& shown = *mine[(mine.size() - 1) / 2];
    const std::string name = std::string(label) == "pgcs" ? "P-GCS" : std::string(label) == "gcs" ? "GCS" : "Powell";
    char head[16];
    std::snprintf(head, sizeof head, "%-8s ", name.c_str());
    out << head << render(shown);
    if (shown.seed) out << "  (seed " << *shown.seed << ")";
    out << "  time " << fmt_short(shown.wall_time) << " s\n";
    if (mine.size() > 1) {
      std::size_t hits = 0;
      for (const auto* r : mine) hits += r->termination_reason == "success";
      summaries.push_back(name + ": " + std::to_string(hits) + "/" + std::to_string(mine.size()) +
                          " runs reached target, best " + fmt_short(mine.front()->final_value) + ", worst " +
                          fmt_short(mine.back()->final_value));
    }
  }
  for (const auto& s : summaries) out << "  " << s << '\n';
  return out.str();
}

PaperTables reproduce_paper_tables(const std::vector<std::uint64_t>& seeds) {
  PaperTables tables;
  for (const char* name : {"bench1", "bench2", "bench3"}) {
    ExperimentConfig config = make_preset(name);
    config.seeds = seeds;
    auto rows = run_experiment(config);
    tables.text += format_table(config, rows) + "\n";
    tables.benchmarks.emplace_back(std::move(config), std::move(rows));
  }
  return tables;
}

json tables_json(const PaperTables& tables) {
  json benches = json::array();
  for (const auto& [config, rows] : tables.benchmarks) benches.push_back(report_json(rows, config));
  return {{"schema_version", kReportSchemaVersion}, {"benchmarks", benches}};
}

}  // namespace pgcs
