// Command-line front end: run experiment matrices, reproduce the benchmark
// tables, list presets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgcs/errors.hpp"
#include "pgcs/experiment.hpp"
#include "pgcs/report.hpp"

namespace {

using namespace pgcs;

double parse_real(const std::string& text, const char* flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(flag) + ": not a number: " + text);
  }
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct RunFlags {
  std::string config_path;
  std::string preset;
  std::string function;
  std::optional<std::size_t> dim;
  std::string start;
  std::string methods;
  std::string seeds;
  std::string target;
  std::optional<std::uint64_t> max_iters;
  std::optional<std::size_t> period;
  std::string wave_a;
  std::string wave_b;
  std::string sd_cap;
  std::optional<double> xtol;
  std::optional<double> ftol;
  std::optional<std::uint64_t> powell_max_iters;
  std::optional<std::uint64_t> powell_max_evals;
  std::string output = "-";
  std::string format = "json";
  bool table = false;
};

ExperimentConfig resolve(const RunFlags& f) {
  ExperimentConfig c;
  if (!f.config_path.empty()) {
    c = load_config(f.config_path);
  } else if (!f.preset.empty()) {
    c = make_preset(f.preset);
  }
  if (!f.function.empty()) {
    c.function = f.function;
    c.preset.clear();
    if (!f.dim) c.dimension = default_dimension(c.function);
  }
  if (f.dim) c.dimension = *f.dim;
  if (!f.start.empty()) {
    const auto parts = split(f.start);
    if (parts.size() == 1 && parts[0].rfind("bench", 0) == 0) {
      c.start = make_preset(parts[0]).start;
    } else if (parts.size() == 1 && c.dimension > 1) {
      c.start.assign(c.dimension, parse_real(parts[0], "--start"));
    } else {
      c.start.clear();
      for (const auto& p : parts) c.start.push_back(parse_real(p, "--start"));
    }
  } else if (c.start.size() != c.dimension || !f.function.empty()) {
    c.start = default_start(c.function, c.dimension);
  }
  if (!f.methods.empty()) {
    c.methods.clear();
    for (const auto& m : split(f.methods)) c.methods.push_back(parse_method(m));
  }
  if (!f.seeds.empty()) {
    c.seeds.clear();
    for (const auto& s : split(f.seeds)) c.seeds.push_back(static_cast<std::uint64_t>(parse_real(s, "--seed")));
  }
  if (!f.target.empty()) c.target = parse_real(f.target, "--target");
  if (f.max_iters) c.max_outer_iters = *f.max_iters;
  if (f.period) c.wave.period = *f.period;
  if (!f.wave_a.empty()) c.wave.lower = parse_real(f.wave_a, "--wave-a");
  if (!f.wave_b.empty()) c.wave.upper = parse_real(f.wave_b, "--wave-b");
  if (!f.sd_cap.empty()) c.wave.sd_cap = parse_real(f.sd_cap, "--sd-cap");
  if (f.xtol) c.powell.xtol = *f.xtol;
  if (f.ftol) c.powell.ftol = *f.ftol;
  if (f.powell_max_iters) c.powell.max_iters = *f.powell_max_iters;
  if (f.powell_max_evals) c.powell.max_evals = *f.powell_max_evals;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Powell / Gaussian Crunching Search / P-GCS benchmark harness"};
  app.require_subcommand(1);

  RunFlags flags;
  auto* run = app.add_subcommand("run", "Run one experiment matrix and emit a report");
  run->add_option("--config", flags.config_path, "JSON config (same schema as a report's config_echo)");
  run->add_option("--preset", flags.preset, "bench1 | bench2 | bench3");
  run->add_option("--function", flags.function, "f1 | f2 | f3");
  run->add_option("--dim", flags.dim, "Dimension (f3 only; f1 = 1, f2 = 2)");
  run->add_option("--start", flags.start, "Comma-separated start point, one value to broadcast, or a preset name");
  run->add_option("--method", flags.methods, "Comma-separated subset of powell,gcs,pgcs");
  run->add_option("--seed", flags.seeds, "Comma-separated seeds for gcs/pgcs");
  run->add_option("--target", flags.target, "Success threshold on the objective");
  run->add_option("--max-iters", flags.max_iters, "Proposal budget per stochastic run");
  run->add_option("--period", flags.period, "Crunch period (wave cycle length)");
  run->add_option("--wave-a", flags.wave_a, "Wave lower bound");
  run->add_option("--wave-b", flags.wave_b, "Wave upper bound (accepts inf)");
  run->add_option("--sd-cap", flags.sd_cap, "Finite sd used where the wave is infinite");
  run->add_option("--xtol", flags.xtol, "Powell line-search tolerance");
  run->add_option("--ftol", flags.ftol, "Powell convergence tolerance");
  run->add_option("--powell-max-iters", flags.powell_max_iters, "Powell outer-iteration budget");
  run->add_option("--powell-max-evals", flags.powell_max_evals, "Powell evaluation budget");
  run->add_option("--output", flags.output, "Report path, - for stdout");
  run->add_option("--format", flags.format, "json | csv");
  run->add_flag("--table", flags.table, "Also print a comparison table to stderr");

  std::string tables_output = "pgcs_tables.json";
  std::string tables_seeds;
  auto* tables = app.add_subcommand("tables", "Reproduce the three benchmark comparison tables");
  tables->add_option("--output", tables_output, "Where to write the JSON report, - for stdout");
  tables->add_option("--seed", tables_seeds, "Comma-separated seed batch (default 1,2,3,4,5)");

  auto* list = app.add_subcommand("list", "List presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const ExperimentConfig config = resolve(flags);
      const ReportFormat format = parse_format(flags.format);
      const auto rows = run_experiment(config);
      emit_report(rows, config, format, flags.output);
      if (flags.table) std::cerr << format_table(config, rows);
    } else if (tables->parsed()) {
      std::vector<std::uint64_t> seeds = default_seeds();
      if (!tables_seeds.empty()) {
        seeds.clear();
        for (const auto& s : split(tables_seeds)) seeds.push_back(static_cast<std::uint64_t>(parse_real(s, "--seed")));
      }
      const PaperTables result = reproduce_paper_tables(seeds);
      std::cout << result.text;
      const std::string text = tables_json(result).dump(2) + "\n";
      if (tables_output == "-") {
        std::cout << text;
      } else {
        std::ofstream out(tables_output, std::ios::trunc);
        if (!out || !(out << text)) throw IoError("cannot write tables report to: " + tables_output);
        std::cout << "report written to " << tables_output << "\n";
      }
    } else if (list->parsed()) {
      for (const auto& p : list_presets()) {
        std::cout << p.name << "  " << p.description << "\n";
      }
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
