#include "pgcs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

#include "pgcs/errors.hpp"

namespace pgcs {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Powell: return "powell";
    case Method::Gcs: return "gcs";
    case Method::Pgcs: return "pgcs";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "powell") return Method::Powell;
  if (name == "gcs") return Method::Gcs;
  if (name == "pgcs" || name == "p-gcs") return Method::Pgcs;
  throw LookupError("unknown method '" + std::string(name) + "' (expected powell, gcs or pgcs)");
}

std::vector<std::uint64_t> default_seeds() { return {1, 2, 3, 4, 5}; }

void ExperimentConfig::validate() const {
  const ObjectiveSpec spec = make_objective(function, dimension);
  if (start.size() != spec.dimension) {
    throw ConfigError("start has " + std::to_string(start.size()) + " coordinates but dimension is " +
                      std::to_string(dimension));
  }
  for (double v : start) {
    if (!std::isfinite(v)) throw ConfigError("start point must be finite");
  }
  if (methods.empty()) throw ConfigError("no methods selected");
  const bool stochastic = std::any_of(methods.begin(), methods.end(), [](Method m) { return m != Method::Powell; });
  if (stochastic && seeds.empty()) throw ConfigError("gcs and pgcs need at least one seed");
  gcs_config(0).validate();
  powell.validate();
}

ExperimentConfig ExperimentConfig::resolved() const {
  ExperimentConfig out = *this;
  out.powell.max_iters = powell.iter_budget(dimension);
  out.powell.max_evals = powell.eval_budget(dimension);
  return out;
}

GcsConfig ExperimentConfig::gcs_config(std::uint64_t seed) const {
  GcsConfig out;
  out.target = target;
  out.max_outer_iters = max_outer_iters;
  out.wave = wave;
  out.seed = seed;
  return out;
}

HybridConfig ExperimentConfig::hybrid_config(std::uint64_t seed) const {
  return {gcs_config(seed), powell};
}

ExperimentConfig make_preset(const std::string& name) {
  ExperimentConfig config;
  config.preset = name;
  if (name == "bench1") {
    config.function = "f1";
    config.dimension = 1;
    config.start = {1200.0};
  } else if (name == "bench2") {
    config.function = "f2";
    config.dimension = 2;
    config.start = {600.0, 600.0};
  } else if (name == "bench3") {
    config.function = "f3";
    config.dimension = 12;
    config.start = Vector(12, 200.0);
  } else {
    throw LookupError("unknown preset '" + name + "' (expected bench1, bench2 or bench3)");
  }
  return config;
}

Vector default_start(const std::string& function, std::size_t dimension) {
  if (function == "f1") return {1200.0};
  if (function == "f2") return {600.0, 600.0};
  if (function == "f3") return Vector(dimension, 200.0);
  throw LookupError("unknown objective '" + function + "'");
}

std::vector<PresetInfo> list_presets() {
  return {
      {"bench1", "f1 (single basin, shallow trap near 1198.58), start 1200"},
      {"bench2", "f2 (cosine ripples on an exponential funnel), start (600, 600)"},
      {"bench3", "f3 (12-d exponential funnel, flat far field), start all-200"},
  };
}

namespace {

struct Job {
  Method method;
  std::uint64_t seed;
};

std::vector<Job> plan(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  for (Method m : config.methods) {
    if (m == Method::Powell) {
      jobs.push_back({m, 0});
    } else {
      for (std::uint64_t s : config.seeds) jobs.push_back({m, s});
    }
  }
  return jobs;
}

ReportRow execute(const ExperimentConfig& config, const ObjectiveSpec& spec, const Job& job) {
  ReportRow row;
  row.method = std::string(to_string(job.method));
  row.function = config.function;
  row.dimension = config.dimension;

  if (job.method == Method::Powell) {
    const auto started = std::chrono::steady_clock::now();
    CountingObjective counter(spec);
    PowellOutcome out = powell_minimize(counter, config.start, config.powell);
    row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    row.final_position = std::move(out.x);
    row.final_value = out.f;
    row.outer_iterations = out.iters;
    row.evaluations = counter.count();
    row.termination_reason = std::string(to_string(out.reason));
    return row;
  }

  const RunResult r = job.method == Method::Pgcs ? run_pgcs(spec, config.start, config.hybrid_config(job.seed))
                                                 : run_gcs(spec, config.start, config.gcs_config(job.seed));
  row.seed = job.seed;
  row.final_position = r.final_pos;
  row.final_value = r.final_val;
  row.outer_iterations = r.outer_iters;
  row.evaluations = r.evals;
  row.refinements = r.refinements;
  row.wall_time = r.wall_time;
  row.termination_reason = std::string(to_string(r.reason));
  return row;
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const ObjectiveSpec spec = make_objective(config.function, config.dimension);
  const std::vector<Job> jobs = plan(config);
  std::vector<ReportRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      rows[k] = execute(config, spec, jobs[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<ReportRow> run_experiment_serial(const ExperimentConfig& config) {
  config.validate();
  const ObjectiveSpec spec = make_objective(config.function, config.dimension);
  std::vector<ReportRow> rows;
  for (const Job& job : plan(config)) rows.push_back(execute(config, spec, job));
  return rows;
}

}  // namespace pgcs
