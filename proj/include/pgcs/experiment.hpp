#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgcs/hybrid.hpp"

namespace pgcs {

enum class Method { Powell, Gcs, Pgcs };

std::string_view to_string(Method method);
// Accepts "powell", "gcs", "pgcs" (also "p-gcs"); throws LookupError otherwise.
Method parse_method(std::string_view name);

/// One experiment matrix: a single objective and start point, any subset of
/// methods, and a seed batch for the stochastic ones.
struct ExperimentConfig {
  std::string preset;  // empty when built from flags
  std::string function = "f3";
  std::size_t dimension = 12;
  Vector start = Vector(12, 200.0);
  std::vector<Method> methods = {Method::Powell, Method::Gcs, Method::Pgcs};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  double target = 0.05;
  std::uint64_t max_outer_iters = 500000;
  WaveParams wave;
  PowellConfig powell;

  // Throws ConfigError/LookupError. Called by run_experiment before any run.
  void validate() const;

  // Copy with every optional filled in (Powell budgets become 1000 * dimension).
  ExperimentConfig resolved() const;

  GcsConfig gcs_config(std::uint64_t seed) const;
  HybridConfig hybrid_config(std::uint64_t seed) const;
};

struct PresetInfo {
  std::string name;
  std::string description;
};

// "bench1": f1 from 1200; "bench2": f2 from (600, 600); "bench3": f3 in 12-d
// from all-200. Everything else takes the module defaults.
ExperimentConfig make_preset(const std::string& name);

// Benchmark start point for a function: 1200 for f1, (600, 600) for f2,
// all-200 for f3.
Vector default_start(const std::string& function, std::size_t dimension);
std::vector<PresetInfo> list_presets();

// Default seed batch for the stochastic methods.
std::vector<std::uint64_t> default_seeds();

struct ReportRow {
  std::string method;
  std::string function;
  std::size_t dimension = 0;
  std::optional<std::uint64_t> seed;  // empty for Powell
  Vector final_position;
  double final_value = 0;
  std::uint64_t outer_iterations = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t refinements = 0;
  double wall_time = 0;
  std::string termination_reason;
};

// Runs every (method, seed) pair; Powell runs once regardless of the seeds.
// Rows are ordered by method (config order) and then seed. Runs are spread
// over OpenMP threads; each one is independent, so the rows match
// run_experiment_serial apart from wall_time.
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

// Single-threaded reference for run_experiment.
std::vector<ReportRow> run_experiment_serial(const ExperimentConfig& config);

}  // namespace pgcs
