#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "pgcs/bounded_wave.hpp"
#include "pgcs/gaussian_sampler.hpp"
#include "pgcs/objectives.hpp"

namespace pgcs {

struct GcsConfig {
  double target = 0.05;
  std::uint64_t max_outer_iters = 500000;
  WaveParams wave;
  std::uint64_t seed = 1;

  void validate() const;
};

struct GcsState {
  Vector current_pos;
  double current_val = 0;
  std::uint64_t crunch_step = 0;
  std::uint64_t iter = 0;
  double sd = 0;
};

struct StepReport {
  bool accepted = false;
  bool refined = false;
  double candidate_value = 0;
};

struct Refinement {
  Vector x;
  double f = 0;
};

// Local search started from an improving candidate. Evaluations must go
// through the supplied counter so they are included in the run's tally.
using Refiner = std::function<Refinement(CountingObjective&, const Vector&)>;
using StepObserver = std::function<void(const GcsState&, const StepReport&)>;

enum class RunStop { Success, IterBudget };

std::string_view to_string(RunStop stop);

struct RunResult {
  Vector final_pos;
  double final_val = 0;
  std::uint64_t outer_iters = 0;
  std::uint64_t accepted = 0;
  std::uint64_t refinements = 0;
  std::uint64_t evals = 0;
  double wall_time = 0;  // seconds, monotonic clock
  RunStop reason = RunStop::IterBudget;
  std::uint64_t seed = 0;
};

// current_pos plus d independent Normal(0, state.sd) draws.
Vector propose(const GcsState& state, GaussianSampler& sampler, std::size_t d);

// One crunch step.
//
// An improving candidate (strictly below current_val) is optionally handed to
// the refiner, whose result is kept only when strictly better, and becomes the
// new current point. Acceptance leaves crunch_step where it is: the wave phase
// holds while the search keeps improving. A rejection advances crunch_step by
// one, wrapping to 0 at a multiple of the period. The sd for the next step is
// then read from the cache. Non-finite candidate values count as rejections.
StepReport gcs_step(GcsState& state, const WaveCache& cache, CountingObjective& objective,
                    GaussianSampler& sampler, const Refiner& refiner = {});

// Repeats gcs_step from x0 (initial sd = wave.lower) until the current value
// drops below config.target or max_outer_iters proposals have been made. The
// target is checked after each step, so at least one proposal is always made.
RunResult run_gcs(const ObjectiveSpec& objective, const Vector& x0, const GcsConfig& config,
                  const Refiner& refiner = {}, const StepObserver& observe = {});

}  // namespace pgcs
