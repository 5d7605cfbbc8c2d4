#include "pgcs/gcs.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "pgcs/errors.hpp"

namespace pgcs {

void GcsConfig::validate() const {
  if (max_outer_iters < 1) throw ConfigError("max_outer_iters must be >= 1");
  if (std::isnan(target)) throw ConfigError("target must not be NaN");
  wave.validate();
}

std::string_view to_string(RunStop stop) {
  return stop == RunStop::Success ? "success" : "iter-budget";
}

Vector propose(const GcsState& state, GaussianSampler& sampler, std::size_t d) {
  Vector candidate = sampler.sample(d, state.sd);
  for (std::size_t i = 0; i < d; ++i) candidate[i] += state.current_pos[i];
  return candidate;
}

StepReport gcs_step(GcsState& state, const WaveCache& cache, CountingObjective& objective,
                    GaussianSampler& sampler, const Refiner& refiner) {
  StepReport report;
  Vector candidate = propose(state, sampler, state.current_pos.size());
  double value = objective(candidate);
  report.candidate_value = value;

  if (std::isfinite(value) && value < state.current_val) {
    if (refiner) {
      Refinement polished = refiner(objective, candidate);
      if (polished.f < value) {
        candidate = std::move(polished.x);
        value = polished.f;
        report.refined = true;
      }
    }
    state.current_pos = std::move(candidate);
    state.current_val = value;
    report.accepted = true;
  } else {
    ++state.crunch_step;
  }

  if (state.crunch_step % cache.period() == 0) state.crunch_step = 0;
  state.sd = cache.sd_at(state.crunch_step);
  return report;
}

RunResult run_gcs(const ObjectiveSpec& objective, const Vector& x0, const GcsConfig& config,
                  const Refiner& refiner, const StepObserver& observe) {
  config.validate();
  if (x0.size() != objective.dimension) {
    throw ConfigError("start point has " + std::to_string(x0.size()) + " coordinates, objective " +
                      objective.name + " expects " + std::to_string(objective.dimension));
  }
  const auto started = std::chrono::steady_clock::now();
  const WaveCache cache = build_cache(config.wave);
  CountingObjective counter(objective);
  GaussianSampler sampler(config.seed);

  GcsState state;
  state.current_pos = x0;
  state.current_val = counter(x0);
  state.sd = config.wave.lower;

  RunResult result;
  result.seed = config.seed;
  while (state.iter < config.max_outer_iters) {
    const StepReport report = gcs_step(state, cache, counter, sampler, refiner);
    ++state.iter;
    if (report.accepted) ++result.accepted;
    // Every improving candidate is handed to the refiner, adopted or not.
    if (report.accepted && refiner) ++result.refinements;
    if (observe) observe(state, report);
    if (state.current_val < config.target) {
      result.reason = RunStop::Success;
      break;
    }
  }

  result.final_pos = std::move(state.current_pos);
  result.final_val = state.current_val;
  result.outer_iters = state.iter;
  result.evals = counter.count();
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace pgcs
