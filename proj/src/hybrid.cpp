#include "pgcs/hybrid.hpp"

namespace pgcs {

Refiner powell_refiner(const PowellConfig& config) {
  return [config](CountingObjective& f, const Vector& start) {
    PowellOutcome out = powell_minimize(f, start, config);
    return Refinement{std::move(out.x), out.f};
  };
}

RunResult run_pgcs(const ObjectiveSpec& objective, const Vector& x0, const HybridConfig& config,
                   const StepObserver& observe) {
  config.validate();
  return run_gcs(objective, x0, config.gcs, powell_refiner(config.powell), observe);
}

}  // namespace pgcs
