#pragma once

#include "pgcs/gcs.hpp"
#include "pgcs/powell.hpp"

namespace pgcs {

struct HybridConfig {
  GcsConfig gcs;
  PowellConfig powell;

  void validate() const {
    gcs.validate();
    powell.validate();
  }
};

// Refiner that runs powell_minimize from the candidate.
Refiner powell_refiner(const PowellConfig& config);

// P-GCS: the crunching search with Powell polishing every improving candidate.
// Powell is deterministic, so the Gaussian stream is identical to a plain GCS
// run with the same seed up to the first refinement that changes a point.
RunResult run_pgcs(const ObjectiveSpec& objective, const Vector& x0, const HybridConfig& config,
                   const StepObserver& observe = {});

}  // namespace pgcs
