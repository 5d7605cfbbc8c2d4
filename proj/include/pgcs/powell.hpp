#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pgcs/objectives.hpp"

namespace pgcs {

/// Settings for Powell's conjugate-direction minimizer.
///
/// Budgets left unset resolve to 1000 * dimension.
struct PowellConfig {
  double xtol = 1e-4;  // relative tolerance of each line minimization
  double ftol = 1e-4;  // relative decrease per sweep that counts as converged
  std::optional<std::uint64_t> max_iters;
  std::optional<std::uint64_t> max_evals;

  void validate() const;
  std::uint64_t iter_budget(std::size_t dimension) const;
  std::uint64_t eval_budget(std::size_t dimension) const;
};

enum class PowellStop { FtolConverged, IterBudget, EvalBudget, NonFinite };

std::string_view to_string(PowellStop stop);

struct PowellOutcome {
  Vector x;
  double f = 0;
  std::uint64_t iters = 0;
  std::uint64_t evals = 0;
  bool converged = false;
  PowellStop reason = PowellStop::FtolConverged;
};

struct LineStep {
  Vector point;
  double value = 0;
  double decrease = 0;
  // Multiple of the direction that was taken; 0 when the point did not move.
  double t = 0;
  bool bracketed = false;
  bool nonfinite = false;
};

// Minimizes f along p + t u, starting the bracket search from t in {0, step}.
// Never returns a point worse than p; a failed bracket leaves p unchanged.
LineStep line_minimize(CountingObjective& f, const Vector& p, double fp, const Vector& u,
                       double xtol, double step = 1.0);

LineStep line_minimize(CountingObjective& f, const Vector& p, const Vector& u,
                       const PowellConfig& config);

// Direction-set minimization from x0 with the coordinate basis as initial
// directions.
//
// Each outer iteration line-minimizes along every direction in turn, then
// along the unit net displacement of the sweep. The displacement replaces the
// not-yet-replaced direction with the largest step in that sweep; replaced
// directions are swept last, oldest first. Once every slot has been replaced
// the cycle starts over on the current set. Stops when the iteration's total
// decrease satisfies
//   2 (f0 - f) <= ftol (|f0| + |f|) + 1e-20.
//
// Budgets are checked after every line minimization, so `evals` may exceed
// the evaluation budget by at most kMaxLineSearchEvals.
PowellOutcome powell_minimize(CountingObjective& f, const Vector& x0, const PowellConfig& config = {});

}  // namespace pgcs
