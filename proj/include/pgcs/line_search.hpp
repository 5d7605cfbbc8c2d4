#pragma once

#include <cstdint>
#include <functional>

namespace pgcs {

using LineFunction = std::function<double(double)>;

inline constexpr int kMaxBracketExpansions = 50;
inline constexpr int kMaxBrentIterations = 100;
// Absolute floor added to the relative Brent tolerance.
inline constexpr double kBrentAbsTol = 1e-11;
// Upper bound on probes made by one bracket + Brent pass.
inline constexpr int kMaxLineSearchEvals = 3 + 2 * kMaxBracketExpansions + kMaxBrentIterations;

// Three abscissae with fb <= fa and fb <= fc; b lies strictly between a and c
// (either orientation).
struct Bracket {
  double a = 0, b = 0, c = 0;
  double fa = 0, fb = 0, fc = 0;
};

struct BracketResult {
  bool found = false;
  Bracket bracket;
  // Lowest point probed. On failure this is the most downhill point reached.
  double best_t = 0;
  double best_f = 0;
  int evals = 0;
};

// Downhill search from (t0, t1) with golden-ratio expansion and parabolic
// extrapolation, limited to `max_expansions` rounds. Expansion stops as soon
// as phi(c) >= phi(b), so a numerically flat line yields a degenerate bracket
// rather than a failure.
BracketResult bracket_minimum(const LineFunction& phi, double t0, double t1,
                              int max_expansions = kMaxBracketExpansions);

// Same, for callers that already know phi(t0).
BracketResult bracket_minimum(const LineFunction& phi, double t0, double f0, double t1,
                              int max_expansions = kMaxBracketExpansions);

struct LineMinimum {
  double t = 0;
  double f = 0;
  int iterations = 0;
  int evals = 0;
  // False when the iteration cap was hit; t/f are still the best point seen.
  bool converged = false;
};

// Brent's parabolic interpolation with golden-section fallback inside a
// bracket. Stops when |t - midpoint| <= 2 tol1 - (hi - lo)/2 where
// tol1 = tol |t| + kBrentAbsTol.
LineMinimum brent_line_min(const LineFunction& phi, const Bracket& bracket, double tol,
                           int max_iters = kMaxBrentIterations);

}  // namespace pgcs
