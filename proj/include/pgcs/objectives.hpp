#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pgcs {

using Vector = std::vector<double>;

// Pure scalar objective over a point of fixed dimension.
using Evaluator = std::function<double(std::span<const double>)>;

// Constants shared by the radial benchmarks f2 and f3.
inline constexpr double kLambda = 15.0;
inline constexpr double kMu = 0.05;

// Single-basin benchmark with a shallow local minimum near x = 1198.58.
double eval_f1(double x);

// Bivariate exponential funnel with cosine ripples; global minimum 0 at the origin.
double eval_f2(double x, double y);

// Radial exponential funnel in any dimension >= 1. Throws DomainError on an
// empty point.
double eval_f3(std::span<const double> x);

struct ObjectiveSpec {
  std::string name;
  std::size_t dimension = 0;
  Evaluator evaluator;

  double operator()(std::span<const double> x) const { return evaluator(x); }
};

// Known names are "f1" (dimension 1), "f2" (dimension 2) and "f3" (any
// dimension >= 1). Unknown name -> LookupError, bad dimension -> ConfigError.
ObjectiveSpec make_objective(const std::string& name, std::size_t dimension);

// Default benchmark dimension for a name (f3 -> 12).
std::size_t default_dimension(const std::string& name);

/// Wraps an objective and tallies every call routed through it.
///
/// Not thread-safe; a counter belongs to a single run.
class CountingObjective {
 public:
  explicit CountingObjective(const ObjectiveSpec& spec) : spec_(&spec) {}

  double operator()(std::span<const double> x) {
    ++count_;
    return spec_->evaluator(x);
  }

  std::uint64_t count() const { return count_; }
  std::size_t dimension() const { return spec_->dimension; }
  const ObjectiveSpec& spec() const { return *spec_; }

 private:
  const ObjectiveSpec* spec_;
  std::uint64_t count_ = 0;
};

}  // namespace pgcs
