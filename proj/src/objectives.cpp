#include "pgcs/objectives.hpp"

#include <cmath>

#include "pgcs/errors.hpp"

namespace pgcs {

double eval_f1(double x) {
  const double shift = -20.0 + x / 60.0;
  const double scaled = x / 60.0;
  return (1.0 + 19.0 - 19.0 * std::exp(-(shift * shift) / 9.0)) * (scaled * scaled);
}

double eval_f2(double x, double y) {
  return -kLambda * std::exp(-kMu * std::sqrt(x * x + y * y)) + kLambda - std::cos(x) - std::cos(y) + 2.0;
}

double eval_f3(std::span<const double> x) {
  if (x.empty()) throw DomainError("f3 needs at least one coordinate");
  double sum_sq = 0.0;
  for (double v : x) sum_sq += v * v;
  return -kLambda * std::exp(-kMu * std::sqrt(sum_sq)) + kLambda;
}

std::size_t default_dimension(const std::string& name) {
  if (name == "f1") return 1;
  if (name == "f2") return 2;
  if (name == "f3") return 12;
  throw LookupError("unknown objective '" + name + "' (expected f1, f2 or f3)");
}

ObjectiveSpec make_objective(const std::string& name, std::size_t dimension) {
  const std::size_t fixed = default_dimension(name);
  if (dimension == 0 || (name != "f3" && dimension != fixed)) {
    throw ConfigError("objective " + name + " does not accept dimension " + std::to_string(dimension));
  }
  if (name == "f1") {
    return {name, 1, [](std::span<const double> x) { return eval_f1(x[0]); }};
  }
  if (name == "f2") {
    return {name, 2, [](std::span<const double> x) { return eval_f2(x[0], x[1]); }};
  }
  return {name, dimension, [](std::span<const double> x) { return eval_f3(x); }};
}

}  // namespace pgcs
