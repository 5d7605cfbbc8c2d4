#include "pgcs/bounded_wave.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pgcs/errors.hpp"

namespace pgcs {

namespace {
constexpr double kPi = std::numbers::pi;
}

void WaveParams::validate() const {
  if (!(lower >= 0.0) || std::isinf(lower)) {
    throw ConfigError("wave lower bound must be finite and >= 0, got " + std::to_string(lower));
  }
  if (!(upper >= lower)) {
    throw ConfigError("wave upper bound must be >= lower bound");
  }
  if (period < 2) {
    throw ConfigError("wave period must be >= 2, got " + std::to_string(period));
  }
  if (!std::isfinite(sd_cap) || sd_cap <= 0.0) {
    throw ConfigError("sd_cap must be finite and positive");
  }
}

double tan_sq_map(double x, double cap) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("tan_sq_map: phase must lie in (0, 1), got " + std::to_string(x));
  }
  const double r = std::tan(kPi * x - kPi / 2);
  const double v = r * r;
  if (!std::isfinite(v) || v > cap) return cap;
  return v;
}

double cot_transform(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("cot_transform: argument must be >= 0");
  }
  if (std::isinf(x)) return 0.0;
  return (kPi / 2 - std::atan(std::sqrt(x))) / kPi;
}

double phase_interp(double x, double a, double b) {
  const double ta = cot_transform(a);
  const double tb = cot_transform(b);
  return ((std::cos(2 * kPi * x - kPi) + 1) / 2) * (tb - ta) + ta;
}

double wave(double x, double a, double b, double cap) {
  const double s = phase_interp(x, a, b);
  // s only touches 0 at the infinite peak.
  if (s <= 0.0) return cap;
  return tan_sq_map(s, cap);
}

WaveCache build_cache(const WaveParams& params) {
  params.validate();
  const auto n = static_cast<std::ptrdiff_t>(params.period);
  std::vector<double> values(params.period);
  const double period = static_cast<double>(params.period);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        wave(static_cast<double>(i) / period, params.lower, params.upper, params.sd_cap);
  }
  return WaveCache(params, std::move(values));
}

WaveCache build_cache_serial(const WaveParams& params) {
  params.validate();
  std::vector<double> values;
  values.reserve(params.period);
  const double period = static_cast<double>(params.period);
  for (std::size_t i = 0; i < params.period; ++i) {
    values.push_back(wave(static_cast<double>(i) / period, params.lower, params.upper, params.sd_cap));
  }
  return WaveCache(params, std::move(values));
}

}  // namespace pgcs
