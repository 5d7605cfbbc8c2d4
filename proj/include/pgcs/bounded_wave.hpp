#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace pgcs {

/// Bounds and sampling period of the Bounded Wave standard-deviation schedule.
///
/// The schedule oscillates between `lower` (at phase 0) and `upper` (at phase
/// 1/2). `upper` may be +infinity, in which case the peak is replaced by
/// `sd_cap`.
struct WaveParams {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  std::size_t period = 5000;
  double sd_cap = 1e30;

  // Throws ConfigError unless 0 <= lower <= upper, period >= 2 and sd_cap is
  // finite and positive.
  void validate() const;
};

// t(x) = tan(pi x - pi/2)^2 on the open interval (0, 1). Values that overflow
// or exceed `cap` come back as `cap`.
double tan_sq_map(double x, double cap = std::numeric_limits<double>::infinity());

// T(x) = arccot(sqrt(x)) / pi for x >= 0; T(+inf) == 0 exactly.
double cot_transform(double x);

// s(x, a, b): cosine interpolation between T(a) (x = 0) and T(b) (x = 1/2).
double phase_interp(double x, double a, double b);

// w(x, a, b) = t(s(x, a, b)), capped at `cap`. The phase s can only reach the
// pole of t when b is infinite, and that case returns `cap`.
double wave(double x, double a, double b, double cap = 1e30);

/// Immutable table of one wave cycle: values[i] = wave(i / period).
class WaveCache {
 public:
  const WaveParams& params() const { return params_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t period() const { return values_.size(); }

  // Standard deviation at a crunch step; wraps modulo the period.
  double sd_at(std::uint64_t step) const { return values_[step % values_.size()]; }

 private:
  WaveCache(WaveParams params, std::vector<double> values)
      : params_(params), values_(std::move(values)) {}

  WaveParams params_;
  std::vector<double> values_;

  friend WaveCache build_cache(const WaveParams&);
  friend WaveCache build_cache_serial(const WaveParams&);
};

// Fills the cache with OpenMP across entries. Each entry is independent, so
// the result is bit-identical to build_cache_serial.
WaveCache build_cache(const WaveParams& params);

// Single-threaded reference for build_cache.
WaveCache build_cache_serial(const WaveParams& params);

}  // namespace pgcs
