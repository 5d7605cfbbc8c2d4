#include "pgcs/gaussian_sampler.hpp"

#include <cmath>
#include <numbers>

namespace pgcs {

double GaussianSampler::standard_normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  constexpr double kScale = 0x1.0p-53;
  const double u1 = 1.0 - static_cast<double>(engine_() >> 11) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

void GaussianSampler::sample(double sd, std::span<double> out) {
  for (double& v : out) v = standard_normal() * sd;
}

Vector GaussianSampler::sample(std::size_t d, double sd) {
  Vector out(d);
  sample(sd, out);
  return out;
}

}  // namespace pgcs
