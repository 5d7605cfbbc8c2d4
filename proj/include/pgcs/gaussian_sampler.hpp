#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pgcs/objectives.hpp"

namespace pgcs {

/// Seeded standard-normal source with a fixed, portable algorithm.
///
/// Bits come from std::mt19937_64, whose output sequence is pinned by the C++
/// standard. Uniforms take the top 53 bits: u = (bits >> 11) * 2^-53. Normals
/// use the Box-Muller transform on (1 - u1, u2), returning the cosine branch
/// first and caching the sine branch for the next call. std::normal_distribution
/// is deliberately not used because its output differs between standard
/// libraries.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double standard_normal();

  // Fills `out` with independent Normal(0, sd) draws. Always consumes
  // out.size() variates, including when sd == 0.
  void sample(double sd, std::span<double> out);

  Vector sample(std::size_t d, double sd);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace pgcs
