#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "pgcs/errors.hpp"
#include "pgcs/objectives.hpp"

using namespace pgcs;

TEST_CASE("f1") {
  CHECK(eval_f1(0.0) == 0.0);
  CHECK(eval_f1(1200.0) == doctest::Approx(400.0).epsilon(1e-14));
  CHECK(eval_f1(1198.58) == doctest::Approx(399.53).epsilon(1e-4));
  // Written-out prefactor equals the simplified one.
  for (double x : {-300.0, 1.0, 600.0, 1199.0, 5000.0}) {
    const double simplified = (20.0 - 19.0 * std::exp(-std::pow(x / 60.0 - 20.0, 2) / 9.0)) * std::pow(x / 60.0, 2);
    CHECK(eval_f1(x) == doctest::Approx(simplified).epsilon(1e-13));
  }
}

TEST_CASE("f2") {
  CHECK(eval_f2(0.0, 0.0) == 0.0);
  CHECK(eval_f2(603.19, 603.19) == doctest::Approx(15.0).epsilon(1e-3));
  // tests/oracles/derive_values.py
  CHECK(eval_f2(2 * std::numbers::pi, 0.0) == doctest::Approx(4.0439596342703155).epsilon(1e-13));
}

TEST_CASE("f3") {
  CHECK(eval_f3(Vector(12, 0.0)) == 0.0);
  CHECK(eval_f3(Vector{0.0}) == 0.0);
  CHECK(std::fabs(eval_f3(Vector(12, 200.0)) - 15.0) < 1e-12);
  CHECK_THROWS_AS(eval_f3(Vector{}), DomainError);
  for (std::size_t d = 1; d <= 32; ++d) CHECK(eval_f3(Vector(d, 0.0)) == 0.0);
}

TEST_CASE("make_objective") {
  const auto f3 = make_objective("f3", 12);
  CHECK(f3.dimension == 12);
  CHECK(f3.name == "f3");
  CHECK(f3(Vector(12, 0.0)) == 0.0);
  CHECK(make_objective("f1", 1).dimension == 1);
  CHECK(make_objective("f2", 2)(Vector{0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(make_objective("f2", 3), ConfigError);
  CHECK_THROWS_AS(make_objective("f1", 2), ConfigError);
  CHECK_THROWS_AS(make_objective("f3", 0), ConfigError);
  CHECK_THROWS_AS(make_objective("rastrigin", 2), LookupError);
  CHECK(default_dimension("f3") == 12);
}

TEST_CASE("nonnegativity and unique zero on random inputs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> wide(-1e4, 1e4);
  std::uniform_int_distribution<int> dim(1, 20);
  for (int k = 0; k < 10000; ++k) {
    const double x = wide(rng), y = wide(rng);
    CHECK(eval_f1(x) >= 0.0);
    CHECK(eval_f2(x, y) >= 0.0);
    Vector v(static_cast<std::size_t>(dim(rng)));
    for (double& c : v) c = wide(rng);
    CHECK(eval_f3(v) >= 0.0);
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    // Points with norm in [0.1, 10).
    const double r = 0.1 + 9.9 * std::uniform_real_distribution<double>(0, 1)(rng);
    const double a = 2 * std::numbers::pi * std::uniform_real_distribution<double>(0, 1)(rng);
    CHECK(eval_f2(r * std::cos(a), r * std::sin(a)) >= 1e-6);
    Vector v(7);
    double n = 0;
    for (double& c : v) {
      c = gauss(rng);
      n += c * c;
    }
    for (double& c : v) c *= r / std::sqrt(n);
    CHECK(eval_f3(v) >= 1e-6);
  }
}

TEST_CASE("f3 is radially increasing") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 50.0);
  for (int k = 0; k < 2000; ++k) {
    Vector u(12), v(12);
    double nu = 0, nv = 0;
    for (std::size_t i = 0; i < 12; ++i) {
      u[i] = gauss(rng);
      v[i] = gauss(rng);
      nu += u[i] * u[i];
      nv += v[i] * v[i];
    }
    // Keep radii where the funnel is still resolvable in double precision.
    if (std::sqrt(std::max(nu, nv)) > 400.0 || std::fabs(std::sqrt(nu) - std::sqrt(nv)) < 1e-3) continue;
    if (nu < nv) {
      CHECK(eval_f3(u) < eval_f3(v));
    } else {
      CHECK(eval_f3(v) < eval_f3(u));
    }
  }
}

TEST_CASE("objectives stay finite at sd_cap-scale inputs") {
  CHECK(std::isfinite(eval_f1(3e30)));
  CHECK(std::isfinite(eval_f2(-2e30, 5e30)));
  CHECK(std::isfinite(eval_f3(Vector(12, 4e30))));
}

TEST_CASE("CountingObjective counts every call") {
  const auto spec = make_objective("f2", 2);
  CountingObjective counted(spec);
  CHECK(counted.count() == 0);
  for (int k = 1; k <= 137; ++k) {
    counted(Vector{0.1 * k, -0.2});
    CHECK(counted.count() == static_cast<std::uint64_t>(k));
  }
}
