#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <doctest.h>

#include "pgcs/errors.hpp"
#include "pgcs/gcs.hpp"

using namespace pgcs;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("mt19937_64 matches the reference stream") {
  std::mt19937_64 standard;
  standard.discard(9999);
  CHECK(standard() == 9981545732273789042ULL);
  std::mt19937_64 seeded(42);
  CHECK(seeded() == 13930160852258120406ULL);
}

TEST_CASE("GaussianSampler golden variates") {
  // Independent pure-Python transcription, tests/oracles/derive_values.py.
  const double seed42[] = {-1.0771745442782885, -1.2860634502166481, 1.0945198485006107,
                           1.2616856516484893, 1.7947316657951717, 1.2044003699942827};
  GaussianSampler s42(42);
  for (double expected : seed42) CHECK(s42.standard_normal() == doctest::Approx(expected).epsilon(1e-14));

  const double seed7[] = {1.5913998756469563, -0.52481323512949596, 0.38890323470535709, -0.31393152099566934,
                          0.51917236460282778, 0.1872569019665061, 1.5343549480559588, -1.104342864349811,
                          -0.15443743735060689, -0.7554423073037202, -1.3815913821604473, -0.95409149041222274};
  GaussianSampler s7(7);
  const Vector v = s7.sample(12, 1.0);
  for (std::size_t i = 0; i < 12; ++i) CHECK(v[i] == doctest::Approx(seed7[i]).epsilon(1e-14));
}

TEST_CASE("GaussianSampler sd = 0 and determinism") {
  GaussianSampler a(9), b(9);
  const Vector zeros = a.sample(5, 0.0);
  for (double z : zeros) CHECK(z == 0.0);
  // The zero draw still consumed variates.
  b.sample(5, 1.0);
  CHECK(a.standard_normal() == b.standard_normal());

  GaussianSampler c(123), d(123);
  for (int i = 0; i < 1000; ++i) CHECK(c.standard_normal() == d.standard_normal());
}

TEST_CASE("GaussianSampler moments") {
  GaussianSampler s(77);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = s.standard_normal() * 2.5;
    sum += z;
    sq += z * z;
  }
  CHECK(std::fabs(sum / n) < 0.03);
  CHECK(std::sqrt(sq / n) == doctest::Approx(2.5).epsilon(0.01));
}

TEST_CASE("propose") {
  GcsState st;
  st.current_pos = {1.0, -2.0, 3.0};
  st.sd = 0.0;
  GaussianSampler s(1);
  CHECK(propose(st, s, 3) == st.current_pos);

  st.sd = 1.0;
  GaussianSampler s7(7), ref(7);
  const Vector cand = propose(st, s7, 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(cand[i] == st.current_pos[i] + ref.standard_normal());

  st.sd = 1e30;
  GaussianSampler big(3);
  const Vector far = propose(st, big, 3);
  CHECK(std::isfinite(eval_f3(far)));
  CHECK(std::isfinite(eval_f2(far[0], far[1])));
  CHECK(std::isfinite(eval_f1(far[0])));
}

TEST_CASE("gcs_step rejection, wraparound and acceptance") {
  const auto spec = make_objective("f3", 3);
  CountingObjective f(spec);
  const WaveCache cache = build_cache(WaveParams{0.0, kInf, 4, 1e30});
  GaussianSampler sampler(5);

  GcsState st;
  st.current_pos = {1.0, 1.0, 1.0};
  st.current_val = f(st.current_pos);
  st.sd = 0.0;

  // sd = 0: candidate equals current, strict test fails.
  auto rep = gcs_step(st, cache, f, sampler);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.candidate_value == st.current_val);
  CHECK(st.crunch_step == 1);
  CHECK(st.sd == cache.values()[1]);

  // Rejection at period - 1 wraps to 0.
  st.crunch_step = 3;
  st.sd = 0.0;
  rep = gcs_step(st, cache, f, sampler);
  CHECK_FALSE(rep.accepted);
  CHECK(st.crunch_step == 0);
  CHECK(st.sd == cache.values()[0]);

  // An improving candidate holds the phase.
  st.crunch_step = 1;
  st.sd = 1.0;
  int accepted = 0;
  for (int k = 0; k < 50 && accepted == 0; ++k) {
    const double before = st.current_val;
    const auto step_before = st.crunch_step;
    rep = gcs_step(st, cache, f, sampler);
    if (rep.accepted) {
      ++accepted;
      CHECK(st.current_val < before);
      CHECK(st.crunch_step == step_before);
      CHECK(st.current_val == eval_f3(st.current_pos));
    } else {
      st.crunch_step = 1;
      st.sd = 1.0;
    }
  }
  CHECK(accepted == 1);
}

TEST_CASE("gcs_step refiner gate") {
  const auto spec = make_objective("f2", 2);
  const WaveCache cache = build_cache(WaveParams{1.0, 1.0, 4, 1e30});

  auto fresh = [&](CountingObjective& f) {
    GcsState st;
    st.current_pos = {4.0, 4.0};
    st.current_val = f(st.current_pos);
    st.sd = 1.0;
    return st;
  };

  // A refiner that never improves is ignored.
  {
    CountingObjective f(spec);
    GaussianSampler sampler(2);
    GcsState st = fresh(f);
    const Refiner useless = [](CountingObjective& g, const Vector& x) { return Refinement{x, g(x) + 1.0}; };
    for (int k = 0; k < 200; ++k) {
      const auto rep = gcs_step(st, cache, f, sampler, useless);
      CHECK_FALSE(rep.refined);
      if (rep.accepted) CHECK(st.current_val == rep.candidate_value);
    }
  }
  // A refiner that improves is adopted, and the adopted value is strictly lower.
  {
    CountingObjective f(spec);
    GaussianSampler sampler(2);
    GcsState st = fresh(f);
    const Refiner jump = [](CountingObjective& g, const Vector&) {
      const Vector origin{0.0, 0.0};
      return Refinement{origin, g(origin)};
    };
    bool saw = false;
    for (int k = 0; k < 200 && !saw; ++k) {
      const auto rep = gcs_step(st, cache, f, sampler, jump);
      if (rep.accepted) {
        saw = true;
        CHECK(rep.refined);
        CHECK(st.current_val < rep.candidate_value);
        CHECK(st.current_val == 0.0);
      }
    }
    CHECK(saw);
  }
}

TEST_CASE("gcs_step treats non-finite candidates as rejections") {
  const ObjectiveSpec nan_far{"nanfar", 1, [](std::span<const double> x) {
                                return std::fabs(x[0]) > 1.0 ? std::nan("") : x[0] * x[0];
                              }};
  CountingObjective f(nan_far);
  const WaveCache cache = build_cache(WaveParams{1e6, 1e6, 2, 1e30});
  GaussianSampler sampler(4);
  GcsState st;
  st.current_pos = {0.5};
  st.current_val = f(st.current_pos);
  st.sd = 1e6;
  for (int k = 0; k < 100; ++k) {
    const auto rep = gcs_step(st, cache, f, sampler);
    CHECK_FALSE(rep.accepted);
    CHECK(st.current_val == 0.25);
  }
}

TEST_CASE("run_gcs invariants") {
  const auto spec = make_objective("f3", 12);
  GcsConfig cfg;
  cfg.seed = 3;
  std::vector<double> values;
  std::uint64_t prev_step = 0, rejections = 0;
  const StepObserver watch = [&](const GcsState& st, const StepReport& rep) {
    if (!values.empty()) {
      CHECK(st.current_val <= values.back());
      if (rep.accepted) CHECK(st.current_val < values.back());
    }
    if (rep.accepted) {
      CHECK(st.crunch_step == prev_step);
    } else {
      ++rejections;
      CHECK(st.crunch_step == (prev_step + 1) % cfg.wave.period);
    }
    CHECK(st.crunch_step < cfg.wave.period);
    prev_step = st.crunch_step;
    values.push_back(st.current_val);
  };
  const auto r = run_gcs(spec, Vector(12, 200.0), cfg, {}, watch);
  CHECK(r.reason == RunStop::Success);
  CHECK(r.final_val < 0.05);
  CHECK(r.final_val == eval_f3(r.final_pos));
  CHECK(r.outer_iters == values.size());
  // One initial evaluation plus one per proposal.
  CHECK(r.evals == r.outer_iters + 1);
  CHECK(r.refinements == 0);
  CHECK(r.accepted + rejections == r.outer_iters);
  CHECK(r.seed == 3);
}

TEST_CASE("run_gcs seed determinism") {
  const auto spec = make_objective("f2", 2);
  GcsConfig cfg;
  cfg.seed = 11;
  const auto a = run_gcs(spec, Vector{600.0, 600.0}, cfg);
  const auto b = run_gcs(spec, Vector{600.0, 600.0}, cfg);
  CHECK(a.final_pos == b.final_pos);
  CHECK(a.final_val == b.final_val);
  CHECK(a.outer_iters == b.outer_iters);
  CHECK(a.evals == b.evals);
  CHECK(a.accepted == b.accepted);
}

TEST_CASE("run_gcs reaches the target from the far starts") {
  GcsConfig cfg;
  cfg.seed = 1;
  const auto f3 = run_gcs(make_objective("f3", 12), Vector(12, 200.0), cfg);
  CHECK(f3.final_val <= 0.05);
  for (double v : f3.final_pos) CHECK(std::fabs(v) <= 0.1);
  const auto f2 = run_gcs(make_objective("f2", 2), Vector{600.0, 600.0}, cfg);
  CHECK(f2.final_val <= 0.05);
}

TEST_CASE("run_gcs degenerate targets and bad inputs") {
  const auto spec = make_objective("f1", 1);
  GcsConfig cfg;
  cfg.target = kInf;
  const auto done = run_gcs(spec, Vector{1200.0}, cfg);
  CHECK(done.reason == RunStop::Success);
  CHECK(done.outer_iters == 1);
  CHECK(done.final_pos == Vector{1200.0});

  cfg.target = -1.0;
  cfg.max_outer_iters = 300;
  const auto budget = run_gcs(spec, Vector{1200.0}, cfg);
  CHECK(budget.reason == RunStop::IterBudget);
  CHECK(budget.outer_iters == 300);

  CHECK_THROWS_AS(run_gcs(spec, Vector{1.0, 2.0}, cfg), ConfigError);
  cfg.max_outer_iters = 0;
  CHECK_THROWS_AS(run_gcs(spec, Vector{1.0}, cfg), ConfigError);
}
