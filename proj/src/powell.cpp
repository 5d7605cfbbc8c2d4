#include "pgcs/powell.hpp"

#include <cmath>
#include <limits>

#include "pgcs/errors.hpp"
#include "pgcs/line_search.hpp"

namespace pgcs {

void PowellConfig::validate() const {
  if (!(xtol > 0.0) || !(ftol > 0.0)) throw ConfigError("powell tolerances must be positive");
  if ((max_iters && *max_iters < 1) || (max_evals && *max_evals < 1)) {
    throw ConfigError("powell budgets must be >= 1");
  }
}

std::uint64_t PowellConfig::iter_budget(std::size_t dimension) const {
  return max_iters.value_or(1000 * static_cast<std::uint64_t>(dimension));
}

std::uint64_t PowellConfig::eval_budget(std::size_t dimension) const {
  return max_evals.value_or(1000 * static_cast<std::uint64_t>(dimension));
}

std::string_view to_string(PowellStop stop) {
  switch (stop) {
    case PowellStop::FtolConverged: return "ftol-converged";
    case PowellStop::IterBudget: return "iter-budget";
    case PowellStop::EvalBudget: return "eval-budget";
    case PowellStop::NonFinite: return "non-finite";
  }
  return "unknown";
}

LineStep line_minimize(CountingObjective& f, const Vector& p, double fp, const Vector& u,
                       double xtol, double step) {
  LineStep out;
  out.point = p;
  out.value = fp;

  bool any_nonzero = false;
  for (double v : u) any_nonzero = any_nonzero || v != 0.0;
  if (!any_nonzero) return out;

  Vector trial(p.size());
  const LineFunction phi = [&](double t) {
    for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] + t * u[i];
    const double v = f(trial);
    if (!std::isfinite(v)) {
      out.nonfinite = true;
      return std::numeric_limits<double>::infinity();
    }
    return v;
  };

  const auto br = bracket_minimum(phi, 0.0, fp, step);
  if (!br.found) return out;
  out.bracketed = true;
  const auto lm = brent_line_min(phi, br.bracket, xtol);
  if (!(lm.f <= fp)) return out;

  out.t = lm.t;
  out.value = lm.f;
  out.decrease = fp - lm.f;
  for (std::size_t i = 0; i < p.size(); ++i) out.point[i] = p[i] + lm.t * u[i];
  return out;
}

LineStep line_minimize(CountingObjective& f, const Vector& p, const Vector& u, const PowellConfig& config) {
  const double fp = f(p);
  return line_minimize(f, p, fp, u, config.xtol);
}

PowellOutcome powell_minimize(CountingObjective& f, const Vector& x0, const PowellConfig& config) {
  config.validate();
  const std::size_t n = x0.size();
  if (n == 0) throw ConfigError("powell_minimize needs a non-empty start point");
  if (n != f.dimension()) throw ConfigError("start point dimension does not match the objective");
  const std::uint64_t max_iters = config.iter_budget(n);
  const std::uint64_t max_evals = config.eval_budget(n);
  const std::uint64_t evals_at_start = f.count();
  auto used = [&] { return f.count() - evals_at_start; };

  PowellOutcome out;
  out.x = x0;
  out.f = f(x0);
  if (!std::isfinite(out.f)) {
    out.reason = PowellStop::NonFinite;
    out.evals = used();
    return out;
  }

  // directions[0, fresh) have not been replaced in the current cycle; the rest
  // are this cycle's sweep displacements, oldest first. All have unit length.
  std::vector<Vector> directions(n, Vector(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) directions[i][i] = 1.0;
  std::vector<double> steps(n, 1.0);
  std::size_t fresh = n;

  auto finish = [&](PowellStop reason) {
    out.reason = reason;
    out.converged = reason == PowellStop::FtolConverged;
    out.evals = used();
    return out;
  };

  std::vector<double> taken(n);
  while (true) {
    if (out.iters >= max_iters) return finish(PowellStop::IterBudget);
    ++out.iters;

    const Vector sweep_start = out.x;
    const double f_start = out.f;

    for (std::size_t i = 0; i < n; ++i) {
      auto ls = line_minimize(f, out.x, out.f, directions[i], config.xtol, steps[i]);
      if (ls.nonfinite) return finish(PowellStop::NonFinite);
      taken[i] = ls.t;
      if (ls.t != 0.0) {
        steps[i] = std::fabs(ls.t);
        out.x = std::move(ls.point);
        out.f = ls.value;
      }
      if (used() >= max_evals) return finish(PowellStop::EvalBudget);
    }

    Vector displacement(n);
    double length = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      displacement[j] = out.x[j] - sweep_start[j];
      length += displacement[j] * displacement[j];
    }
    length = std::sqrt(length);

    if (length > 0.0) {
      for (double& v : displacement) v /= length;
      auto ls = line_minimize(f, out.x, out.f, displacement, config.xtol, length);
      if (ls.nonfinite) return finish(PowellStop::NonFinite);
      if (ls.t != 0.0) {
        out.x = std::move(ls.point);
        out.f = ls.value;
      }
      // The displacement takes the place of the unreplaced direction it leans
      // on most, which keeps the set as far from degenerate as possible.
      std::size_t drop = 0;
      for (std::size_t i = 1; i < fresh; ++i)
        if (std::fabs(taken[i]) > std::fabs(taken[drop])) drop = i;
      directions.erase(directions.begin() + static_cast<std::ptrdiff_t>(drop));
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(drop));
      directions.push_back(std::move(displacement));
      steps.push_back(ls.t != 0.0 ? std::fabs(ls.t) : length);
      if (--fresh == 0) fresh = n;
    }

    if (2.0 * (f_start - out.f) <= config.ftol * (std::fabs(f_start) + std::fabs(out.f)) + 1e-20) {
      return finish(PowellStop::FtolConverged);
    }
    if (used() >= max_evals) return finish(PowellStop::EvalBudget);
  }
}

}  // namespace pgcs
