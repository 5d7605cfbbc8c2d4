#include "pgcs/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace pgcs {

namespace {

constexpr double kGold = std::numbers::phi;
constexpr double kGrowLimit = 100.0;
constexpr double kTiny = 1e-20;
const double kCGold = 0.5 * (3.0 - std::sqrt(5.0));

double copy_sign(double magnitude, double sign_of) {
  return sign_of >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude);
}

}  // namespace

BracketResult bracket_minimum(const LineFunction& phi, double t0, double t1, int max_expansions) {
  const double f0 = phi(t0);
  auto r = bracket_minimum(phi, t0, f0, t1, max_expansions);
  ++r.evals;
  return r;
}

BracketResult bracket_minimum(const LineFunction& phi, double t0, double f0, double t1,
                              int max_expansions) {
  BracketResult out;
  double a = t0, b = t1;
  double fa = f0;
  double fb = phi(b);
  int evals = 1;
  if (fb > fa) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = b + kGold * (b - a);
  double fc = phi(c);
  ++evals;

  double best_t = b, best_f = fb;
  auto note = [&](double t, double f) {
    if (f < best_f) {
      best_t = t;
      best_f = f;
    }
  };
  note(c, fc);

  int expansions = 0;
  while (fb > fc) {
    if (expansions++ >= max_expansions) {
      out.found = false;
      out.best_t = best_t;
      out.best_f = best_f;
      out.evals = evals;
      out.bracket = {a, b, c, fa, fb, fc};
      return out;
    }
    // Parabolic extrapolation through a, b, c.
    const double r = (b - a) * (fb - fc);
    const double q = (b - c) * (fb - fa);
    double denom = q - r;
    denom = 2.0 * copy_sign(std::max(std::fabs(denom), kTiny), denom);
    double u = b - ((b - c) * q - (b - a) * r) / denom;
    const double ulim = b + kGrowLimit * (c - b);
    double fu;
    if ((b - u) * (u - c) > 0.0) {
      fu = phi(u);
      ++evals;
      note(u, fu);
      if (fu < fc) {
        a = b;
        b = u;
        fa = fb;
        fb = fu;
        break;
      }
      if (fu > fb) {
        c = u;
        fc = fu;
        break;
      }
      u = c + kGold * (c - b);
      fu = phi(u);
      ++evals;
    } else if ((c - u) * (u - ulim) > 0.0) {
      fu = phi(u);
      ++evals;
      if (fu < fc) {
        note(u, fu);
        b = c;
        c = u;
        u = c + kGold * (c - b);
        fb = fc;
        fc = fu;
        fu = phi(u);
        ++evals;
      }
    } else if ((u - ulim) * (ulim - c) >= 0.0) {
      u = ulim;
      fu = phi(u);
      ++evals;
    } else {
      u = c + kGold * (c - b);
      fu = phi(u);
      ++evals;
    }
    note(u, fu);
    a = b;
    b = c;
    c = u;
    fa = fb;
    fb = fc;
    fc = fu;
  }

  out.found = true;
  out.bracket = {a, b, c, fa, fb, fc};
  out.best_t = best_t;
  out.best_f = best_f;
  out.evals = evals;
  return out;
}

LineMinimum brent_line_min(const LineFunction& phi, const Bracket& bracket, double tol, int max_iters) {
  double lo = std::min(bracket.a, bracket.c);
  double hi = std::max(bracket.a, bracket.c);
  double x = bracket.b, w = x, v = x;
  double fx = bracket.fb, fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  LineMinimum out;
  for (int iter = 0; iter < max_iters; ++iter) {
    const double xm = 0.5 * (lo + hi);
    const double tol1 = tol * std::fabs(x) + kBrentAbsTol;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - xm) <= tol2 - 0.5 * (hi - lo)) {
      out.t = x;
      out.f = fx;
      out.iterations = iter;
      out.converged = true;
      return out;
    }
    if (std::fabs(e) > tol1) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double etemp = e;
      e = d;
      if (std::fabs(p) >= std::fabs(0.5 * q * etemp) || p <= q * (lo - x) || p >= q * (hi - x)) {
        e = (x >= xm) ? lo - x : hi - x;
        d = kCGold * e;
      } else {
        d = p / q;
        const double u = x + d;
        if (u - lo < tol2 || hi - u < tol2) d = copy_sign(tol1, xm - x);
      }
    } else {
      e = (x >= xm) ? lo - x : hi - x;
      d = kCGold * e;
    }
    const double u = std::fabs(d) >= tol1 ? x + d : x + copy_sign(tol1, d);
    const double fu = phi(u);
    ++out.evals;
    if (fu <= fx) {
      if (u >= x) {
        lo = x;
      } else {
        hi = x;
      }
      v = w;
      w = x;
      x = u;
      fv = fw;
      fw = fx;
      fx = fu;
    } else {
      if (u < x) {
        lo = u;
      } else {
        hi = u;
      }
      if (fu <= fw || w == x) {
        v = w;
        w = u;
        fv = fw;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  out.t = x;
  out.f = fx;
  out.iterations = max_iters;
  out.converged = false;
  return out;
}

}  // namespace pgcs
