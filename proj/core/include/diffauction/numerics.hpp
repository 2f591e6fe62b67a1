#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>

#include "diffauction/errors.hpp"

namespace diffauction {

struct RootSolveSettings {
  double abs_tol = 0.0;       // 0 selects 1e-10 * vbar
  std::size_t max_iter = 200;
  std::optional<double> lo;   // unset selects 1e-9 * vbar
  std::optional<double> hi;   // unset selects vbar - 1e-9 * vbar
};

struct QuadratureSettings {
  double rel_tol = 1e-9;
  std::size_t max_depth = 40;
};

/// Bisection for an increasing-through-zero (or any sign-changing) function on
/// [lo, hi]. Throws SolverError when the endpoints share a sign.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double abs_tol, std::size_t max_iter) {
  if (!(lo < hi)) throw SolverError("bisection needs lo < hi", lo, hi);
  if (!(abs_tol > 0.0)) throw SolverError("bisection needs a positive tolerance", lo, hi);
  double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) throw SolverError("no sign change in bracket", lo, hi);
  for (std::size_t i = 0; i < max_iter && hi - lo > abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = fn(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Resolves the defaults of `settings` against the support [0, vbar] and bisects.
template <class Fn>
double bisect_on_support(Fn&& fn, double vbar, const RootSolveSettings& settings) {
  const double eps = 1e-9 * vbar;
  const double lo = settings.lo.value_or(eps);
  const double hi = settings.hi.value_or(vbar - eps);
  const double tol = settings.abs_tol > 0.0 ? settings.abs_tol : 1e-10 * vbar;
  if (lo < 0.0 || hi > vbar) throw SolverError("bracket must lie in [0, vbar]", lo, hi);
  return bisect(fn, lo, hi, tol, settings.max_iter);
}

namespace detail {

template <class Fn>
double simpson_step(Fn& fn, double a, double fa, double b, double fb, double m, double fm, double whole,
                    double tol, std::size_t depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth == 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(fn, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(fn, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction. The tolerance is
/// relative to a coarse estimate of the integral of |fn|, with an absolute
/// floor so integrals that vanish still terminate.
template <class Fn>
double adaptive_simpson(Fn&& fn, double a, double b, const QuadratureSettings& settings = {}) {
  if (!(settings.rel_tol > 0.0)) throw DomainError("quadrature: rel_tol must be positive");
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(fn, b, a, settings);
  // Seed with four panels so narrow features near the ends are not skipped.
  constexpr int kPanels = 4;
  const double h = (b - a) / kPanels;
  double scale = 0.0;
  double fx[2 * kPanels + 1];
  for (int i = 0; i <= 2 * kPanels; ++i) {
    fx[i] = fn(a + 0.5 * h * i);
    scale += std::fabs(fx[i]);
  }
  scale = scale / (2 * kPanels + 1) * (b - a);
  const double tol = settings.rel_tol * std::max(scale, 1e-300) + 1e-300;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + h * p;
    const double hi = p + 1 == kPanels ? b : a + h * (p + 1);
    const double whole = (hi - lo) / 6.0 * (fx[2 * p] + 4.0 * fx[2 * p + 1] + fx[2 * p + 2]);
    total += detail::simpson_step(fn, lo, fx[2 * p], hi, fx[2 * p + 2], 0.5 * (lo + hi), fx[2 * p + 1], whole,
                                  tol / kPanels, settings.max_depth);
  }
  return total;
}

}  // namespace diffauction
