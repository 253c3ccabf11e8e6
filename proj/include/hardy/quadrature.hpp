#pragma once

#include <cmath>
#include <utility>

#include "hardy/errors.hpp"

namespace hardy {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 20000;
  double singularity_offset = 1e-14;

  void validate() const {
    if (!(std::isfinite(abs_tol) && abs_tol > 0.0) ||
        !(std::isfinite(rel_tol) && rel_tol > 0.0)) {
      throw DomainError("QuadratureConfig: tolerances must be finite and positive");
    }
    if (max_subdivisions < 1) {
      throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
    }
    if (!(singularity_offset > 0.0)) {
      throw DomainError("QuadratureConfig: singularity_offset must be positive");
    }
  }
};

namespace detail {

struct AdaptiveState {
  int splits_left;
  bool exhausted = false;
  double err_accum = 0.0;
};

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double simpson_recurse(F& g, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, AdaptiveState& st) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || m <= a || m >= b) {
    st.err_accum += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (st.splits_left <= 0) {
    st.exhausted = true;
    st.err_accum += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  --st.splits_left;
  // tol is not halved on descent: endpoint singularities need dozens of
  // geometric levels and a halved budget can never terminate there; the
  // accumulated estimate is checked against the config at the end instead
  return simpson_recurse(g, a, m, fa, flm, fm, left, tol, st) +
         simpson_recurse(g, m, b, fm, frm, fb, right, tol, st);
}

}  // namespace detail

/// Adaptive Simpson integration of g over (lo, hi). The integrand may blow
/// up at lo: evaluation is clipped to lo + singularity_offset, subdivision
/// refines geometrically toward lo, and the clipped stub is closed by a
/// local power-law fit of g near lo.
template <typename F>
double adaptive_integral(F&& g, double lo, double hi, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(hi >= lo)) throw DomainError("adaptive_integral: requires lo <= hi");
  if (hi == lo) return 0.0;
  const double span = hi - lo;
  const double off = cfg.singularity_offset * std::max(1.0, std::abs(lo) + span);
  const double a0 = lo + off;
  if (!(a0 < hi)) throw DomainError("adaptive_integral: interval shorter than clip offset");

  detail::AdaptiveState st{cfg.max_subdivisions};
  const double m0 = 0.5 * (a0 + hi);
  double fa = g(a0), fm = g(m0), fb = g(hi);
  double whole = detail::simpson(a0, hi, fa, fm, fb);
  double result = detail::simpson_recurse(g, a0, hi, fa, fm, fb, whole, cfg.abs_tol, st);

  // Stub (lo, lo + off): model g as C*(x-lo)^alpha from two samples.
  const double t1 = a0 - lo;
  const double t2 = 2.0 * t1;
  if (lo + t2 < hi) {
    const double g1 = g(lo + t1);
    const double g2 = g(lo + t2);
    if (std::isfinite(g1) && std::isfinite(g2) && g1 != 0.0 && g2 != 0.0 &&
        (g1 > 0.0) == (g2 > 0.0)) {
      const double alpha = std::log(std::abs(g1) / std::abs(g2)) / std::log(t1 / t2);
      if (std::isfinite(alpha) && alpha > -1.0) {
        result += g1 * t1 / (alpha + 1.0);
      }
    }
  }

  if (st.exhausted &&
      st.err_accum > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(result))) {
    throw ToleranceNotMet("adaptive_integral: subdivision budget exhausted",
                          st.err_accum);
  }
  return result;
}

/// Midpoint bisection on a bracket with a sign change. Returns the bracket
/// midpoint once the width is at or below tol.
template <typename F>
double bisect(F&& g, double lo, double hi, double tol) {
  if (!(hi > lo) || !(tol > 0.0)) throw DomainError("bisect: bad bracket or tolerance");
  double flo = g(lo);
  double fhi = g(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoSignChange("bisect: bracket endpoints have the same sign");
  }
  // 2000 halvings exceed any double-width bracket.
  for (int i = 0; i < 2000 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = g(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hardy
