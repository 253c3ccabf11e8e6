#pragma once

#include <cmath>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/report.hpp"
#include "hardy/weight.hpp"

namespace hardy {

enum class EvalMode {
  Auto,        // closed forms where available, quadrature otherwise
  Quadrature,  // force adaptive quadrature (cross-checking path)
};

namespace detail {

inline void require_interval(const Weight& w, double a, double b) {
  if (!(b > a) || !(a >= domain_lo(w)) || !(b <= domain_hi(w))) {
    throw DomainError("interval must be nonempty and inside the weight domain");
  }
}

// Breakpoints of w strictly inside (a, b), plus the endpoints.
inline std::vector<double> panel_edges(const Weight& w, double a, double b) {
  std::vector<double> edges{a};
  if (const auto* pc = std::get_if<PiecewiseConstantWeight>(&w)) {
    for (double x : pc->breakpoints()) {
      if (x > a && x < b) edges.push_back(x);
    }
  }
  edges.push_back(b);
  return edges;
}

// Integral of g over (a, b), split at the weight's breakpoints where the
// integrand's derivative jumps.
template <typename F>
double integrate_panels(const Weight& w, F&& g, double a, double b,
                        const QuadratureConfig& cfg) {
  const auto edges = panel_edges(w, a, b);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += adaptive_integral(g, edges[i], edges[i + 1], cfg);
  }
  return total;
}

}  // namespace detail

/// Both sides of the negative-exponent Hardy inequality on (a, b):
///   int (Hf)^{-p} <= ((p+1)/p)^q int (Hf)^{-p+q} f^{-q}.
/// For f = (x-a)^d both sides have closed forms; piecewise-constant
/// weights go through adaptive quadrature split at their breakpoints.
inline InequalityReport theorem1_sides(const Weight& w, double a, double b, double p,
                                       double q, const QuadratureConfig& cfg = {},
                                       EvalMode mode = EvalMode::Auto) {
  detail::require_pq(p, q);
  detail::require_interval(w, a, b);

  const auto* pw = std::get_if<PowerWeight>(&w);
  if (pw != nullptr && pw->origin == a) {
    const double d = pw->exponent;
    if (d * p >= 1.0) {
      throw DivergentError("theorem1_sides: (Hf)^{-p} non-integrable, needs d*p < 1");
    }
    if (mode == EvalMode::Auto) {
      const double len = b - a;
      const double common = std::pow(len, 1.0 - d * p) / (1.0 - d * p);
      const double lhs = std::pow(d + 1.0, p) * common;
      const double rhs =
          std::pow((p + 1.0) / p, q) * std::pow(d + 1.0, p - q) * common;
      return make_report(lhs, rhs, Direction::LhsBelowRhs, {{"p", p}, {"q", q}});
    }
  }

  auto lhs_g = [&](double x) { return std::pow(hardy_mean(w, a, x), -p); };
  auto rhs_g = [&](double x) {
    return std::pow(hardy_mean(w, a, x), -p + q) * std::pow(value_at(w, x), -q);
  };
  const double lhs = detail::integrate_panels(w, lhs_g, a, b, cfg);
  const double rhs =
      std::pow((p + 1.0) / p, q) * detail::integrate_panels(w, rhs_g, a, b, cfg);
  return make_report(lhs, rhs, Direction::LhsBelowRhs, {{"p", p}, {"q", q}});
}

/// q = p specialization: int (Hf)^{-p} <= ((p+1)/p)^p int f^{-p}.
inline InequalityReport theoremD_sides(const Weight& w, double a, double b, double p,
                                       const QuadratureConfig& cfg = {},
                                       EvalMode mode = EvalMode::Auto) {
  return theorem1_sides(w, a, b, p, p, cfg, mode);
}

struct SweepPoint {
  double d;
  double lhs;
  double rhs;
  double ratio;
};

/// Evaluates both sides for f(x) = x^d on (0,1) over a family of exponents
/// approaching the critical value 1/p, where the ratio tends to 1.
inline std::vector<SweepPoint> sharpness_sweep(double p, double q,
                                               const std::vector<double>& d_values) {
  detail::require_pq(p, q);
  std::vector<SweepPoint> out;
  out.reserve(d_values.size());
  for (double d : d_values) {
    if (!(d > -1.0) || !(d < 1.0 / p)) {
      throw DomainError("sharpness_sweep: d must lie in (-1, 1/p)");
    }
    const double common = 1.0 / (1.0 - d * p);
    const double lhs = std::pow(d + 1.0, p) * common;
    const double rhs = std::pow((p + 1.0) / p, q) * std::pow(d + 1.0, p - q) * common;
    out.push_back({d, lhs, rhs, lhs / rhs});
  }
  return out;
}

/// Residual of the integration-by-parts identity
///   a int_0^u psi^{a-1} (t psi)' = u psi^a(u) + (a-1) int_0^u psi^a
/// with psi the Hardy mean of the supplied weight g, so (t psi)' = g.
inline double lemma31_residual(const Weight& g, double a_exp, double u,
                               const QuadratureConfig& cfg = {}) {
  if (!(a_exp > 1.0)) throw DomainError("lemma31_residual: requires a > 1");
  const double o = domain_lo(g);
  if (!(u > 0.0) || !(o + u <= domain_hi(g))) {
    throw DomainError("lemma31_residual: u outside the weight domain");
  }
  auto psi = [&](double t) { return hardy_mean(g, o, t); };

  // t * psi(t)^a must vanish toward the left endpoint.
  const double t_probe = 1e-8;
  if (t_probe * std::pow(psi(o + t_probe), a_exp) > 1e-3) {
    throw HypothesisViolated("lemma31_residual: t*psi^a does not vanish at 0");
  }

  auto lhs_g = [&](double t) {
    return std::pow(psi(t), a_exp - 1.0) * value_at(g, t);
  };
  auto rhs_g = [&](double t) { return std::pow(psi(t), a_exp); };
  const double lhs = a_exp * detail::integrate_panels(g, lhs_g, o, o + u, cfg);
  const double rhs = u * std::pow(psi(o + u), a_exp) +
                     (a_exp - 1.0) * detail::integrate_panels(g, rhs_g, o, o + u, cfg);
  return std::abs(lhs - rhs);
}

}  // namespace hardy
