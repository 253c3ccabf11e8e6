#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/report.hpp"
#include "hardy/weight.hpp"

namespace hardy {

/// Root of (q - p0)/(q - 1) * (M p0)^{1/(q-1)} = 1 on [1, q], with solver
/// diagnostics. p0 is the sharp lower exponent of the self-improvement.
struct P0Solution {
  double p0;
  double residual;
  int iterations;
  double q;
  double M;
};

/// A_p characteristics over a family of subintervals of the weight domain.
struct ApScan {
  double exponent;                                  // the p used
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> characteristics;              // +inf marks divergence
  double sup = 0.0;
  bool weight_monotone = false;
};

/// (avg f) * (avg f^{-1/(p-1)})^{p-1} over (a, b); exact for both weight
/// families. Returns +inf when the negative-power integral diverges.
inline double ap_characteristic(const Weight& w, double p, double a, double b) {
  if (!(p > 1.0)) throw DomainError("ap_characteristic: requires p > 1");
  if (!(b > a) || !(a >= domain_lo(w)) || !(b <= domain_hi(w))) {
    throw DomainError("ap_characteristic: bad interval");
  }
  const double len = b - a;
  const double avg_f = integrate_power(w, 1.0, a, b) / len;
  double avg_neg;
  try {
    avg_neg = integrate_power(w, -1.0 / (p - 1.0), a, b) / len;
  } catch (const DivergentError&) {
    return std::numeric_limits<double>::infinity();
  }
  return avg_f * std::pow(avg_neg, p - 1.0);
}

inline ApScan interval_scan(const Weight& w, double p,
                            const std::vector<std::pair<double, double>>& intervals) {
  if (intervals.empty()) throw DomainError("interval_scan: empty grid");
  ApScan scan;
  scan.exponent = p;
  scan.intervals = intervals;
  scan.weight_monotone = is_non_decreasing(w);
  scan.characteristics.reserve(intervals.size());
  for (const auto& [a, b] : intervals) {
    const double c = ap_characteristic(w, p, a, b);
    scan.characteristics.push_back(c);
    if (c > scan.sup) scan.sup = c;
  }
  return scan;
}

/// Characteristics over prefix intervals (lo, t) for each grid point t.
inline ApScan prefix_scan(const Weight& w, double p, const std::vector<double>& grid) {
  const double lo = domain_lo(w);
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(grid.size());
  for (double t : grid) {
    if (!(t > lo)) throw DomainError("prefix_scan: grid point not right of domain start");
    intervals.emplace_back(lo, t);
  }
  return interval_scan(w, p, intervals);
}

/// Characteristics over suffix intervals (t, hi).
inline ApScan suffix_scan(const Weight& w, double p, const std::vector<double>& grid,
                          double hi) {
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(grid.size());
  for (double t : grid) {
    if (!(t < hi)) throw DomainError("suffix_scan: grid point not left of interval end");
    intervals.emplace_back(t, hi);
  }
  return interval_scan(w, p, intervals);
}

/// Solves (q - p)/(q - 1) * (M p)^{1/(q-1)} = 1 for p in [1, q] by bisection.
/// The left side is strictly decreasing in p there, so the root is unique.
inline P0Solution solve_p0(double q, double M) {
  if (!(q > 1.0)) throw DomainError("solve_p0: requires q > 1");
  if (!(M >= 1.0)) throw DomainError("solve_p0: requires M >= 1");
  auto g = [&](double p) {
    return (q - p) / (q - 1.0) * std::pow(M * p, 1.0 / (q - 1.0)) - 1.0;
  };
  if (M == 1.0) return {1.0, g(1.0), 0, q, M};
  double lo = 1.0, hi = q;
  double flo = g(lo);  // = M^{1/(q-1)} - 1 >= 0
  int iters = 0;
  while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi && iters < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = g(mid);
    ++iters;
    if (fmid == 0.0) return {mid, 0.0, iters, q, M};
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  const double p0 = 0.5 * (lo + hi);
  return {p0, g(p0), iters, q, M};
}

/// The t-independent prefix A_q characteristic of f(t) = t^a:
///   (1/(a+1)) * ((q-1)/(q-1-a))^{q-1}.
inline double power_weight_constant(double q, double a) {
  if (!(q > 1.0) || !(a > 0.0) || !(a < q - 1.0)) {
    throw DomainError("power_weight_constant: requires q > 1 and 0 < a < q-1");
  }
  return 1.0 / (a + 1.0) * std::pow((q - 1.0) / (q - 1.0 - a), q - 1.0);
}

/// Constant M' = M'(p, q, M) bounding the A_p characteristic of any
/// non-decreasing weight whose prefix A_q characteristic is at most M.
/// Follows the chain c = M^{1/(q-1)},
/// K = 1 - ((q-p)/(q-1)) p^{1/(q-1)} c (positive exactly when p > p0),
/// Lambda = ((p-1)/(q-1)) M^{1/(p-1)} c^{-(q-p)/(p-1)} / K, M' = Lambda^{p-1}.
inline double self_improvement_bound(double p, double q, double M) {
  if (!(q > 1.0)) throw DomainError("self_improvement_bound: requires q > 1");
  if (!(M >= 1.0)) throw DomainError("self_improvement_bound: requires M >= 1");
  if (p > q) throw OutOfRange("self_improvement_bound: requires p <= q");
  if (p == q) return M;
  if (!(p > 1.0)) throw OutOfRange("self_improvement_bound: requires p > 1");
  const double c = std::pow(M, 1.0 / (q - 1.0));
  const double K = 1.0 - (q - p) / (q - 1.0) * std::pow(p, 1.0 / (q - 1.0)) * c;
  // K = 0 at p = p0 exactly; the 1e-12 slack keeps the boundary on the
  // excluded side under rounding
  if (!(K > 1e-12)) {
    throw OutOfRange("self_improvement_bound: p at or below the critical exponent p0");
  }
  const double lambda = (p - 1.0) / (q - 1.0) * std::pow(M, 1.0 / (p - 1.0)) *
                        std::pow(c, -(q - p) / (p - 1.0)) / K;
  return std::pow(lambda, p - 1.0);
}

struct Theorem3Result {
  InequalityReport report;
  double M;        // measured prefix A_q sup
  double p0;       // critical exponent for that M
  double m_prime;  // self-improvement bound at p
};

/// Measures the prefix A_q sup of a monotone weight, derives M', and checks
/// that the prefix A_p sup stays below it.
inline Theorem3Result theorem3_check(const Weight& w, double q, double p,
                                     const std::vector<double>& grid) {
  if (!is_non_decreasing(w)) {
    throw NotMonotone("theorem3_check: weight must be non-decreasing");
  }
  const ApScan base = prefix_scan(w, q, grid);
  if (!std::isfinite(base.sup)) {
    throw DivergentError("theorem3_check: prefix A_q characteristic diverges");
  }
  const double M = std::max(base.sup, 1.0);
  const P0Solution crit = solve_p0(q, M);
  // small slack so that p numerically equal to p0 lands on the excluded side
  if (!(p > crit.p0 + 1e-12 * q) || p > q) {
    throw OutOfRange("theorem3_check: requires p in (p0, q]");
  }
  const double m_prime = self_improvement_bound(p, q, M);
  const ApScan at_p = prefix_scan(w, p, grid);
  InequalityReport rep =
      make_report(at_p.sup, m_prime, Direction::LhsBelowRhs,
                  {{"p", p}, {"q", q}, {"M", M}, {"p0", crit.p0}});
  return {std::move(rep), M, crit.p0, m_prime};
}

/// Default scan grid t = 2^{-j}, j = levels..0, dense toward t = 0 where
/// the prefix condition degenerates.
inline std::vector<double> geometric_grid(int levels = 40) {
  if (levels < 0) throw DomainError("geometric_grid: levels must be >= 0");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(levels) + 1);
  for (int j = levels; j >= 0; --j) grid.push_back(std::ldexp(1.0, -j));
  return grid;
}

}  // namespace hardy
