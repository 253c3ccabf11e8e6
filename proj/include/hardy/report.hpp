#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "hardy/errors.hpp"

namespace hardy {

namespace detail {

inline void require_pq(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !(q <= p)) {
    throw InvalidExponents("requires 0 < q <= p");
  }
}

}  // namespace detail

/// Relative slack granted to a checked inequality; real-arithmetic margins
/// are nonnegative, only rounding can dip below zero.
inline constexpr double kReportTol = 1e-9;

enum class Direction {
  LhsBelowRhs,  // claim lhs <= rhs, margin = rhs - lhs
  LhsAboveRhs,  // claim lhs >= rhs, margin = lhs - rhs
};

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;   // lhs / rhs
  double margin = 0.0;  // signed toward the claimed direction
  bool holds = false;
  std::map<std::string, double> params;
};

inline InequalityReport make_report(double lhs, double rhs, Direction dir,
                                    std::map<std::string, double> params = {}) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.margin = (dir == Direction::LhsBelowRhs) ? rhs - lhs : lhs - rhs;
  const double tol = kReportTol * std::max(std::abs(lhs), std::abs(rhs));
  r.holds = r.margin >= -tol;
  r.params = std::move(params);
  return r;
}

}  // namespace hardy
