#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/summation.hpp"

namespace hardy {

/// f(t) = (t - origin)^a on [origin, +inf). Requires a > -1 so that
/// the integral of f converges at the origin.
struct PowerWeight {
  double exponent;
  double origin;

  explicit PowerWeight(double a, double orig = 0.0) : exponent(a), origin(orig) {
    if (!(std::isfinite(a) && a > -1.0)) {
      throw DomainError("PowerWeight: exponent must be finite and > -1");
    }
    if (!std::isfinite(orig)) {
      throw DomainError("PowerWeight: origin must be finite");
    }
  }
};

/// Positive step function on [x0, xk] given by breakpoints and one value
/// per cell. Cells are right-open except the last.
class PiecewiseConstantWeight {
 public:
  PiecewiseConstantWeight(std::vector<double> breakpoints, std::vector<double> values,
                          std::optional<bool> monotone = std::nullopt)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size()) {
      throw DomainError("PiecewiseConstantWeight: need k+1 breakpoints for k values");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i] < breakpoints_[i + 1])) {
        throw DomainError("PiecewiseConstantWeight: breakpoints must be strictly increasing");
      }
    }
    for (double v : values_) {
      if (!(std::isfinite(v) && v > 0.0)) {
        throw DomainError("PiecewiseConstantWeight: values must be positive");
      }
    }
    non_decreasing_ = std::is_sorted(values_.begin(), values_.end());
    if (monotone.has_value() && *monotone && !non_decreasing_) {
      throw NotMonotone("PiecewiseConstantWeight: monotone flag set but values decrease");
    }
    monotone_flag_ = monotone;
  }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  double domain_lo() const { return breakpoints_.front(); }
  double domain_hi() const { return breakpoints_.back(); }
  bool is_non_decreasing() const { return non_decreasing_; }
  std::optional<bool> monotone_flag() const { return monotone_flag_; }

  // Left-limit convention at breakpoints, so that evaluating at a cell's
  // right edge (a quadrature panel endpoint) stays inside that cell.
  double value_at(double x) const {
    if (x < domain_lo() || x > domain_hi()) {
      throw DomainError("PiecewiseConstantWeight: point outside domain");
    }
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    return idx == 0 ? values_.front() : values_[idx - 1];
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  bool non_decreasing_;
  std::optional<bool> monotone_flag_;
};

using Weight = std::variant<PowerWeight, PiecewiseConstantWeight>;

inline double domain_lo(const Weight& w) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PowerWeight>) {
          return v.origin;
        } else {
          return v.domain_lo();
        }
      },
      w);
}

inline double domain_hi(const Weight& w) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PowerWeight>) {
          return std::numeric_limits<double>::infinity();
        } else {
          return v.domain_hi();
        }
      },
      w);
}

inline double value_at(const Weight& w, double x) {
  return std::visit(
      [&](const auto& v) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PowerWeight>) {
          if (x < v.origin) throw DomainError("PowerWeight: point left of origin");
          return std::pow(x - v.origin, v.exponent);
        } else {
          return v.value_at(x);
        }
      },
      w);
}

inline bool is_non_decreasing(const Weight& w) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PowerWeight>) {
          return v.exponent >= 0.0;
        } else {
          return v.is_non_decreasing();
        }
      },
      w);
}

namespace detail {

// Exact antiderivative difference of (t - o)^e over (lo, hi), lo > o.
// expm1 keeps the e -> -1 limit stable.
inline double power_integral_interior(double e, double tl, double th) {
  const double ip = e + 1.0;
  if (ip == 0.0) return std::log(th / tl);
  if (std::abs(ip) < 1e-8) {
    return std::pow(tl, ip) * std::expm1(ip * std::log(th / tl)) / ip;
  }
  return (std::pow(th, ip) - std::pow(tl, ip)) / ip;
}

}  // namespace detail

/// Exact value of the integral of f^s over (lo, hi).
inline double integrate_power(const PowerWeight& w, double s, double lo, double hi) {
  if (!(lo >= w.origin) || !(hi >= lo)) {
    throw DomainError("integrate_power: interval must satisfy origin <= lo <= hi");
  }
  if (hi == lo) return 0.0;
  const double e = s * w.exponent;
  const double tl = lo - w.origin;
  const double th = hi - w.origin;
  if (tl == 0.0) {
    // the 1e-12 pad classifies exponents that are critical up to rounding
    // (e.g. e = (-1/(p-1))*a with p-1 == a only approximately) as divergent
    if (e <= -1.0 + 1e-12) {
      throw DivergentError("integrate_power: s*a <= -1 with interval touching the origin");
    }
    return std::pow(th, e + 1.0) / (e + 1.0);
  }
  return detail::power_integral_interior(e, tl, th);
}

inline double integrate_power(const PiecewiseConstantWeight& w, double s, double lo,
                              double hi) {
  if (!(lo >= w.domain_lo()) || !(hi <= w.domain_hi()) || !(lo <= hi)) {
    throw DomainError("integrate_power: interval exits the weight domain");
  }
  if (hi == lo) return 0.0;
  const auto& bp = w.breakpoints();
  const auto& vals = w.values();
  auto first = std::upper_bound(bp.begin(), bp.end(), lo);
  std::size_t i = (first == bp.begin()) ? 0 : static_cast<std::size_t>(first - bp.begin()) - 1;
  CompensatedSum acc;
  for (; i < vals.size() && bp[i] < hi; ++i) {
    const double a = std::max(lo, bp[i]);
    const double b = std::min(hi, bp[i + 1]);
    if (b > a) acc.add((s == 0.0 ? 1.0 : std::pow(vals[i], s)) * (b - a));
  }
  return acc.value();
}

inline double integrate_power(const Weight& w, double s, double lo, double hi) {
  return std::visit([&](const auto& v) { return integrate_power(v, s, lo, hi); }, w);
}

/// Hardy average (1/(x - origin)) * integral of f over (origin, x).
inline double hardy_mean(const Weight& w, double origin, double x) {
  if (!(x > origin)) throw DomainError("hardy_mean: requires x > origin");
  return integrate_power(w, 1.0, origin, x) / (x - origin);
}

}  // namespace hardy
