#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/report.hpp"
#include "hardy/summation.hpp"

namespace hardy {

/// Finite positive sequence a_n with positive weights lam_n.
struct WeightedSequence {
  std::vector<double> a;
  std::vector<double> lam;

  WeightedSequence(std::vector<double> a_in, std::vector<double> lam_in)
      : a(std::move(a_in)), lam(std::move(lam_in)) {
    if (a.empty() || a.size() != lam.size()) {
      throw DomainError("WeightedSequence: need equal nonzero lengths");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i] > 0.0) || !(lam[i] > 0.0) || !std::isfinite(a[i]) ||
          !std::isfinite(lam[i])) {
        throw DomainError("WeightedSequence: entries must be positive and finite");
      }
    }
  }

  static WeightedSequence with_unit_weights(std::vector<double> a_in) {
    std::vector<double> ones(a_in.size(), 1.0);
    return WeightedSequence(std::move(a_in), std::move(ones));
  }

  std::size_t size() const { return a.size(); }
};

/// Running sums A_n = sum lam_i a_i and Lam_n = sum lam_i.
struct PrefixSums {
  std::vector<double> A;
  std::vector<double> Lam;
};

inline PrefixSums prefix_sums(const WeightedSequence& seq) {
  PrefixSums out;
  out.A.reserve(seq.size());
  out.Lam.reserve(seq.size());
  CompensatedSum acc_a, acc_l;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    acc_a.add(seq.lam[i] * seq.a[i]);
    acc_l.add(seq.lam[i]);
    out.A.push_back(acc_a.value());
    out.Lam.push_back(acc_l.value());
  }
  return out;
}

namespace detail {

// J_q = sum lam_n (A_n/Lam_n)^{-p+q} a_n^{-q}
inline double interpolant_sum(const WeightedSequence& seq, const PrefixSums& ps,
                              double p, double q) {
  CompensatedSum acc;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const double r = ps.A[n] / ps.Lam[n];
    acc.add(seq.lam[n] * std::pow(r, -p + q) * std::pow(seq.a[n], -q));
  }
  return acc.value();
}

}  // namespace detail

/// Both sides of the weighted discrete inequality
///   sum lam (A/Lam)^{-p} <= ((p+1)/p)^q sum lam (A/Lam)^{-p+q} a^{-q}.
inline InequalityReport theorem2_sides(const WeightedSequence& seq, double p, double q) {
  detail::require_pq(p, q);
  const PrefixSums ps = prefix_sums(seq);
  CompensatedSum lhs_acc;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    lhs_acc.add(seq.lam[n] * std::pow(ps.A[n] / ps.Lam[n], -p));
  }
  const double lhs = lhs_acc.value();
  const double rhs =
      std::pow((p + 1.0) / p, q) * detail::interpolant_sum(seq, ps, p, q);
  return make_report(lhs, rhs, Direction::LhsBelowRhs, {{"p", p}, {"q", q}});
}

/// Remainder form of the one-step inequality:
///   sum lam (A/Lam)^{-p} - (p/(p+1)) sum lam a (A/Lam)^{-p-1}
///     >= (Lam_N/(p+1)) (A_N/Lam_N)^{-p}.
inline InequalityReport lemma21_remainder(const WeightedSequence& seq, double p) {
  if (!(p > 0.0)) throw InvalidExponents("lemma21_remainder: requires p > 0");
  const PrefixSums ps = prefix_sums(seq);
  CompensatedSum acc;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const double r = ps.A[n] / ps.Lam[n];
    acc.add(seq.lam[n] * std::pow(r, -p));
    acc.add(-(p / (p + 1.0)) * seq.lam[n] * seq.a[n] * std::pow(r, -p - 1.0));
  }
  const double lhs = acc.value();
  const std::size_t N = seq.size() - 1;
  const double rhs =
      ps.Lam[N] / (p + 1.0) * std::pow(ps.A[N] / ps.Lam[N], -p);
  return make_report(lhs, rhs, Direction::LhsAboveRhs, {{"p", p}});
}

/// Two-exponent interpolation J_{q1} <= ((p+1)/p)^{q2-q1} J_{q2}.
inline InequalityReport theorem4_sides(const WeightedSequence& seq, double p, double q1,
                                       double q2) {
  if (!(q1 > 0.0) || !(q1 <= q2) || !(q2 <= p)) {
    throw InvalidExponents("theorem4_sides: requires 0 < q1 <= q2 <= p");
  }
  const PrefixSums ps = prefix_sums(seq);
  const double lhs = detail::interpolant_sum(seq, ps, p, q1);
  const double rhs =
      std::pow((p + 1.0) / p, q2 - q1) * detail::interpolant_sum(seq, ps, p, q2);
  return make_report(lhs, rhs, Direction::LhsBelowRhs,
                     {{"p", p}, {"q1", q1}, {"q2", q2}});
}

/// Gap of the pointwise bound p y^{p+1} - (p+1) y^p >= -1; zero exactly at y = 1.
inline double elementary_gap(double y, double p) {
  if (!(y >= 0.0) || !(p > 0.0)) {
    throw DomainError("elementary_gap: requires y >= 0 and p > 0");
  }
  return p * std::pow(y, p + 1.0) - (p + 1.0) * std::pow(y, p) + 1.0;
}

/// Unit-weight specialization; the mean A_n/Lam_n becomes (1/n) sum a_k.
inline InequalityReport corollary21_sides(const std::vector<double>& a, double p,
                                          double q) {
  return theorem2_sides(WeightedSequence::with_unit_weights(a), p, q);
}

}  // namespace hardy
