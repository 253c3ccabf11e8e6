#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hardy/continuous.hpp"
#include "hardy/discrete.hpp"
#include "hardy/muckenhoupt.hpp"
#include "hardy/weight.hpp"

namespace hardy {

struct FuzzSummary {
  int count = 0;
  double min_rel_margin = std::numeric_limits<double>::infinity();
  bool all_hold = true;
  std::string worst_case;
};

namespace fuzz_detail {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline void record(FuzzSummary& s, const InequalityReport& r, const std::string& tag) {
  const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
  const double rel = scale > 0.0 ? r.margin / scale : r.margin;
  if (rel < s.min_rel_margin) {
    s.min_rel_margin = rel;
    s.worst_case = tag;
  }
  if (!r.holds) s.all_hold = false;
}

inline WeightedSequence random_sequence(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_d(1, max_len);
  const int n = len_d(rng);
  std::vector<double> a(n), lam(n);
  for (int i = 0; i < n; ++i) {
    a[i] = log_uniform(rng, 1e-3, 1e3);
    lam[i] = log_uniform(rng, 1e-3, 1e3);
  }
  return WeightedSequence(std::move(a), std::move(lam));
}

inline PiecewiseConstantWeight random_piecewise(std::mt19937_64& rng, int max_cells,
                                                bool monotone) {
  std::uniform_int_distribution<int> cells_d(1, max_cells);
  const int k = cells_d(rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> bp{0.0};
  for (int i = 1; i < k; ++i) bp.push_back(u(rng));
  bp.push_back(1.0);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<double> vals(bp.size() - 1);
  for (double& v : vals) v = log_uniform(rng, 1e-2, 1e2);
  if (monotone) std::sort(vals.begin(), vals.end());
  return PiecewiseConstantWeight(std::move(bp), std::move(vals),
                                 monotone ? std::optional<bool>(true) : std::nullopt);
}

}  // namespace fuzz_detail

/// Random weighted sequences against the discrete inequalities
/// (two-sided form, remainder form, two-exponent interpolation).
inline FuzzSummary fuzz_discrete(std::uint64_t seed, int count, int max_len = 200) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FuzzSummary s;
  for (int i = 0; i < count; ++i) {
    const auto seq = fuzz_detail::random_sequence(rng, max_len);
    const double p = 0.1 + 9.9 * u(rng);
    const double q = p * (0.01 + 0.99 * u(rng));
    const double q2 = q + (p - q) * u(rng);
    const std::string tag = "case " + std::to_string(i);
    fuzz_detail::record(s, theorem2_sides(seq, p, q), tag + " theorem2");
    fuzz_detail::record(s, lemma21_remainder(seq, p), tag + " lemma21");
    fuzz_detail::record(s, theorem4_sides(seq, p, q, q2), tag + " theorem4");
    s.count++;
  }
  return s;
}

/// Random piecewise-constant weights against the continuous inequality.
inline FuzzSummary fuzz_continuous(std::uint64_t seed, int count, int max_cells = 50,
                                   const QuadratureConfig& cfg = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FuzzSummary s;
  for (int i = 0; i < count; ++i) {
    const Weight w = fuzz_detail::random_piecewise(rng, max_cells, false);
    const double p = 0.1 + 4.9 * u(rng);
    const double q = p * (0.01 + 0.99 * u(rng));
    fuzz_detail::record(s, theorem1_sides(w, 0.0, 1.0, p, q, cfg),
                        "case " + std::to_string(i) + " theorem1");
    s.count++;
  }
  return s;
}

/// Random monotone weights through the full self-improvement pipeline:
/// measure M at q, solve for p0, pick p in (p0 + 0.01, q], check the
/// prefix A_p sup against M'.
inline FuzzSummary fuzz_theorem3(std::uint64_t seed, int count, double q = 2.0,
                                 int max_cells = 30) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FuzzSummary s;
  std::vector<double> base_grid = geometric_grid(40);
  for (int i = 0; i < count; ++i) {
    const PiecewiseConstantWeight pc = fuzz_detail::random_piecewise(rng, max_cells, true);
    std::vector<double> grid = base_grid;
    for (std::size_t j = 1; j < pc.breakpoints().size(); ++j) {
      grid.push_back(pc.breakpoints()[j]);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const Weight w = pc;
    const double M = std::max(prefix_scan(w, q, grid).sup, 1.0);
    const double p0 = solve_p0(q, M).p0;
    const double lo = std::min(p0 + 0.01, q);
    const double p = lo + (q - lo) * u(rng);
    const auto res = theorem3_check(w, q, p, grid);
    fuzz_detail::record(s, res.report, "case " + std::to_string(i) + " theorem3");
    s.count++;
  }
  return s;
}

}  // namespace hardy
