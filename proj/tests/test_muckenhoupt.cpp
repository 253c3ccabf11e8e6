#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hardy/fuzz.hpp"
#include "hardy/muckenhoupt.hpp"
#include "support/oracles.hpp"

using namespace hardy;
using Catch::Approx;

TEST_CASE("ap_characteristic examples") {
  Weight c = PiecewiseConstantWeight({0.0, 1.0}, {5.0});
  CHECK(ap_characteristic(c, 2.0, 0.1, 0.9) == Approx(1.0));

  // f = t^{1/2}, q = 2: 4/3 independently of the prefix length
  Weight half = PowerWeight(0.5);
  CHECK(ap_characteristic(half, 2.0, 0.0, 1.0) == Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(ap_characteristic(half, 2.0, 0.0, 0.125) == Approx(4.0 / 3.0).epsilon(1e-12));

  // p = 1.5 hits the log-divergent exponent
  CHECK(std::isinf(ap_characteristic(half, 1.5, 0.0, 0.5)));

  CHECK_THROWS_AS(ap_characteristic(c, 1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ap_characteristic(c, 2.0, 0.5, 0.5), DomainError);
}

TEST_CASE("ap_characteristic is at least 1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<double> bp{0.0, 0.2 + 0.3 * u(rng), 1.0};
    std::vector<double> vals{std::exp(-2 + 4 * u(rng)), std::exp(-2 + 4 * u(rng))};
    Weight w = PiecewiseConstantWeight(bp, vals);
    const double p = 1.1 + 4.0 * u(rng);
    CHECK(ap_characteristic(w, p, 0.0, 1.0) >= 1.0 - 1e-12);
  }
}

TEST_CASE("ap_characteristic scale invariance") {
  Weight w1 = PiecewiseConstantWeight({0.0, 0.3, 1.0}, {1.0, 4.0});
  Weight w2 = PiecewiseConstantWeight({0.0, 0.3, 1.0}, {7.0, 28.0});
  for (double p : {1.5, 2.0, 3.0}) {
    CHECK(ap_characteristic(w1, p, 0.0, 1.0) ==
          Approx(ap_characteristic(w2, p, 0.0, 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("prefix_scan examples") {
  Weight one = PiecewiseConstantWeight({0.0, 1.0}, {1.0});
  auto scan = prefix_scan(one, 2.0, {0.25, 0.5, 1.0});
  CHECK(scan.sup == Approx(1.0));

  auto scan2 = prefix_scan(Weight{PowerWeight(0.5)}, 2.0, geometric_grid(20));
  CHECK(scan2.sup == Approx(4.0 / 3.0).epsilon(1e-12));

  Weight pc = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {1.0, 2.0});
  auto scan3 = prefix_scan(pc, 2.0, {0.5, 1.0});
  CHECK(scan3.characteristics[0] == Approx(1.0));
  CHECK(scan3.characteristics[1] == Approx(1.125));
  CHECK(scan3.sup == Approx(1.125));
  CHECK(scan3.weight_monotone);
}

TEST_CASE("suffix_scan examples") {
  Weight one = PiecewiseConstantWeight({0.0, 1.0}, {1.0});
  auto scan = suffix_scan(one, 2.0, {0.0, 0.5}, 1.0);
  CHECK(scan.sup == Approx(1.0));

  Weight pc = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {1.0, 2.0});
  auto scan2 = suffix_scan(pc, 2.0, {0.5}, 1.0);
  CHECK(scan2.characteristics[0] == Approx(1.0));

  // power weight suffix: closed form vs independent quadrature
  const double t = 0.5, p = 2.0;
  auto scan3 = suffix_scan(Weight{PowerWeight(0.5)}, p, {t}, 1.0);
  const double avg_f =
      oracles::riemann_midpoint([](double x) { return std::sqrt(x); }, t, 1.0, 200000) /
      (1.0 - t);
  const double avg_neg = oracles::riemann_midpoint(
                             [](double x) { return 1.0 / std::sqrt(x); }, t, 1.0, 200000) /
                         (1.0 - t);
  CHECK(scan3.characteristics[0] == Approx(avg_f * avg_neg).epsilon(1e-8));
}

TEST_CASE("interval_scan monotone flag and finiteness") {
  Weight nonmono = PiecewiseConstantWeight({0.0, 0.3, 0.7, 1.0}, {2.0, 1.0, 2.0});
  auto scan = interval_scan(nonmono, 2.0, {{0.0, 1.0}, {0.1, 0.6}});
  CHECK_FALSE(scan.weight_monotone);
  CHECK(std::isfinite(scan.sup));

  Weight mono = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {1.0, 2.0});
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < 100; ++i) {
    for (int j = i + 1; j <= 100; ++j) {
      grid.emplace_back(i / 100.0, j / 100.0);
    }
  }
  auto all = interval_scan(mono, 2.0, grid);
  CHECK(all.weight_monotone);
  CHECK(std::isfinite(all.sup));

  // prefix+suffix sups bound the weight's behavior; record the observed
  // blow-up factor of the all-interval sup without pinning a constant
  auto pre = prefix_scan(mono, 2.0, geometric_grid(20));
  auto suf = suffix_scan(mono, 2.0, {0.0, 0.25, 0.5, 0.75}, 1.0);
  const double base = std::max(pre.sup, suf.sup);
  CHECK(all.sup / base < 1e3);
}

TEST_CASE("solve_p0 examples") {
  auto s = solve_p0(2.0, 1.0);
  CHECK(s.p0 == 1.0);
  CHECK(std::abs(s.residual) <= 1e-12);

  s = solve_p0(2.0, 2.0);
  CHECK(s.p0 == Approx(1.0 + std::sqrt(2.0) / 2.0).margin(1e-10));
  CHECK(std::abs(s.residual) <= 1e-12);

  s = solve_p0(2.0, 4.0);
  CHECK(s.p0 == Approx(1.0 + std::sqrt(3.0) / 2.0).margin(1e-10));
  CHECK(std::abs(s.residual) <= 1e-12);

  CHECK_THROWS_AS(solve_p0(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(solve_p0(2.0, 0.5), DomainError);
}

TEST_CASE("solve_p0 monotone in M") {
  for (double q : {1.5, 2.0, 3.0}) {
    double prev = 0.0;
    for (double M : {1.0, 1.5, 2.0, 4.0, 8.0}) {
      const auto s = solve_p0(q, M);
      CHECK(s.p0 >= prev);
      CHECK(s.p0 >= 1.0);
      CHECK(s.p0 <= q);
      prev = s.p0;
    }
  }
}

TEST_CASE("power_weight_constant") {
  CHECK(power_weight_constant(2.0, 0.5) == Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(power_weight_constant(3.0, 1.0) == Approx(2.0).epsilon(1e-12));
  CHECK(power_weight_constant(2.0, 1e-9) == Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(power_weight_constant(2.0, 1.5), DomainError);
  CHECK_THROWS_AS(power_weight_constant(2.0, 0.0), DomainError);

  // cross-check against the measured characteristic
  for (double a : {0.2, 0.5, 0.8}) {
    for (double q : {2.0, 3.0}) {
      if (a < q - 1.0) {
        CHECK(ap_characteristic(Weight{PowerWeight(a)}, q, 0.0, 1.0) ==
              Approx(power_weight_constant(q, a)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("extremal alignment: p0 of M(q,a) is a+1") {
  const double q = 2.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const auto s = solve_p0(q, power_weight_constant(q, a));
    CHECK(s.p0 == Approx(a + 1.0).margin(1e-8));
    // at the critical index the characteristic diverges
    CHECK(std::isinf(ap_characteristic(Weight{PowerWeight(a)}, a + 1.0, 0.0, 1.0)));
  }
}

TEST_CASE("self_improvement_bound") {
  CHECK(self_improvement_bound(2.0, 2.0, 4.0 / 3.0) == Approx(4.0 / 3.0));

  // constant-chain arithmetic for q=2, M=4/3, p=1.8
  const double mp = self_improvement_bound(1.8, 2.0, 4.0 / 3.0);
  const double lambda = 0.8 * (4.0 / 3.0) / 0.52;
  CHECK(mp == Approx(std::pow(lambda, 0.8)).epsilon(1e-12));
  CHECK(mp == Approx(1.7767).margin(5e-4));

  // K -> 0+ as p -> p0+ = 1.5: the bound blows up
  CHECK(self_improvement_bound(1.5001, 2.0, 4.0 / 3.0) >
        self_improvement_bound(1.6, 2.0, 4.0 / 3.0));
  CHECK(self_improvement_bound(1.5000001, 2.0, 4.0 / 3.0) > 1e3);

  CHECK_THROWS_AS(self_improvement_bound(1.5, 2.0, 4.0 / 3.0), OutOfRange);
  CHECK_THROWS_AS(self_improvement_bound(1.2, 2.0, 4.0 / 3.0), OutOfRange);
  CHECK_THROWS_AS(self_improvement_bound(2.5, 2.0, 4.0 / 3.0), OutOfRange);
}

TEST_CASE("theorem3_check examples") {
  Weight one = PiecewiseConstantWeight({0.0, 1.0}, {1.0});
  auto res = theorem3_check(one, 2.0, 1.5, geometric_grid(20));
  CHECK(res.M == 1.0);
  CHECK(res.p0 == 1.0);
  CHECK(res.report.lhs == Approx(1.0));
  CHECK(res.report.holds);

  Weight half = PowerWeight(0.5);
  res = theorem3_check(half, 2.0, 1.8, geometric_grid(20));
  CHECK(res.M == Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(res.p0 == Approx(1.5).margin(1e-10));
  CHECK(res.report.lhs == Approx(power_weight_constant(1.8, 0.5)).epsilon(1e-10));
  CHECK(res.report.holds);

  // at p = p0 the conclusion fails by design
  CHECK_THROWS_AS(theorem3_check(half, 2.0, 1.5, geometric_grid(20)), OutOfRange);

  Weight down = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {2.0, 1.0});
  CHECK_THROWS_AS(theorem3_check(down, 2.0, 1.8, geometric_grid(20)), NotMonotone);
}

TEST_CASE("theorem3 containment fuzz (reduced count)") {
  const auto s = fuzz_theorem3(99, 50);
  CHECK(s.all_hold);
}

TEST_CASE("geometric_grid") {
  auto g = geometric_grid(3);
  CHECK(g == std::vector<double>{0.125, 0.25, 0.5, 1.0});
  CHECK_THROWS_AS(geometric_grid(-1), DomainError);
}
