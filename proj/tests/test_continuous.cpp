#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "hardy/continuous.hpp"
#include "hardy/discrete.hpp"
#include "hardy/fuzz.hpp"

using namespace hardy;
using Catch::Approx;

TEST_CASE("hardy_mean examples") {
  CHECK(hardy_mean(Weight{PowerWeight(1.0)}, 0.0, 0.5) == Approx(0.25));
  CHECK(hardy_mean(Weight{PowerWeight(0.0)}, 0.0, 0.37) == Approx(1.0));
  Weight pc = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {1.0, 3.0});
  CHECK(hardy_mean(pc, 0.0, 1.0) == Approx(2.0));
  CHECK_THROWS_AS(hardy_mean(pc, 0.5, 0.5), DomainError);
}

TEST_CASE("theorem1_sides closed forms for f(x)=x, p=q=1/2") {
  auto r = theorem1_sides(Weight{PowerWeight(1.0)}, 0.0, 1.0, 0.5, 0.5);
  CHECK(r.lhs == Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.rhs == Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.holds);
}

TEST_CASE("theorem1_sides ratio identity for power weights") {
  // lhs/(rhs-integral) = (d+1)^q
  for (double d : {0.1, 0.3, 0.6}) {
    const double p = 1.2, q = 0.7;
    auto r = theorem1_sides(Weight{PowerWeight(d)}, 0.0, 1.0, p, q);
    const double expected = std::pow(d + 1.0, q) * std::pow(p / (p + 1.0), q);
    CHECK(r.ratio == Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("theorem1_sides constant weight") {
  Weight c = PiecewiseConstantWeight({0.0, 1.0}, {3.0});
  auto r = theorem1_sides(c, 0.0, 1.0, 2.0, 1.0);
  CHECK(r.lhs == Approx(1.0 / 9.0).epsilon(1e-8));
  CHECK(r.rhs == Approx(1.5 / 9.0).epsilon(1e-8));
  CHECK(r.ratio == Approx(2.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("theorem1_sides divergence for d*p >= 1") {
  CHECK_THROWS_AS(theorem1_sides(Weight{PowerWeight(1.0)}, 0.0, 1.0, 1.0, 1.0),
                  DivergentError);
  CHECK_THROWS_AS(theorem1_sides(Weight{PowerWeight(0.5)}, 0.0, 1.0, 2.5, 1.0),
                  DivergentError);
}

TEST_CASE("theoremD_sides examples") {
  auto r = theoremD_sides(Weight{PowerWeight(1.0)}, 0.0, 1.0, 0.5);
  CHECK(r.lhs == Approx(2.0 * std::sqrt(2.0)));
  CHECK(r.rhs == Approx(2.0 * std::sqrt(3.0)));

  Weight one = PiecewiseConstantWeight({0.0, 1.0}, {1.0});
  r = theoremD_sides(one, 0.0, 1.0, 1.0);
  CHECK(r.lhs == Approx(1.0).epsilon(1e-8));
  CHECK(r.rhs == Approx(2.0).epsilon(1e-8));

  r = theoremD_sides(Weight{PowerWeight(0.49)}, 0.0, 1.0, 1.0);
  CHECK(r.ratio == Approx(1.49 / 2.0).epsilon(1e-12));
}

TEST_CASE("closed form matches forced quadrature for power weights") {
  QuadratureConfig cfg;
  for (double d : {0.2, 0.5, 1.0}) {
    const double p = 0.8, q = 0.5;
    auto closed = theorem1_sides(Weight{PowerWeight(d)}, 0.0, 1.0, p, q);
    auto quad =
        theorem1_sides(Weight{PowerWeight(d)}, 0.0, 1.0, p, q, cfg, EvalMode::Quadrature);
    CHECK(quad.lhs == Approx(closed.lhs).epsilon(1e-7));
    CHECK(quad.rhs == Approx(closed.rhs).epsilon(1e-7));
  }
}

TEST_CASE("sharpness_sweep") {
  auto pts = sharpness_sweep(2.0, 2.0, {0.3, 0.4, 0.45, 0.49});
  CHECK(pts[3].ratio == Approx(std::pow(1.49 / 1.5, 2.0)).epsilon(1e-12));
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].ratio > pts[i - 1].ratio);
    CHECK(pts[i].ratio < 1.0);
  }

  auto flat = sharpness_sweep(2.0, 1.0, {0.0});
  CHECK(flat[0].ratio == Approx(2.0 / 3.0));

  auto near = sharpness_sweep(1.0, 1.0, {0.999});
  CHECK(near[0].ratio == Approx(1.999 / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(sharpness_sweep(2.0, 1.0, {0.5}), DomainError);
  CHECK_THROWS_AS(sharpness_sweep(2.0, 1.0, {-1.5}), DomainError);
}

TEST_CASE("lemma31_residual identity") {
  QuadratureConfig cfg;
  // g = 1: both sides equal a*u
  CHECK(lemma31_residual(Weight{PowerWeight(0.0)}, 2.0, 1.0, cfg) < 1e-9);
  // g = t: hand-integrated, both sides 1/3
  CHECK(lemma31_residual(Weight{PowerWeight(1.0)}, 2.0, 1.0, cfg) < 1e-8);
  // g = t^{1/2}
  CHECK(lemma31_residual(Weight{PowerWeight(0.5)}, 3.0, 1.0, cfg) < 1e-8);
  // piecewise g
  Weight pc = PiecewiseConstantWeight({0.0, 0.5, 1.0}, {1.0, 2.0});
  CHECK(lemma31_residual(pc, 2.5, 1.0, cfg) < 1e-7);

  CHECK_THROWS_AS(lemma31_residual(Weight{PowerWeight(1.0)}, 1.0, 1.0, cfg), DomainError);
}

TEST_CASE("lemma31 hypothesis probe") {
  // g = t^{-0.9}: psi ~ t^{-0.9}/0.1, and t*psi^a blows up for a = 3
  CHECK_THROWS_AS(lemma31_residual(Weight{PowerWeight(-0.9)}, 3.0, 1.0),
                  HypothesisViolated);
}

TEST_CASE("continuous fuzz corpus holds (reduced count)") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-9;
  cfg.rel_tol = 1e-8;
  const auto s = fuzz_continuous(777, 100, 50, cfg);
  CHECK(s.all_hold);
  CHECK(s.min_rel_margin >= -1e-9);
}

TEST_CASE("discretized weight reproduces the continuous sides") {
  // midpoint-sample f(x) = x into n cells; the unit-weight discrete means
  // then track the Hardy averages
  const int n = 10000;
  std::vector<double> a(n);
  for (int i = 0; i < n; ++i) a[i] = (i + 0.5) / n;
  const auto disc = corollary21_sides(a, 0.5, 0.5);
  const auto cont = theorem1_sides(Weight{PowerWeight(1.0)}, 0.0, 1.0, 0.5, 0.5);
  CHECK(disc.lhs / n == Approx(cont.lhs).epsilon(1e-2));
  CHECK(disc.rhs / n == Approx(cont.rhs).epsilon(1e-2));
}
