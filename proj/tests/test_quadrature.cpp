#include <cmath>

#include "doctest.h"
#include "lk/quadrature.hpp"

using namespace lk;

TEST_CASE("oracle examples") {
  SlowlyVaryingFunction one = SlowlyVaryingFunction::constant(1.0);
  QuadResult r = quad_oracle(0.5, one, 1.0, 0.0, 1.0);
  CHECK_FALSE(r.diverged());
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));

  SlowlyVaryingFunction l2(1.0, {0, -2, 0}, {});
  r = quad_oracle(0.0, l2, 1.0, 0.0, 1.0);
  CHECK_FALSE(r.diverged());
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(quad_oracle(0.0, one, 1.0, 0.0, 1.0).diverged());
}

TEST_CASE("power integrals on finite intervals") {
  SlowlyVaryingFunction one = SlowlyVaryingFunction::constant(1.0);
  for (double a : {-1.5, -0.3, 0.7, 2.0, 5.0}) {
    double lo = 0.1, hi = 30.0;
    double want = (std::pow(hi, a) - std::pow(lo, a)) / a;
    CHECK(quad_oracle(a, one, 1.0, lo, hi).value == doctest::Approx(want).epsilon(1e-10));
  }
  CHECK(quad_oracle(0.0, one, 1.0, 0.5, 8.0).value == doctest::Approx(std::log(16.0)).epsilon(1e-12));
}

TEST_CASE("tiny intervals") {
  SlowlyVaryingFunction b(1.0, {0, -1, 0}, {0, 1, 0});
  double lo = 1.0, hi = 1.0 + 1e-12;
  QuadResult r = quad_oracle(1.0, b, 2.0, lo, hi);
  CHECK(r.value == doctest::Approx(1e-12).epsilon(1e-6));
  CHECK(quad_oracle(1.0, b, 1.0, 3.0, 3.0).value == 0.0);
}

TEST_CASE("improper tails") {
  SlowlyVaryingFunction one = SlowlyVaryingFunction::constant(1.0);
  QuadResult r = quad_oracle(-1.0, one, 1.0, 1.0, kInf);
  CHECK_FALSE(r.diverged());
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(quad_oracle(0.0, one, 1.0, 1.0, kInf).diverged());

  // int_1^inf t^-1 (1 + log t)^-2 = 1
  SlowlyVaryingFunction tail(1.0, {}, {0, -2, 0});
  CHECK(quad_oracle(0.0, tail, 1.0, 1.0, kInf).value == doctest::Approx(1.0).epsilon(1e-9));
  // log-log divergence is slow but still flagged
  SlowlyVaryingFunction ll(1.0, {0, -1, -1}, {});
  CHECK(quad_oracle(0.0, ll, 1.0, 0.0, 1.0).diverged());
  SlowlyVaryingFunction ll2(1.0, {0, -1, -2}, {});
  CHECK_FALSE(quad_oracle(0.0, ll2, 1.0, 0.0, 1.0).diverged());
}

TEST_CASE("exp-sqrt-log weights") {
  // int_0^1 t^-1 exp(-sqrt|log t|) dt = int_0^inf e^{-sqrt u} du = 2
  SlowlyVaryingFunction b(1.0, {-1, 0, 0}, {});
  CHECK(quad_oracle(0.0, b, 1.0, 0.0, 1.0).value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("bad arguments") {
  SlowlyVaryingFunction one = SlowlyVaryingFunction::constant(1.0);
  CHECK_THROWS_AS(quad_oracle(0.0, one, 0.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quad_oracle(0.0, one, 1.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("sup of a log weight") {
  // t^{1/2} (1 + |log t|)^-1 on [1e-4, 1]: increasing, max at 1
  SideLogDensity h = [](double L, Endpoint side) {
    double s = side == Endpoint::Zero ? -1.0 : 1.0;
    return 0.5 * s * L - std::log1p(L);
  };
  SupEstimate e = sup_log_weight(h, 1e-4, 1.0);
  CHECK(std::exp(e.log_value) == doctest::Approx(1.0).epsilon(1e-9));
  // t^{-1/2} (1+log t) on [1, inf): peak at log t = 1
  SideLogDensity g = [](double L, Endpoint side) {
    double s = side == Endpoint::Zero ? -1.0 : 1.0;
    return -0.5 * s * L + std::log1p(L);
  };
  e = sup_log_weight(g, 1.0, kInf);
  CHECK(std::exp(e.log_value) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-8));
  CHECK(e.argmax == doctest::Approx(std::exp(1.0)).epsilon(1e-3));
}
