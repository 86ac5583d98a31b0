#include <cmath>
#include <random>

#include "doctest.h"
#include "lk/lknorm.hpp"
#include "lk/quadrature.hpp"
#include "lk/verify.hpp"

using namespace lk;

namespace {

SpaceSpec space(double p, double q, SlowlyVaryingFunction b = SlowlyVaryingFunction::constant(1.0),
                bool star = false) {
  SpaceSpec s{p, q, b};
  s.star = star;
  return s;
}

}  // namespace

TEST_CASE("norm examples") {
  CHECK(lk_norm(space(2, 1), DecreasingStep::characteristic(1.0)).value ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(lk_norm(space(2, 2), DecreasingStep({1, 3}, {2, 1})).value ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("star norm examples") {
  NormResult r = lk_norm_star(space(1, 1, SlowlyVaryingFunction::constant(1.0), true),
                              DecreasingStep::characteristic(0.5));
  CHECK(r.divergent);
  CHECK(std::isinf(r.value));
  SlowlyVaryingFunction b(1.0, {}, {0, -2, 0});
  NormResult s = lk_norm_star(space(1, 1, b, true), DecreasingStep::characteristic(1.0));
  CHECK_FALSE(s.divergent);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("star flag routes through the maximal function") {
  SlowlyVaryingFunction b(1.0, {}, {0, -2, 0});
  DecreasingStep chi = DecreasingStep::characteristic(1.0);
  CHECK(lk_norm(space(1, 1, b, true), chi).value == lk_norm_star(space(1, 1, b), chi).value);
}

TEST_CASE("fundamental function examples") {
  CHECK(fundamental_function(space(2, 2), 4.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fundamental_function(space(2, kInf), 9.0) == doctest::Approx(3.0).epsilon(1e-9));
  // int_0^{1/e} (1 + |log s|) ds = 3/e
  SlowlyVaryingFunction l(1.0, {0, 1, 0}, {});
  double t = std::exp(-1.0);
  CHECK(fundamental_function(space(1, 1, l), t) == doctest::Approx(3.0 * t).epsilon(1e-9));
  SpaceSpec finite = space(2, 2);
  finite.mu = 1.0;
  CHECK_THROWS_AS(fundamental_function(finite, 2.0), std::domain_error);
}

TEST_CASE("norm against direct quadrature") {
  // chi_(0,m) in L^{p,q,b}: (int_0^m t^{q/p-1} b^q)^{1/q}
  SlowlyVaryingFunction b(2.0, {0.3, -1.0, 0.5}, {0, 1.5, -1});
  for (double p : {0.7, 2.0, 5.0})
    for (double q : {0.5, 1.0, 3.0})
      for (double m : {1e-5, 0.2, 1.0, 40.0}) {
        double want = std::pow(quad_oracle(q / p, b, q, 0.0, m).value, 1.0 / q);
        CHECK(lk_norm(space(p, q, b), DecreasingStep::characteristic(m)).value ==
              doctest::Approx(want).epsilon(1e-7));
      }
}

TEST_CASE("sup norms") {
  // p = q = inf, b = l^{-1}: sup b on (0, m)
  SlowlyVaryingFunction b(1.0, {0, -1, 0}, {0, 1, 0});
  CHECK(lk_norm(space(kInf, kInf, b), DecreasingStep::characteristic(0.1)).value ==
        doctest::Approx(1.0 / (1 + std::log(10.0))).epsilon(1e-8));
  CHECK(lk_norm(space(kInf, kInf, b), DecreasingStep::characteristic(10.0)).value ==
        doctest::Approx(1 + std::log(10.0)).epsilon(1e-8));
  CHECK(lk_norm(space(2, kInf), DecreasingStep({1, 4}, {3, 1})).value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("lattice and Fatou properties") {
  std::mt19937_64 rng(21);
  SpaceSpec s = space(1.5, 0.8, SlowlyVaryingFunction(1.0, {0, 1, 0}, {0, -1, 0}));
  for (int i = 0; i < 30; ++i) {
    DecreasingStep f = rearrange(random_step_function(rng));
    DecreasingStep g = f.scaled_values(1.5);
    CHECK(lk_norm(s, f).value <= lk_norm(s, g).value);
    double prev = 0.0;
    for (double n : {1e-3, 1e-1, 1.0, 10.0, 1e3, 1e5}) {
      double v = lk_norm(s, f.truncated(n)).value;
      CHECK(v >= prev * (1 - 1e-12));
      prev = v;
    }
    CHECK(prev == doctest::Approx(lk_norm(s, f).value).epsilon(1e-9));
  }
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(22);
  SpaceSpec s = space(3, 2, SlowlyVaryingFunction(1.0, {0, -2, 0}, {0, 0, 0}));
  for (int i = 0; i < 20; ++i) {
    DecreasingStep f = rearrange(random_step_function(rng));
    CHECK(lk_norm(s, f.scaled_values(7.0)).value == doctest::Approx(7.0 * lk_norm(s, f).value).epsilon(1e-10));
  }
}

TEST_CASE("finite measure truncates") {
  SpaceSpec s = space(2, 2);
  s.mu = 1.0;
  CHECK(lk_norm(s, DecreasingStep::characteristic(4.0)).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fundamental function is quasiconcave for Banach specs") {
  for (SpaceSpec s : {space(2, 1), space(3, 2, SlowlyVaryingFunction(1.0, {0, 1, 0}, {0, -1, 0})),
                      space(1, 1, SlowlyVaryingFunction(1.0, {0, 2, 0}, {0, -1, 0}))}) {
    double prev_phi = 0.0, prev_ratio = 0.0;
    for (double t = 1e-6; t <= 1e6; t *= 2.0) {
      double phi = fundamental_function(s, t);
      CHECK(phi >= prev_phi * (1 - 1e-9));
      CHECK(t / phi >= prev_ratio * (1 - 1e-9));
      prev_phi = phi;
      prev_ratio = t / phi;
    }
  }
}

TEST_CASE("endpoint norm examples") {
  DecreasingStep f({1, 3}, {2, 1});
  EndpointNorms id = endpoint_norms([](double t) { return t; }, f);
  CHECK(id.lorentz == doctest::Approx(4.0).epsilon(1e-12));
  EndpointNorms capped = endpoint_norms([](double t) { return std::min(t, 1.0); },
                                        DecreasingStep::characteristic(2.0));
  CHECK(capped.lorentz == doctest::Approx(1.0).epsilon(1e-12));
  EndpointNorms m = endpoint_norms([](double t) { return std::sqrt(t); }, DecreasingStep::characteristic(4.0));
  CHECK(m.marcinkiewicz == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(endpoint_norms([](double t) { return 1.0 / t; }, f), ContractViolation);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(space(0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(space(1, -1).validate(), std::invalid_argument);
  CHECK_NOTHROW(space(kInf, kInf).validate());
}
