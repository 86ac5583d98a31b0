#include <random>

#include "doctest.h"
#include "lk/classify.hpp"
#include "lk/io.hpp"

using namespace lk;

namespace {

SpaceSpec S(const char* text) { return parse_spec(text); }

bool holds(const char* a, const char* b, double mu = kInf) { return decide_embedding(S(a), S(b), mu).holds; }

std::vector<SpaceSpec> random_specs(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pi(0, 5), qi(0, 4), e(-2, 2);
  const double ps[] = {0.5, 1.0, 1.5, 2.0, 4.0, kInf};
  const double qs[] = {0.5, 1.0, 2.0, 3.0, kInf};
  std::vector<SpaceSpec> out;
  while (static_cast<int>(out.size()) < n) {
    SpaceSpec s{ps[pi(rng)], qs[qi(rng)], SlowlyVaryingFunction(1.0, {0, double(e(rng)), 0}, {0, double(e(rng)), 0})};
    if (classify_space(s).nontrivial) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("classification examples") {
  CHECK_FALSE(classify_space(S("LK(p=inf,q=2)")).nontrivial);
  CHECK(classify_space(S("LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0),star)")).star_nontrivial);
  CHECK(classify_space(S("LK(p=1,q=1,b=sv(1;0,1,0|0,-1,0))")).banach_equivalent);
  ClassificationReport r = classify_space(S("LK(p=2,q=0.5)"));
  CHECK_FALSE(r.banach_equivalent);
  CHECK(r.quasi_banach);
  CHECK(r.p5 == Tri::Yes);
}

TEST_CASE("p5 ladder") {
  CHECK(classify_space(S("LK(p=0.5,q=1)")).p5 == Tri::No);
  CHECK(classify_space(S("LK(p=1,q=2,b=sv(1;0,-1,0|0,0,0))")).p5 == Tri::No);
  CHECK(classify_space(S("LK(p=1,q=0.5)")).p5 == Tri::Yes);
  CHECK(classify_space(S("LK(p=1,q=1,b=sv(1;0,-3,0|0,0,0))")).p5 == Tri::No);
  CHECK(classify_space(S("LK(p=1,q=0.7,b=sv(1;0,-3,0|0,0,0))")).p5 == Tri::Unknown);
  CHECK(classify_space(S("LK(p=1,q=2)")).p5 == Tri::Unknown);
}

TEST_CASE("report invariants") {
  std::mt19937_64 rng(31);
  for (const SpaceSpec& s : random_specs(rng, 200)) {
    ClassificationReport r = classify_space(s);
    CHECK(r.nontrivial == r.quasi_banach);
    if (r.banach_equivalent) CHECK(r.p5 == Tri::Yes);
    CHECK(r.equals_star == (s.p > 1.0));
    CHECK_FALSE(r.citations.empty());
    CHECK(r.fundamental_exponent == doctest::Approx(1.0 / s.p));
  }
}

TEST_CASE("scale invariance") {
  std::mt19937_64 rng(32);
  auto specs = random_specs(rng, 40);
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    SpaceSpec a = specs[i], b = specs[i + 1];
    SpaceSpec a5 = a, b5 = b;
    a5.b = a.b.scaled(5.0);
    b5.b = b.b.scaled(5.0);
    ClassificationReport r = classify_space(a), r5 = classify_space(a5);
    CHECK(r.nontrivial == r5.nontrivial);
    CHECK(r.banach_equivalent == r5.banach_equivalent);
    CHECK(r.p5 == r5.p5);
    for (double mu : {1.0, kInf}) {
      EmbeddingVerdict v = decide_embedding(a, b, mu), v5 = decide_embedding(a5, b5, mu);
      CHECK(v.holds == v5.holds);
      CHECK(v.case_id == v5.case_id);
    }
  }
}

TEST_CASE("embedding examples") {
  EmbeddingVerdict v = decide_embedding(S("LK(p=2,q=1)"), S("LK(p=2,q=2)"), kInf);
  CHECK(v.holds);
  CHECK(v.case_id == "PELK");
  v = decide_embedding(S("LK(p=2,q=2)"), S("LK(p=3,q=2)"), 1.0);
  CHECK_FALSE(v.holds);
  CHECK(v.case_id == "TELK-4");
  CHECK(holds("LK(p=3,q=1)", "LK(p=2,q=1)", 1.0));
  CHECK_FALSE(holds("LK(p=3,q=1)", "LK(p=2,q=1)", kInf));
  v = decide_embedding(S("LK(p=inf,q=1,b=sv(1;0,-2,0|0,-2,0))"), S("LK(p=inf,q=1,b=sv(1;0,-3,0|0,-3,0))"), kInf);
  CHECK(v.holds);
  CHECK(v.case_id == "TELK-2b");
  CHECK_FALSE(v.citations.empty());
  CHECK_FALSE(v.conditions.empty());
}

TEST_CASE("reflexivity and transitivity") {
  std::mt19937_64 rng(33);
  auto specs = random_specs(rng, 25);
  for (double mu : {1.0, kInf}) {
    for (const auto& a : specs) CHECK(decide_embedding(a, a, mu).holds);
    for (const auto& a : specs)
      for (const auto& b : specs) {
        if (!decide_embedding(a, b, mu).holds) continue;
        for (const auto& c : specs)
          if (decide_embedding(b, c, mu).holds) CHECK(decide_embedding(a, c, mu).holds);
      }
  }
}

TEST_CASE("duality consistency") {
  std::mt19937_64 rng(34);
  auto specs = random_specs(rng, 30);
  int pairs = 0;
  for (const auto& a : specs)
    for (const auto& b : specs) {
      if (!classify_space(a).banach_equivalent || !classify_space(b).banach_equivalent) continue;
      AssociateResult aa = associate_space(a), bb = associate_space(b);
      if (!aa.space || !bb.space) continue;
      if (!classify_space(*aa.space).nontrivial && !classify_space(*aa.space).star_nontrivial) continue;
      if (!decide_embedding(a, b, kInf).holds) continue;
      if (aa.space->star && aa.space->p == 1.0) continue;
      if (bb.space->star && bb.space->p == 1.0) continue;
      ++pairs;
      CHECK(decide_embedding(*bb.space, *aa.space, kInf).holds);
    }
  CHECK(pairs > 0);
}

TEST_CASE("associate examples") {
  AssociateResult r = associate_space(S("LK(p=2,q=3,b=sv(2;0,1,0|0,0,0))"));
  REQUIRE(r.kind == AssociateResult::Kind::Space);
  CHECK(r.space->p == doctest::Approx(2.0));
  CHECK(r.space->q == doctest::Approx(1.5));
  CHECK(r.space->star);
  CHECK(r.space->b.scale() == doctest::Approx(0.5));
  CHECK(r.space->b.sig0() == EndpointSignature{0, -1, 0});

  CHECK(associate_space(S("LK(p=0.5,q=2)")).kind == AssociateResult::Kind::Zero);

  r = associate_space(S("LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))"));
  REQUIRE(r.kind == AssociateResult::Kind::Space);
  CHECK(r.space->p == 1.0);
  CHECK(r.space->q == kInf);
  CHECK(r.space->b.sig0() == EndpointSignature{0, 1, 0});

  CHECK(associate_space(S("LK(p=1,q=0.5,b=sv(1;0,-1,0|0,0,0))")).kind ==
        AssociateResult::Kind::NotCharacterized);
  CHECK_THROWS_AS(associate_space(S("LK(p=2,q=2,star)")), UnsupportedInput);
}

TEST_CASE("q = inf associates") {
  AssociateResult r = associate_space(S("LK(p=2,q=inf)"));
  REQUIRE(r.space);
  CHECK(r.space->q == 1.0);
  CHECK_FALSE(r.space->star);
  r = associate_space(S("LK(p=inf,q=inf,b=sv(1;0,1,0|0,0,0))"));
  CHECK(r.kind == AssociateResult::Kind::NotCharacterized);
}

TEST_CASE("conjugate exponents") {
  CHECK(*conjugate(2.0) == 2.0);
  CHECK(*conjugate(kInf) == 1.0);
  CHECK(*conjugate(1.0) == kInf);
  CHECK(*conjugate(3.0) == doctest::Approx(1.5));
  CHECK_FALSE(conjugate(0.5));
  CHECK_THROWS(conjugate(0.0));
}

TEST_CASE("non-increasing equivalence rule") {
  CHECK(equivalent_to_nonincreasing(SlowlyVaryingFunction(1.0, {0, 1, 0}, {0, -1, 0})));
  CHECK_FALSE(equivalent_to_nonincreasing(SlowlyVaryingFunction(1.0, {0, -1, 0}, {})));
  CHECK_FALSE(equivalent_to_nonincreasing(SlowlyVaryingFunction(1.0, {}, {0, 0, 1})));
}
