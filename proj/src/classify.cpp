#include "lk/classify.hpp"

#include <cmath>

namespace lk {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::ProperEmbeddingGap: return "ProperEmbeddingGap";
    case WitnessKind::CaseP1LessP2: return "CaseP1LessP2";
    case WitnessKind::CaseP1GreaterP2InfMeasure: return "CaseP1GreaterP2InfMeasure";
    case WitnessKind::CharacteristicSweep: return "CharacteristicSweep";
    case WitnessKind::StarGapSweep: return "StarGapSweep";
    case WitnessKind::AssociateExtremal: return "AssociateExtremal";
  }
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::ProperEmbeddingGap, WitnessKind::CaseP1LessP2,
                 WitnessKind::CaseP1GreaterP2InfMeasure, WitnessKind::CharacteristicSweep,
                 WitnessKind::StarGapSweep, WitnessKind::AssociateExtremal})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

const char* to_string(AssociateResult::Kind k) {
  switch (k) {
    case AssociateResult::Kind::Space: return "Space";
    case AssociateResult::Kind::Zero: return "Zero";
    case AssociateResult::Kind::NotCharacterized: return "NotCharacterized";
  }
  return "?";
}

std::optional<double> conjugate(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("conjugate: q must be positive");
  if (q < 1.0) return std::nullopt;
  if (q == 1.0) return kInf;
  if (std::isinf(q)) return 1.0;
  return q / (q - 1.0);
}

bool lq_condition(const SlowlyVaryingFunction& b, double q) {
  if (std::isinf(q)) return endpoint_boundedness(b, Endpoint::Zero) != Boundedness::TendsToInfinity;
  return endpoint_integrability(b, q, 0.0, Endpoint::Zero);
}

bool lq_condition_at_infinity(const SlowlyVaryingFunction& b, double q) {
  if (std::isinf(q))
    return endpoint_boundedness(b, Endpoint::Infinity) != Boundedness::TendsToInfinity;
  return endpoint_integrability(b, q, 0.0, Endpoint::Infinity);
}

bool equivalent_to_nonincreasing(const SlowlyVaryingFunction& b) {
  return lex_sign(b.sig0()) >= 0 && lex_sign(b.sig_inf()) <= 0;
}

namespace {

bool plain_nontrivial(const SpaceSpec& s) { return !std::isinf(s.p) || lq_condition(s.b, s.q); }

bool star_nontrivial(const SpaceSpec& s) {
  if (s.p < 1.0) return false;
  if (s.p == 1.0) return lq_condition_at_infinity(s.b, s.q);
  if (std::isinf(s.p)) return lq_condition(s.b, s.q);
  return true;
}

}  // namespace

ClassificationReport classify_space(const SpaceSpec& spec) {
  spec.validate();
  ClassificationReport r;
  const double p = spec.p, q = spec.q;
  const auto& b = spec.b;

  r.star_nontrivial = star_nontrivial(spec);
  r.citations.push_back("PP4");
  if (spec.star) {
    r.nontrivial = r.star_nontrivial;
  } else {
    r.nontrivial = plain_nontrivial(spec);
    r.citations.push_back("LQ");
  }
  r.quasi_banach = r.nontrivial;

  if (spec.star) {
    if (q >= 1.0) {
      r.banach_equivalent = r.star_nontrivial;
      r.citations.push_back("LN");
    } else {
      r.banach_equivalent = false;
      r.citations.push_back(p > 1.0 ? "TLKBFS" : "LN");
    }
  } else if (q >= 1.0) {
    if (p > 1.0 && !std::isinf(p)) {
      r.banach_equivalent = true;
      r.citations.push_back("TLKBFS-i");
    } else if (std::isinf(p)) {
      r.banach_equivalent = lq_condition(b, q);
      r.citations.push_back("TLKBFS-ii");
    } else if (p == 1.0 && q == 1.0) {
      r.banach_equivalent = equivalent_to_nonincreasing(b);
      r.citations.push_back("TLKBFS-iii");
    } else {
      r.banach_equivalent = false;
      r.citations.push_back("TLKBFS");
    }
  } else {
    r.banach_equivalent = false;
    r.citations.push_back("TLKBFS");
  }

  const int s0 = lex_sign(b.sig0());
  if (spec.star) {
    r.p5 = Tri::Yes;
    r.p5_rule = "PP5";
  } else if (p > 1.0) {
    r.p5 = Tri::Yes;
    r.p5_rule = "CP5";
  } else if (p < 1.0) {
    r.p5 = Tri::No;
    r.p5_rule = "PAS";
  } else if (q >= 1.0 && s0 < 0) {
    r.p5 = Tri::No;
    r.p5_rule = "CP5b-2";
  } else if (q <= 1.0 && s0 >= 0) {
    r.p5 = Tri::Yes;
    r.p5_rule = "CP5b-1";
  } else {
    r.p5 = Tri::Unknown;
    r.p5_rule = "uncovered";
  }
  r.citations.push_back(r.p5_rule);

  r.equals_star = p > 1.0;
  r.citations.push_back("CEQNa");

  r.fundamental_exponent = std::isinf(p) ? 0.0 : 1.0 / p;
  r.fundamental_sig0 = b.sig0();
  r.fundamental_sig_inf = b.sig_inf();
  return r;
}

namespace {

struct Reduced {
  SpaceSpec spec;
  bool trivial = false;
};

Reduced reduce_for_embedding(const SpaceSpec& s, std::vector<std::string>& cites) {
  Reduced r{s, false};
  if (s.star) {
    if (s.p > 1.0) {
      r.spec.star = false;
      cites.push_back("CEQNa");
    } else if (!star_nontrivial(s)) {
      r.trivial = true;
      cites.push_back("PP4");
      return r;
    } else {
      throw UnsupportedInput("embeddings involving L^(1,q,b) are not characterized");
    }
  }
  if (!plain_nontrivial(r.spec)) {
    r.trivial = true;
    cites.push_back("LQ");
  }
  return r;
}

// Order of int_0^t s^{-1} b^q ds at the endpoint, b^q integrable at zero.
GrowthOrder tilde_order(const SlowlyVaryingFunction& b, double q, Endpoint e) {
  GrowthOrder g = order_at(b, e) * q;
  if (e == Endpoint::Zero) return integrate_tail({1.0, g}).order;
  HeadIntegral h = integrate_head({1.0, g});
  if (h.kind == HeadKind::Finite) return GrowthOrder{};
  if (h.kind == HeadKind::Unrepresentable)
    throw std::logic_error("tilde order outside the extended family");
  return h.asymptote.order;
}

}  // namespace

EmbeddingVerdict decide_embedding(const SpaceSpec& src_in, const SpaceSpec& dst_in, double mu) {
  src_in.validate();
  dst_in.validate();
  if (!(mu > 0.0)) throw std::invalid_argument("decide_embedding: mu must be positive");
  EmbeddingVerdict v;

  Reduced rs = reduce_for_embedding(src_in, v.citations);
  Reduced rd = reduce_for_embedding(dst_in, v.citations);
  if (rs.trivial || rd.trivial) {
    v.holds = false;
    v.case_id = rs.trivial ? "TrivialSource" : "TrivialTarget";
    v.conditions.push_back({"source nontrivial", !rs.trivial});
    v.conditions.push_back({"target nontrivial", !rd.trivial});
    return v;
  }
  SpaceSpec src = rs.spec, dst = rd.spec;
  const double p1 = src.p, p2 = dst.p, q1 = src.q, q2 = dst.q;

  std::vector<Endpoint> ends{Endpoint::Zero};
  if (std::isinf(mu)) ends.push_back(Endpoint::Infinity);
  auto end_name = [](Endpoint e) { return e == Endpoint::Zero ? "near 0" : "near inf"; };

  auto finish = [&](const std::string& id, std::optional<WitnessKind> w) {
    v.case_id = id;
    v.citations.push_back(id);
    v.holds = true;
    for (const auto& c : v.conditions) v.holds = v.holds && c.value;
    if (!v.holds) v.witness = w;
    return v;
  };

  if (p1 > p2) {
    v.conditions.push_back({"mu(R) < inf", !std::isinf(mu)});
    return finish("TELK-1", WitnessKind::CaseP1GreaterP2InfMeasure);
  }
  if (p1 < p2) {
    v.conditions.push_back({"p1 >= p2", false});
    return finish("TELK-4", WitnessKind::CaseP1LessP2);
  }

  const bool p_inf = std::isinf(p1);
  if (q1 < q2 && lex_sign(dst.b.sig0() - src.b.sig0()) <= 0 &&
      lex_sign(dst.b.sig_inf() - src.b.sig_inf()) <= 0) {
    v.conditions.push_back({"q1 < q2", true});
    v.conditions.push_back({"b2/b1 bounded on (0,inf)", true});
    return finish("PELK", std::nullopt);
  }

  // q = inf with p = inf: pass to the running supremum of b
  SlowlyVaryingFunction b1 = src.b, b2 = dst.b;
  if (p_inf && std::isinf(q1)) {
    b1 = *sup_transform(b1, SupKind::TildeSup);
    v.citations.push_back("PbND");
  }
  if (p_inf && std::isinf(q2)) {
    b2 = *sup_transform(b2, SupKind::TildeSup);
    v.citations.push_back("PbND");
  }

  if (q1 <= q2) {
    if (!p_inf) {
      for (auto e : ends)
        v.conditions.push_back({std::string("b2/b1 bounded ") + end_name(e),
                                lex_sign(order_at(b2, e) - order_at(b1, e)) <= 0});
      return finish("TELK-2a", WitnessKind::CharacteristicSweep);
    }
    if (!std::isinf(q2)) {
      for (auto e : ends) {
        GrowthOrder g = tilde_order(b2, q2, e) * (1.0 / q2) - tilde_order(b1, q1, e) * (1.0 / q1);
        v.conditions.push_back({std::string("tilde ratio bounded ") + end_name(e), lex_sign(g) <= 0});
      }
      return finish("TELK-2b", WitnessKind::CharacteristicSweep);
    }
    if (!std::isinf(q1)) {
      for (auto e : ends) {
        GrowthOrder g = order_at(b2, e) - tilde_order(b1, q1, e) * (1.0 / q1);
        v.conditions.push_back({std::string("b2/tilde(b1) bounded ") + end_name(e), lex_sign(g) <= 0});
      }
      return finish("TELK-2c", WitnessKind::CharacteristicSweep);
    }
    for (auto e : ends)
      v.conditions.push_back({std::string("b2/b1 bounded ") + end_name(e),
                              lex_sign(order_at(b2, e) - order_at(b1, e)) <= 0});
    return finish("TELK-2d", WitnessKind::CharacteristicSweep);
  }

  const double r = std::isinf(q1) ? q2 : 1.0 / (1.0 / q2 - 1.0 / q1);
  if (!p_inf || std::isinf(q1)) {
    for (auto e : ends)
      v.conditions.push_back({std::string("int t^-1 (b2/b1)^r finite ") + end_name(e),
                              tail_integrable((order_at(b2, e) - order_at(b1, e)) * r)});
    return finish(p_inf ? "TELK-3c" : "TELK-3a", WitnessKind::ProperEmbeddingGap);
  }
  for (auto e : ends) {
    GrowthOrder g = (tilde_order(b2, q2, e) - tilde_order(b1, q1, e)) * (r / q1) + order_at(b2, e) * q2;
    v.conditions.push_back({std::string("tilde quotient integral finite ") + end_name(e),
                            tail_integrable(g)});
  }
  return finish("TELK-3b", WitnessKind::ProperEmbeddingGap);
}

AssociateResult associate_space(const SpaceSpec& spec) {
  spec.validate();
  if (spec.star) throw UnsupportedInput("associate spaces of L^(p,q,b) are out of scope");
  AssociateResult out;
  const double p = spec.p, q = spec.q;
  const auto& b = spec.b;

  auto space = [&](const std::string& id, double pp, double qq, SlowlyVaryingFunction bb, bool star) {
    out.kind = AssociateResult::Kind::Space;
    out.case_id = id;
    out.citations.push_back(id);
    out.space = SpaceSpec{pp, qq, bb, spec.mu, star};
    if (!classify_space(*out.space).nontrivial) {
      out.kind = AssociateResult::Kind::Zero;
      out.reason = "the associate given by " + id + " is the trivial space";
      out.citations.push_back(star ? "PP4" : "LQ");
    }
    return out;
  };
  auto not_characterized = [&](const std::string& reason) {
    out.kind = AssociateResult::Kind::NotCharacterized;
    out.reason = reason;
    if (out.citations.empty()) out.citations.push_back("none");
    return out;
  };

  if (p < 1.0) {
    out.kind = AssociateResult::Kind::Zero;
    out.case_id = "PAS";
    out.citations.push_back("PAS");
    return out;
  }
  if (!plain_nontrivial(spec)) {
    out.citations.push_back("LQ");
    return not_characterized("the space itself is trivial");
  }
  const double pc = *conjugate(p);

  if (q > 1.0 && !std::isinf(q)) {
    const double qc = *conjugate(q);
    if (!std::isinf(p)) return space("TAS-i", pc, qc, b.reciprocal(), true);
    bool divergent_at_inf = !lq_condition_at_infinity(b, q);
    bool sup_finite = tail_integrable(order_at(b, Endpoint::Infinity) * (-qc));
    if (sup_finite) {
      // tilde(b^q)^{1/q} * hat(b^{-q'})^{1/q'} at both ends
      for (auto e : {Endpoint::Zero, Endpoint::Infinity}) {
        GrowthOrder hat;
        GrowthOrder g = order_at(b, e) * (-qc);
        if (e == Endpoint::Infinity) {
          hat = integrate_tail({1.0, g}).order;
        } else {
          HeadIntegral h = integrate_head({1.0, g});
          if (h.kind == HeadKind::Unrepresentable) throw std::logic_error("hat order outside family");
          hat = h.kind == HeadKind::Finite ? GrowthOrder{} : h.asymptote.order;
        }
        GrowthOrder prod = tilde_order(b, q, e) * (1.0 / q) + hat * (1.0 / qc);
        sup_finite = sup_finite && lex_sign(prod) <= 0;
      }
    }
    out.citations.push_back("TAS-ii");
    if (divergent_at_inf && sup_finite) return space("TAS-ii", 1.0, qc, b.reciprocal(), true);
    return not_characterized(divergent_at_inf
                                 ? "p = inf: the sup condition of TAS-ii fails"
                                 : "p = inf with int_1^inf t^-1 b^q finite is not covered");
  }
  if (q <= 1.0) {
    if ((p > 1.0 && !std::isinf(p)) || (p == 1.0 && equivalent_to_nonincreasing(b)))
      return space("T2AS-1", pc, kInf, b.reciprocal(), true);
    if (std::isinf(p) && q == 1.0) {
      TransformResult t = tilde_hat_transform(b, TransformKind::Tilde);
      out.citations.push_back("T2AS-2");
      if (t.status != TransformStatus::Converges)
        return not_characterized("tilde(b) is not representable in the family");
      return space("T2AS-2", 1.0, kInf, t.function->reciprocal(), true);
    }
    out.citations.push_back("T2AS");
    if (p == 1.0) return not_characterized("p = 1 requires b equivalent to a non-increasing function");
    return not_characterized("p = inf with q < 1 is not covered");
  }
  // q = inf
  if (!std::isinf(p)) return space("T3AS", pc, 1.0, b.reciprocal(), false);
  auto sup = sup_transform(b, SupKind::TildeSup);
  if (!sup) {
    out.citations.push_back("PbND");
    return not_characterized("running supremum of b is infinite");
  }
  out.citations.push_back("PbND");
  return space("T3AS", 1.0, 1.0, sup->reciprocal(), false);
}

}  // namespace lk
