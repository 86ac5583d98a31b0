#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lk/lknorm.hpp"

namespace lk {

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct ClassificationReport {
  bool nontrivial = false;
  bool quasi_banach = false;
  Tri p5 = Tri::Unknown;
  std::string p5_rule;
  bool banach_equivalent = false;
  bool star_nontrivial = false;
  bool equals_star = false;
  // phi(t) ~ t^{exponent} b(t)
  double fundamental_exponent = 0.0;
  EndpointSignature fundamental_sig0;
  EndpointSignature fundamental_sig_inf;
  std::vector<std::string> citations;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct Condition {
  std::string name;
  bool value = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

enum class WitnessKind {
  ProperEmbeddingGap,
  CaseP1LessP2,
  CaseP1GreaterP2InfMeasure,
  CharacteristicSweep,
  StarGapSweep,
  AssociateExtremal
};
const char* to_string(WitnessKind k);
std::optional<WitnessKind> witness_kind_from_string(const std::string& s);

struct EmbeddingVerdict {
  bool holds = false;
  std::string case_id;  // governing case for Holds, reason for Fails
  std::vector<Condition> conditions;
  std::vector<std::string> citations;
  std::optional<WitnessKind> witness;

  friend bool operator==(const EmbeddingVerdict&, const EmbeddingVerdict&) = default;
};

struct AssociateResult {
  enum class Kind { Space, Zero, NotCharacterized };
  Kind kind = Kind::NotCharacterized;
  std::optional<SpaceSpec> space;
  std::string case_id;
  std::string reason;
  std::vector<std::string> citations;

  friend bool operator==(const AssociateResult&, const AssociateResult&) = default;
};
const char* to_string(AssociateResult::Kind k);

// q' for q >= 1; nullopt (Undefined) for q in (0, 1).
std::optional<double> conjugate(double q);

// int_0^1 t^{-1} b^q < inf, or b bounded near 0 when q = inf
bool lq_condition(const SlowlyVaryingFunction& b, double q);
// int_1^inf t^{-1} b^q < inf, or b bounded near inf when q = inf
bool lq_condition_at_infinity(const SlowlyVaryingFunction& b, double q);
// sig0 >=lex 0 and sigInf <=lex 0
bool equivalent_to_nonincreasing(const SlowlyVaryingFunction& b);

ClassificationReport classify_space(const SpaceSpec& spec);
EmbeddingVerdict decide_embedding(const SpaceSpec& src, const SpaceSpec& dst, double mu);
AssociateResult associate_space(const SpaceSpec& spec);

}  // namespace lk
