#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lk/verify.hpp"

namespace lk {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// sv(c; g0,a0,b0 | gI,aI,bI)
SlowlyVaryingFunction parse_sv(const std::string& text);
// LK(p=<v|inf>, q=<v|inf>, b=sv(...), [mu=<v|inf>], [star])
SpaceSpec parse_spec(const std::string& text);
double parse_number(const std::string& text);

// value,mass per line; '#' starts a comment; mass may be inf for value 0
StepFunction read_step_csv(std::istream& in);
// f,g,mass per line
JointStepFunction read_joint_csv(std::istream& in);

// Non-finite doubles are written as the strings "inf", "-inf", "nan".
Json number_json(double x);
double number_from_json(const Json& j);

void to_json(Json& j, const EndpointSignature& s);
void from_json(const Json& j, EndpointSignature& s);
void to_json(Json& j, const SlowlyVaryingFunction& b);
void from_json(const Json& j, SlowlyVaryingFunction& b);
void to_json(Json& j, const SpaceSpec& s);
void from_json(const Json& j, SpaceSpec& s);
void to_json(Json& j, const NormResult& r);
void from_json(const Json& j, NormResult& r);
void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);
void to_json(Json& j, const Condition& c);
void from_json(const Json& j, Condition& c);
void to_json(Json& j, const EmbeddingVerdict& v);
void from_json(const Json& j, EmbeddingVerdict& v);
void to_json(Json& j, const AssociateResult& r);
void from_json(const Json& j, AssociateResult& r);
void to_json(Json& j, const SvCheckReport& r);
void from_json(const Json& j, SvCheckReport& r);
void to_json(Json& j, const EmbeddingCheckReport& r);
void from_json(const Json& j, EmbeddingCheckReport& r);
void to_json(Json& j, const StarGapReport& r);
void from_json(const Json& j, StarGapReport& r);
void to_json(Json& j, const HolderDualityReport& r);
void from_json(const Json& j, HolderDualityReport& r);
void to_json(Json& j, const QuasiNormReport& r);
void from_json(const Json& j, QuasiNormReport& r);
void to_json(Json& j, const HardyLittlewoodReport& r);
void from_json(const Json& j, HardyLittlewoodReport& r);
void to_json(Json& j, const TransformRow& r);
void from_json(const Json& j, TransformRow& r);
void to_json(Json& j, const SvSuiteReport& r);
void from_json(const Json& j, SvSuiteReport& r);

}  // namespace lk
