#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "lk/common.hpp"

namespace lk {

// Exponents closer than this are treated as equal by every lexicographic test.
inline constexpr double kExponentTol = 1e-9;

// Local scale exp(gamma*sqrt(L)) * l^alpha * ll^beta with L = |log t|,
// l = 1 + L, ll = 1 + log(1 + L).
struct EndpointSignature {
  double gamma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  friend bool operator==(const EndpointSignature&, const EndpointSignature&) = default;
  EndpointSignature operator+(const EndpointSignature& o) const {
    return {gamma + o.gamma, alpha + o.alpha, beta + o.beta};
  }
  EndpointSignature operator-(const EndpointSignature& o) const {
    return {gamma - o.gamma, alpha - o.alpha, beta - o.beta};
  }
  EndpointSignature operator*(double r) const { return {gamma * r, alpha * r, beta * r}; }
  bool is_zero() const;
};

int lex_compare(const EndpointSignature& a, const EndpointSignature& b);
int lex_sign(const EndpointSignature& s);
EndpointSignature max_lex(const EndpointSignature& a, const EndpointSignature& b);

// Signature extended by a fourth exponent delta on lll = 1 + log(ll). Only
// intermediate results of the integral rules ever carry delta != 0.
struct GrowthOrder {
  std::array<double, 4> e{};

  GrowthOrder() = default;
  GrowthOrder(double g, double a, double b, double d = 0.0) : e{g, a, b, d} {}
  explicit GrowthOrder(const EndpointSignature& s) : e{s.gamma, s.alpha, s.beta, 0.0} {}

  double gamma() const { return e[0]; }
  double alpha() const { return e[1]; }
  double beta() const { return e[2]; }
  double delta() const { return e[3]; }
  bool in_family() const;
  EndpointSignature signature() const { return {e[0], e[1], e[2]}; }

  GrowthOrder operator+(const GrowthOrder& o) const;
  GrowthOrder operator-(const GrowthOrder& o) const;
  GrowthOrder operator*(double r) const;
  // log of exp(gamma sqrt L) l^alpha ll^beta lll^delta
  double log_value(double L) const;
};

int lex_compare(const GrowthOrder& a, const GrowthOrder& b);
int lex_sign(const GrowthOrder& g);

// True iff the integral over L up to infinity of the order's scale converges.
bool tail_integrable(const GrowthOrder& g);

struct Asymptote {
  double scale = 1.0;
  GrowthOrder order;
  double operator()(double L) const;
};

// Leading term of int_L^inf (scale * order)(u) du. Requires tail_integrable.
Asymptote integrate_tail(const Asymptote& a);

enum class HeadKind { Finite, Grows, Unrepresentable };
// Leading term of int_0^L (scale * order)(u) du. Finite means the integral
// has a finite limit; its value is not known here and the returned
// asymptote then carries order zero and scale NaN. Unrepresentable is the
// log(lll) growth of the all -1 order.
struct HeadIntegral {
  HeadKind kind;
  Asymptote asymptote;
};
HeadIntegral integrate_head(const Asymptote& a);

class SlowlyVaryingFunction {
 public:
  SlowlyVaryingFunction() = default;
  SlowlyVaryingFunction(double scale, EndpointSignature zero, EndpointSignature infinity);

  static SlowlyVaryingFunction constant(double c) { return {c, {}, {}}; }

  double scale() const { return scale_; }
  const EndpointSignature& sig0() const { return sig0_; }
  const EndpointSignature& sig_inf() const { return sig_inf_; }
  const EndpointSignature& signature(Endpoint e) const {
    return e == Endpoint::Zero ? sig0_ : sig_inf_;
  }
  bool is_constant() const { return sig0_.is_zero() && sig_inf_.is_zero(); }

  double operator()(double t) const;
  double log_value(double t) const;
  // log b at the point with |log t| = L on the given side of t = 1
  double log_at(double L, Endpoint side) const;

  SlowlyVaryingFunction pow(double r) const;
  SlowlyVaryingFunction reciprocal() const { return pow(-1.0); }
  // t -> b(1/t)
  SlowlyVaryingFunction reciprocal_argument() const;
  SlowlyVaryingFunction scaled(double k) const;

  friend SlowlyVaryingFunction operator*(const SlowlyVaryingFunction& a,
                                         const SlowlyVaryingFunction& b);
  friend SlowlyVaryingFunction operator/(const SlowlyVaryingFunction& a,
                                         const SlowlyVaryingFunction& b);
  friend bool operator==(const SlowlyVaryingFunction&, const SlowlyVaryingFunction&) = default;

 private:
  double scale_ = 1.0;
  EndpointSignature sig0_{};
  EndpointSignature sig_inf_{};
};

double eval(const SlowlyVaryingFunction& b, double t);

GrowthOrder order_at(const SlowlyVaryingFunction& b, Endpoint e);

enum class Boundedness { BoundedAbove, TendsToInfinity, TendsToZero };
const char* to_string(Boundedness b);

Boundedness endpoint_boundedness(const SlowlyVaryingFunction& b, Endpoint e);

// Decides whether int t^{a-1} b(t)^q dt is finite near the endpoint.
bool endpoint_integrability(const SlowlyVaryingFunction& b, double q, double a, Endpoint e);

enum class TransformKind { Tilde, Hat };
enum class TransformStatus { Converges, Diverges, OutsideFamily };
const char* to_string(TransformKind k);
const char* to_string(TransformStatus s);

struct TransformResult {
  TransformStatus status = TransformStatus::Diverges;
  std::optional<SlowlyVaryingFunction> function;
  // Leading terms of the exact transform at each endpoint, L = |log t|.
  std::optional<Asymptote> at_zero;
  std::optional<Asymptote> at_infinity;
};

TransformResult tilde_hat_transform(const SlowlyVaryingFunction& b, TransformKind kind,
                                    double rel_tol = 1e-9);

enum class SupKind { TildeSup, HatSup };
// nullopt is the NotFinite outcome.
std::optional<SlowlyVaryingFunction> sup_transform(const SlowlyVaryingFunction& b, SupKind kind);

struct LogGrid {
  double t_min = 1e-10;
  double t_max = 1e10;
  int per_decade = 32;
};

struct SvCheckReport {
  bool pass = false;
  double eps = 0.0;
  double k_increasing = kInf;
  double k_decreasing = kInf;
  double k = kInf;
  // K measured on the inner half of the log span; large drift suggests the
  // supremum is still growing with the grid.
  double k_inner = kInf;
  bool stable = false;
  std::size_t samples = 0;
};

SvCheckReport sv_property_check(const std::function<double(double)>& b, double eps,
                                const LogGrid& grid = {});
SvCheckReport sv_property_check(const SlowlyVaryingFunction& b, double eps,
                                const LogGrid& grid = {});

std::string format_sv(const SlowlyVaryingFunction& b);

}  // namespace lk
