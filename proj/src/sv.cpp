#include "lk/sv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "lk/quadrature.hpp"

namespace lk {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

int sign_tol(double x) {
  if (x > kExponentTol) return 1;
  if (x < -kExponentTol) return -1;
  return 0;
}

bool finite_sig(const EndpointSignature& s) {
  return std::isfinite(s.gamma) && std::isfinite(s.alpha) && std::isfinite(s.beta);
}

}  // namespace

bool EndpointSignature::is_zero() const {
  return gamma == 0.0 && alpha == 0.0 && beta == 0.0;
}

int lex_compare(const EndpointSignature& a, const EndpointSignature& b) {
  return lex_compare(GrowthOrder(a), GrowthOrder(b));
}

int lex_sign(const EndpointSignature& s) { return lex_sign(GrowthOrder(s)); }

EndpointSignature max_lex(const EndpointSignature& a, const EndpointSignature& b) {
  return lex_compare(a, b) >= 0 ? a : b;
}

bool GrowthOrder::in_family() const { return sign_tol(e[3]) == 0; }

GrowthOrder GrowthOrder::operator+(const GrowthOrder& o) const {
  return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]};
}

GrowthOrder GrowthOrder::operator-(const GrowthOrder& o) const {
  return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]};
}

GrowthOrder GrowthOrder::operator*(double r) const {
  return {e[0] * r, e[1] * r, e[2] * r, e[3] * r};
}

double GrowthOrder::log_value(double L) const {
  double l = std::log1p(L);
  double ll = std::log1p(l);
  double v = 0.0;
  if (e[0] != 0.0) v += e[0] * std::sqrt(L);
  if (e[1] != 0.0) v += e[1] * l;
  if (e[2] != 0.0) v += e[2] * ll;
  if (e[3] != 0.0) v += e[3] * std::log1p(ll);
  return v;
}

int lex_compare(const GrowthOrder& a, const GrowthOrder& b) {
  for (int i = 0; i < 4; ++i) {
    int s = sign_tol(a.e[i] - b.e[i]);
    if (s != 0) return s;
  }
  return 0;
}

int lex_sign(const GrowthOrder& g) { return lex_compare(g, GrowthOrder{}); }

bool tail_integrable(const GrowthOrder& g) {
  return lex_compare(g, GrowthOrder(0.0, -1.0, -1.0, -1.0)) < 0;
}

double Asymptote::operator()(double L) const { return scale * std::exp(order.log_value(L)); }

Asymptote integrate_tail(const Asymptote& a) {
  const GrowthOrder& g = a.order;
  if (!tail_integrable(g)) throw std::logic_error("integrate_tail: divergent order");
  if (sign_tol(g.gamma()) < 0)
    return {a.scale * (-2.0 / g.gamma()), {g.gamma(), g.alpha() + 0.5, g.beta(), g.delta()}};
  if (sign_tol(g.alpha() + 1.0) < 0)
    return {a.scale / (-g.alpha() - 1.0), {0.0, g.alpha() + 1.0, g.beta(), g.delta()}};
  if (sign_tol(g.beta() + 1.0) < 0)
    return {a.scale / (-g.beta() - 1.0), {0.0, 0.0, g.beta() + 1.0, g.delta()}};
  return {a.scale / (-g.delta() - 1.0), {0.0, 0.0, 0.0, g.delta() + 1.0}};
}

HeadIntegral integrate_head(const Asymptote& a) {
  const GrowthOrder& g = a.order;
  if (tail_integrable(g)) return {HeadKind::Finite, {std::nan(""), GrowthOrder{}}};
  if (sign_tol(g.gamma()) > 0)
    return {HeadKind::Grows,
            {a.scale * (2.0 / g.gamma()), {g.gamma(), g.alpha() + 0.5, g.beta(), g.delta()}}};
  if (sign_tol(g.alpha() + 1.0) > 0)
    return {HeadKind::Grows,
            {a.scale / (g.alpha() + 1.0), {0.0, g.alpha() + 1.0, g.beta(), g.delta()}}};
  if (sign_tol(g.beta() + 1.0) > 0)
    return {HeadKind::Grows, {a.scale / (g.beta() + 1.0), {0.0, 0.0, g.beta() + 1.0, g.delta()}}};
  if (sign_tol(g.delta() + 1.0) > 0)
    return {HeadKind::Grows, {a.scale / (g.delta() + 1.0), {0.0, 0.0, 0.0, g.delta() + 1.0}}};
  return {HeadKind::Unrepresentable, {std::nan(""), g}};
}

SlowlyVaryingFunction::SlowlyVaryingFunction(double scale, EndpointSignature zero,
                                             EndpointSignature infinity)
    : scale_(scale), sig0_(zero), sig_inf_(infinity) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("slowly varying function: scale must be positive and finite");
  if (!finite_sig(zero) || !finite_sig(infinity))
    throw std::invalid_argument("slowly varying function: exponents must be finite");
}

double SlowlyVaryingFunction::log_at(double L, Endpoint side) const {
  return std::log(scale_) + GrowthOrder(signature(side)).log_value(L);
}

double SlowlyVaryingFunction::log_value(double t) const {
  if (!(t > 0.0) || std::isinf(t)) throw std::domain_error("eval: t must be positive and finite");
  double lt = std::log(t);
  return log_at(std::fabs(lt), lt < 0.0 ? Endpoint::Zero : Endpoint::Infinity);
}

double SlowlyVaryingFunction::operator()(double t) const { return std::exp(log_value(t)); }

SlowlyVaryingFunction SlowlyVaryingFunction::pow(double r) const {
  return {std::pow(scale_, r), sig0_ * r, sig_inf_ * r};
}

SlowlyVaryingFunction SlowlyVaryingFunction::reciprocal_argument() const {
  return {scale_, sig_inf_, sig0_};
}

SlowlyVaryingFunction SlowlyVaryingFunction::scaled(double k) const {
  return {scale_ * k, sig0_, sig_inf_};
}

SlowlyVaryingFunction operator*(const SlowlyVaryingFunction& a, const SlowlyVaryingFunction& b) {
  return {a.scale_ * b.scale_, a.sig0_ + b.sig0_, a.sig_inf_ + b.sig_inf_};
}

SlowlyVaryingFunction operator/(const SlowlyVaryingFunction& a, const SlowlyVaryingFunction& b) {
  return {a.scale_ / b.scale_, a.sig0_ - b.sig0_, a.sig_inf_ - b.sig_inf_};
}

double eval(const SlowlyVaryingFunction& b, double t) { return b(t); }

GrowthOrder order_at(const SlowlyVaryingFunction& b, Endpoint e) {
  return GrowthOrder(b.signature(e));
}

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::BoundedAbove: return "BoundedAbove";
    case Boundedness::TendsToInfinity: return "TendsToInfinity";
    case Boundedness::TendsToZero: return "TendsToZero";
  }
  return "?";
}

Boundedness endpoint_boundedness(const SlowlyVaryingFunction& b, Endpoint e) {
  int s = lex_sign(b.signature(e));
  if (s > 0) return Boundedness::TendsToInfinity;
  if (s < 0) return Boundedness::TendsToZero;
  return Boundedness::BoundedAbove;
}

bool endpoint_integrability(const SlowlyVaryingFunction& b, double q, double a, Endpoint e) {
  if (!(q > 0.0)) throw std::invalid_argument("endpoint_integrability: q must be positive");
  if (std::isinf(q)) throw std::invalid_argument("endpoint_integrability: q must be finite");
  int s = sign_tol(a);
  if (s != 0) return (s > 0) == (e == Endpoint::Zero);
  return tail_integrable(order_at(b, e) * q);
}

const char* to_string(TransformKind k) { return k == TransformKind::Tilde ? "Tilde" : "Hat"; }

const char* to_string(TransformStatus s) {
  switch (s) {
    case TransformStatus::Converges: return "Converges";
    case TransformStatus::Diverges: return "Diverges";
    case TransformStatus::OutsideFamily: return "OutsideFamily";
  }
  return "?";
}

TransformResult tilde_hat_transform(const SlowlyVaryingFunction& b, TransformKind kind,
                                    double rel_tol) {
  const Endpoint gov = kind == TransformKind::Tilde ? Endpoint::Zero : Endpoint::Infinity;
  const Endpoint other = gov == Endpoint::Zero ? Endpoint::Infinity : Endpoint::Zero;

  TransformResult out;
  Asymptote near{b.scale(), order_at(b, gov)};
  if (!tail_integrable(near.order)) {
    out.status = TransformStatus::Diverges;
    return out;
  }
  Asymptote a_gov = integrate_tail(near);

  HeadIntegral head = integrate_head({b.scale(), order_at(b, other)});
  Asymptote a_other;
  bool representable = true;
  if (head.kind == HeadKind::Finite) {
    QuadResult total = quad_oracle(0.0, b, 1.0, 0.0, kInf, rel_tol);
    a_other = {total.value, GrowthOrder{}};
  } else if (head.kind == HeadKind::Grows) {
    a_other = head.asymptote;
  } else {
    a_other = head.asymptote;
    representable = false;
  }

  out.at_zero = gov == Endpoint::Zero ? a_gov : a_other;
  out.at_infinity = gov == Endpoint::Zero ? a_other : a_gov;
  if (!representable || !a_gov.order.in_family() || !a_other.order.in_family()) {
    out.status = TransformStatus::OutsideFamily;
    return out;
  }
  out.status = TransformStatus::Converges;
  out.function = SlowlyVaryingFunction(a_gov.scale, out.at_zero->order.signature(),
                                       out.at_infinity->order.signature());
  return out;
}

std::optional<SlowlyVaryingFunction> sup_transform(const SlowlyVaryingFunction& b, SupKind kind) {
  const Endpoint near = kind == SupKind::TildeSup ? Endpoint::Zero : Endpoint::Infinity;
  const Endpoint far = near == Endpoint::Zero ? Endpoint::Infinity : Endpoint::Zero;
  if (lex_sign(b.signature(near)) > 0) return std::nullopt;

  SideLogDensity h = [&b](double L, Endpoint side) { return b.log_at(L, side); };
  double limit = lex_sign(b.signature(near)) == 0 ? std::log(b.scale()) : -kInf;
  SupEstimate s = near == Endpoint::Zero ? sup_log_weight(h, 0.0, 1.0, limit, -kInf)
                                         : sup_log_weight(h, 1.0, kInf, -kInf, limit);
  double scale = std::max(b.scale(), std::exp(s.log_value));

  EndpointSignature kept = b.signature(near);
  EndpointSignature lifted = max_lex(b.signature(far), EndpointSignature{});
  if (near == Endpoint::Zero) return SlowlyVaryingFunction(scale, kept, lifted);
  return SlowlyVaryingFunction(scale, lifted, kept);
}

namespace {

// Largest M(t_k)/g(t_k) with M the running max of g from the left.
double running_max_ratio(const std::vector<double>& g, std::size_t lo, std::size_t hi) {
  double m = 0.0, k = 1.0;
  for (std::size_t i = lo; i < hi; ++i) {
    m = std::max(m, g[i]);
    k = std::max(k, m / g[i]);
  }
  return k;
}

double running_max_ratio_rev(const std::vector<double>& g, std::size_t lo, std::size_t hi) {
  double m = 0.0, k = 1.0;
  for (std::size_t i = hi; i-- > lo;) {
    m = std::max(m, g[i]);
    k = std::max(k, m / g[i]);
  }
  return k;
}

}  // namespace

SvCheckReport sv_property_check(const std::function<double(double)>& b, double eps,
                                const LogGrid& grid) {
  SvCheckReport r;
  r.eps = eps;
  if (!(grid.t_min > 0.0) || !(grid.t_max > grid.t_min) || grid.per_decade < 1)
    throw std::invalid_argument("sv_property_check: bad grid");
  double decades = std::log10(grid.t_max / grid.t_min);
  std::size_t n = static_cast<std::size_t>(std::ceil(decades * grid.per_decade)) + 1;
  r.samples = n;

  std::vector<double> up(n), down(n);
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    double lt = std::log(grid.t_min) + (std::log(grid.t_max) - std::log(grid.t_min)) *
                                           static_cast<double>(i) / static_cast<double>(n - 1);
    double v = b(std::exp(lt));
    if (!(v > 0.0) || !std::isfinite(v)) {
      finite = false;
      break;
    }
    up[i] = std::exp(eps * lt + std::log(v));
    down[i] = std::exp(-eps * lt + std::log(v));
    if (!(up[i] > 0.0) || !(down[i] > 0.0) || !std::isfinite(up[i]) || !std::isfinite(down[i]))
      finite = false;
  }
  if (!finite) return r;

  // t^eps b against its running max from the left; t^-eps b against the
  // running max from the right (a non-increasing majorant).
  r.k_increasing = running_max_ratio(up, 0, n);
  r.k_decreasing = running_max_ratio_rev(down, 0, n);
  r.k = std::max(r.k_increasing, r.k_decreasing);
  std::size_t lo = n / 4, hi = n - n / 4;
  r.k_inner = std::max(running_max_ratio(up, lo, hi), running_max_ratio_rev(down, lo, hi));
  r.stable = std::isfinite(r.k) && std::fabs(r.k - r.k_inner) <= 0.1 * r.k;
  r.pass = eps > 0.0 && std::isfinite(r.k);
  return r;
}

SvCheckReport sv_property_check(const SlowlyVaryingFunction& b, double eps, const LogGrid& grid) {
  return sv_property_check([&b](double t) { return b(t); }, eps, grid);
}

std::string format_sv(const SlowlyVaryingFunction& b) {
  auto sig = [](const EndpointSignature& s) {
    return format_number(s.gamma) + "," + format_number(s.alpha) + "," + format_number(s.beta);
  };
  return "sv(" + format_number(b.scale()) + "; " + sig(b.sig0()) + " | " + sig(b.sig_inf()) + ")";
}

}  // namespace lk
