#include "lk/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lk {

StepFunction::StepFunction(std::vector<StepPiece> pieces) : pieces_(std::move(pieces)) {
  for (auto& p : pieces_) {
    if (!std::isfinite(p.value)) throw std::invalid_argument("step function: values must be finite");
    p.value = std::fabs(p.value);
    if (!(p.mass > 0.0)) throw std::invalid_argument("step function: masses must be positive");
    if (std::isinf(p.mass) && p.value != 0.0)
      throw std::invalid_argument("step function: infinite mass only allowed with value 0");
  }
}

double StepFunction::support_mass() const {
  double m = 0.0;
  for (const auto& p : pieces_)
    if (p.value > 0.0) m += p.mass;
  return m;
}

DecreasingStep::DecreasingStep(std::vector<double> breaks, std::vector<double> values) {
  if (breaks.size() != values.size())
    throw std::invalid_argument("decreasing step: breaks and values differ in length");
  double prev_b = 0.0, prev_v = kInf;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    double b = breaks[i], v = values[i];
    if (!(b > prev_b) || std::isinf(b))
      throw std::invalid_argument("decreasing step: breakpoints must increase and be finite");
    if (!(v >= 0.0) || !std::isfinite(v) || v > prev_v)
      throw std::invalid_argument("decreasing step: values must be finite and non-increasing");
    prev_b = b;
    prev_v = v;
    if (v == 0.0) break;
    if (!values_.empty() && values_.back() == v) {
      breaks_.back() = b;
    } else {
      breaks_.push_back(b);
      values_.push_back(v);
    }
  }
  areas_.resize(values_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += values_[i] * (breaks_[i] - left(i));
    areas_[i] = acc;
  }
}

DecreasingStep DecreasingStep::characteristic(double m) {
  if (!(m > 0.0) || std::isinf(m)) throw std::invalid_argument("characteristic: mass must be positive, finite");
  return DecreasingStep({m}, {1.0});
}

double DecreasingStep::operator()(double t) const {
  if (t < 0.0) throw std::domain_error("f*: t must be non-negative");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.end()) return 0.0;
  return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

double DecreasingStep::integral_to(double t) const {
  if (t <= 0.0) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.end()) return areas_.empty() ? 0.0 : areas_.back();
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
  return area_before(i) + values_[i] * (t - left(i));
}

DecreasingStep DecreasingStep::truncated(double T) const {
  if (T >= support_end()) return *this;
  std::vector<double> b, v;
  for (std::size_t i = 0; i < size() && left(i) < T; ++i) {
    b.push_back(std::min(breaks_[i], T));
    v.push_back(values_[i]);
  }
  return DecreasingStep(std::move(b), std::move(v));
}

DecreasingStep DecreasingStep::scaled_values(double k) const {
  if (!(k >= 0.0) || std::isinf(k)) throw std::invalid_argument("scaled_values: bad factor");
  std::vector<double> v(values_);
  for (auto& x : v) x *= k;
  return DecreasingStep(breaks_, std::move(v));
}

DecreasingStep DecreasingStep::dilated(double s) const {
  if (!(s > 0.0) || std::isinf(s)) throw std::invalid_argument("dilated: bad factor");
  std::vector<double> b(breaks_);
  for (auto& x : b) x *= s;
  return DecreasingStep(std::move(b), values_);
}

JointStepFunction::JointStepFunction(std::vector<JointPiece> pieces) : pieces_(std::move(pieces)) {
  for (auto& p : pieces_) {
    if (!std::isfinite(p.f) || !std::isfinite(p.g))
      throw std::invalid_argument("joint step function: values must be finite");
    if (!(p.mass > 0.0) || std::isinf(p.mass))
      throw std::invalid_argument("joint step function: masses must be positive and finite");
    p.f = std::fabs(p.f);
    p.g = std::fabs(p.g);
  }
}

StepFunction JointStepFunction::f() const {
  std::vector<StepPiece> out;
  for (const auto& p : pieces_) out.push_back({p.f, p.mass});
  return StepFunction(std::move(out));
}

StepFunction JointStepFunction::g() const {
  std::vector<StepPiece> out;
  for (const auto& p : pieces_) out.push_back({p.g, p.mass});
  return StepFunction(std::move(out));
}

StepFunction JointStepFunction::sum() const {
  std::vector<StepPiece> out;
  for (const auto& p : pieces_) out.push_back({p.f + p.g, p.mass});
  return StepFunction(std::move(out));
}

double distribution(const StepFunction& f, double s) {
  if (!(s >= 0.0)) throw std::domain_error("distribution: s must be non-negative");
  double m = 0.0;
  for (const auto& p : f.pieces())
    if (p.value > s) m += p.mass;
  return m;
}

double distribution(const DecreasingStep& f, double s) {
  if (!(s >= 0.0)) throw std::domain_error("distribution: s must be non-negative");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size() && f.values()[i] > s; ++i) m = f.right(i);
  return m;
}

DecreasingStep rearrange(const StepFunction& f) {
  std::vector<StepPiece> ps;
  for (const auto& p : f.pieces())
    if (p.value > 0.0) ps.push_back(p);
  std::stable_sort(ps.begin(), ps.end(),
                   [](const StepPiece& a, const StepPiece& b) { return a.value > b.value; });
  std::vector<double> breaks, values;
  double acc = 0.0;
  for (std::size_t i = 0; i < ps.size();) {
    double v = ps[i].value, m = 0.0;
    for (; i < ps.size() && ps[i].value == v; ++i) m += ps[i].mass;
    acc += m;
    breaks.push_back(acc);
    values.push_back(v);
  }
  return DecreasingStep(std::move(breaks), std::move(values));
}

double maximal(const DecreasingStep& fstar, double t) {
  if (!(t > 0.0)) throw std::domain_error("maximal: t must be positive");
  if (std::isinf(t)) return 0.0;
  return fstar.integral_to(t) / t;
}

double product_integral(const DecreasingStep& a, const DecreasingStep& b) {
  double total = 0.0, x = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double end = std::min(a.right(i), b.right(j));
    total += a.values()[i] * b.values()[j] * (end - x);
    x = end;
    if (a.right(i) == end) ++i;
    if (b.right(j) == end) ++j;
  }
  return total;
}

PairIntegrals pair_integrals(const JointStepFunction& h) {
  PairIntegrals r;
  for (const auto& p : h.pieces()) r.lhs += p.f * p.g * p.mass;
  r.rhs = product_integral(rearrange(h.f()), rearrange(h.g()));
  return r;
}

}  // namespace lk
