#pragma once

#include <cstddef>
#include <vector>

#include "lk/common.hpp"

namespace lk {

struct StepPiece {
  double value = 0.0;
  double mass = 0.0;
};

// Simple function given as unordered (value, mass) pieces. A piece with
// value 0 may carry infinite mass (the tail marker).
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<StepPiece> pieces);

  const std::vector<StepPiece>& pieces() const { return pieces_; }
  double support_mass() const;  // mass where the value is nonzero

 private:
  std::vector<StepPiece> pieces_;
};

// Non-increasing right-continuous step function on [0, inf): value v_i on
// [a_{i-1}, a_i), zero from a_n on. Adjacent equal values are merged and
// trailing zero pieces dropped.
class DecreasingStep {
 public:
  DecreasingStep() = default;
  DecreasingStep(std::vector<double> breaks, std::vector<double> values);

  static DecreasingStep characteristic(double m);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<double>& breaks() const { return breaks_; }  // a_1..a_n
  const std::vector<double>& values() const { return values_; }
  double left(std::size_t i) const { return i == 0 ? 0.0 : breaks_[i - 1]; }
  double right(std::size_t i) const { return breaks_[i]; }
  double support_end() const { return empty() ? 0.0 : breaks_.back(); }

  double operator()(double t) const;
  // int_0^t f*; cumulative areas cached at breakpoints
  double integral_to(double t) const;
  double area_before(std::size_t i) const { return i == 0 ? 0.0 : areas_[i - 1]; }

  DecreasingStep truncated(double T) const;
  DecreasingStep scaled_values(double k) const;
  // f*(t/s): stretches the support by s
  DecreasingStep dilated(double s) const;

  friend bool operator==(const DecreasingStep& a, const DecreasingStep& b) {
    return a.breaks_ == b.breaks_ && a.values_ == b.values_;
  }

 private:
  std::vector<double> breaks_;
  std::vector<double> values_;
  std::vector<double> areas_;
};

struct JointPiece {
  double f = 0.0;
  double g = 0.0;
  double mass = 0.0;
};

class JointStepFunction {
 public:
  JointStepFunction() = default;
  explicit JointStepFunction(std::vector<JointPiece> pieces);

  const std::vector<JointPiece>& pieces() const { return pieces_; }
  StepFunction f() const;
  StepFunction g() const;
  StepFunction sum() const;  // f + g on the common partition

 private:
  std::vector<JointPiece> pieces_;
};

double distribution(const StepFunction& f, double s);
double distribution(const DecreasingStep& f, double s);
DecreasingStep rearrange(const StepFunction& f);
double maximal(const DecreasingStep& fstar, double t);

struct PairIntegrals {
  double lhs = 0.0;
  double rhs = 0.0;
};

PairIntegrals pair_integrals(const JointStepFunction& h);
// int_0^inf f* g* for two rearrangements
double product_integral(const DecreasingStep& a, const DecreasingStep& b);

}  // namespace lk
