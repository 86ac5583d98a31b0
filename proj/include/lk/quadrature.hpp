#pragma once

#include <functional>

#include "lk/common.hpp"
#include "lk/sv.hpp"

namespace lk {

enum class QuadStatus { Converged, Extrapolated, DivergenceSuspected };
const char* to_string(QuadStatus s);

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  QuadStatus status = QuadStatus::Converged;

  bool diverged() const { return status == QuadStatus::DivergenceSuspected; }
};

// log of t*g(t) written in the side coordinates: t = exp(-L) on Zero,
// t = exp(L) on Infinity, L >= 0. Integrating exp(h) dL over both sides
// gives int g(t) dt.
using SideLogDensity = std::function<double(double L, Endpoint side)>;

// int g over [t_lo, t_hi]; t_lo may be 0 and t_hi may be +inf.
QuadResult integrate_log_density(const SideLogDensity& h, double t_lo, double t_hi,
                                 double rel_tol = 1e-10);

// int_{t_lo}^{t_hi} t^{a-1} b(t)^q dt
QuadResult quad_oracle(double a, const SlowlyVaryingFunction& b, double q, double t_lo,
                       double t_hi, double rel_tol = 1e-10);

struct SupEstimate {
  double log_value = -kInf;
  double argmax = 0.0;  // t at the maximum, 0 or inf for endpoint limits
  double residual = 0.0;  // refinement gain over the best grid sample, relative
};

// sup of exp(h) over t in [t_lo, t_hi] where h is a side log-weight
// (no Jacobian). Limits at t = 0 and t = inf are supplied by the caller as
// logs; they are used only when the interval reaches that end.
SupEstimate sup_log_weight(const SideLogDensity& h, double t_lo, double t_hi,
                           double log_limit_zero = -kInf, double log_limit_inf = -kInf);

}  // namespace lk
