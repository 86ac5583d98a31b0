#include "lk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

namespace lk {

const char* to_string(QuadStatus s) {
  switch (s) {
    case QuadStatus::Converged: return "Converged";
    case QuadStatus::Extrapolated: return "Extrapolated";
    case QuadStatus::DivergenceSuspected: return "DivergenceSuspected";
  }
  return "?";
}

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kWCap = 690.0;      // w = log(1+L); L = e^690 is near the double range
constexpr double kOverflowLog = 700.0;

struct Partial {
  double value = 0.0;
  double error = 0.0;
  bool overflow = false;
};

// int_a^b exp(g(x)) dx with g sampled for a common shift, split into pieces.
Partial integrate_exp(const std::function<double(double)>& g, double a, double b, double rel_tol,
                      int pieces) {
  Partial out;
  if (!(b > a)) return out;
  double shift = -kInf;
  for (int i = 0; i <= 16; ++i) {
    double x = a + (b - a) * i / 16.0;
    double v = g(x);
    if (std::isnan(v)) continue;
    shift = std::max(shift, v);
  }
  if (shift == -kInf) return out;
  if (shift > kOverflowLog) {
    out.overflow = true;
    out.value = kInf;
    return out;
  }
  auto f = [&](double x) {
    double v = g(x) - shift;
    return v < -745.0 ? 0.0 : std::exp(v);
  };
  double sum = 0.0, err = 0.0;
  for (int k = 0; k < pieces; ++k) {
    double lo = a + (b - a) * k / pieces;
    double hi = k + 1 == pieces ? b : a + (b - a) * (k + 1) / pieces;
    // unit-interval form: the error estimate misbehaves on tiny absolute widths
    double width = hi - lo, e = 0.0;
    auto unit = [&](double x) { return f(lo + width * x); };
    sum += GK::integrate(unit, 0.0, 1.0, 18, rel_tol * 0.1, &e) * width;
    err += e * width;
  }
  double scale = std::exp(shift);
  out.value = sum * scale;
  out.error = err * scale;
  if (!std::isfinite(out.value)) out.overflow = true;
  return out;
}

// int_{L1}^{L2} exp(f(L)) dL for finite L2 via L = v^2, which removes the
// sqrt(L) kink at L = 0.
Partial finite_side(const std::function<double(double)>& f, double L1, double L2, double rel_tol) {
  double v1 = std::sqrt(L1), v2 = std::sqrt(L2);
  int pieces = std::clamp(static_cast<int>(std::ceil(v2 - v1)), 1, 64);
  auto g = [&](double v) { return v > 0.0 ? f(v * v) + std::log(2.0 * v) : -kInf; };
  return integrate_exp(g, v1, v2, rel_tol, pieces);
}

QuadResult improper_side(const std::function<double(double)>& f, double L0, double rel_tol) {
  QuadResult r;
  Partial head = finite_side(f, L0, L0 + 2.0, rel_tol);
  if (head.overflow) return {kInf, kInf, QuadStatus::DivergenceSuspected};
  double sum = head.value, err = head.error;

  auto g = [&](double w) { return f(std::expm1(w)) + w; };
  double w = std::log1p(L0 + 2.0);
  std::vector<double> incs;
  bool converged = false;
  while (2.0 * w <= kWCap) {
    Partial p = integrate_exp(g, w, 2.0 * w, rel_tol, 8);
    if (p.overflow) return {kInf, kInf, QuadStatus::DivergenceSuspected};
    sum += p.value;
    err += p.error;
    incs.push_back(p.value);
    w *= 2.0;
    if (!std::isfinite(sum)) return {kInf, kInf, QuadStatus::DivergenceSuspected};
    if (incs.size() >= 2 && p.value <= 1e-3 * rel_tol * sum) {
      converged = true;
      break;
    }
  }
  r.value = sum;
  r.abs_error = err;
  if (converged || sum == 0.0) return r;
  double last = incs.back(), prev = incs.size() >= 2 ? incs[incs.size() - 2] : 0.0;
  if (prev <= 0.0) return r;
  double ratio = last / prev;
  if (ratio >= 0.98) return {kInf, kInf, QuadStatus::DivergenceSuspected};
  double tail = last * ratio / (1.0 - ratio);
  r.value += tail;
  r.abs_error += tail;
  r.status = tail <= rel_tol * r.value ? QuadStatus::Converged : QuadStatus::Extrapolated;
  return r;
}

QuadResult side_integral(const std::function<double(double)>& f, double L1, double L2,
                         double rel_tol) {
  if (!(L2 > L1)) return {};
  if (std::isinf(L2)) return improper_side(f, L1, rel_tol);
  Partial p = finite_side(f, L1, L2, rel_tol);
  if (p.overflow) return {kInf, kInf, QuadStatus::DivergenceSuspected};
  return {p.value, p.error, QuadStatus::Converged};
}

QuadResult combine(const QuadResult& a, const QuadResult& b) {
  QuadResult r{a.value + b.value, a.abs_error + b.abs_error, QuadStatus::Converged};
  if (a.diverged() || b.diverged()) {
    r.status = QuadStatus::DivergenceSuspected;
    r.value = kInf;
  } else if (a.status == QuadStatus::Extrapolated || b.status == QuadStatus::Extrapolated) {
    r.status = QuadStatus::Extrapolated;
  }
  return r;
}

void check_interval(double t_lo, double t_hi) {
  if (!(t_lo >= 0.0) || std::isnan(t_hi) || t_hi < t_lo)
    throw std::invalid_argument("integration interval must satisfy 0 <= t_lo <= t_hi");
}

}  // namespace

QuadResult integrate_log_density(const SideLogDensity& h, double t_lo, double t_hi,
                                 double rel_tol) {
  check_interval(t_lo, t_hi);
  QuadResult total;
  if (t_lo < 1.0) {
    double L1 = t_hi < 1.0 ? -std::log(t_hi) : 0.0;
    double L2 = t_lo == 0.0 ? kInf : -std::log(t_lo);
    total = combine(total, side_integral([&](double L) { return h(L, Endpoint::Zero); }, L1, L2,
                                         rel_tol));
  }
  if (t_hi > 1.0) {
    double L1 = t_lo > 1.0 ? std::log(t_lo) : 0.0;
    double L2 = std::isinf(t_hi) ? kInf : std::log(t_hi);
    total = combine(total, side_integral([&](double L) { return h(L, Endpoint::Infinity); }, L1,
                                         L2, rel_tol));
  }
  return total;
}

QuadResult quad_oracle(double a, const SlowlyVaryingFunction& b, double q, double t_lo,
                       double t_hi, double rel_tol) {
  if (!(q > 0.0) || std::isinf(q)) throw std::invalid_argument("quad_oracle: q must be finite, > 0");
  SideLogDensity h = [&](double L, Endpoint side) {
    double lt = side == Endpoint::Zero ? -L : L;
    return a * lt + q * b.log_at(L, side);
  };
  return integrate_log_density(h, t_lo, t_hi, rel_tol);
}

namespace {

struct SideSup {
  double log_value = -kInf;
  double L = 0.0;
  double residual = 0.0;
};

SideSup side_sup(const std::function<double(double)>& f, double L1, double L2) {
  std::vector<double> xs;
  const double vsplit = 8.0;  // v-grid up to L = 64, w-grid beyond
  double v1 = std::sqrt(L1), v2 = std::sqrt(std::min(L2, vsplit * vsplit));
  if (v2 > v1) {
    int n = 8 + static_cast<int>(std::ceil(16.0 * (v2 - v1)));
    for (int i = 0; i <= n; ++i) {
      double v = v1 + (v2 - v1) * i / n;
      xs.push_back(v * v);
    }
  } else {
    xs.push_back(L1);
  }
  if (L2 > vsplit * vsplit) {
    double w1 = std::log1p(std::max(L1, vsplit * vsplit));
    double w2 = std::min(std::log1p(L2), kWCap);
    int n = std::max(2, static_cast<int>(std::ceil((w2 - w1) / 0.05)));
    for (int i = 1; i <= n; ++i) xs.push_back(std::expm1(w1 + (w2 - w1) * i / n));
  }
  if (std::isfinite(L2)) xs.push_back(L2);
  std::sort(xs.begin(), xs.end());

  std::size_t best = 0;
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys[i] = f(xs[i]);
    if (ys[i] > ys[best] || std::isnan(ys[best])) best = i;
  }
  SideSup out{ys[best], xs[best], 0.0};
  if (xs.size() >= 3) {
    double lo = xs[best == 0 ? 0 : best - 1];
    double hi = xs[std::min(best + 1, xs.size() - 1)];
    if (hi > lo) {
      auto neg = [&](double L) { return -f(L); };
      auto [x, y] = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
      if (-y > out.log_value) {
        out.residual = std::expm1(-y - out.log_value);
        out.log_value = -y;
        out.L = x;
      }
    }
  }
  return out;
}

}  // namespace

SupEstimate sup_log_weight(const SideLogDensity& h, double t_lo, double t_hi,
                           double log_limit_zero, double log_limit_inf) {
  check_interval(t_lo, t_hi);
  SupEstimate s;
  auto take = [&](double v, double t, double residual) {
    if (v > s.log_value) {
      s.log_value = v;
      s.argmax = t;
      s.residual = residual;
    }
  };
  if (t_lo < 1.0) {
    double L1 = t_hi < 1.0 ? -std::log(t_hi) : 0.0;
    double L2 = t_lo == 0.0 ? kInf : -std::log(t_lo);
    SideSup z = side_sup([&](double L) { return h(L, Endpoint::Zero); }, L1, L2);
    take(z.log_value, std::exp(-z.L), z.residual);
  }
  if (t_hi > 1.0) {
    double L1 = t_lo > 1.0 ? std::log(t_lo) : 0.0;
    double L2 = std::isinf(t_hi) ? kInf : std::log(t_hi);
    SideSup i = side_sup([&](double L) { return h(L, Endpoint::Infinity); }, L1, L2);
    take(i.log_value, std::exp(i.L), i.residual);
  }
  if (t_lo == 0.0) take(log_limit_zero, 0.0, 0.0);
  if (std::isinf(t_hi)) take(log_limit_inf, kInf, 0.0);
  return s;
}

}  // namespace lk
