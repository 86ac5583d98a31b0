#include "lk/lknorm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "lk/quadrature.hpp"

namespace lk {

void SpaceSpec::validate() const {
  if (!(p > 0.0)) throw std::invalid_argument("space spec: p must be positive");
  if (!(q > 0.0)) throw std::invalid_argument("space spec: q must be positive");
  if (!(mu > 0.0)) throw std::invalid_argument("space spec: mu must be positive");
}

std::string format_spec(const SpaceSpec& s) {
  std::string out = "LK(p=" + format_number(s.p) + ",q=" + format_number(s.q) + ",b=" + format_sv(s.b);
  if (!std::isinf(s.mu)) out += ",mu=" + format_number(s.mu);
  if (s.star) out += ",star";
  return out + ")";
}

namespace {

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// int_x^y t^{k-1} dt, y may be inf
double power_integral(double k, double x, double y) {
  if (x == 0.0 && k <= 0.0) return kInf;
  if (std::isinf(y) && k >= 0.0) return kInf;
  if (std::fabs(k) < 1e-15) return std::log(y / x);
  if (x == 0.0) return std::pow(y, k) / k;
  if (std::isinf(y)) return -std::pow(x, k) / k;
  return std::pow(x, k) * std::expm1(k * std::log(y / x)) / k;
}

// int_x^y t^{a-1} b^q dt
QuadResult weight_integral(double a, const SlowlyVaryingFunction& b, double q, double x, double y,
                           const NormOptions& opt) {
  bool improper = x == 0.0 || std::isinf(y);
  if (b.is_constant()) {
    double v = std::pow(b.scale(), q) * power_integral(a, x, y);
    if (std::isinf(v)) return {kInf, kInf, QuadStatus::DivergenceSuspected};
    return {v, 0.0, QuadStatus::Converged};
  }
  return quad_oracle(a, b, q, x, y, improper ? opt.tail_rel_tol : opt.rel_tol);
}

// log of t^e b(t) as t -> 0 (zero side) or t -> inf
double log_weight_limit(double e, const SlowlyVaryingFunction& b, Endpoint end) {
  int s = e > 0 ? 1 : (e < 0 ? -1 : 0);
  if (end == Endpoint::Zero) s = -s;
  if (s != 0) return s > 0 ? kInf : -kInf;
  int sb = lex_sign(b.signature(end));
  if (sb > 0) return kInf;
  if (sb < 0) return -kInf;
  return std::log(b.scale());
}

struct Sup {
  double log_value = -kInf;
  double residual = 0.0;
};

// sup over [x, y] of t^e b(t)
Sup weight_sup(double e, const SlowlyVaryingFunction& b, double x, double y) {
  if (b.is_constant()) {
    double c = std::log(b.scale());
    if (e > 0.0) return {std::isinf(y) ? kInf : c + e * std::log(y), 0.0};
    if (e < 0.0) return {x == 0.0 ? kInf : c + e * std::log(x), 0.0};
    return {c, 0.0};
  }
  SideLogDensity h = [&](double L, Endpoint side) {
    return e * (side == Endpoint::Zero ? -L : L) + b.log_at(L, side);
  };
  SupEstimate s = sup_log_weight(h, x, y, log_weight_limit(e, b, Endpoint::Zero),
                                 log_weight_limit(e, b, Endpoint::Infinity));
  return {s.log_value, s.residual};
}

NormResult finish(double value, bool divergent, double residual) {
  NormResult r;
  r.divergent = divergent || std::isinf(value);
  r.value = r.divergent ? kInf : value;
  r.sup_residual = residual;
  return r;
}

NormResult plain_norm(const SpaceSpec& s, const DecreasingStep& f, const NormOptions& opt) {
  const double ip = inv(s.p);
  if (std::isinf(s.q)) {
    double best = -kInf, residual = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Sup w = weight_sup(ip, s.b, f.left(i), f.right(i));
      double v = std::log(f.values()[i]) + w.log_value;
      if (v > best) {
        best = v;
        residual = w.residual;
      }
    }
    return finish(std::exp(best), std::isinf(best) && best > 0, residual);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    QuadResult I = weight_integral(s.q * ip, s.b, s.q, f.left(i), f.right(i), opt);
    if (I.diverged() || std::isinf(I.value)) return finish(kInf, true, 0.0);
    sum += std::pow(f.values()[i], s.q) * I.value;
  }
  return finish(std::pow(sum, 1.0 / s.q), false, 0.0);
}

NormResult star_norm(const SpaceSpec& s, const DecreasingStep& f, const NormOptions& opt) {
  const double ip = inv(s.p);
  const double total = f.integral_to(f.support_end());
  const double a_n = f.support_end();
  if (std::isinf(s.q)) {
    double best = -kInf, residual = 0.0;
    auto take = [&](double v, double r) {
      if (v > best) {
        best = v;
        residual = r;
      }
    };
    Sup w0 = weight_sup(ip, s.b, 0.0, f.right(0));
    take(std::log(f.values()[0]) + w0.log_value, w0.residual);
    for (std::size_t i = 1; i < f.size(); ++i) {
      const double v = f.values()[i], c = f.area_before(i) - v * f.left(i);
      SideLogDensity h = [&](double L, Endpoint side) {
        double lt = side == Endpoint::Zero ? -L : L;
        return ip * lt + s.b.log_at(L, side) + std::log(v + c * std::exp(-lt));
      };
      SupEstimate e = sup_log_weight(h, f.left(i), f.right(i));
      take(e.log_value, e.residual);
    }
    Sup wt = weight_sup(ip - 1.0, s.b, a_n, kInf);
    take(std::log(total) + wt.log_value, wt.residual);
    return finish(std::exp(best), std::isinf(best) && best > 0, residual);
  }

  double sum = 0.0;
  QuadResult I0 = weight_integral(s.q * ip, s.b, s.q, 0.0, f.right(0), opt);
  if (I0.diverged() || std::isinf(I0.value)) return finish(kInf, true, 0.0);
  sum += std::pow(f.values()[0], s.q) * I0.value;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double v = f.values()[i], c = f.area_before(i) - v * f.left(i);
    SideLogDensity h = [&](double L, Endpoint side) {
      double lt = side == Endpoint::Zero ? -L : L;
      return s.q * ip * lt + s.q * s.b.log_at(L, side) + s.q * std::log(v + c * std::exp(-lt));
    };
    QuadResult I = integrate_log_density(h, f.left(i), f.right(i), opt.rel_tol);
    if (I.diverged()) return finish(kInf, true, 0.0);
    sum += I.value;
  }
  QuadResult It = weight_integral(s.q * ip - s.q, s.b, s.q, a_n, kInf, opt);
  if (It.diverged() || std::isinf(It.value)) return finish(kInf, true, 0.0);
  sum += std::pow(total, s.q) * It.value;
  return finish(std::pow(sum, 1.0 / s.q), false, 0.0);
}

}  // namespace

NormResult lk_norm(const SpaceSpec& spec, const DecreasingStep& fstar, const NormOptions& opt) {
  spec.validate();
  DecreasingStep f = fstar.truncated(spec.mu);
  if (f.empty()) return {};
  return spec.star ? star_norm(spec, f, opt) : plain_norm(spec, f, opt);
}

NormResult lk_norm_star(SpaceSpec spec, const DecreasingStep& fstar, const NormOptions& opt) {
  spec.star = true;
  return lk_norm(spec, fstar, opt);
}

double fundamental_function(const SpaceSpec& spec, double t, const NormOptions& opt) {
  if (!(t > 0.0) || t > spec.mu || std::isinf(t))
    throw std::domain_error("fundamental_function: need 0 < t <= mu");
  return lk_norm(spec, DecreasingStep::characteristic(t), opt).value;
}

EndpointNorms endpoint_norms(const std::function<double(double)>& phi, const DecreasingStep& fstar,
                             double mu) {
  DecreasingStep f = fstar.truncated(mu);
  EndpointNorms out;
  if (f.empty()) return out;

  std::vector<double> ts;
  auto add_log_span = [&](double lo, double hi, int per_decade, int min_points) {
    double d = std::log10(hi / lo);
    int n = std::max(min_points, static_cast<int>(std::ceil(d * per_decade)));
    for (int k = 0; k <= n; ++k) ts.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / n));
  };
  add_log_span(f.right(0) * 1e-6, f.right(0), 4, 4);
  for (std::size_t i = 1; i < f.size(); ++i) add_log_span(f.left(i), f.right(i), 16, 8);
  double end = f.support_end();
  double tail_end = std::min(mu, end * 1e8);
  if (tail_end > end) add_log_span(end, tail_end, 8, 8);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<double> ph(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ph[k] = phi(ts[k]);
    if (!(ph[k] >= 0.0) || std::isnan(ph[k]))
      throw ContractViolation("endpoint_norms: phi must be non-negative");
    if (k > 0 && ph[k] < ph[k - 1] * (1.0 - 1e-12))
      throw ContractViolation("endpoint_norms: phi is not non-decreasing");
  }

  double prev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double cur = phi(f.right(i));
    out.lorentz += f.values()[i] * (cur - prev);
    prev = cur;
  }

  auto g = [&](double t) { return phi(t) * maximal(f, t); };
  std::size_t best = 0;
  double best_v = -1.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    double v = ph[k] * maximal(f, ts[k]);
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  double refined = best_v;
  if (ts.size() >= 3) {
    double lo = std::log(ts[best == 0 ? 0 : best - 1]);
    double hi = std::log(ts[std::min(best + 1, ts.size() - 1)]);
    if (hi > lo) {
      auto neg = [&](double u) { return -g(std::exp(u)); };
      auto [x, y] = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
      (void)x;
      refined = std::max(refined, -y);
    }
  }
  out.marcinkiewicz = refined;
  out.residual = best_v > 0.0 ? refined / best_v - 1.0 : 0.0;
  return out;
}

}  // namespace lk
