#include "lk/verify.hpp"

#include <algorithm>
#include <cmath>

#include "lk/quadrature.hpp"

namespace lk {

namespace {

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  int n = std::max(1, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)));
  std::vector<double> ts(n + 1);
  double a = std::log(lo), b = std::log(hi);
  for (int k = 0; k <= n; ++k) ts[k] = std::exp(a + (b - a) * k / n);
  ts.front() = lo;
  ts.back() = hi;
  return ts;
}

// Cells (0, ts[0]) and [ts[k], ts[k+1]); logv[k] is the log value on the cell
// starting at ts[k] (the first cell reuses logv[0]). A suffix max over all
// samples, right endpoint included, makes the result a non-increasing majorant.
DecreasingStep majorant(const std::vector<double>& ts, std::vector<double> logv) {
  std::size_t n = ts.size() - 1;
  std::vector<double> breaks, values;
  breaks.reserve(n + 1);
  values.reserve(n + 1);
  for (std::size_t k = n; k-- > 0;) logv[k] = std::max(logv[k], logv[k + 1]);
  breaks.push_back(ts[0]);
  values.push_back(std::exp(logv[0]));
  for (std::size_t k = 0; k < n; ++k) {
    breaks.push_back(ts[k + 1]);
    values.push_back(std::exp(logv[k]));
  }
  return DecreasingStep(std::move(breaks), std::move(values));
}

void suffix_max(std::vector<double>& logv) {
  for (std::size_t k = logv.size() - 1; k-- > 0;) logv[k] = std::max(logv[k], logv[k + 1]);
}

double log_l(double t) { return std::log1p(std::fabs(std::log(t))); }

SpaceSpec with_mu(SpaceSpec s, double mu) {
  s.mu = mu;
  return s;
}

// Witness for a failing q1 > q2 embedding. With q1 < inf it is built from
// V = int_0^t s^{q1/p-1} b1^q1 and W (same for b2, q2):
// f* = (W/V)^{r/(q1 q2)} Phi^{-s}, Phi = 1 + int (W/V)^{r/q1} dW from t = 1.
DecreasingStep proper_gap_witness(const WitnessRecipe& rc) {
  const SpaceSpec& a = rc.source;
  const SpaceSpec& d = rc.target;
  if (a.p != d.p || !(a.q > d.q))
    throw std::domain_error("ProperEmbeddingGap needs p1 = p2 and q1 > q2");
  const double p = a.p, ip = inv(p), q1 = a.q, q2 = d.q;
  const bool zero = rc.toward == Endpoint::Zero;
  if (!zero && !std::isinf(rc.mu)) throw std::domain_error("witness toward infinity needs mu = inf");

  const double lo = zero ? rc.t_min : 1.0;
  const double hi = zero ? std::min({1.0, rc.mu, rc.t_max}) : rc.t_max;
  if (!(hi > lo)) throw std::domain_error("ProperEmbeddingGap: empty support");
  std::vector<double> ts = log_grid(lo, hi, rc.per_decade);
  const std::size_t n = ts.size();
  std::vector<double> logv(n);

  if (std::isinf(q1)) {
    SlowlyVaryingFunction b1 = a.b;
    if (std::isinf(p)) b1 = *sup_transform(b1, SupKind::TildeSup);
    for (std::size_t k = 0; k < n; ++k) logv[k] = -ip * std::log(ts[k]) - b1.log_value(ts[k]);
  } else {
    const double r = 1.0 / (1.0 / q2 - 1.0 / q1);
    const double s = 1.0 / q1 + rc.theta / r;
    std::vector<double> V(n), W(n);
    V[0] = quad_oracle(q1 * ip, a.b, q1, 0.0, ts[0], 1e-8).value;
    W[0] = quad_oracle(q2 * ip, d.b, q2, 0.0, ts[0], 1e-8).value;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      V[k + 1] = V[k] + quad_oracle(q1 * ip, a.b, q1, ts[k], ts[k + 1], 1e-8).value;
      W[k + 1] = W[k] + quad_oracle(q2 * ip, d.b, q2, ts[k], ts[k + 1], 1e-8).value;
    }
    std::vector<double> lx(n), phi(n);
    for (std::size_t k = 0; k < n; ++k) lx[k] = std::log(W[k]) - std::log(V[k]);
    auto dphi = [&](std::size_t k) {
      double avg = 0.5 * (std::exp(r / q1 * lx[k]) + std::exp(r / q1 * lx[k + 1]));
      return avg * (W[k + 1] - W[k]);
    };
    if (zero) {
      phi[n - 1] = 1.0;
      for (std::size_t k = n - 1; k-- > 0;) phi[k] = phi[k + 1] + dphi(k);
    } else {
      phi[0] = 1.0;
      for (std::size_t k = 0; k + 1 < n; ++k) phi[k + 1] = phi[k] + dphi(k);
    }
    for (std::size_t k = 0; k < n; ++k)
      logv[k] = r / (q1 * q2) * lx[k] - s * std::log(phi[k]);
  }
  return majorant(ts, std::move(logv));
}

}  // namespace

DecreasingStep build_witness(const WitnessRecipe& rc) {
  if (rc.per_decade < 1) throw std::invalid_argument("witness: per_decade must be positive");
  switch (rc.kind) {
    case WitnessKind::CharacteristicSweep:
    case WitnessKind::StarGapSweep:
      if (rc.mass > rc.mu) throw std::domain_error("witness: mass exceeds mu");
      return DecreasingStep::characteristic(rc.mass);
    case WitnessKind::CaseP1LessP2: {
      const SpaceSpec& a = rc.source;
      double hi = std::min({1.0, rc.mu, rc.t_max});
      if (!(hi > rc.t_min)) throw std::domain_error("witness: empty support");
      std::vector<double> ts = log_grid(rc.t_min, hi, rc.per_decade);
      std::vector<double> logv(ts.size());
      for (std::size_t k = 0; k < ts.size(); ++k)
        logv[k] = -inv(a.p) * std::log(ts[k]) - 2.0 * inv(a.q) * log_l(ts[k]) - a.b.log_value(ts[k]);
      return majorant(ts, std::move(logv));
    }
    case WitnessKind::CaseP1GreaterP2InfMeasure: {
      if (!std::isinf(rc.mu)) throw std::domain_error("witness: recipe needs mu = inf");
      const SpaceSpec& a = rc.source;
      if (!(rc.t_max > 1.0)) throw std::domain_error("witness: horizon must exceed 1");
      std::vector<double> ts = log_grid(1.0, rc.t_max, rc.per_decade);
      std::vector<double> logv(ts.size());
      for (std::size_t k = 0; k < ts.size(); ++k)
        logv[k] = -inv(a.p) * std::log(ts[k]) - 2.0 * inv(a.q) * log_l(ts[k]) - a.b.log_value(ts[k]);
      // chi_(0,1) plus the tail on [1, horizon)
      std::vector<StepPiece> ps{{1.0, 1.0}};
      suffix_max(logv);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k)
        ps.push_back({std::exp(logv[k]), ts[k + 1] - ts[k]});
      return rearrange(StepFunction(std::move(ps)));
    }
    case WitnessKind::ProperEmbeddingGap:
      return proper_gap_witness(rc);
    case WitnessKind::AssociateExtremal: {
      const SpaceSpec& a = rc.source;
      double hi = std::min(rc.mu, rc.t_max);
      if (!(hi > rc.t_min)) throw std::domain_error("witness: empty support");
      std::vector<double> ts = log_grid(rc.t_min, hi, rc.per_decade);
      std::vector<double> logv(ts.size());
      for (std::size_t k = 0; k < ts.size(); ++k)
        logv[k] = -inv(a.p) * std::log(ts[k]) - a.b.log_value(ts[k]);
      return majorant(ts, std::move(logv));
    }
  }
  throw std::logic_error("unknown witness kind");
}

StepFunction random_step_function(std::mt19937_64& rng, int max_pieces) {
  std::uniform_int_distribution<int> count(1, max_pieces);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  int n = count(rng);
  std::vector<StepPiece> ps;
  for (int i = 0; i < n; ++i) {
    double v = std::pow(10.0, expo(rng));
    double m = std::pow(10.0, expo(rng));
    ps.push_back({v, m});
  }
  return StepFunction(std::move(ps));
}

JointStepFunction random_joint(std::mt19937_64& rng, int max_pieces) {
  std::uniform_int_distribution<int> count(1, max_pieces);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  int n = count(rng);
  std::vector<JointPiece> ps;
  for (int i = 0; i < n; ++i) {
    double f = std::pow(10.0, expo(rng));
    double g = std::pow(10.0, expo(rng));
    double m = std::pow(10.0, expo(rng));
    ps.push_back({f, g, m});
  }
  return JointStepFunction(std::move(ps));
}

namespace {

struct Ratio {
  double value = 0.0;
  bool ok = false;
};

Ratio norm_ratio(const SpaceSpec& s, const SpaceSpec& d, const DecreasingStep& f) {
  double a = lk_norm(s, f).value, b = lk_norm(d, f).value;
  if (!(a > 0.0) || !std::isfinite(a) || std::isnan(b)) return {};
  if (std::isinf(b)) return {kInf, true};
  return {b / a, true};
}

}  // namespace

EmbeddingCheckReport check_embedding_numeric(const SpaceSpec& src, const SpaceSpec& dst, double mu,
                                             int n_samples, std::uint64_t seed) {
  EmbeddingCheckReport rep;
  rep.verdict = decide_embedding(src, dst, mu);
  const SpaceSpec s = with_mu(src, mu), d = with_mu(dst, mu);
  Ratio base = norm_ratio(s, d, DecreasingStep::characteristic(std::min(1.0, mu)));
  rep.base_ratio = base.value;
  if (!base.ok || !(base.value > 0.0)) return rep;
  if (std::isinf(base.value)) {
    // chi_(0,1) lies in the source but not in the target
    rep.max_ratio = rep.growth = kInf;
    rep.witness = "characteristic";
    rep.verdict_consistent = !rep.verdict.holds;
    return rep;
  }

  if (rep.verdict.holds) {
    std::mt19937_64 rng(seed);
    std::vector<DecreasingStep> carriers;
    for (int i = 0; i < n_samples; ++i) {
      DecreasingStep f = rearrange(random_step_function(rng));
      carriers.push_back(f.dilated(1.0 / f.support_end()));
    }
    double running = 0.0;
    for (int dec = 0; dec <= 8; ++dec) {
      for (double sgn : {1.0, -1.0}) {
        if (dec == 0 && sgn < 0) continue;
        double scale = std::pow(10.0, sgn * dec);
        if (scale > mu) continue;
        auto take = [&](const DecreasingStep& f) {
          Ratio r = norm_ratio(s, d, f);
          if (r.ok) running = std::max(running, r.value);
        };
        take(DecreasingStep::characteristic(scale));
        for (const auto& c : carriers) take(c.dilated(scale));
      }
      rep.trend.push_back(running);
    }
    rep.max_ratio = running;
    rep.growth = running / base.value;
    double prev = rep.trend[rep.trend.size() - 2];
    rep.last_decade_growth = prev > 0.0 ? running / prev - 1.0 : kInf;
    rep.witness = "random+characteristic";
    rep.verdict_consistent = std::isfinite(running) && rep.last_decade_growth <= kPlateauTolerance;
    return rep;
  }

  struct Sweep {
    std::string name;
    std::vector<double> growth;
    double best = 0.0;
  };
  std::vector<Sweep> sweeps;
  auto run = [&](const std::string& name, const std::vector<double>& params,
                 const std::function<DecreasingStep(double)>& make) {
    Sweep sw{name, {}, 0.0};
    for (double x : params) {
      DecreasingStep f;
      try {
        f = make(x);
      } catch (const std::domain_error&) {
        continue;
      }
      Ratio r = norm_ratio(s, d, f);
      if (!r.ok) break;
      double g = r.value / base.value;
      sw.growth.push_back(g);
      sw.best = std::max(sw.best, g);
      if (sw.best >= kFailGrowthTarget) break;
    }
    sweeps.push_back(sw);
  };

  std::vector<double> small, large;
  for (int k = 4; k <= 300; k += 4) small.push_back(std::pow(10.0, -k));
  for (int k = 4; k <= 300; k += 4) large.push_back(std::pow(10.0, k));
  std::vector<double> depths{1e-4, 1e-8, 1e-16, 1e-32, 1e-64, 1e-128, 1e-200, 1e-256, 1e-300};
  std::vector<double> horizons;
  for (double e : depths) horizons.push_back(1.0 / e);

  auto best_growth = [&]() {
    double g = 0.0;
    for (const auto& sw : sweeps) g = std::max(g, sw.best);
    return g;
  };

  run("characteristic toward 0", small,
      [&](double m) { return DecreasingStep::characteristic(std::min(m, mu)); });
  if (std::isinf(mu) && best_growth() < kFailGrowthTarget)
    run("characteristic toward inf", large, [&](double m) { return DecreasingStep::characteristic(m); });

  WitnessRecipe rc;
  rc.source = s;
  rc.target = d;
  rc.mu = mu;
  rc.per_decade = 16;
  if (rep.verdict.witness && best_growth() < kFailGrowthTarget) {
    rc.kind = *rep.verdict.witness;
    switch (rc.kind) {
      case WitnessKind::CaseP1LessP2:
        run("CaseP1LessP2", depths, [&](double e) {
          WitnessRecipe w = rc;
          w.t_min = e;
          return build_witness(w);
        });
        break;
      case WitnessKind::CaseP1GreaterP2InfMeasure:
        run("CaseP1GreaterP2InfMeasure", horizons, [&](double h) {
          WitnessRecipe w = rc;
          w.t_max = h;
          return build_witness(w);
        });
        break;
      case WitnessKind::ProperEmbeddingGap:
        run("ProperEmbeddingGap toward 0", depths, [&](double e) {
          WitnessRecipe w = rc;
          w.t_min = e;
          w.toward = Endpoint::Zero;
          return build_witness(w);
        });
        if (std::isinf(mu) && best_growth() < kFailGrowthTarget)
          run("ProperEmbeddingGap toward inf", horizons, [&](double h) {
            WitnessRecipe w = rc;
            w.t_max = h;
            w.toward = Endpoint::Infinity;
            return build_witness(w);
          });
        break;
      default:
        break;
    }
  }

  const Sweep* best = nullptr;
  for (const auto& sw : sweeps)
    if (!best || sw.best > best->best) best = &sw;
  if (best) {
    rep.trend = best->growth;
    rep.growth = best->best;
    rep.witness = best->name;
  }
  rep.max_ratio = rep.growth * base.value;
  rep.verdict_consistent = rep.growth >= kFailGrowthTarget;
  return rep;
}

StarGapReport check_star_gap(const SpaceSpec& spec, bool include_large) {
  StarGapReport rep;
  SpaceSpec plain = spec, star = spec;
  plain.star = false;
  star.star = true;
  std::vector<double> ms;
  for (int k = 0; k <= 8; ++k) ms.push_back(std::pow(10.0, -k));
  if (include_large && std::isinf(spec.mu))
    for (int k = 1; k <= 8; ++k) ms.push_back(std::pow(10.0, k));
  double prev_max = 0.0, running = 0.0;
  for (double m : ms) {
    if (m > spec.mu) continue;
    DecreasingStep f = DecreasingStep::characteristic(m);
    double a = lk_norm(plain, f).value, b = lk_norm(star, f).value;
    double r = b / a;
    rep.masses.push_back(m);
    rep.ratios.push_back(r);
    prev_max = running;
    running = std::max(running, r);
  }
  rep.max_ratio = running;
  rep.last_decade_growth = prev_max > 0.0 ? running / prev_max - 1.0 : 0.0;
  rep.growth_confirmed = running >= 10.0;
  return rep;
}

HolderDualityReport check_holder_and_duality(const SpaceSpec& spec, int n_samples,
                                             std::uint64_t seed) {
  HolderDualityReport rep;
  rep.associate = associate_space(spec);
  if (rep.associate.kind != AssociateResult::Kind::Space) {
    rep.skipped = true;
    rep.verdict_consistent = true;
    return rep;
  }
  const SpaceSpec& X = spec;
  const SpaceSpec& Xa = *rep.associate.space;

  std::mt19937_64 rng(seed);
  std::vector<JointStepFunction> pairs;
  for (int i = 0; i < n_samples; ++i) pairs.push_back(random_joint(rng));
  {
    // comonotone saturating pair f = g
    JointStepFunction h = random_joint(rng);
    std::vector<JointPiece> ps = h.pieces();
    for (auto& p : ps) p.g = p.f;
    pairs.emplace_back(std::move(ps));
  }

  rep.holder_inner_min = kInf;
  rep.holder_outer_min = kInf;
  for (int k = -6; k <= 6; ++k) {
    double scale = std::pow(10.0, k);
    double cmin = kInf;
    for (const auto& h : pairs) {
      std::vector<JointPiece> ps = h.pieces();
      double total = 0.0;
      for (auto& p : ps) {
        p.mass *= scale;
        total += p.mass;
      }
      if (total > X.mu) continue;
      JointStepFunction hs(std::move(ps));
      double lhs = pair_integrals(hs).lhs;
      double gx = lk_norm(X, rearrange(hs.g())).value;
      double fx = lk_norm(Xa, rearrange(hs.f())).value;
      if (!(lhs > 0.0)) continue;
      cmin = std::min(cmin, gx * fx / lhs);
    }
    rep.holder_min_by_scale.push_back(cmin);
    if (std::isinf(cmin)) continue;
    if (std::abs(k) <= 3)
      rep.holder_inner_min = std::min(rep.holder_inner_min, cmin);
    else
      rep.holder_outer_min = std::min(rep.holder_outer_min, cmin);
  }
  rep.holder_no_decay = std::isfinite(rep.holder_inner_min) &&
                        (std::isinf(rep.holder_outer_min) ||
                         rep.holder_outer_min >= 0.5 * rep.holder_inner_min);

  rep.band_min = kInf;
  rep.band_max = 0.0;
  double lo_min = kInf, lo_max = 0.0, hi_min = kInf, hi_max = 0.0;
  for (int k = -24; k <= 24; ++k) {
    double t = std::pow(10.0, k / 4.0);
    if (t > X.mu) continue;
    double band = fundamental_function(X, t) * fundamental_function(Xa, t) / t;
    rep.band_min = std::min(rep.band_min, band);
    rep.band_max = std::max(rep.band_max, band);
    if (k <= 0) {
      lo_min = std::min(lo_min, band);
      lo_max = std::max(lo_max, band);
    }
    if (k >= 0) {
      hi_min = std::min(hi_min, band);
      hi_max = std::max(hi_max, band);
    }
  }
  auto kband = [](double mn, double mx) { return std::max(mx, 1.0 / mn); };
  rep.k_full = kband(rep.band_min, rep.band_max);
  rep.k_low = kband(lo_min, lo_max);
  rep.k_high = std::isinf(hi_min) ? rep.k_low : kband(hi_min, hi_max);
  rep.k_stable = std::isfinite(rep.k_full) &&
                 std::fabs(rep.k_low - rep.k_high) <= 0.1 * std::max(rep.k_low, rep.k_high);
  rep.verdict_consistent = rep.holder_no_decay && rep.k_stable;
  return rep;
}

QuasiNormReport check_quasi_norm(const SpaceSpec& spec, int n_samples, std::uint64_t seed) {
  QuasiNormReport rep;
  std::mt19937_64 rng(seed);
  std::vector<JointStepFunction> pairs;
  for (int i = 0; i < n_samples; ++i) pairs.push_back(random_joint(rng));
  for (int j = -3; j <= 3; ++j) {
    double v = std::pow(10.0, j);
    double k = 0.0;
    for (const auto& h : pairs) {
      std::vector<JointPiece> ps = h.pieces();
      for (auto& p : ps) {
        p.f *= v;
        p.g *= v;
      }
      JointStepFunction hs(std::move(ps));
      double nf = lk_norm(spec, rearrange(hs.f())).value;
      double ng = lk_norm(spec, rearrange(hs.g())).value;
      double ns = lk_norm(spec, rearrange(hs.sum())).value;
      if (nf + ng > 0.0) k = std::max(k, ns / (nf + ng));
    }
    rep.k_by_value_scale.push_back(k);
  }
  auto [mn, mx] = std::minmax_element(rep.k_by_value_scale.begin(), rep.k_by_value_scale.end());
  rep.k = *mx;
  rep.variation = *mx > 0.0 ? (*mx - *mn) / *mx : 0.0;
  rep.stable = std::isfinite(rep.k) && rep.variation <= 0.05;
  return rep;
}

HardyLittlewoodReport check_hardy_littlewood(int n_samples, std::uint64_t seed) {
  HardyLittlewoodReport rep;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n_samples; ++i) {
    JointStepFunction h = random_joint(rng);
    PairIntegrals pi = pair_integrals(h);
    double slack = 1e-9 * std::max(1.0, pi.rhs);
    if (pi.lhs > pi.rhs + slack) {
      ++rep.violations;
      rep.worst_excess = std::max(rep.worst_excess, pi.lhs - pi.rhs);
    }
    // comonotone rearrangement of the same values on the same masses
    std::vector<JointPiece> ps = h.pieces();
    std::vector<double> gs;
    for (const auto& p : ps) gs.push_back(p.g);
    std::sort(ps.begin(), ps.end(), [](const JointPiece& a, const JointPiece& b) { return a.f > b.f; });
    std::sort(gs.begin(), gs.end(), std::greater<>());
    for (std::size_t k = 0; k < ps.size(); ++k) ps[k].g = gs[k];
    PairIntegrals co = pair_integrals(JointStepFunction(ps));
    if (std::fabs(co.lhs - co.rhs) > 1e-9 * std::max(1.0, co.rhs)) ++rep.comonotone_mismatches;
    ++rep.samples;
  }
  return rep;
}

namespace {

struct RowType {
  const char* name;
  bool head;     // head integral side (not the governing endpoint)
  bool finite;   // head side with a finite limit
  bool diverge;
};

const RowType kRowTypes[] = {
    {"tail-gamma", false, false, false}, {"tail-alpha", false, false, false},
    {"tail-beta", false, false, false},  {"head-gamma", true, false, false},
    {"head-alpha", true, false, false},  {"head-beta", true, false, false},
    {"head-finite", true, true, false},  {"diverge", false, false, true},
};

EndpointSignature draw_row(const std::string& name, std::mt19937_64& rng) {
  auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  if (name == "tail-gamma") return {u(-3.0, -1.5), u(-0.6, -0.4), u(-0.5, 0.5)};
  if (name == "tail-alpha") return {0.0, u(-3.0, -2.0), 0.0};
  if (name == "tail-beta") return {0.0, -1.0, u(-3.0, -1.5)};
  if (name == "head-gamma") return {u(1.5, 3.0), u(-0.6, -0.4), u(-0.5, 0.5)};
  if (name == "head-alpha") return {0.0, u(0.5, 2.0), 0.0};
  if (name == "head-beta") return {0.0, -1.0, u(2.5, 4.0)};
  if (name == "head-finite") return {0.0, u(-4.0, -2.5), u(-0.5, 0.5)};
  static const EndpointSignature divergent[] = {
      {0.0, -1.0, 0.0}, {0.0, -0.5, 0.0}, {0.5, 0.0, 0.0}, {0.0, -1.0, -1.0}, {0.0, -1.0, -0.5}};
  return divergent[std::uniform_int_distribution<int>(0, 4)(rng)];
}

// exact tilde (t < 1 side) or hat (t > 1 side) at |log t| = L
QuadResult exact_transform(const SlowlyVaryingFunction& b, TransformKind kind, Endpoint at,
                           double L) {
  double t = at == Endpoint::Zero ? std::exp(-L) : std::exp(L);
  if (kind == TransformKind::Tilde) return quad_oracle(0.0, b, 1.0, 0.0, t, 1e-10);
  return quad_oracle(0.0, b, 1.0, t, kInf, 1e-10);
}

}  // namespace

std::vector<TransformRow> check_transform_rows(int n_rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TransformRow> rows;
  const int n_types = static_cast<int>(std::size(kRowTypes));
  for (int i = 0; i < n_rows; ++i) {
    const RowType& rt = kRowTypes[i % n_types];
    TransformKind kind = (i / n_types) % 2 == 0 ? TransformKind::Tilde : TransformKind::Hat;
    if (i >= 2 * n_types) kind = i % 2 == 0 ? TransformKind::Tilde : TransformKind::Hat;
    const Endpoint gov = kind == TransformKind::Tilde ? Endpoint::Zero : Endpoint::Infinity;
    const Endpoint other = gov == Endpoint::Zero ? Endpoint::Infinity : Endpoint::Zero;

    EndpointSignature tested = draw_row(rt.name, rng);
    EndpointSignature companion = rt.head ? EndpointSignature{0.0, -2.0, 0.0}
                                          : EndpointSignature{0.0, 0.0, 0.0};
    double scale = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    Endpoint at = rt.head ? other : gov;
    SlowlyVaryingFunction b = at == Endpoint::Zero
                                  ? SlowlyVaryingFunction(scale, tested, companion)
                                  : SlowlyVaryingFunction(scale, companion, tested);

    TransformRow row;
    row.row = rt.name;
    row.b = b;
    row.kind = kind;
    row.endpoint = at;
    TransformResult tr = tilde_hat_transform(b, kind);
    row.rule_diverges = tr.status == TransformStatus::Diverges;
    if (rt.diverge) {
      QuadResult q = kind == TransformKind::Tilde ? quad_oracle(0.0, b, 1.0, 0.0, 1.0, 1e-8)
                                                  : quad_oracle(0.0, b, 1.0, 1.0, kInf, 1e-8);
      row.oracle_diverges = q.diverged();
      row.pass = row.rule_diverges && row.oracle_diverges;
      rows.push_back(row);
      continue;
    }
    const Asymptote& pred = at == Endpoint::Zero ? *tr.at_zero : *tr.at_infinity;
    QuadResult near = exact_transform(b, kind, at, 14.0);
    QuadResult far = exact_transform(b, kind, at, 23.0);
    row.oracle_diverges = near.diverged() || far.diverged();
    row.err_near = std::fabs(pred(14.0) / near.value - 1.0);
    row.err_far = std::fabs(pred(23.0) / far.value - 1.0);
    row.pass = !row.rule_diverges && !row.oracle_diverges && row.err_near <= 0.10 &&
               (row.err_far < row.err_near || row.err_far <= 1e-6);
    rows.push_back(row);
  }
  return rows;
}

SvSuiteReport check_sv_suite(std::uint64_t seed) {
  SvSuiteReport rep;
  const SlowlyVaryingFunction members[] = {
      SlowlyVaryingFunction::constant(1.0),
      SlowlyVaryingFunction(1.0, {0, -1, 0}, {0, 0, 0}),
      SlowlyVaryingFunction(2.0, {0, 2, -1}, {0, -1, 3}),
      SlowlyVaryingFunction(0.5, {1, 0, 0}, {-1, 0.5, 0}),
  };
  rep.pass = true;
  for (const auto& b : members)
    for (double eps : {0.01, 0.1, 1.0}) {
      SvCheckReport r = sv_property_check(b, eps);
      rep.pass = rep.pass && r.pass;
      rep.property.push_back(r);
    }
  rep.transforms = check_transform_rows(20, seed);
  for (const auto& row : rep.transforms) rep.pass = rep.pass && row.pass;
  return rep;
}

}  // namespace lk
