#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lk/io.hpp"

using namespace lk;

namespace {

constexpr double kHlSlack = 1e-9;
constexpr double kLebesgueRelTol = 1e-9;
constexpr double kTransformTol = 0.10;
constexpr double kStarGapPrediction = 19.4;
constexpr double kStarGapBand = 0.30;
constexpr double kStarGapThreshold = 10.0;
constexpr double kBandStability = 0.10;
constexpr double kQuasiNormVariation = 0.05;

bool verbose = false;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void report(int id, const char* name, const Outcome& o, double seconds) {
  std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds);
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log10(lo), std::log10(hi));
  return std::pow(10.0, u(rng));
}

// 1 -----------------------------------------------------------------------

// Masses on a 2^-20 lattice so every partial sum is exact in any order.
double dyadic(double m) { return std::ldexp(std::max(1.0, std::round(std::ldexp(m, 20))), -20); }

StepFunction lattice_step_function(std::mt19937_64& rng) {
  int n = std::uniform_int_distribution<int>(1, 20)(rng);
  std::vector<double> pool;
  for (int i = 0; i < 4; ++i) pool.push_back(log_uniform(rng, 1e-3, 1e3));
  std::vector<StepPiece> ps;
  for (int i = 0; i < n; ++i) {
    int kind = std::uniform_int_distribution<int>(0, 9)(rng);
    double v = kind < 3 ? pool[kind] : log_uniform(rng, 1e-3, 1e3);
    if (kind == 9) {
      ps.push_back({0.0, kInf});
      continue;
    }
    ps.push_back({v, dyadic(log_uniform(rng, 1e-3, 1e3))});
  }
  return StepFunction(ps);
}

// Level-set oracle: the break after level v is the measure of {f >= v}.
void naive_rearrangement(const StepFunction& f, std::vector<double>& breaks, std::vector<double>& values) {
  std::set<double, std::greater<>> levels;
  for (const auto& p : f.pieces())
    if (p.value > 0.0) levels.insert(p.value);
  breaks.clear();
  values.clear();
  for (double v : levels) {
    double m = 0.0;
    for (const auto& p : f.pieces())
      if (p.value >= v) m += p.mass;
    breaks.push_back(m);
    values.push_back(v);
  }
}

double naive_distribution(const StepFunction& f, double s) {
  double m = 0.0;
  for (const auto& p : f.pieces())
    if (p.value > s) m += p.mass;
  return m;
}

Outcome criterion_rearrangement() {
  std::mt19937_64 rng(101);
  int mismatches = 0, level_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    StepFunction f = lattice_step_function(rng);
    DecreasingStep fs = rearrange(f);
    std::vector<double> br, vals;
    naive_rearrangement(f, br, vals);
    if (fs.breaks() != br || fs.values() != vals) ++mismatches;
    for (int k = 0; k < 10; ++k) {
      double s = k < 3 && !vals.empty() ? vals[k % vals.size()] : log_uniform(rng, 1e-4, 1e4);
      double want = naive_distribution(f, s);
      if (distribution(fs, s) != want || distribution(f, s) != want) ++level_failures;
    }
  }
  Outcome o;
  o.pass = mismatches == 0 && level_failures == 0;
  o.detail = "1000 samples, " + std::to_string(mismatches) + " rearrangement mismatches, " +
             std::to_string(level_failures) + " level-set mismatches (exact comparison)";
  return o;
}

// 2 -----------------------------------------------------------------------

std::vector<std::pair<double, double>> sorted_profile(std::vector<std::pair<double, double>> vm) {
  std::sort(vm.begin(), vm.end(), [](auto& a, auto& b) { return a.first > b.first; });
  return vm;
}

// int_0^inf f* g* by walking both sorted profiles
double oracle_product(const std::vector<std::pair<double, double>>& f,
                      const std::vector<std::pair<double, double>>& g) {
  std::size_t i = 0, j = 0;
  double fi = i < f.size() ? f[0].second : 0.0, gj = j < g.size() ? g[0].second : 0.0;
  double total = 0.0;
  while (i < f.size() && j < g.size()) {
    double step = std::min(fi, gj);
    total += f[i].first * g[j].first * step;
    fi -= step;
    gj -= step;
    if (fi <= 0.0 && ++i < f.size()) fi = f[i].second;
    if (gj <= 0.0 && ++j < g.size()) gj = g[j].second;
  }
  return total;
}

Outcome criterion_hardy_littlewood() {
  std::mt19937_64 rng(202);
  int violations = 0, comonotone = 0, library_mismatch = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    JointStepFunction h = random_joint(rng);
    std::vector<std::pair<double, double>> fv, gv;
    double lhs = 0.0;
    for (const auto& p : h.pieces()) {
      lhs += p.f * p.g * p.mass;
      fv.push_back({p.f, p.mass});
      gv.push_back({p.g, p.mass});
    }
    double rhs = oracle_product(sorted_profile(fv), sorted_profile(gv));
    double excess = lhs - rhs - kHlSlack * std::max(1.0, rhs);
    if (excess > 0.0) ++violations;
    worst = std::max(worst, (lhs - rhs) / std::max(1.0, rhs));
    PairIntegrals lib = pair_integrals(h);
    if (std::fabs(lib.rhs - rhs) > kHlSlack * std::max(1.0, rhs) ||
        std::fabs(lib.lhs - lhs) > kHlSlack * std::max(1.0, lhs))
      ++library_mismatch;

    // comonotone: pair the k-th largest f with the k-th largest g on one mass
    std::vector<JointPiece> ps = h.pieces();
    std::sort(ps.begin(), ps.end(), [](auto& a, auto& b) { return a.f > b.f; });
    std::vector<double> gs;
    for (const auto& p : ps) gs.push_back(p.g);
    std::sort(gs.begin(), gs.end(), std::greater<>());
    for (std::size_t k = 0; k < ps.size(); ++k) ps[k].g = gs[k];
    PairIntegrals co = pair_integrals(JointStepFunction(ps));
    if (std::fabs(co.lhs - co.rhs) > kHlSlack * std::max(1.0, co.rhs)) ++comonotone;
  }
  HardyLittlewoodReport lib = check_hardy_littlewood(1000, 3);
  Outcome o;
  o.pass = violations == 0 && comonotone == 0 && library_mismatch == 0 && lib.violations == 0 &&
           lib.comonotone_mismatches == 0;
  o.detail = "1000 pairs, " + std::to_string(violations) + " violations, " + std::to_string(comonotone) +
             " comonotone gaps, " + std::to_string(library_mismatch) + " library/oracle mismatches, " +
             "suite violations " + std::to_string(lib.violations) + ", worst lhs-rhs " +
             fmt("%.2e", worst);
  return o;
}

// 3 -----------------------------------------------------------------------

Outcome criterion_lebesgue() {
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (double p : {0.5, 1.0, 2.0, 7.0}) {
    SpaceSpec s{p, p, SlowlyVaryingFunction::constant(1.0)};
    for (int i = 0; i < 100; ++i) {
      StepFunction f = random_step_function(rng);
      double direct = 0.0;
      for (const auto& pc : f.pieces()) direct += std::pow(pc.value, p) * pc.mass;
      direct = std::pow(direct, 1.0 / p);
      double v = lk_norm(s, rearrange(f)).value;
      worst = std::max(worst, std::fabs(v - direct) / direct);
    }
  }
  Outcome o;
  o.pass = worst <= kLebesgueRelTol;
  o.detail = "p = q in {0.5,1,2,7}, 400 carriers, worst relative error " + fmt("%.2e", worst);
  return o;
}

// 4 -----------------------------------------------------------------------

Outcome criterion_transforms() {
  std::vector<TransformRow> rows = check_transform_rows(20, 13);
  int failed = 0;
  std::set<std::string> kinds;
  double worst_near = 0.0;
  for (const auto& r : rows) {
    kinds.insert(r.row + "/" + to_string(r.kind));
    if (!r.pass) ++failed;
    if (r.row != "diverge") worst_near = std::max(worst_near, r.err_near);
    if (verbose || !r.pass)
      std::printf("    %-12s %-5s %s near=%.3e far=%.3e rule_div=%d oracle_div=%d\n", r.row.c_str(),
                  to_string(r.kind), format_sv(r.b).c_str(), r.err_near, r.err_far, r.rule_diverges,
                  r.oracle_diverges);
  }
  Outcome o;
  o.pass = failed == 0 && kinds.size() == 16 && worst_near <= kTransformTol;
  o.detail = std::to_string(rows.size()) + " rows over " + std::to_string(kinds.size()) +
             " rule rows, " + std::to_string(failed) + " failed, worst near error " +
             fmt("%.3f", worst_near);
  return o;
}

// 5 -----------------------------------------------------------------------

struct Entry {
  const char* src;
  const char* dst;
  double mu;
  const char* expect_case;
  bool expect_holds;
};

// sv shorthand: L(a0|aI) = sv(1; 0,a0,0 | 0,aI,0)
const Entry kCatalog[] = {
    {"LK(p=2,q=1)", "LK(p=2,q=2)", kInf, "PELK", true},
    {"LK(p=3,q=1)", "LK(p=3,q=2,b=sv(1;0,-1,0|0,-1,0))", kInf, "PELK", true},
    {"LK(p=2,q=0.5,b=sv(1;1,0,0|0,0,0))", "LK(p=2,q=4)", kInf, "PELK", true},
    {"LK(p=3,q=2)", "LK(p=2,q=2)", 1.0, "TELK-1", true},
    {"LK(p=4,q=1,b=sv(1;0,1,0|0,0,0))", "LK(p=2,q=3)", 1.0, "TELK-1", true},
    {"LK(p=3,q=2)", "LK(p=2,q=2)", kInf, "TELK-1", false},
    {"LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", "LK(p=4,q=1)", kInf, "TELK-1", false},
    {"LK(p=3,q=1,b=sv(1;0,0,0|1,0,0))", "LK(p=2,q=1)", kInf, "TELK-1", false},
    {"LK(p=2,q=2)", "LK(p=2,q=2,b=sv(1;0,-1,0|0,-1,0))", kInf, "TELK-2a", true},
    {"LK(p=2,q=1,b=sv(1;0,1,0|0,-5,0))", "LK(p=2,q=3,b=sv(1;0,1,0|0,0,0))", 1.0, "TELK-2a", true},
    {"LK(p=2,q=1,b=sv(1;1,0,0|0,0,0))", "LK(p=2,q=1)", kInf, "TELK-2a", true},
    {"LK(p=0.5,q=1)", "LK(p=0.5,q=1)", kInf, "TELK-2a", true},
    {"LK(p=2,q=2,star)", "LK(p=2,q=2)", kInf, "TELK-2a", true},
    {"LK(p=2,q=2)", "LK(p=2,q=2,b=sv(1;0,1,0|0,0,0))", kInf, "TELK-2a", false},
    {"LK(p=2,q=2)", "LK(p=2,q=2,b=sv(1;0,0,0|0,1.5,0))", kInf, "TELK-2a", false},
    {"LK(p=2,q=1)", "LK(p=2,q=1,b=sv(1;1,0,0|0,0,0))", 1.0, "TELK-2a", false},
    {"LK(p=1.5,q=1,star)", "LK(p=1.5,q=1,b=sv(1;0,1,0|0,0,0))", 1.0, "TELK-2a", false},
    {"LK(p=inf,q=1,b=sv(1;0,-2,0|0,-2,0))", "LK(p=inf,q=1,b=sv(1;0,-3,0|0,-3,0))", kInf, "TELK-2b", true},
    {"LK(p=inf,q=1,b=sv(1;0,-3,0|0,0,0))", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", 1.0, "TELK-2b", false},
    {"LK(p=inf,q=2,b=sv(1;0,-2,0|0,0,0))", "LK(p=inf,q=inf,b=sv(1;0,-1.5,0|0,0,0))", kInf, "TELK-2c", true},
    {"LK(p=inf,q=1,b=sv(1;0,-3,0|0,0,0))", "LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", 1.0, "TELK-2c", false},
    {"LK(p=inf,q=inf)", "LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", kInf, "TELK-2d", true},
    {"LK(p=inf,q=inf,b=sv(1;0,-2,0|0,0,0))", "LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", 1.0, "TELK-2d", false},
    {"LK(p=2,q=2)", "LK(p=2,q=1,b=sv(1;0,-2,0|0,-2,0))", kInf, "TELK-3a", true},
    {"LK(p=2,q=2)", "LK(p=2,q=1,b=sv(1;0,1,0|0,0,0))", 1.0, "TELK-3a", false},
    {"LK(p=2,q=2)", "LK(p=2,q=1,b=sv(1;0,0,0|0,1,0))", kInf, "TELK-3a", false},
    {"LK(p=inf,q=2,b=sv(1;0,-1,0|0,0,0))", "LK(p=inf,q=1,b=sv(1;0,-4,0|0,0,0))", 1.0, "TELK-3b", true},
    {"LK(p=inf,q=2,b=sv(1;0,-2,0|0,0,0))", "LK(p=inf,q=1,b=sv(1;0,-1.5,0|0,0,0))", 1.0, "TELK-3b", false},
    {"LK(p=inf,q=inf)", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,-2,0))", kInf, "TELK-3c", true},
    {"LK(p=inf,q=inf,b=sv(1;-1,0,0|0,0,0))", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", 1.0, "TELK-3c", false},
    {"LK(p=2,q=2)", "LK(p=3,q=2)", kInf, "TELK-4", false},
    {"LK(p=1,q=1)", "LK(p=1.5,q=1)", 1.0, "TELK-4", false},
    {"LK(p=2,q=1,b=sv(1;0,5,0|0,0,0))", "LK(p=2.5,q=1)", 1.0, "TELK-4", false},
    {"LK(p=2,q=2)", "LK(p=inf,q=1)", kInf, "TrivialTarget", false},
};

Outcome criterion_embeddings() {
  int n = 0, bad_case = 0, inconsistent = 0;
  std::set<std::string> cases;
  for (const auto& e : kCatalog) {
    SpaceSpec a = parse_spec(e.src), b = parse_spec(e.dst);
    EmbeddingCheckReport r = check_embedding_numeric(a, b, e.mu);
    ++n;
    cases.insert(r.verdict.case_id);
    bool case_ok = r.verdict.case_id == e.expect_case && r.verdict.holds == e.expect_holds;
    if (!case_ok) ++bad_case;
    if (!r.verdict_consistent) ++inconsistent;
    if (verbose || !case_ok || !r.verdict_consistent)
      std::printf("    %s -> %s mu=%s: %s %s growth=%.3g last=%.3g witness=%s%s\n", e.src, e.dst,
                  format_number(e.mu).c_str(), r.verdict.holds ? "Holds" : "Fails",
                  r.verdict.case_id.c_str(), r.growth, r.last_decade_growth, r.witness.c_str(),
                  r.verdict_consistent ? "" : "  INCONSISTENT");
  }

  // reflexivity and transitivity over the catalog's spaces, per measure
  int reflexive_failures = 0, transitive_failures = 0, triples = 0;
  for (double mu : {1.0, kInf}) {
    std::vector<SpaceSpec> spaces;
    auto add = [&](const char* t) {
      SpaceSpec s = parse_spec(t);
      if (std::find(spaces.begin(), spaces.end(), s) == spaces.end()) spaces.push_back(s);
    };
    for (const auto& e : kCatalog) {
      add(e.src);
      add(e.dst);
    }
    std::vector<std::vector<int>> holds(spaces.size(), std::vector<int>(spaces.size()));
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t j = 0; j < spaces.size(); ++j)
        holds[i][j] = decide_embedding(spaces[i], spaces[j], mu).holds;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      SpaceSpec plain = spaces[i];
      bool nontrivial = classify_space(plain).nontrivial;
      if (nontrivial && !holds[i][i]) ++reflexive_failures;
      for (std::size_t j = 0; j < spaces.size(); ++j)
        for (std::size_t k = 0; k < spaces.size(); ++k)
          if (holds[i][j] && holds[j][k]) {
            ++triples;
            if (!holds[i][k]) ++transitive_failures;
          }
    }
  }

  const std::set<std::string> required{"TELK-1",  "TELK-2a", "TELK-2b", "TELK-2c", "TELK-2d",
                                       "TELK-3a", "TELK-3b", "TELK-3c", "TELK-4",  "PELK"};
  int missing = 0;
  for (const auto& c : required) missing += !cases.count(c);
  Outcome o;
  o.pass = n >= 30 && bad_case == 0 && inconsistent == 0 && missing == 0 && reflexive_failures == 0 &&
           transitive_failures == 0;
  o.detail = std::to_string(n) + " triples, " + std::to_string(missing) + " branches missing, " +
             std::to_string(bad_case) + " unexpected verdicts, " + std::to_string(inconsistent) +
             " numerically inconsistent, reflexive failures " + std::to_string(reflexive_failures) +
             ", transitivity failures " + std::to_string(transitive_failures) + " of " +
             std::to_string(triples) + " chains";
  return o;
}

// 6 -----------------------------------------------------------------------

Outcome criterion_star() {
  Outcome o;
  std::string d;
  for (double p : {1.5, 2.0, 5.0}) {
    SpaceSpec s{p, 2.0, SlowlyVaryingFunction::constant(1.0)};
    StarGapReport r = check_star_gap(s, true);
    bool ok = !r.growth_confirmed && r.last_decade_growth <= kPlateauTolerance && std::isfinite(r.max_ratio);
    o.pass = o.pass && ok;
    d += "p=" + format_number(p) + " max " + fmt("%.4g", r.max_ratio) + (ok ? "" : " (no plateau)") + "; ";
  }
  SpaceSpec s1{1.0, 1.0, parse_sv("sv(1;0,0,0|0,-2,0)")};
  StarGapReport r = check_star_gap(s1);
  double at = 0.0;
  for (std::size_t i = 0; i < r.masses.size(); ++i)
    if (r.masses[i] == 1e-8) at = r.ratios[i];
  bool ok = at >= kStarGapThreshold && std::fabs(at / kStarGapPrediction - 1.0) <= kStarGapBand &&
            r.growth_confirmed;
  o.pass = o.pass && ok;
  d += "p=1 ratio at 1e-8 " + fmt("%.3f", at) + " (prediction 19.4)";
  o.detail = d;
  return o;
}

// 7 -----------------------------------------------------------------------

Outcome criterion_duality() {
  const char* specs[] = {
      "LK(p=2,q=2)",
      "LK(p=3,q=2,b=sv(1;0,1,0|0,0,0))",
      "LK(p=1.5,q=4,b=sv(1;0,-1,0|0,1,0))",
      "LK(p=4,q=3,b=sv(1;0.5,0,0|0,0,0))",
      "LK(p=2,q=1)",
      "LK(p=3,q=0.5,b=sv(1;0,-1,0|0,0,0))",
      "LK(p=1,q=1)",
      "LK(p=1,q=0.5,b=sv(1;0,1,0|0,-1,0))",
      "LK(p=2,q=inf)",
      "LK(p=3,q=inf,b=sv(1;0,-1,0|0,0,0))",
  };
  Outcome o;
  int failures = 0;
  double worst_k = 0.0;
  for (const char* t : specs) {
    SpaceSpec s = parse_spec(t);
    HolderDualityReport r = check_holder_and_duality(s);
    bool covered = r.associate.kind == AssociateResult::Kind::Space &&
                   (r.associate.case_id.rfind("TAS", 0) == 0 || r.associate.case_id.rfind("T2AS", 0) == 0 ||
                    r.associate.case_id.rfind("T3AS", 0) == 0);
    bool ok = covered && !r.skipped && r.holder_no_decay && r.k_stable;
    if (!ok) ++failures;
    worst_k = std::max(worst_k, r.k_full);
    if (verbose || !ok)
      std::printf("    %s -> %s %s: holder inner %.4g outer %.4g, band [%.4g, %.4g], K low %.4g high %.4g\n",
                  t, r.associate.case_id.c_str(), r.associate.space ? format_spec(*r.associate.space).c_str() : "-",
                  r.holder_inner_min, r.holder_outer_min, r.band_min, r.band_max, r.k_low, r.k_high);
  }
  int pas_failures = 0;
  for (const char* t : {"LK(p=0.5,q=1)", "LK(p=0.8,q=inf,b=sv(1;0,1,0|0,1,0))"})
    if (associate_space(parse_spec(t)).kind != AssociateResult::Kind::Zero) ++pas_failures;
  o.pass = failures == 0 && pas_failures == 0;
  o.detail = "10 specs, " + std::to_string(failures) + " failed (no-decay and K variation <= " +
             fmt("%.0f%%", 100 * kBandStability) + "), largest K " + fmt("%.4g", worst_k) +
             ", PAS inputs not Zero: " + std::to_string(pas_failures);
  return o;
}

// 8 -----------------------------------------------------------------------

struct Row {
  const char* spec;
  bool nontrivial, star_nontrivial, banach;
  Tri p5;
  bool equals_star;
  const char* cite;
};

const Row kTable[] = {
    {"LK(p=2,q=2)", true, true, true, Tri::Yes, true, "TLKBFS-i, CP5"},
    {"LK(p=0.5,q=1)", true, false, false, Tri::No, false, "PP4 p<1, PAS"},
    {"LK(p=1,q=1)", true, false, true, Tri::Yes, false, "TLKBFS-iii, CP5b(1)"},
    {"LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0))", true, true, true, Tri::Yes, false, "PP4(ii), TLKBFS-iii"},
    {"LK(p=1,q=1,b=sv(1;0,-1,0|0,0,0))", true, false, false, Tri::No, false, "CP5b(2)"},
    {"LK(p=1,q=2)", true, false, false, Tri::Unknown, false, "P5 gap p=1 q>1"},
    {"LK(p=1,q=0.5,b=sv(1;0,-1,0|0,0,0))", true, false, false, Tri::Unknown, false, "P5 gap p=1 q<1 b->0"},
    {"LK(p=1,q=0.5)", true, false, false, Tri::Yes, false, "CP5b(1)"},
    {"LK(p=inf,q=1)", false, false, false, Tri::Yes, true, "LQ, PP4(iii)"},
    {"LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", true, true, true, Tri::Yes, true, "LQ, TLKBFS-ii"},
    {"LK(p=inf,q=inf)", true, true, true, Tri::Yes, true, "LQ, TLKBFS-ii"},
    {"LK(p=inf,q=inf,b=sv(1;0,1,0|0,0,0))", false, false, false, Tri::Yes, true, "LQ"},
    {"LK(p=inf,q=0.5,b=sv(1;0,-3,0|0,0,0))", true, true, false, Tri::Yes, true, "LQ, TLKBFS q<1"},
    {"LK(p=3,q=0.5)", true, true, false, Tri::Yes, true, "TLKBFS q<1, CP5"},
    {"LK(p=3,q=inf,b=sv(1;0,0,0|0,5,0))", true, true, true, Tri::Yes, true, "TLKBFS-i"},
    {"LK(p=0.7,q=0.7,b=sv(1;0,-1,0|0,0,0))", true, false, false, Tri::No, false, "PAS"},
    {"LK(p=1,q=inf)", true, true, false, Tri::Unknown, false, "PP4(ii), P5 gap"},
    {"LK(p=1,q=inf,b=sv(1;0,-1,0|0,0,0))", true, true, false, Tri::No, false, "CP5b(2)"},
    {"LK(p=1,q=1,b=sv(1;0,1,0|0,0,0))", true, false, true, Tri::Yes, false, "TLKBFS-iii"},
    {"LK(p=1,q=1,b=sv(1;0,0,0|0,1,0))", true, false, false, Tri::Yes, false, "TLKBFS-iii fails"},
    {"LK(p=2,q=1,b=sv(1;1,0,0|-1,0,0))", true, true, true, Tri::Yes, true, "TLKBFS-i"},
    {"LK(p=1,q=1,b=sv(1;-1,5,0|0,0,0))", true, false, false, Tri::No, false, "CP5b(2)"},
    {"LK(p=1,q=3,b=sv(1;0,0,0|0,-1,0))", true, true, false, Tri::Unknown, false, "PP4(ii), P5 gap"},
    {"LK(p=5,q=1,b=sv(1;0,-4,0|0,-4,0))", true, true, true, Tri::Yes, true, "TLKBFS-i"},
    {"LK(p=inf,q=2,b=sv(1;0,-0.5,0|0,0,0))", false, false, false, Tri::Yes, true, "LQ"},
};

Outcome criterion_table() {
  int bad = 0;
  for (const auto& row : kTable) {
    ClassificationReport r = classify_space(parse_spec(row.spec));
    bool ok = r.nontrivial == row.nontrivial && r.star_nontrivial == row.star_nontrivial &&
              r.banach_equivalent == row.banach && r.p5 == row.p5 && r.equals_star == row.equals_star;
    if (!ok) {
      ++bad;
      std::printf("    %s [%s]: got nontrivial=%d star=%d banach=%d p5=%s equals_star=%d\n", row.spec,
                  row.cite, r.nontrivial, r.star_nontrivial, r.banach_equivalent, to_string(r.p5),
                  r.equals_star);
    }
  }
  Outcome o;
  o.pass = bad == 0 && std::size(kTable) == 25;
  o.detail = std::to_string(std::size(kTable)) + " rows, " + std::to_string(bad) + " mismatches";
  return o;
}

// 9 -----------------------------------------------------------------------

Outcome criterion_quasi_norm() {
  const char* specs[] = {"LK(p=2,q=2)", "LK(p=0.5,q=1)", "LK(p=1,q=0.5,b=sv(1;0,1,0|0,0,0))",
                         "LK(p=3,q=inf,b=sv(1;0,-1,0|0,0,0))", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))"};
  Outcome o;
  std::string d;
  for (const char* t : specs) {
    QuasiNormReport r = check_quasi_norm(parse_spec(t), 100, 5);
    bool ok = r.stable && std::isfinite(r.k) && r.variation <= kQuasiNormVariation;
    o.pass = o.pass && ok;
    d += fmt("K=%.4g", r.k) + fmt(" var=%.1e", r.variation) + (ok ? "" : " UNSTABLE") + "; ";
  }
  o.detail = d;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
  struct Item {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Item items[] = {
      {1, "rearrangement oracle", criterion_rearrangement},
      {2, "Hardy-Littlewood inequality", criterion_hardy_littlewood},
      {3, "Lebesgue coincidence", criterion_lebesgue},
      {4, "signature transform oracle", criterion_transforms},
      {5, "embedding catalog", criterion_embeddings},
      {6, "star equality", criterion_star},
      {7, "associate duality", criterion_duality},
      {8, "classification truth table", criterion_table},
      {9, "quasi-norm constant", criterion_quasi_norm},
  };
  int failed = 0;
  for (const auto& it : items) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(it.id, it.name, o, sec);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(items)) - failed, std::size(items));
  return failed == 0 ? 0 : 1;
}
