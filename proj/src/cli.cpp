#include "lk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lk/io.hpp"

namespace lk {

namespace {

double parse_option_number(const std::string& s, const char* name) {
  try {
    return parse_number(s);
  } catch (const ParseError&) {
    throw CLI::ValidationError(name, "not a number: " + s);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_citations(std::ostream& out, const std::vector<std::string>& cites) {
  out << "citations:";
  for (const auto& c : cites) out << ' ' << c;
  out << '\n';
}

void print_asymptote(std::ostream& out, const char* label, const std::optional<Asymptote>& a) {
  if (!a) return;
  out << label << ": " << format_number(a->scale) << " * order(" << format_number(a->order.gamma())
      << ',' << format_number(a->order.alpha()) << ',' << format_number(a->order.beta()) << ','
      << format_number(a->order.delta()) << ")\n";
}

Json asymptote_json(const Asymptote& a) {
  Json o = Json::array();
  for (double e : a.order.e) o.push_back(number_json(e));
  return Json{{"scale", number_json(a.scale)}, {"order", o}};
}

int emit(const CliConfig& cfg, const Json& j, std::ostream& out) {
  if (!cfg.json_report.empty()) {
    std::ofstream f(cfg.json_report);
    if (!f) throw std::invalid_argument("cannot write " + cfg.json_report);
    f << j.dump(2) << '\n';
  }
  if (cfg.json) out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
  SpaceSpec s = parse_spec(cfg.specs.at(0));
  if (cfg.star) s.star = true;
  ClassificationReport r = classify_space(s);
  if (cfg.json) return emit(cfg, Json{{"space", s}, {"report", r}}, out);
  out << "space: " << format_spec(s) << '\n'
      << "nontrivial: " << yes_no(r.nontrivial) << '\n'
      << "quasi_banach: " << yes_no(r.quasi_banach) << '\n'
      << "banach_equivalent: " << yes_no(r.banach_equivalent) << '\n'
      << "p5: " << to_string(r.p5) << " (" << r.p5_rule << ")\n"
      << "star_nontrivial: " << yes_no(r.star_nontrivial) << '\n'
      << "equals_star: " << yes_no(r.equals_star) << '\n'
      << "fundamental: t^" << format_number(r.fundamental_exponent) << " * "
      << format_sv(SlowlyVaryingFunction(1.0, r.fundamental_sig0, r.fundamental_sig_inf)) << '\n';
  print_citations(out, r.citations);
  return kExitOk;
}

int cmd_embed(const CliConfig& cfg, std::ostream& out) {
  SpaceSpec a = parse_spec(cfg.specs.at(0)), b = parse_spec(cfg.specs.at(1));
  EmbeddingVerdict v = decide_embedding(a, b, cfg.mu);
  if (cfg.json) return emit(cfg, v, out);
  out << "outcome: " << (v.holds ? "Holds" : "Fails") << '\n' << "case: " << v.case_id << '\n';
  for (const auto& c : v.conditions) out << "condition " << c.name << ": " << yes_no(c.value) << '\n';
  if (v.witness) out << "witness: " << to_string(*v.witness) << '\n';
  print_citations(out, v.citations);
  return kExitOk;
}

int cmd_associate(const CliConfig& cfg, std::ostream& out) {
  SpaceSpec s = parse_spec(cfg.specs.at(0));
  if (cfg.star) s.star = true;
  AssociateResult r = associate_space(s);
  if (cfg.json) return emit(cfg, r, out);
  out << "outcome: " << to_string(r.kind) << '\n' << "case: " << r.case_id << '\n';
  if (r.space) out << "space: " << format_spec(*r.space) << '\n';
  if (!r.reason.empty()) out << "reason: " << r.reason << '\n';
  print_citations(out, r.citations);
  return kExitOk;
}

int cmd_norm(const CliConfig& cfg, std::ostream& out) {
  SpaceSpec s = parse_spec(cfg.specs.at(0));
  if (cfg.star) s.star = true;
  if (!std::isinf(cfg.mu)) s.mu = cfg.mu;
  std::ifstream in(cfg.input);
  if (!in) throw std::invalid_argument("cannot read " + cfg.input);
  DecreasingStep f = rearrange(read_step_csv(in));
  NormOptions opt;
  opt.rel_tol = cfg.tol;
  opt.tail_rel_tol = std::max(cfg.tol, 1e-10);
  NormResult r = lk_norm(s, f, opt);
  if (cfg.json) return emit(cfg, Json{{"space", s}, {"norm", r}}, out);
  out << "norm: " << format_number(r.value) << '\n';
  if (r.divergent) out << "divergent: yes\n";
  return kExitOk;
}

int cmd_sv(const CliConfig& cfg, std::ostream& out) {
  SlowlyVaryingFunction b = parse_sv(cfg.specs.at(0));
  if (cfg.action == "eval") {
    if (cfg.points.empty()) throw std::invalid_argument("sv eval needs --t");
    Json vals = Json::array();
    for (double t : cfg.points) vals.push_back(Json{{"t", number_json(t)}, {"value", number_json(eval(b, t))}});
    if (cfg.json) return emit(cfg, Json{{"b", b}, {"values", vals}}, out);
    for (double t : cfg.points) out << format_number(t) << ' ' << format_number(eval(b, t)) << '\n';
    return kExitOk;
  }
  if (cfg.action == "tilde" || cfg.action == "hat") {
    TransformKind kind = cfg.action == "tilde" ? TransformKind::Tilde : TransformKind::Hat;
    TransformResult r = tilde_hat_transform(b, kind, std::max(cfg.tol, 1e-12));
    if (cfg.json) {
      Json j{{"b", b}, {"kind", to_string(kind)}, {"status", to_string(r.status)}};
      if (r.function) j["function"] = *r.function;
      if (r.at_zero) j["at_zero"] = asymptote_json(*r.at_zero);
      if (r.at_infinity) j["at_infinity"] = asymptote_json(*r.at_infinity);
      return emit(cfg, j, out);
    }
    out << "status: " << to_string(r.status) << '\n';
    if (r.function) out << "function: " << format_sv(*r.function) << '\n';
    print_asymptote(out, "at_zero", r.at_zero);
    print_asymptote(out, "at_infinity", r.at_infinity);
    return kExitOk;
  }
  if (cfg.action == "sup") {
    auto r = sup_transform(b, cfg.hat ? SupKind::HatSup : SupKind::TildeSup);
    if (cfg.json) {
      Json j{{"b", b}, {"kind", cfg.hat ? "HatSup" : "TildeSup"}, {"finite", r.has_value()}};
      if (r) j["function"] = *r;
      return emit(cfg, j, out);
    }
    out << (r ? format_sv(*r) : std::string("NotFinite")) << '\n';
    return kExitOk;
  }
  throw std::invalid_argument("unknown sv action " + cfg.action);
}

int samples_or(const CliConfig& cfg, int dflt) { return cfg.samples > 0 ? cfg.samples : dflt; }
std::uint64_t seed_or(const CliConfig& cfg, std::uint64_t dflt) { return cfg.seed.value_or(dflt); }

int verdict_exit(bool consistent) { return consistent ? kExitOk : kExitInconsistent; }

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const std::string& suite = cfg.action;
  auto need_specs = [&](std::size_t n) {
    if (cfg.specs.size() != n)
      throw std::invalid_argument("verify " + suite + " needs " + std::to_string(n) + " space spec(s)");
  };
  if (suite == "hl") {
    need_specs(0);
    HardyLittlewoodReport r = check_hardy_littlewood(samples_or(cfg, 1000), seed_or(cfg, 3));
    bool ok = r.violations == 0 && r.comonotone_mismatches == 0;
    emit(cfg, Json{{"suite", suite}, {"report", r}, {"verdict_consistent", ok}}, out);
    if (!cfg.json)
      out << "samples: " << r.samples << "\nviolations: " << r.violations
          << "\ncomonotone_mismatches: " << r.comonotone_mismatches << "\nconsistent: " << yes_no(ok)
          << '\n';
    return verdict_exit(ok);
  }
  if (suite == "holder" || suite == "duality") {
    need_specs(1);
    HolderDualityReport r =
        check_holder_and_duality(parse_spec(cfg.specs[0]), samples_or(cfg, 20), seed_or(cfg, 11));
    bool ok = r.skipped || (suite == "holder" ? r.holder_no_decay : r.k_stable);
    emit(cfg, Json{{"suite", suite}, {"report", r}, {"verdict_consistent", ok}}, out);
    if (!cfg.json) {
      out << "associate: " << to_string(r.associate.kind);
      if (r.associate.space) out << ' ' << format_spec(*r.associate.space);
      out << '\n';
      if (r.skipped) {
        out << "skipped\n";
      } else if (suite == "holder") {
        out << "holder_inner_min: " << format_number(r.holder_inner_min)
            << "\nholder_outer_min: " << format_number(r.holder_outer_min)
            << "\nno_decay: " << yes_no(r.holder_no_decay) << '\n';
      } else {
        out << "band: [" << format_number(r.band_min) << ", " << format_number(r.band_max)
            << "]\nK: " << format_number(r.k_full) << " (low " << format_number(r.k_low) << ", high "
            << format_number(r.k_high) << ")\nstable: " << yes_no(r.k_stable) << '\n';
      }
    }
    return verdict_exit(ok);
  }
  if (suite == "embed") {
    need_specs(2);
    EmbeddingCheckReport r = check_embedding_numeric(parse_spec(cfg.specs[0]), parse_spec(cfg.specs[1]),
                                                     cfg.mu, samples_or(cfg, 12), seed_or(cfg, 7));
    emit(cfg, Json{{"suite", suite}, {"report", r}, {"verdict_consistent", r.verdict_consistent}}, out);
    if (!cfg.json)
      out << "outcome: " << (r.verdict.holds ? "Holds" : "Fails") << " (" << r.verdict.case_id
          << ")\nwitness: " << r.witness << "\nmax_ratio: " << format_number(r.max_ratio)
          << "\ngrowth: " << format_number(r.growth)
          << "\nlast_decade_growth: " << format_number(r.last_decade_growth)
          << "\nconsistent: " << yes_no(r.verdict_consistent) << '\n';
    return verdict_exit(r.verdict_consistent);
  }
  if (suite == "stargap") {
    need_specs(1);
    SpaceSpec s = parse_spec(cfg.specs[0]);
    StarGapReport r = check_star_gap(s, true);
    bool ok = s.p == 1.0 ? r.growth_confirmed : r.last_decade_growth <= kPlateauTolerance;
    emit(cfg, Json{{"suite", suite}, {"report", r}, {"verdict_consistent", ok}}, out);
    if (!cfg.json) {
      for (std::size_t i = 0; i < r.masses.size(); ++i)
        out << "m=" << format_number(r.masses[i]) << " ratio=" << format_number(r.ratios[i]) << '\n';
      out << "growth_confirmed: " << yes_no(r.growth_confirmed) << "\nconsistent: " << yes_no(ok)
          << '\n';
    }
    return verdict_exit(ok);
  }
  if (suite == "sv") {
    need_specs(0);
    SvSuiteReport r = check_sv_suite(seed_or(cfg, 13));
    emit(cfg, Json{{"suite", suite}, {"report", r}, {"verdict_consistent", r.pass}}, out);
    if (!cfg.json) {
      for (const auto& row : r.transforms)
        out << row.row << ' ' << to_string(row.kind) << ' ' << format_sv(row.b)
            << " near=" << format_number(row.err_near) << " far=" << format_number(row.err_far)
            << (row.pass ? " ok" : " FAIL") << '\n';
      out << "consistent: " << yes_no(r.pass) << '\n';
    }
    return verdict_exit(r.pass);
  }
  throw std::invalid_argument("unknown verify suite " + suite);
}

}  // namespace

int parse_cli(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (const char* env = std::getenv("LK_DEFAULT_TOL")) {
    try {
      cfg.tol = parse_number(env);
    } catch (const ParseError&) {
      err << "error: LK_DEFAULT_TOL is not a number\n";
      return kExitInvalid;
    }
  }

  CLI::App app{"Lorentz-Karamata space calculator", "lk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Print JSON instead of text");
  std::string tol_s, mu_s;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol_s, "Relative tolerance (env LK_DEFAULT_TOL)");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  app.add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);

  auto add_mu = [&](CLI::App* sub) { sub->add_option("--mu", mu_s, "Measure of the space (inf)"); };

  auto* classify = app.add_subcommand("classify", "Classify a space");
  classify->add_option("spec", cfg.specs, "LK(...)")->required()->expected(1);
  classify->add_flag("--star", cfg.star, "Use the f** functional");

  auto* embed = app.add_subcommand("embed", "Decide an embedding");
  embed->add_option("specs", cfg.specs, "LK(...) LK(...)")->required()->expected(2);
  add_mu(embed);

  auto* assoc = app.add_subcommand("associate", "Associate space");
  assoc->add_option("spec", cfg.specs, "LK(...)")->required()->expected(1);
  assoc->add_flag("--star", cfg.star, "Use the f** functional");

  auto* norm = app.add_subcommand("norm", "Evaluate the functional on a CSV step function");
  norm->add_option("spec", cfg.specs, "LK(...)")->expected(0, 1);
  norm->add_option("--space", cfg.specs, "LK(...)")->expected(1);
  norm->add_option("--input", cfg.input, "value,mass CSV")->required();
  norm->add_flag("--star", cfg.star, "Use the f** functional");
  add_mu(norm);

  auto* sv = app.add_subcommand("sv", "Slowly varying function tools");
  sv->add_option("action", cfg.action, "eval|tilde|hat|sup")
      ->required()
      ->check(CLI::IsMember({"eval", "tilde", "hat", "sup"}));
  sv->add_option("b", cfg.specs, "sv(c; g,a,b | g,a,b)")->required()->expected(1);
  std::vector<std::string> points;
  sv->add_option("--t", points, "Evaluation points");
  sv->add_flag("--hat", cfg.hat, "sup: use the sup over (t, inf)");

  auto* verify = app.add_subcommand("verify", "Run a numeric verification suite");
  verify->add_option("suite", cfg.action, "hl|holder|embed|stargap|duality|sv")
      ->required()
      ->check(CLI::IsMember({"hl", "holder", "embed", "stargap", "duality", "sv"}));
  verify->add_option("specs", cfg.specs, "LK(...) arguments")->expected(0, 2);
  verify->add_option("--json-report", cfg.json_report, "Also write the JSON report to a file");
  add_mu(verify);

  try {
    app.parse(argc, argv);
    if (!tol_s.empty()) cfg.tol = parse_option_number(tol_s, "--tol");
    if (!mu_s.empty()) cfg.mu = parse_option_number(mu_s, "--mu");
    for (const auto& p : points) cfg.points.push_back(parse_option_number(p, "--t"));
    if (*seed_opt) cfg.seed = seed;
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw CLI::ValidationError("--tol", "must lie in (0,1)");
    if (!(cfg.mu > 0.0)) throw CLI::ValidationError("--mu", "must be positive");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "norm" && cfg.specs.size() != 1) {
    err << "error: norm needs exactly one space spec\n";
    return kExitInvalid;
  }
  return -1;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "embed") return cmd_embed(cfg, out);
    if (cfg.command == "associate") return cmd_associate(cfg, out);
    if (cfg.command == "norm") return cmd_norm(cfg, out);
    if (cfg.command == "sv") return cmd_sv(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    err << "error: unknown command " << cfg.command << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  int code = parse_cli(argc, argv, cfg, out, err);
  if (code >= 0) return code;
  return run(cfg, out, err);
}

}  // namespace lk
