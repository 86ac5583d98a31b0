#include "lk/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

namespace lk {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) != 0) fail("expected '" + w + "'");
    i_ += w.size();
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail("expected identifier");
    return s_.substr(start, i_ - start);
  }
  double number() {
    skip_ws();
    std::size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    for (const char* word : {"infinity", "inf"}) {
      std::string w(word);
      if (s_.compare(i_, w.size(), w) == 0) {
        i_ += w.size();
        return neg ? -kInf : kInf;
      }
    }
    double v = 0.0;
    auto res = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (res.ec != std::errc() || res.ptr == s_.data() + i_) {
      i_ = start;
      fail("expected number");
    }
    i_ = static_cast<std::size_t>(res.ptr - s_.data());
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i_); }
  std::size_t pos() const { return i_; }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

EndpointSignature parse_triple(Parser& ps) {
  EndpointSignature e;
  e.gamma = ps.number();
  ps.expect(',');
  e.alpha = ps.number();
  ps.expect(',');
  e.beta = ps.number();
  return e;
}

SlowlyVaryingFunction parse_sv_body(Parser& ps) {
  ps.expect_word("sv");
  ps.expect('(');
  std::size_t at = ps.pos();
  double c = ps.number();
  ps.expect(';');
  EndpointSignature z = parse_triple(ps);
  ps.expect('|');
  EndpointSignature i = parse_triple(ps);
  ps.expect(')');
  try {
    return SlowlyVaryingFunction(c, z, i);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), at);
  }
}

}  // namespace

SlowlyVaryingFunction parse_sv(const std::string& text) {
  Parser ps(text);
  SlowlyVaryingFunction b = parse_sv_body(ps);
  if (!ps.at_end()) ps.fail("trailing characters");
  return b;
}

double parse_number(const std::string& text) {
  Parser ps(text);
  double v = ps.number();
  if (!ps.at_end()) ps.fail("trailing characters");
  return v;
}

SpaceSpec parse_spec(const std::string& text) {
  Parser ps(text);
  ps.expect_word("LK");
  ps.expect('(');
  SpaceSpec s;
  std::set<std::string> seen;
  bool have_p = false, have_q = false;
  if (!ps.peek(')')) {
    do {
      std::size_t at = ps.pos();
      std::string key = ps.ident();
      if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", at);
      if (key == "star") {
        s.star = true;
        continue;
      }
      ps.expect('=');
      if (key == "p") {
        s.p = ps.number();
        have_p = true;
      } else if (key == "q") {
        s.q = ps.number();
        have_q = true;
      } else if (key == "mu") {
        s.mu = ps.number();
      } else if (key == "b") {
        s.b = parse_sv_body(ps);
      } else {
        throw ParseError("unknown key '" + key + "'", at);
      }
    } while (ps.accept(','));
  }
  ps.expect(')');
  if (!ps.at_end()) ps.fail("trailing characters");
  if (!have_p) throw ParseError("missing p", 0);
  if (!have_q) throw ParseError("missing q", 0);
  s.validate();
  return s;
}

namespace {

std::vector<std::vector<double>> read_rows(std::istream& in, std::size_t width) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(parse_number(cell));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + cell + "'", e.position());
      }
    }
    if (row.size() != width)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                           " fields",
                       0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

StepFunction read_step_csv(std::istream& in) {
  std::vector<StepPiece> ps;
  for (const auto& r : read_rows(in, 2)) ps.push_back({r[0], r[1]});
  return StepFunction(std::move(ps));
}

JointStepFunction read_joint_csv(std::istream& in) {
  std::vector<JointPiece> ps;
  for (const auto& r : read_rows(in, 3)) ps.push_back({r[0], r[1], r[2]});
  return JointStepFunction(std::move(ps));
}

Json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "nan") return std::nan("");
    return parse_number(s);
  }
  return j.get<double>();
}

namespace {

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number_json(x));
  return a;
}

std::vector<double> numbers_from(const Json& j) {
  std::vector<double> xs;
  for (const auto& e : j) xs.push_back(number_from_json(e));
  return xs;
}

double num(const Json& j, const char* key) { return number_from_json(j.at(key)); }

Tri tri_from(const std::string& s) {
  if (s == "Yes") return Tri::Yes;
  if (s == "No") return Tri::No;
  if (s == "Unknown") return Tri::Unknown;
  throw std::invalid_argument("bad tri value " + s);
}

Endpoint endpoint_from(const std::string& s) {
  if (s == "Zero") return Endpoint::Zero;
  if (s == "Infinity") return Endpoint::Infinity;
  throw std::invalid_argument("bad endpoint " + s);
}

}  // namespace

void to_json(Json& j, const EndpointSignature& s) {
  j = Json::array({number_json(s.gamma), number_json(s.alpha), number_json(s.beta)});
}

void from_json(const Json& j, EndpointSignature& s) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("signature must be [g,a,b]");
  s = {number_from_json(j[0]), number_from_json(j[1]), number_from_json(j[2])};
}

void to_json(Json& j, const SlowlyVaryingFunction& b) {
  j = Json{{"scale", number_json(b.scale())}, {"sig0", b.sig0()}, {"sigInf", b.sig_inf()}};
}

void from_json(const Json& j, SlowlyVaryingFunction& b) {
  b = SlowlyVaryingFunction(num(j, "scale"), j.at("sig0").get<EndpointSignature>(),
                            j.at("sigInf").get<EndpointSignature>());
}

void to_json(Json& j, const SpaceSpec& s) {
  j = Json{{"p", number_json(s.p)},   {"q", number_json(s.q)}, {"b", s.b},
           {"mu", number_json(s.mu)}, {"star", s.star},        {"text", format_spec(s)}};
}

void from_json(const Json& j, SpaceSpec& s) {
  s.p = num(j, "p");
  s.q = num(j, "q");
  s.b = j.at("b").get<SlowlyVaryingFunction>();
  s.mu = j.contains("mu") ? num(j, "mu") : kInf;
  s.star = j.value("star", false);
  s.validate();
}

void to_json(Json& j, const NormResult& r) {
  j = Json{{"value", number_json(r.value)},
           {"divergent", r.divergent},
           {"sup_residual", number_json(r.sup_residual)}};
}

void from_json(const Json& j, NormResult& r) {
  r.value = num(j, "value");
  r.divergent = j.at("divergent").get<bool>();
  r.sup_residual = num(j, "sup_residual");
}

void to_json(Json& j, const ClassificationReport& r) {
  j = Json{{"nontrivial", r.nontrivial},
           {"quasi_banach", r.quasi_banach},
           {"p5", to_string(r.p5)},
           {"p5_rule", r.p5_rule},
           {"banach_equivalent", r.banach_equivalent},
           {"star_nontrivial", r.star_nontrivial},
           {"equals_star", r.equals_star},
           {"fundamental_exponent", number_json(r.fundamental_exponent)},
           {"fundamental_sig0", r.fundamental_sig0},
           {"fundamental_sigInf", r.fundamental_sig_inf},
           {"citations", r.citations}};
}

void from_json(const Json& j, ClassificationReport& r) {
  r.nontrivial = j.at("nontrivial").get<bool>();
  r.quasi_banach = j.at("quasi_banach").get<bool>();
  r.p5 = tri_from(j.at("p5").get<std::string>());
  r.p5_rule = j.at("p5_rule").get<std::string>();
  r.banach_equivalent = j.at("banach_equivalent").get<bool>();
  r.star_nontrivial = j.at("star_nontrivial").get<bool>();
  r.equals_star = j.at("equals_star").get<bool>();
  r.fundamental_exponent = num(j, "fundamental_exponent");
  r.fundamental_sig0 = j.at("fundamental_sig0").get<EndpointSignature>();
  r.fundamental_sig_inf = j.at("fundamental_sigInf").get<EndpointSignature>();
  r.citations = j.at("citations").get<std::vector<std::string>>();
}

void to_json(Json& j, const Condition& c) { j = Json{{"name", c.name}, {"value", c.value}}; }

void from_json(const Json& j, Condition& c) {
  c.name = j.at("name").get<std::string>();
  c.value = j.at("value").get<bool>();
}

void to_json(Json& j, const EmbeddingVerdict& v) {
  j = Json{{"outcome", v.holds ? "Holds" : "Fails"},
           {"case", v.case_id},
           {"conditions", v.conditions},
           {"citations", v.citations}};
  if (v.witness) j["witness"] = to_string(*v.witness);
}

void from_json(const Json& j, EmbeddingVerdict& v) {
  std::string o = j.at("outcome").get<std::string>();
  if (o != "Holds" && o != "Fails") throw std::invalid_argument("bad outcome " + o);
  v.holds = o == "Holds";
  v.case_id = j.at("case").get<std::string>();
  v.conditions = j.at("conditions").get<std::vector<Condition>>();
  v.citations = j.at("citations").get<std::vector<std::string>>();
  v.witness.reset();
  if (j.contains("witness")) {
    v.witness = witness_kind_from_string(j.at("witness").get<std::string>());
    if (!v.witness) throw std::invalid_argument("bad witness kind");
  }
}

void to_json(Json& j, const AssociateResult& r) {
  j = Json{{"outcome", to_string(r.kind)},
           {"case", r.case_id},
           {"reason", r.reason},
           {"citations", r.citations}};
  if (r.space) j["space"] = *r.space;
}

void from_json(const Json& j, AssociateResult& r) {
  std::string o = j.at("outcome").get<std::string>();
  if (o == "Space")
    r.kind = AssociateResult::Kind::Space;
  else if (o == "Zero")
    r.kind = AssociateResult::Kind::Zero;
  else if (o == "NotCharacterized")
    r.kind = AssociateResult::Kind::NotCharacterized;
  else
    throw std::invalid_argument("bad associate outcome " + o);
  r.case_id = j.at("case").get<std::string>();
  r.reason = j.at("reason").get<std::string>();
  r.citations = j.at("citations").get<std::vector<std::string>>();
  r.space.reset();
  if (j.contains("space")) r.space = j.at("space").get<SpaceSpec>();
}

void to_json(Json& j, const SvCheckReport& r) {
  j = Json{{"pass", r.pass},
           {"eps", number_json(r.eps)},
           {"k_increasing", number_json(r.k_increasing)},
           {"k_decreasing", number_json(r.k_decreasing)},
           {"k", number_json(r.k)},
           {"k_inner", number_json(r.k_inner)},
           {"stable", r.stable},
           {"samples", r.samples}};
}

void from_json(const Json& j, SvCheckReport& r) {
  r.pass = j.at("pass").get<bool>();
  r.eps = num(j, "eps");
  r.k_increasing = num(j, "k_increasing");
  r.k_decreasing = num(j, "k_decreasing");
  r.k = num(j, "k");
  r.k_inner = num(j, "k_inner");
  r.stable = j.at("stable").get<bool>();
  r.samples = j.at("samples").get<std::size_t>();
}

void to_json(Json& j, const EmbeddingCheckReport& r) {
  j = Json{{"verdict", r.verdict},
           {"base_ratio", number_json(r.base_ratio)},
           {"max_ratio", number_json(r.max_ratio)},
           {"growth", number_json(r.growth)},
           {"last_decade_growth", number_json(r.last_decade_growth)},
           {"trend", numbers(r.trend)},
           {"witness", r.witness},
           {"verdict_consistent", r.verdict_consistent}};
}

void from_json(const Json& j, EmbeddingCheckReport& r) {
  r.verdict = j.at("verdict").get<EmbeddingVerdict>();
  r.base_ratio = num(j, "base_ratio");
  r.max_ratio = num(j, "max_ratio");
  r.growth = num(j, "growth");
  r.last_decade_growth = num(j, "last_decade_growth");
  r.trend = numbers_from(j.at("trend"));
  r.witness = j.at("witness").get<std::string>();
  r.verdict_consistent = j.at("verdict_consistent").get<bool>();
}

void to_json(Json& j, const StarGapReport& r) {
  j = Json{{"masses", numbers(r.masses)},
           {"ratios", numbers(r.ratios)},
           {"max_ratio", number_json(r.max_ratio)},
           {"growth_confirmed", r.growth_confirmed},
           {"last_decade_growth", number_json(r.last_decade_growth)}};
}

void from_json(const Json& j, StarGapReport& r) {
  r.masses = numbers_from(j.at("masses"));
  r.ratios = numbers_from(j.at("ratios"));
  r.max_ratio = num(j, "max_ratio");
  r.growth_confirmed = j.at("growth_confirmed").get<bool>();
  r.last_decade_growth = num(j, "last_decade_growth");
}

void to_json(Json& j, const HolderDualityReport& r) {
  j = Json{{"skipped", r.skipped},
           {"associate", r.associate},
           {"holder_min_by_scale", numbers(r.holder_min_by_scale)},
           {"holder_inner_min", number_json(r.holder_inner_min)},
           {"holder_outer_min", number_json(r.holder_outer_min)},
           {"holder_no_decay", r.holder_no_decay},
           {"band_min", number_json(r.band_min)},
           {"band_max", number_json(r.band_max)},
           {"k_full", number_json(r.k_full)},
           {"k_low", number_json(r.k_low)},
           {"k_high", number_json(r.k_high)},
           {"k_stable", r.k_stable},
           {"verdict_consistent", r.verdict_consistent}};
}

void from_json(const Json& j, HolderDualityReport& r) {
  r.skipped = j.at("skipped").get<bool>();
  r.associate = j.at("associate").get<AssociateResult>();
  r.holder_min_by_scale = numbers_from(j.at("holder_min_by_scale"));
  r.holder_inner_min = num(j, "holder_inner_min");
  r.holder_outer_min = num(j, "holder_outer_min");
  r.holder_no_decay = j.at("holder_no_decay").get<bool>();
  r.band_min = num(j, "band_min");
  r.band_max = num(j, "band_max");
  r.k_full = num(j, "k_full");
  r.k_low = num(j, "k_low");
  r.k_high = num(j, "k_high");
  r.k_stable = j.at("k_stable").get<bool>();
  r.verdict_consistent = j.at("verdict_consistent").get<bool>();
}

void to_json(Json& j, const QuasiNormReport& r) {
  j = Json{{"k_by_value_scale", numbers(r.k_by_value_scale)},
           {"k", number_json(r.k)},
           {"variation", number_json(r.variation)},
           {"stable", r.stable}};
}

void from_json(const Json& j, QuasiNormReport& r) {
  r.k_by_value_scale = numbers_from(j.at("k_by_value_scale"));
  r.k = num(j, "k");
  r.variation = num(j, "variation");
  r.stable = j.at("stable").get<bool>();
}

void to_json(Json& j, const HardyLittlewoodReport& r) {
  j = Json{{"samples", r.samples},
           {"violations", r.violations},
           {"comonotone_mismatches", r.comonotone_mismatches},
           {"worst_excess", number_json(r.worst_excess)}};
}

void from_json(const Json& j, HardyLittlewoodReport& r) {
  r.samples = j.at("samples").get<int>();
  r.violations = j.at("violations").get<int>();
  r.comonotone_mismatches = j.at("comonotone_mismatches").get<int>();
  r.worst_excess = num(j, "worst_excess");
}

void to_json(Json& j, const TransformRow& r) {
  j = Json{{"row", r.row},
           {"b", r.b},
           {"kind", to_string(r.kind)},
           {"endpoint", to_string(r.endpoint)},
           {"rule_diverges", r.rule_diverges},
           {"oracle_diverges", r.oracle_diverges},
           {"err_near", number_json(r.err_near)},
           {"err_far", number_json(r.err_far)},
           {"pass", r.pass}};
}

void from_json(const Json& j, TransformRow& r) {
  r.row = j.at("row").get<std::string>();
  r.b = j.at("b").get<SlowlyVaryingFunction>();
  std::string k = j.at("kind").get<std::string>();
  if (k == "Tilde")
    r.kind = TransformKind::Tilde;
  else if (k == "Hat")
    r.kind = TransformKind::Hat;
  else
    throw std::invalid_argument("bad transform kind " + k);
  r.endpoint = endpoint_from(j.at("endpoint").get<std::string>());
  r.rule_diverges = j.at("rule_diverges").get<bool>();
  r.oracle_diverges = j.at("oracle_diverges").get<bool>();
  r.err_near = num(j, "err_near");
  r.err_far = num(j, "err_far");
  r.pass = j.at("pass").get<bool>();
}

void to_json(Json& j, const SvSuiteReport& r) {
  j = Json{{"property", r.property}, {"transforms", r.transforms}, {"pass", r.pass}};
}

void from_json(const Json& j, SvSuiteReport& r) {
  r.property = j.at("property").get<std::vector<SvCheckReport>>();
  r.transforms = j.at("transforms").get<std::vector<TransformRow>>();
  r.pass = j.at("pass").get<bool>();
}

}  // namespace lk
