#include "bsroots/cli.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <variant>

#include "bsroots/errors.hpp"
#include "bsroots/frobenius.hpp"
#include "bsroots/jumps.hpp"
#include "bsroots/rings.hpp"
#include "bsroots/roots.hpp"
#include "bsroots/thresholds.hpp"

namespace bsroots {

using Json = nlohmann::ordered_json;

Command parse_command(const std::string& text) {
  if (text == "jumps") return Command::Jumps;
  if (text == "roots") return Command::Roots;
  if (text == "thresholds") return Command::Thresholds;
  if (text == "fpt") return Command::Fpt;
  if (text == "nu") return Command::Nu;
  if (text == "test-ideal") return Command::TestIdeal;
  if (text == "fjn") return Command::Fjn;
  if (text == "verify-example") return Command::VerifyExample;
  throw ParseError("unknown command '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw ParseError("unknown format '" + text + "' (expected json, csv or text)");
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string set_text(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_string(v));
  return "{" + join(parts, ", ") + "}";
}

std::string set_text(const std::vector<std::uint64_t>& values) {
  std::vector<std::string> parts;
  for (auto v : values) parts.push_back(std::to_string(v));
  return "{" + join(parts, ", ") + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("interval must look like lo:hi, got '" + text + "'");
  Interval out{parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  if (out.hi < out.lo) throw PreconditionError("interval " + text + " is empty");
  return out;
}

Ideal polynomial_ideal(const RingPresentation& ring, const std::string& text, const std::string& what) {
  const auto* poly = std::get_if<PolynomialRingPresentation>(&ring);
  if (!poly) throw UnsupportedError(what + " requires a polynomial ring (poly p=... vars=...)");
  return Ideal::parse(poly->ring, text);
}

struct Engine {
  RingPresentation ring;
  EnginePtr engine;
};

Engine load_engine(const JobConfig& config) {
  Engine out{parse_ring(config.ring), nullptr};
  out.engine = make_engine(out.ring, config.ideal);
  return out;
}

unsigned top_level(const JobConfig& config, const JumpEngine& engine) {
  return config.level ? *config.level : default_levels(engine);
}

void add_engine_header(Json& out, const JumpEngine& engine) {
  out["p"] = engine.prime();
  out["r"] = engine.generator_count();
  out["producer"] = to_string(engine.producer());
  if (!engine.note().empty()) out["note"] = engine.note();
}

std::string render_jumps(const JobConfig& config, JumpEngine& engine) {
  JumpTable table;
  if (config.level) {
    table = jump_table(engine, *config.level, *config.level);
  } else {
    table = jump_table(engine, std::max(1u, engine.min_level()), default_levels(engine));
  }
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out = Json::parse(table.to_json());
      if (!engine.note().empty()) out["note"] = engine.note();
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "e,jump\n";
      for (const auto& [e, jumps] : table.levels) {
        for (auto n : jumps) os << e << "," << n << "\n";
      }
      break;
    case Format::Text:
      os << "p=" << table.p << " r=" << table.r << " producer=" << to_string(table.producer) << "\n";
      for (const auto& [e, jumps] : table.levels) os << "level " << e << ": " << set_text(jumps) << "\n";
      break;
  }
  return os.str();
}

std::string render_roots(const JobConfig& config, JumpEngine& engine) {
  const unsigned E = top_level(config, engine);
  const unsigned B = config.denominator_bound ? *config.denominator_bound : default_denominator_bound(E);
  const Interval interval = config.interval ? parse_interval(*config.interval) : default_root_interval(engine);
  const auto certs = bernstein_sato_roots(engine, E, B, interval);
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      add_engine_header(out, engine);
      out["certified_level"] = E;
      out["denominator_bound"] = B;
      out["interval"] = {to_string(interval.lo), to_string(interval.hi)};
      Json list = Json::array();
      for (const auto& c : certs) {
        Json w = Json::array();
        for (const auto& x : c.witnesses) w.push_back({{"level", x.level}, {"s", x.s}, {"jump", x.jump}});
        list.push_back({{"alpha", to_string(c.alpha)}, {"witnesses", w}});
      }
      out["roots"] = list;
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "alpha,certified_level\n";
      for (const auto& c : certs) os << to_string(c.alpha) << "," << c.certified_level << "\n";
      break;
    case Format::Text: {
      std::vector<Rational> values;
      for (const auto& c : certs) values.push_back(c.alpha);
      os << "roots certified to level " << E << " (B=" << B << ", interval [" << to_string(interval.lo) << ", "
         << to_string(interval.hi) << "]): " << set_text(values) << "\n";
      break;
    }
  }
  return os.str();
}

Json threshold_json(const ThresholdCertificate& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) w.push_back({{"level", x.level}, {"jump", x.jump}});
  return {{"lambda", to_string(c.lambda)}, {"b", c.b}, {"c", c.c}, {"certified_level", c.certified_level},
          {"witnesses", w}};
}

std::string render_thresholds(const JobConfig& config, JumpEngine& engine) {
  const unsigned E = top_level(config, engine);
  const unsigned B = config.denominator_bound ? *config.denominator_bound : default_denominator_bound(E);
  const Interval interval = config.interval ? parse_interval(*config.interval) : default_threshold_interval(engine);
  const auto certs = differential_thresholds(engine, E, interval, E, B);
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      add_engine_header(out, engine);
      out["certified_level"] = E;
      out["denominator_bound"] = B;
      out["interval"] = {to_string(interval.lo), to_string(interval.hi)};
      Json list = Json::array();
      for (const auto& c : certs) list.push_back(threshold_json(c));
      out["thresholds"] = list;
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "lambda,b,c,certified_level\n";
      for (const auto& c : certs) os << to_string(c.lambda) << "," << c.b << "," << c.c << "," << c.certified_level << "\n";
      break;
    case Format::Text: {
      std::vector<Rational> values;
      for (const auto& c : certs) values.push_back(c.lambda);
      os << "differential thresholds certified to level " << E << " in [" << to_string(interval.lo) << ", "
         << to_string(interval.hi) << "]: " << set_text(values) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_fpt(const JobConfig& config, JumpEngine& engine) {
  const unsigned E = top_level(config, engine);
  const unsigned B = config.denominator_bound ? *config.denominator_bound : default_denominator_bound(E);
  const auto result = fpt(engine, E, B);
  const std::string value = result.value ? to_string(result.value->lambda) : "";
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      add_engine_header(out, engine);
      out["level"] = E;
      // Off the regular case this is only the least certified threshold.
      out["kind"] = engine.producer() == Producer::Regular ? "fpt" : "least_certified_threshold";
      out["fpt"] = result.value ? Json(value) : Json(nullptr);
      if (result.exists) {
        out["bracket"] = {to_string(result.bracket.lo), to_string(result.bracket.hi)};
      } else {
        out["bracket"] = nullptr;
      }
      if (result.value) out["certificate"] = threshold_json(*result.value);
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "fpt,bracket_lo,bracket_hi,level\n";
      os << value << "," << (result.exists ? to_string(result.bracket.lo) : "") << ","
         << (result.exists ? to_string(result.bracket.hi) : "") << "," << E << "\n";
      break;
    case Format::Text:
      if (!result.exists) {
        os << "no differential jumps: the ideal is the unit ideal\n";
      } else if (result.value) {
        os << "fpt = " << value << " (certified to level " << E << ")\n";
      } else {
        os << "fpt in [" << to_string(result.bracket.lo) << ", " << to_string(result.bracket.hi)
           << "], no candidate certified at level " << E << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_nu(const JobConfig& config) {
  const auto ring = parse_ring(config.ring);
  const Ideal a = polynomial_ideal(ring, config.ideal, "nu");
  std::string target = config.target.value_or("");
  if (target.empty()) target = join(a.ring()->variables, ", ");
  const Ideal c = Ideal::parse(a.ring(), target);
  const unsigned E = config.level.value_or(3);
  ThresholdSequence seq;
  if (config.nu_kind == "f") {
    seq = f_threshold(a, c, E);
  } else if (config.nu_kind == "cartier") {
    seq = cartier_threshold(a, c, E);
  } else {
    throw ParseError("nu kind must be f or cartier, got '" + config.nu_kind + "'");
  }
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      out["p"] = a.prime();
      out["kind"] = config.nu_kind;
      out["target"] = c.to_string();
      out["nu"] = seq.nu;
      out["exact"] = seq.exact;
      out["limit"] = seq.exact ? Json(to_string(seq.limit)) : Json(nullptr);
      out["bracket"] = {to_string(seq.bracket.lo), to_string(seq.bracket.hi)};
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv: {
      os << "e,nu,nu_over_pe\n";
      for (std::size_t e = 0; e < seq.nu.size(); ++e) {
        Rational ratio(BigInt(static_cast<unsigned long>(seq.nu[e])), prime_power(a.prime(), static_cast<unsigned>(e)));
        ratio.canonicalize();
        os << e << "," << seq.nu[e] << "," << to_string(ratio) << "\n";
      }
      break;
    }
    case Format::Text:
      for (std::size_t e = 0; e < seq.nu.size(); ++e) os << "nu_" << e << " = " << seq.nu[e] << "\n";
      if (seq.exact) {
        os << "limit = " << to_string(seq.limit) << "\n";
      } else {
        os << "limit in [" << to_string(seq.bracket.lo) << ", " << to_string(seq.bracket.hi) << "]\n";
      }
      break;
  }
  return os.str();
}

std::string render_test_ideal(const JobConfig& config) {
  const auto ring = parse_ring(config.ring);
  const Ideal a = polynomial_ideal(ring, config.ideal, "test-ideal");
  if (!config.lambda) throw PreconditionError("test-ideal needs --lambda");
  const Rational lambda = parse_rational(*config.lambda);
  const auto t = test_ideal(a, lambda, config.e_max);
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      out["p"] = a.prime();
      out["lambda"] = to_string(lambda);
      out["ideal"] = t.ideal.to_string();
      out["stabilization_level"] = t.stabilization_level;
      out["stabilized"] = t.stabilized;
      out["ascending"] = t.ascending;
      Json chain = Json::array();
      for (const auto& c : t.chain) chain.push_back(c.to_string());
      out["chain"] = chain;
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "lambda,ideal,stabilization_level,stabilized\n";
      os << to_string(lambda) << "," << csv_field(t.ideal.to_string()) << "," << t.stabilization_level << ","
         << (t.stabilized ? "true" : "false") << "\n";
      break;
    case Format::Text:
      os << "tau = (" << t.ideal.to_string() << ")" << (t.stabilized ? "" : " [not stabilized]")
         << ", constant from e = " << t.stabilization_level << " of " << config.e_max << "\n";
      break;
  }
  return os.str();
}

std::string render_fjn(const JobConfig& config) {
  const auto ring = parse_ring(config.ring);
  const Ideal a = polynomial_ideal(ring, config.ideal, "fjn");
  const Interval interval =
      config.interval ? parse_interval(*config.interval)
                      : Interval{Rational(0), Rational(static_cast<unsigned long>(a.generator_count()))};
  const unsigned B = config.denominator_bound.value_or(1);
  const auto values = f_jumping_numbers(a, interval, config.e_max, 1, B);
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      out["p"] = a.prime();
      out["interval"] = {to_string(interval.lo), to_string(interval.hi)};
      out["e_max"] = config.e_max;
      out["f_jumping_numbers"] = rationals(values);
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "lambda\n";
      for (const auto& v : values) os << to_string(v) << "\n";
      break;
    case Format::Text:
      os << "F-jumping numbers in [" << to_string(interval.lo) << ", " << to_string(interval.hi)
         << "]: " << set_text(values) << "\n";
      break;
  }
  return os.str();
}

std::uint32_t default_example_prime(const std::string& id) {
  if (id == "9.2" || id == "9.3" || id == "9.6") return 5;
  if (id == "9.4") return 13;
  if (id == "9.7") return 2;
  return 3;
}

std::string render_example(const JobConfig& config, int& exit_code) {
  const std::uint32_t p = config.p.value_or(default_example_prime(config.example));
  const auto report = verify_example(config.example, p, config.n);
  exit_code = report.pass ? 0 : 3;
  std::ostringstream os;
  switch (config.format) {
    case Format::Json: {
      Json out;
      out["example"] = report.id;
      out["p"] = report.p;
      out["pass"] = report.pass;
      Json checks = Json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
      }
      out["checks"] = checks;
      os << out.dump() << "\n";
      break;
    }
    case Format::Csv:
      os << "check,expected,actual,ok\n";
      for (const auto& c : report.checks) {
        os << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.actual) << ","
           << (c.ok ? "true" : "false") << "\n";
      }
      break;
    case Format::Text:
      for (const auto& c : report.checks) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.actual;
        if (!c.ok) os << " (expected " << c.expected << ")";
        os << "\n";
      }
      os << (report.pass ? "PASS" : "FAIL") << " example " << report.id << " at p=" << report.p << "\n";
      break;
  }
  return os.str();
}

}  // namespace

RunResult run(const JobConfig& config) {
  RunResult result;
  try {
    switch (config.command) {
      case Command::Jumps: {
        auto e = load_engine(config);
        result.output = render_jumps(config, *e.engine);
        break;
      }
      case Command::Roots: {
        auto e = load_engine(config);
        result.output = render_roots(config, *e.engine);
        break;
      }
      case Command::Thresholds: {
        auto e = load_engine(config);
        result.output = render_thresholds(config, *e.engine);
        break;
      }
      case Command::Fpt: {
        auto e = load_engine(config);
        result.output = render_fpt(config, *e.engine);
        break;
      }
      case Command::Nu:
        result.output = render_nu(config);
        break;
      case Command::TestIdeal:
        result.output = render_test_ideal(config);
        break;
      case Command::Fjn:
        result.output = render_fjn(config);
        break;
      case Command::VerifyExample:
        result.output = render_example(config, result.exit_code);
        break;
    }
  } catch (const ParseError& err) {
    result = {2, "", std::string("parse error: ") + err.what()};
  } catch (const PreconditionError& err) {
    result = {1, "", std::string("precondition violated: ") + err.what()};
  } catch (const UnsupportedError& err) {
    result = {1, "", std::string("unsupported: ") + err.what()};
  }
  return result;
}

// Worked examples.

namespace {

class Checker {
 public:
  Checker(std::string id, std::uint32_t p) { report_.id = std::move(id), report_.p = p; }

  void equal(const std::string& name, const std::string& expected, const std::string& actual) {
    const bool ok = expected == actual;
    report_.checks.push_back({name, expected, actual, ok});
    report_.pass = report_.pass && ok;
  }
  void holds(const std::string& name, bool value) { equal(name, "true", value ? "true" : "false"); }

  ExampleReport take() { return std::move(report_); }

 private:
  ExampleReport report_;
};

EnginePtr engine_for(const std::string& ring, const std::string& ideal) { return make_engine(parse_ring(ring), ideal); }

std::vector<Rational> root_values(JumpEngine& engine, unsigned E, unsigned B) {
  std::vector<Rational> out;
  for (const auto& c : bernstein_sato_roots(engine, E, B, default_root_interval(engine))) out.push_back(c.alpha);
  return out;
}

std::vector<Rational> threshold_values(JumpEngine& engine, unsigned E, unsigned B, const Interval& interval) {
  std::vector<Rational> out;
  for (const auto& c : differential_thresholds(engine, E, interval, E, B)) out.push_back(c.lambda);
  return out;
}

std::vector<Rational> rationals_of(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> integers_upto(long lo, long hi) {
  std::vector<Rational> out;
  for (long k = lo; k <= hi; ++k) out.emplace_back(k);
  return out;
}

void coset_check(Checker& check, JumpEngine& engine, const std::vector<Rational>& roots,
                 const std::vector<Rational>& thresholds, const Interval& threshold_interval) {
  const auto report = coset_correspondence_check(roots, thresholds, engine.generator_count(),
                                                 default_root_interval(engine), threshold_interval, engine.prime());
  check.holds("roots and thresholds agree modulo Z", report.pass);
}

std::uint64_t qpow(std::uint32_t p, unsigned e) { return prime_power(p, e).get_ui(); }

}  // namespace

ExampleReport verify_example(const std::string& id, std::uint32_t p, std::uint64_t n) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  const std::string P = std::to_string(p);
  Checker check(id, p);

  if (id == "9.2") {
    if (p == 2) throw PreconditionError("example 9.2 needs p odd");
    const auto R = make_ring(p, {"x", "y", "z"});
    const Ideal a = Ideal::parse(R, "x^2*y*z, x*y^2*z, x*y*z^2");
    const Ideal xyz = Ideal::parse(R, "x*y*z");
    for (const char* lambda : {"1", "5/4", "29/20"}) {
      const auto t = test_ideal(a, parse_rational(lambda), 4);
      check.equal(std::string("tau at ") + lambda, "x*y*z (stabilized)",
                  t.ideal.to_string() + (t.stabilized ? " (stabilized)" : " (not stabilized)"));
    }
    const auto t = test_ideal(a, parse_rational("3/2"), 4);
    check.holds("tau at 3/2 differs from (x*y*z)", t.stabilized && t.ideal != xyz);
    auto E = make_regular_engine(a);
    check.holds("-5/4 certified to level 2", verify_root_to_level(*E, parse_rational("-5/4"), 2).certified);
    const auto fjn = f_jumping_numbers(a, {Rational(1), Rational(3, 2)}, 4);
    check.holds("5/4 is not an F-jumping number in [1, 3/2]",
                std::find(fjn.begin(), fjn.end(), Rational(5, 4)) == fjn.end());
  } else if (id == "9.3") {
    if (p == 2) throw PreconditionError("example 9.3 needs p odd");
    auto E = engine_for("veronese p=" + P + " vars=x,y degree=2", "x^2, x*y, y^2");
    for (unsigned e = 1; e <= 2; ++e) {
      const std::uint64_t q = qpow(p, e);
      std::set<std::uint64_t> closed;
      for (std::uint64_t b = 1; b * q - 1 < 3 * q; ++b) closed.insert(b * q - 1);
      for (std::uint64_t c = 1; ((2 * c + 1) * q - 3) / 2 < 3 * q; ++c) closed.insert(((2 * c + 1) * q - 3) / 2);
      check.equal("jumps at level " + std::to_string(e), set_text(std::vector<std::uint64_t>(closed.begin(), closed.end())),
                  set_text(E->jump_set(e)));
    }
    const auto roots = root_values(*E, 2, 1);
    check.equal("roots at level 2", set_text(rationals_of({"-3/2", "-1"})), set_text(roots));
    const Interval cap{Rational(0), Rational(3)};
    const auto ths = threshold_values(*E, 2, 1, cap);
    check.equal("thresholds in [0, 3] at level 2", set_text(rationals_of({"1", "3/2", "2", "5/2", "3"})), set_text(ths));
    coset_check(check, *E, roots, ths, cap);
  } else if (id == "9.4") {
    if (p % 12 != 1) throw PreconditionError("example 9.4 needs p = 1 mod 12");
    const auto S = make_ring(p, {"x", "y"});
    const Ideal f = Ideal::parse(S, "x^4 + y^6");
    const std::uint64_t q = p;
    auto root_contains = [&](std::uint64_t power, const char* element) {
      return eth_root_of_power(f, power, 1).contains(parse_polynomial(*S, element));
    };
    check.holds("y in C(f^" + std::to_string((7 * q - 7) / 12) + ")", root_contains((7 * q - 7) / 12, "y"));
    check.holds("x in C(f^" + std::to_string(2 * (q - 1) / 3) + ")", root_contains(2 * (q - 1) / 3, "x"));
    check.holds("y^2 in C(f^" + std::to_string(3 * (q - 1) / 4) + ")", root_contains(3 * (q - 1) / 4, "y^2"));
    const std::uint64_t past = (7 * q + 11) / 12;
    check.holds("C(f^" + std::to_string(past) + ") inside (x, y^2)",
                Ideal::parse(S, "x, y^2").contains(eth_root_of_power(f, past, 1)));
    auto E = engine_for("veronese p=" + P + " vars=x,y degree=2", "x^4 + y^6");
    check.holds("7/12 certified as a threshold on the Veronese ring to level 2",
                verify_threshold(*E, Rational(7, 12), 2).certified);
  } else if (id == "9.5") {
    auto E = engine_for("catalog cross_xy p=" + P, "");
    for (unsigned e = 1; e <= 3; ++e) {
      check.equal("jumps at level " + std::to_string(e), set_text(std::vector<std::uint64_t>{0, qpow(p, e) - 1}),
                  set_text(E->jump_set(e)));
    }
    const auto roots = root_values(*E, 3, 2);
    check.equal("roots at level 3", set_text(rationals_of({"-1", "0"})), set_text(roots));
    const Interval cap{Rational(0), Rational(3)};
    const auto ths = threshold_values(*E, 3, 2, cap);
    check.equal("thresholds in [0, 3] at level 3", set_text(integers_upto(0, 3)), set_text(ths));
    coset_check(check, *E, roots, ths, cap);
  } else if (id == "9.6" || id == "9.7") {
    const bool two = id == "9.7";
    if (two && p != 2) throw PreconditionError("example 9.7 needs p = 2");
    if (!two && p == 2) throw PreconditionError("example 9.6 needs p > 2");
    auto E = engine_for("semigroup p=" + P + " gens=2,3", "x^2");
    auto catalog = engine_for("catalog cusp_semigroup p=" + P, "");
    const unsigned levels = two ? 3 : 2;
    for (unsigned e = 1; e <= levels; ++e) {
      const std::uint64_t q = qpow(p, e);
      std::set<std::uint64_t> closed{two ? q / 2 - 1 : (q + 1) / 2, q - 1};
      const auto jumps = E->jump_set(e);
      check.equal("semigroup jumps at level " + std::to_string(e),
                  set_text(std::vector<std::uint64_t>(closed.begin(), closed.end())), set_text(jumps));
      check.equal("catalog jumps at level " + std::to_string(e), set_text(jumps), set_text(catalog->jump_set(e)));
    }
    // In characteristic 2 the candidate 1/3 survives through level 3.
    const unsigned E_roots = two ? 5 : 3;
    check.equal("roots at level " + std::to_string(E_roots),
                set_text(two ? rationals_of({"-1"}) : rationals_of({"-1", "1/2"})),
                set_text(root_values(*E, E_roots, default_denominator_bound(E_roots))));
    const unsigned E_th = 3;
    check.equal("thresholds in [0, 2] at level 3", set_text(rationals_of({"1/2", "1", "3/2", "2"})),
                set_text(threshold_values(*E, E_th, default_denominator_bound(E_th), {Rational(0), Rational(2)})));
  } else if (id == "9.8") {
    if (n < 1) throw PreconditionError("example 9.8 needs n >= 1");
    auto E = engine_for("catalog artinian_x_pow n=" + std::to_string(n) + " p=" + P, "x");
    const unsigned first = std::max(1u, E->min_level());
    for (unsigned e = first; e <= first + 2; ++e) {
      check.equal("jumps at level " + std::to_string(e), set_text(std::vector<std::uint64_t>{n}),
                  set_text(E->jump_set(e)));
    }
    const unsigned levels = default_levels(*E);
    check.equal("roots at level " + std::to_string(levels),
                set_text(std::vector<Rational>{Rational(static_cast<unsigned long>(n))}),
                set_text(root_values(*E, levels, default_denominator_bound(levels))));
    check.equal("thresholds in [0, 1] at level " + std::to_string(levels), set_text(std::vector<Rational>{Rational(0)}),
                set_text(threshold_values(*E, levels, default_denominator_bound(levels), {Rational(0), Rational(1)})));
  } else {
    throw PreconditionError("unknown example '" + id + "' (expected 9.2 .. 9.8)");
  }
  return check.take();
}

}  // namespace bsroots
