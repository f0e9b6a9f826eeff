#include "bsroots/rings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "bsroots/errors.hpp"
#include "bsroots/padic.hpp"

namespace bsroots {

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw PreconditionError("numerical semigroup needs at least one generator");
  std::uint64_t g = 0;
  for (auto v : gens_) {
    if (v == 0) throw PreconditionError("semigroup generators must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw PreconditionError("semigroup generators must have gcd 1 (finite conductor)");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  // The conductor is below (min generator) * (max generator).
  const std::uint64_t bound = gens_.front() * gens_.back() + 1;
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (std::uint64_t s = 1; s <= bound; ++s) {
    for (auto v : gens_) {
      if (v <= s && in[s - v]) {
        in[s] = true;
        break;
      }
    }
  }
  std::uint64_t c = bound;
  while (c > 0 && in[c - 1]) --c;
  conductor_ = c;
  member_.assign(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(c));
}

bool NumericalSemigroup::contains(std::int64_t s) const {
  if (s < 0) return false;
  const auto u = static_cast<std::uint64_t>(s);
  return u >= conductor_ || member_[u];
}

std::string NumericalSemigroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens_[i]);
  }
  return out + ">";
}

SemigroupIdeal::SemigroupIdeal(const NumericalSemigroup& s, std::vector<std::uint64_t> exponents) {
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  for (auto t : exponents) {
    if (!s.contains(static_cast<std::int64_t>(t))) {
      throw PreconditionError("exponent " + std::to_string(t) + " is not in the semigroup " + s.to_string());
    }
    bool redundant = false;
    for (auto u : exps_) {
      if (s.contains(static_cast<std::int64_t>(t - u))) {
        redundant = true;
        break;
      }
    }
    if (!redundant) exps_.push_back(t);
  }
}

bool SemigroupIdeal::contains(const NumericalSemigroup& s, std::uint64_t t) const {
  for (auto u : exps_) {
    if (u <= t && s.contains(static_cast<std::int64_t>(t - u))) return true;
  }
  return false;
}

SemigroupIdeal semigroup_product(const NumericalSemigroup& s, const SemigroupIdeal& a, const SemigroupIdeal& b) {
  std::vector<std::uint64_t> sums;
  for (auto u : a.exponents()) {
    for (auto v : b.exponents()) sums.push_back(u + v);
  }
  return SemigroupIdeal(s, std::move(sums));
}

namespace {

bool admissible_shift(const NumericalSemigroup& s, std::uint64_t m, std::int64_t d, std::uint64_t q) {
  const std::uint64_t c = s.conductor();
  const std::uint64_t bound = c + static_cast<std::uint64_t>(std::max<std::int64_t>(0, -d));
  for (std::uint64_t t = m % q; t < bound; t += q) {
    if (s.contains(static_cast<std::int64_t>(t)) && !s.contains(static_cast<std::int64_t>(t) + d)) return false;
  }
  return true;
}

}  // namespace

SemigroupIdeal semigroup_diff_closure(const NumericalSemigroup& s, const SemigroupIdeal& ideal, std::uint32_t p,
                                      unsigned e) {
  if (ideal.is_zero()) return ideal;
  const std::uint64_t q = prime_power(p, e).get_ui();
  const auto top = static_cast<std::int64_t>(s.conductor() + s.generators().back());
  std::vector<std::uint64_t> targets;
  for (auto m : ideal.exponents()) {
    const auto mi = static_cast<std::int64_t>(m);
    // Every shift d >= conductor is admissible, so shifts past
    // conductor + largest generator add nothing new.
    for (std::int64_t d = -mi; d <= top; ++d) {
      if (!s.contains(mi + d)) continue;
      if (admissible_shift(s, m, d, q)) targets.push_back(static_cast<std::uint64_t>(mi + d));
    }
  }
  return SemigroupIdeal(s, std::move(targets));
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ParseError("expected a non-negative integer for " + what + ", got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError("integer out of range for " + what + ": '" + text + "'");
  }
}

std::uint32_t checked_prime(const std::map<std::string, std::string>& kv) {
  auto it = kv.find("p");
  if (it == kv.end()) throw ParseError("ring declaration needs p=<prime>");
  const std::uint64_t p = parse_count(it->second, "p");
  if (p >= (1ull << 31) || !is_prime(p)) throw PreconditionError("p = " + it->second + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

std::vector<std::string> variable_list(const std::map<std::string, std::string>& kv) {
  auto it = kv.find("vars");
  if (it == kv.end()) throw ParseError("ring declaration needs vars=<names>");
  auto vars = split(it->second, ',');
  for (const auto& v : vars) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])) ||
        !std::all_of(v.begin(), v.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; })) {
      throw ParseError("bad variable name '" + v + "'");
    }
  }
  return vars;
}

void require_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : kv) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw ParseError("unexpected key '" + k + "' in ring declaration");
    }
  }
}

std::vector<Monomial> all_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.push_back(Monomial(exps));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      exps[i] = left - k;
      self(self, i + 1, k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace

RingPresentation parse_ring(std::string_view text) {
  const auto toks = words(text);
  if (toks.empty()) throw ParseError("empty ring declaration");
  const std::string& kind = toks[0];
  std::size_t first = 1;
  std::string catalog_id;
  if (kind == "catalog") {
    if (toks.size() < 2) throw ParseError("catalog needs an identifier");
    catalog_id = toks[1];
    first = 2;
  }
  std::map<std::string, std::string> kv;
  for (std::size_t i = first; i < toks.size(); ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }

  if (kind == "poly") {
    require_keys(kv, {"p", "vars"});
    return PolynomialRingPresentation{make_ring(checked_prime(kv), variable_list(kv))};
  }
  if (kind == "veronese") {
    require_keys(kv, {"p", "vars", "degree"});
    if (!kv.count("degree")) throw ParseError("veronese needs degree=<d>");
    const auto d = parse_count(kv.at("degree"), "degree");
    if (d == 0 || d > 64) throw PreconditionError("Veronese degree must be in [1, 64]");
    MonomialSubalgebraPresentation pres;
    pres.ambient = make_ring(checked_prime(kv), variable_list(kv));
    pres.generators = all_of_degree(pres.ambient->nvars(), static_cast<unsigned>(d));
    pres.extensible = true;
    pres.veronese_degree = static_cast<unsigned>(d);
    return pres;
  }
  if (kind == "subalgebra") {
    require_keys(kv, {"p", "vars", "gens", "extensible"});
    if (!kv.count("gens")) throw ParseError("subalgebra needs gens=<monomials>");
    MonomialSubalgebraPresentation pres;
    pres.ambient = make_ring(checked_prime(kv), variable_list(kv));
    for (const auto& g : parse_polynomial_list(*pres.ambient, kv.at("gens"))) {
      if (!g.is_monomial() || g.leading_monomial().is_one()) {
        throw PreconditionError("subalgebra generators must be nonconstant monomials");
      }
      pres.generators.push_back(g.leading_monomial());
    }
    if (kv.count("extensible")) {
      const auto& v = kv.at("extensible");
      if (v == "yes" || v == "true") pres.extensible = true;
      else if (v == "no" || v == "false") pres.extensible = false;
      else throw ParseError("extensible must be yes or no");
    }
    return pres;
  }
  if (kind == "semigroup") {
    require_keys(kv, {"p", "gens"});
    if (!kv.count("gens")) throw ParseError("semigroup needs gens=<integers>");
    std::vector<std::uint64_t> gens;
    for (const auto& g : split(kv.at("gens"), ',')) gens.push_back(parse_count(g, "semigroup generator"));
    return SemigroupRingPresentation{checked_prime(kv), NumericalSemigroup(std::move(gens))};
  }
  if (kind == "catalog") {
    CatalogPresentation pres;
    if (catalog_id == "cross_xy") {
      require_keys(kv, {"p"});
      pres.id = CatalogId::CrossXY;
    } else if (catalog_id == "cusp_semigroup") {
      require_keys(kv, {"p"});
      pres.id = CatalogId::CuspSemigroup;
    } else if (catalog_id == "artinian_x_pow") {
      require_keys(kv, {"p", "n"});
      if (!kv.count("n")) throw ParseError("artinian_x_pow needs n=<integer>");
      pres.id = CatalogId::ArtinianXPow;
      pres.n = parse_count(kv.at("n"), "n");
    } else {
      throw ParseError("unknown catalog ring '" + catalog_id + "'");
    }
    pres.prime = checked_prime(kv);
    return pres;
  }
  throw ParseError("unknown ring kind '" + kind + "'");
}

std::uint32_t prime_of(const RingPresentation& ring) {
  struct Visitor {
    std::uint32_t operator()(const PolynomialRingPresentation& r) const { return r.ring->prime; }
    std::uint32_t operator()(const MonomialSubalgebraPresentation& r) const { return r.ambient->prime; }
    std::uint32_t operator()(const SemigroupRingPresentation& r) const { return r.prime; }
    std::uint32_t operator()(const CatalogPresentation& r) const { return r.prime; }
  };
  return std::visit(Visitor{}, ring);
}

namespace {

std::string joined_vars(const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (i) out += ",";
    out += ring.variables[i];
  }
  return out;
}

}  // namespace

std::string describe(const RingPresentation& ring) {
  struct Visitor {
    std::string operator()(const PolynomialRingPresentation& r) const {
      return "poly p=" + std::to_string(r.ring->prime) + " vars=" + joined_vars(*r.ring);
    }
    std::string operator()(const MonomialSubalgebraPresentation& r) const {
      const std::string head = " p=" + std::to_string(r.ambient->prime) + " vars=" + joined_vars(*r.ambient);
      if (r.veronese_degree) return "veronese" + head + " degree=" + std::to_string(r.veronese_degree);
      std::string gens;
      for (const auto& g : r.generators) gens += (gens.empty() ? "" : ",") + g.to_string(r.ambient->variables);
      return "subalgebra" + head + " gens=" + gens + " extensible=" + (r.extensible ? "yes" : "no");
    }
    std::string operator()(const SemigroupRingPresentation& r) const {
      std::string gens;
      for (auto g : r.semigroup.generators()) gens += (gens.empty() ? "" : ",") + std::to_string(g);
      return "semigroup p=" + std::to_string(r.prime) + " gens=" + gens;
    }
    std::string operator()(const CatalogPresentation& r) const {
      std::string out = "catalog " + catalog_name(r.id);
      if (r.id == CatalogId::ArtinianXPow) out += " n=" + std::to_string(r.n);
      return out + " p=" + std::to_string(r.prime);
    }
  };
  return std::visit(Visitor{}, ring);
}

bool is_f_split(const RingPresentation& ring) {
  struct Visitor {
    bool operator()(const PolynomialRingPresentation&) const { return true; }
    bool operator()(const MonomialSubalgebraPresentation&) const { return true; }
    bool operator()(const SemigroupRingPresentation& r) const { return r.semigroup.is_full(); }
    bool operator()(const CatalogPresentation& r) const { return r.id == CatalogId::CrossXY; }
  };
  return std::visit(Visitor{}, ring);
}

bool in_subalgebra(const MonomialSubalgebraPresentation& pres, const Monomial& v) {
  if (pres.veronese_degree) return v.degree() % pres.veronese_degree == 0;
  std::unordered_map<Monomial, bool, MonomialHash> memo;
  auto rec = [&](auto&& self, const Monomial& m) -> bool {
    if (m.is_one()) return true;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : pres.generators) {
      if (g.divides(m) && self(self, m.quotient(g))) {
        ok = true;
        break;
      }
    }
    memo.emplace(m, ok);
    return ok;
  };
  return rec(rec, v);
}

Ideal lift_ideal(const MonomialSubalgebraPresentation& pres, std::string_view ideal_text) {
  if (!pres.extensible) {
    throw UnsupportedError(
        "subalgebra is not known to be level-differentially extensible; jump sets of aS would only contain "
        "those of a (pass extensible=yes to assert it)");
  }
  Ideal a = Ideal::parse(pres.ambient, ideal_text);
  for (const auto& g : a.generators()) {
    for (const auto& t : g.terms()) {
      if (!in_subalgebra(pres, t.mono)) {
        throw PreconditionError("generator " + g.to_string(pres.ambient->variables) +
                                " does not lie in the subalgebra");
      }
    }
  }
  return a;
}

SemigroupIdeal parse_semigroup_ideal(const NumericalSemigroup& s, std::uint32_t p, std::string_view text,
                                     std::size_t* generator_count) {
  const auto ring = make_ring(p, {"x"});
  const auto gens = parse_polynomial_list(*ring, text);
  std::vector<std::uint64_t> exps;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) {
      throw UnsupportedError("the semigroup engine handles monomial ideals only, got " + g.to_string(ring->variables));
    }
    exps.push_back(g.leading_monomial()[0]);
  }
  if (generator_count) *generator_count = gens.size();
  return SemigroupIdeal(s, std::move(exps));
}

std::string catalog_name(CatalogId id) {
  switch (id) {
    case CatalogId::CrossXY: return "cross_xy";
    case CatalogId::CuspSemigroup: return "cusp_semigroup";
    case CatalogId::ArtinianXPow: return "artinian_x_pow";
  }
  return "?";
}

std::string catalog_element(const CatalogPresentation& pres) {
  return pres.id == CatalogId::CuspSemigroup ? "x^2" : "x";
}

unsigned catalog_min_level(const CatalogPresentation& pres) {
  if (pres.id != CatalogId::ArtinianXPow) return 1;
  unsigned e = 1;
  while (prime_power(pres.prime, e) <= pres.n) ++e;
  return e;
}

std::vector<std::uint64_t> catalog_jump_set(const CatalogPresentation& pres, unsigned e) {
  const std::uint64_t q = prime_power(pres.prime, e).get_ui();
  switch (pres.id) {
    case CatalogId::CrossXY:
      // D^(e) x^{aq+j} is (x^{aq}) for j = 0 and (x^{aq+1}) for 0 < j < q.
      return q == 1 ? std::vector<std::uint64_t>{0} : std::vector<std::uint64_t>{0, q - 1};
    case CatalogId::CuspSemigroup:
      if (pres.prime == 2) return {q / 2 - 1, q - 1};
      // At q = 3 both branches name the same jump.
      if (q == 3) return {2};
      return {(q + 1) / 2, q - 1};
    case CatalogId::ArtinianXPow:
      if (e < catalog_min_level(pres)) {
        throw PreconditionError("the closed form for K[x]/(x^{n+1}) needs p^e > n; level " + std::to_string(e) +
                                " is too small");
      }
      return {pres.n};
  }
  return {};
}

}  // namespace bsroots
