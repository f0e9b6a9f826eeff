#include "bsroots/jumps.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "bsroots/errors.hpp"
#include "bsroots/frobenius.hpp"
#include "bsroots/padic.hpp"
#include "bsroots/parallel.hpp"

namespace bsroots {

std::string to_string(Producer producer) {
  switch (producer) {
    case Producer::Regular: return "regular";
    case Producer::Summand: return "summand";
    case Producer::Semigroup: return "semigroup";
    case Producer::Catalog: return "catalog";
  }
  return "?";
}

std::uint64_t JumpEngine::window_end(unsigned e) const { return r_ * prime_power(prime_, e).get_ui(); }

void JumpEngine::check_level(unsigned e) const {
  if (e < min_level_) {
    throw PreconditionError("level " + std::to_string(e) + " is below the first computable level " +
                            std::to_string(min_level_));
  }
  if (prime_power(prime_, e) * r_ >= BigInt(1) << 40) throw PreconditionError("level " + std::to_string(e) + " is too large");
}

std::vector<std::uint64_t> JumpEngine::jump_set(unsigned e) {
  check_level(e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = windows_.find(e); it != windows_.end()) return it->second;
  }
  auto window = compute_window(e);
  std::lock_guard lock(mutex_);
  return windows_.emplace(e, std::move(window)).first->second;
}

bool JumpEngine::is_jump(unsigned e, std::uint64_t n) {
  check_level(e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = windows_.find(e); it != windows_.end() && n < window_end(e)) {
      return std::binary_search(it->second.begin(), it->second.end(), n);
    }
    if (auto it = direct_.find({e, n}); it != direct_.end()) return it->second;
  }
  const bool jump = compute_is_jump(e, n);
  std::lock_guard lock(mutex_);
  direct_[{e, n}] = jump;
  return jump;
}

namespace {

class RegularEngine : public JumpEngine {
 public:
  RegularEngine(Ideal a, Producer producer, bool f_split)
      : JumpEngine(a.prime(), a.generator_count(), producer, f_split), a_(std::move(a)) {
    if (a_.is_zero()) throw PreconditionError("the zero ideal has no differential jumps to compute");
  }

 protected:
  std::vector<std::uint64_t> compute_window(unsigned e) override {
    const std::uint64_t end = window_end(e);
    std::vector<std::uint64_t> out;
    if (a_.is_unit()) return out;
    Ideal power = Ideal::unit(a_.ring());
    Ideal previous = power;
    for (std::uint64_t n = 0; n < end; ++n) {
      // Only the current power is kept; earlier ones are released.
      power = ideal_product(power, a_);
      Ideal current = eth_root(power, e);
      if (!current.contains(previous)) out.push_back(n);
      previous = std::move(current);
    }
    return out;
  }

  bool compute_is_jump(unsigned e, std::uint64_t n) override {
    if (a_.is_unit()) return false;
    return !eth_root_of_power(a_, n + 1, e).contains(eth_root_of_power(a_, n, e));
  }

 private:
  Ideal a_;
};

SemigroupIdeal semigroup_power(const NumericalSemigroup& s, const SemigroupIdeal& a, std::uint64_t n) {
  SemigroupIdeal result = SemigroupIdeal::unit(s);
  SemigroupIdeal base = a;
  while (n > 0) {
    if (n & 1) result = semigroup_product(s, result, base);
    n >>= 1;
    if (n > 0) base = semigroup_product(s, base, base);
  }
  return result;
}

class SemigroupEngine : public JumpEngine {
 public:
  SemigroupEngine(const SemigroupRingPresentation& ring, SemigroupIdeal a, std::size_t r)
      : JumpEngine(ring.prime, r, Producer::Semigroup, ring.semigroup.is_full()),
        s_(ring.semigroup),
        a_(std::move(a)) {
    if (a_.is_zero()) throw PreconditionError("the zero ideal has no differential jumps to compute");
  }

 protected:
  std::vector<std::uint64_t> compute_window(unsigned e) override {
    const std::uint64_t end = window_end(e);
    std::vector<std::uint64_t> out;
    SemigroupIdeal power = SemigroupIdeal::unit(s_);
    SemigroupIdeal previous = semigroup_diff_closure(s_, power, prime_, e);
    for (std::uint64_t n = 0; n < end; ++n) {
      power = semigroup_product(s_, power, a_);
      SemigroupIdeal current = semigroup_diff_closure(s_, power, prime_, e);
      if (current != previous) out.push_back(n);
      previous = std::move(current);
    }
    return out;
  }

  bool compute_is_jump(unsigned e, std::uint64_t n) override {
    const auto lower = semigroup_power(s_, a_, n);
    return semigroup_diff_closure(s_, lower, prime_, e) !=
           semigroup_diff_closure(s_, semigroup_product(s_, lower, a_), prime_, e);
  }

 private:
  NumericalSemigroup s_;
  SemigroupIdeal a_;
};

class CatalogEngine : public JumpEngine {
 public:
  explicit CatalogEngine(const CatalogPresentation& ring)
      : JumpEngine(ring.prime, 1, Producer::Catalog, ring.id == CatalogId::CrossXY), ring_(ring) {
    min_level_ = catalog_min_level(ring);
    if (ring.id == CatalogId::ArtinianXPow) threshold_offset_ = ring.n;
  }

 protected:
  std::vector<std::uint64_t> compute_window(unsigned e) override { return catalog_jump_set(ring_, e); }

  bool compute_is_jump(unsigned e, std::uint64_t n) override {
    const auto window = catalog_jump_set(ring_, e);
    if (ring_.id == CatalogId::ArtinianXPow) return n == ring_.n;
    // x and x^2 act as nonzerodivisors on the respective closed forms, which
    // are p^e-periodic.
    const std::uint64_t q = prime_power(prime_, e).get_ui();
    return std::binary_search(window.begin(), window.end(), n % q);
  }

 private:
  CatalogPresentation ring_;
};

}  // namespace

EnginePtr make_regular_engine(const Ideal& a, Producer producer, bool f_split) {
  return std::make_shared<RegularEngine>(a, producer, f_split);
}

EnginePtr make_semigroup_engine(const SemigroupRingPresentation& ring, const SemigroupIdeal& a, std::size_t r) {
  return std::make_shared<SemigroupEngine>(ring, a, r);
}

EnginePtr make_catalog_engine(const CatalogPresentation& ring) { return std::make_shared<CatalogEngine>(ring); }

EnginePtr make_engine(const RingPresentation& ring, std::string_view ideal_text) {
  if (const auto* poly = std::get_if<PolynomialRingPresentation>(&ring)) {
    return make_regular_engine(Ideal::parse(poly->ring, ideal_text));
  }
  if (const auto* sub = std::get_if<MonomialSubalgebraPresentation>(&ring)) {
    auto engine = make_regular_engine(lift_ideal(*sub, ideal_text), Producer::Summand, true);
    if (!sub->veronese_degree) engine->set_note("assumed-extensible");
    return engine;
  }
  if (const auto* sg = std::get_if<SemigroupRingPresentation>(&ring)) {
    std::size_t r = 0;
    auto a = parse_semigroup_ideal(sg->semigroup, sg->prime, ideal_text, &r);
    return make_semigroup_engine(*sg, std::move(a), r);
  }
  const auto& cat = std::get<CatalogPresentation>(ring);
  const std::string text(ideal_text);
  if (text.find_first_not_of(" \t") != std::string::npos) {
    const auto R = make_ring(cat.prime, {"x"});
    const auto given = parse_polynomial_list(*R, text);
    if (given.size() != 1 || given[0] != parse_polynomial(*R, catalog_element(cat))) {
      throw UnsupportedError("catalog ring " + catalog_name(cat.id) + " only supports the ideal (" +
                             catalog_element(cat) + ")");
    }
  }
  return make_catalog_engine(cat);
}

std::string JumpTable::to_json() const {
  nlohmann::ordered_json out;
  out["p"] = p;
  out["r"] = r;
  out["producer"] = to_string(producer);
  nlohmann::ordered_json lv = nlohmann::ordered_json::object();
  for (const auto& [e, jumps] : levels) lv[std::to_string(e)] = jumps;
  out["levels"] = lv;
  return out.dump();
}

JumpTable jump_table(JumpEngine& engine, unsigned first, unsigned last) {
  JumpTable table{engine.prime(), engine.generator_count(), engine.producer(), {}};
  if (last < first) return table;
  std::vector<std::vector<std::uint64_t>> sets(last - first + 1);
  // Highest levels are the most expensive; start them first.
  parallel_for(sets.size(), [&](std::size_t i) {
    const std::size_t k = sets.size() - 1 - i;
    sets[k] = engine.jump_set(first + static_cast<unsigned>(k));
  });
  for (std::size_t k = 0; k < sets.size(); ++k) table.levels[first + static_cast<unsigned>(k)] = std::move(sets[k]);
  return table;
}

namespace {

void require_nu_preconditions(const Ideal& a, const Ideal& c) {
  if (a.ring() != c.ring() && a.ring()->variables != c.ring()->variables) {
    throw PreconditionError("ideals live in different rings");
  }
  if (c.is_unit()) throw PreconditionError("c must be a proper ideal");
  const auto& gb = c.groebner();
  for (const auto& g : a.generators()) {
    Polynomial h = normal_form(g, gb);
    bool found = h.is_zero();
    for (int i = 0; i < 12 && !found; ++i) {
      h = normal_form(h * h, gb);
      found = h.is_zero();
    }
    if (!found) {
      throw PreconditionError("a is not contained in the radical of c (generator " + g.to_string(a.ring()->variables) +
                              " has no power up to 4096 in c)");
    }
  }
}

template <typename Contained>
std::uint64_t largest_not_contained(Contained contained) {
  // contained(n) is monotone in n and false at n = 0.
  std::uint64_t lo = 0, hi = 1;
  while (!contained(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (contained(mid)) hi = mid;
    else lo = mid;
  }
  return lo;
}

}  // namespace

std::uint64_t nu_invariant(const Ideal& a, const Ideal& c, unsigned e) {
  require_nu_preconditions(a, c);
  const Ideal target = frobenius_power(Ideal(c.ring(), c.groebner()), e);
  return largest_not_contained([&](std::uint64_t n) { return target.contains(ideal_power(a, n, e)); });
}

std::uint64_t cartier_nu_invariant(const Ideal& a, const Ideal& c, unsigned e) {
  require_nu_preconditions(a, c);
  return largest_not_contained([&](std::uint64_t n) { return c.contains(eth_root_of_power(a, n, e)); });
}

}  // namespace bsroots
