#include <algorithm>
#include <unordered_map>

#include "bsroots/polyring.hpp"

namespace bsroots {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const std::uint32_t p = f.prime();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Polynomial a = f.times_term(l.quotient(f.leading_monomial()), fp::inv(f.leading_coeff(), p));
  const Polynomial b = g.times_term(l.quotient(g.leading_monomial()), fp::inv(g.leading_coeff(), p));
  return a - b;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Gebauer-Moeller pair update (Becker-Weispfenning, UPDATE).
class PairSet {
 public:
  explicit PairSet(std::vector<Polynomial>& polys) : polys_(polys) {}

  void insert(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    std::vector<CriticalPair> fresh;
    for (std::size_t g : basis_) fresh.push_back({h, g, lh.lcm(polys_[g].leading_monomial())});

    // Chain criterion within the new pairs: a pair is dropped when a pair
    // still pending, or one already kept, has an lcm dividing its lcm.
    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& c = fresh[k];
      bool dominated = false;
      if (!lh.coprime(polys_[c.j].leading_monomial())) {
        for (std::size_t t = k + 1; t < fresh.size() && !dominated; ++t) {
          dominated = fresh[t].lcm.divides(c.lcm);
        }
        for (std::size_t t = 0; t < kept.size() && !dominated; ++t) {
          dominated = kept[t].lcm.divides(c.lcm);
        }
      }
      if (!dominated) kept.push_back(c);
    }
    // Product criterion.
    std::vector<CriticalPair> accepted;
    for (const auto& c : kept) {
      if (!lh.coprime(polys_[c.j].leading_monomial())) accepted.push_back(c);
    }
    // Old pairs made redundant by h.
    std::vector<CriticalPair> survivors;
    for (const auto& c : pairs_) {
      const bool redundant = lh.divides(c.lcm) && lh.lcm(polys_[c.i].leading_monomial()) != c.lcm &&
                             lh.lcm(polys_[c.j].leading_monomial()) != c.lcm;
      if (!redundant) survivors.push_back(c);
    }
    survivors.insert(survivors.end(), accepted.begin(), accepted.end());
    pairs_ = std::move(survivors);

    std::vector<std::size_t> next;
    for (std::size_t g : basis_) {
      if (!lh.divides(polys_[g].leading_monomial())) next.push_back(g);
    }
    next.push_back(h);
    basis_ = std::move(next);
  }

  bool empty() const { return pairs_.empty(); }

  CriticalPair pop() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
      if (degrevlex_compare(it->lcm, best->lcm) < 0) best = it;
    }
    CriticalPair out = *best;
    pairs_.erase(best);
    return out;
  }

  std::vector<Polynomial> basis_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t g : basis_) out.push_back(polys_[g]);
    return out;
  }

 private:
  std::vector<Polynomial>& polys_;
  std::vector<std::size_t> basis_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const std::uint32_t p = f.prime();
  std::vector<Term> remainder;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lead = rest.terms().front();
    const Polynomial* g = find_reducer(lead.mono, basis);
    if (g == nullptr) {
      remainder.push_back(lead);
      rest = rest - Polynomial::monomial(p, lead.mono, lead.coeff);
      continue;
    }
    const std::uint32_t c = fp::mul(lead.coeff, fp::inv(g->leading_coeff(), p), p);
    rest = rest - g->times_term(lead.mono.quotient(g->leading_monomial()), c);
  }
  return Polynomial::from_terms(p, std::move(remainder));
}

std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens) {
  std::uint32_t p = 0;
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    p = g.prime();
    if (g.is_constant()) return {Polynomial::constant(p, 1)};
    polys.push_back(g.monic());
  }
  if (polys.empty()) return {};
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  std::vector<Polynomial> all;
  all.reserve(polys.size());
  PairSet pairs(all);
  for (auto& g : polys) {
    Polynomial h = normal_form(g, pairs.basis_polys());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(p, 1)};
    all.push_back(h.monic());
    pairs.insert(all.size() - 1);
  }
  while (!pairs.empty()) {
    const CriticalPair c = pairs.pop();
    Polynomial h = normal_form(s_polynomial(all[c.i], all[c.j]), pairs.basis_polys());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(p, 1)};
    all.push_back(h.monic());
    pairs.insert(all.size() - 1);
  }

  // Minimal basis, then inter-reduce tails.
  std::vector<Polynomial> basis = pairs.basis_polys();
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term lead = minimal[i].terms().front();
    const Polynomial tail = minimal[i] - Polynomial::monomial(p, lead.mono, lead.coeff);
    reduced.push_back((Polynomial::monomial(p, lead.mono, 1) + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end());
  return reduced;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) < 0; });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> kept;
  std::size_t lower_degree_end = 0;  // kept[0, lower_degree_end) have degree < current
  for (const auto& m : monos) {
    while (lower_degree_end < kept.size() && kept[lower_degree_end].degree() < m.degree()) {
      ++lower_degree_end;
    }
    bool divisible = false;
    for (std::size_t i = 0; i < lower_degree_end && !divisible; ++i) {
      divisible = kept[i].divides(m);
    }
    if (!divisible) kept.push_back(m);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

std::vector<Polynomial> linear_basis(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> rows;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    Polynomial h = f;
    bool changed = true;
    while (changed && !h.is_zero()) {
      changed = false;
      for (const auto& t : h.terms()) {
        auto it = pivot.find(t.mono);
        if (it == pivot.end()) continue;
        h = h - rows[it->second].scaled(t.coeff);
        changed = true;
        break;
      }
    }
    if (h.is_zero()) continue;
    h = h.monic();
    const Monomial& lead = h.leading_monomial();
    for (auto& row : rows) {
      for (const auto& t : row.terms()) {
        if (t.mono == lead) {
          row = row - h.scaled(t.coeff);
          break;
        }
      }
    }
    pivot.emplace(lead, rows.size());
    rows.push_back(std::move(h));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace bsroots
