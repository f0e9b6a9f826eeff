#include "bsroots/frobenius.hpp"

#include <map>
#include <unordered_set>

#include "bsroots/padic.hpp"

namespace bsroots {

namespace {

constexpr double kCompositionLimit = 2e6;

std::uint64_t level_modulus(std::uint32_t p, unsigned e) { return prime_power(p, e).get_ui(); }

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) < 0; }
};

// Root coefficients of one polynomial: g = sum_mu g_mu^q x^mu.
void collect_roots(const Polynomial& g, std::uint64_t q, std::vector<Polynomial>& out) {
  const std::uint32_t p = g.prime();
  std::map<Monomial, std::vector<Term>, MonomialLess> buckets;
  for (const auto& t : g.terms()) buckets[t.mono.remainder(q)].push_back({t.mono.floor_div(q), t.coeff});
  for (auto& [mu, terms] : buckets) out.push_back(Polynomial::from_terms(p, std::move(terms)));
}

double composition_count(std::uint64_t n, std::size_t r) {
  double c = 1;
  for (std::size_t i = 1; i < r; ++i) c = c * static_cast<double>(n + i) / static_cast<double>(i);
  return c;
}

// Distinct floor(v / q) over all products of n generators.
void enumerate_roots(const std::vector<Monomial>& gens, std::size_t index, std::uint64_t left,
                     const Monomial& acc, std::uint64_t q,
                     std::unordered_set<Monomial, MonomialHash>& out) {
  if (index + 1 == gens.size()) {
    out.insert((acc * gens[index].scaled(static_cast<std::uint32_t>(left))).floor_div(q));
    return;
  }
  Monomial cur = acc;
  for (std::uint64_t k = 0; k <= left; ++k) {
    enumerate_roots(gens, index + 1, left - k, cur, q, out);
    cur = cur * gens[index];
  }
}

}  // namespace

Ideal eth_root(const Ideal& a, unsigned e) {
  const std::uint64_t q = level_modulus(a.prime(), e);
  if (q == 1) return a;
  std::vector<Polynomial> roots;
  if (a.is_monomial()) {
    std::vector<Monomial> monos;
    monos.reserve(a.generators().size());
    for (const auto& g : a.generators()) monos.push_back(g.leading_monomial().floor_div(q));
    for (const auto& m : minimal_monomials(std::move(monos))) roots.push_back(Polynomial::monomial(a.prime(), m));
    return Ideal(a.ring(), std::move(roots));
  }
  for (const auto& g : a.generators()) collect_roots(g, q, roots);
  return Ideal(a.ring(), linear_basis(roots));
}

Ideal diff_closure(const Ideal& a, unsigned e) { return frobenius_power(eth_root(a, e), e); }

Ideal cartier_preimage(const Ideal& b, unsigned e) { return frobenius_power(b, e); }

Ideal eth_root_of_power(const Ideal& a, std::uint64_t n, unsigned e) {
  if (n == 0) return Ideal::unit(a.ring());
  const std::uint64_t q = level_modulus(a.prime(), e);
  const std::size_t r = a.generators().size();
  if (r == 0) return a;
  if (q == 1) return ideal_power(a, n);
  const std::uint64_t slack = (r - 1) * (q - 1);
  if (n >= q + slack) {
    const std::uint64_t m = (n - slack) / q;
    return ideal_product(ideal_power(a, m), eth_root_of_power(a, n - m * q, e));
  }
  if (a.is_monomial() && r > 1 && composition_count(n, r) <= kCompositionLimit) {
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) gens.push_back(g.leading_monomial());
    std::unordered_set<Monomial, MonomialHash> found;
    enumerate_roots(gens, 0, n, Monomial(), q, found);
    std::vector<Polynomial> roots;
    for (const auto& m : minimal_monomials({found.begin(), found.end()})) {
      roots.push_back(Polynomial::monomial(a.prime(), m));
    }
    return Ideal(a.ring(), std::move(roots));
  }
  return eth_root(ideal_power(a, n), e);
}

}  // namespace bsroots
