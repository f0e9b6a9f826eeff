#include <mutex>

#include "bsroots/padic.hpp"
#include "bsroots/polyring.hpp"

namespace bsroots {

struct Ideal::Data {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::size_t r = 0;
  bool monomial = true;
  mutable std::once_flag gb_once;
  mutable std::vector<Polynomial> gb;
};

namespace {

std::vector<Monomial> monomials_of(const std::vector<Polynomial>& polys) {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& f : polys) {
    if (!f.is_zero()) out.push_back(f.leading_monomial());
  }
  return out;
}

std::vector<Polynomial> as_polynomials(std::uint32_t p, const std::vector<Monomial>& monos) {
  std::vector<Polynomial> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(Polynomial::monomial(p, m));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : Ideal(ring, generators, generators.size()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, std::size_t declared_r)
    : data_(std::make_shared<Data>()) {
  data_->ring = std::move(ring);
  data_->r = declared_r;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) data_->monomial = false;
    data_->gens.push_back(std::move(g));
  }
}

const RingPtr& Ideal::ring() const { return data_->ring; }
std::uint32_t Ideal::prime() const { return data_->ring->prime; }
const std::vector<Polynomial>& Ideal::generators() const { return data_->gens; }
std::size_t Ideal::generator_count() const { return data_->r; }
bool Ideal::is_monomial() const { return data_->monomial; }

Ideal Ideal::unit(RingPtr ring) {
  const std::uint32_t p = ring->prime;
  return Ideal(std::move(ring), {Polynomial::constant(p, 1)});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::parse(RingPtr ring, std::string_view text) {
  auto gens = parse_polynomial_list(*ring, text);
  const std::size_t r = gens.size();
  return Ideal(std::move(ring), std::move(gens), r);
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(data_->gb_once, [this] {
    if (data_->monomial) {
      data_->gb = as_polynomials(prime(), minimal_monomials(monomials_of(data_->gens)));
      for (auto& g : data_->gb) g = g.monic();
    } else {
      data_->gb = reduced_groebner(data_->gens);
    }
  });
  return data_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const auto& gb = groebner();
  if (gb.empty()) return false;
  if (data_->monomial) {
    for (const auto& t : f.terms()) {
      bool divisible = false;
      for (const auto& g : gb) {
        if (g.leading_monomial().divides(t.mono)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) return false;
    }
    return true;
  }
  return normal_form(f, gb).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return data_->gens.empty(); }

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.data_ == b.data_) return true;
  return a.prime() == b.prime() && a.groebner() == b.groebner();
}

std::string Ideal::to_string() const {
  const auto& gb = groebner();
  if (gb.empty()) return "0";
  std::string out;
  for (const auto& g : gb) {
    if (!out.empty()) out += ", ";
    out += g.to_string(ring()->variables);
  }
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const std::uint32_t p = a.prime();
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial> prods;
    prods.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators()) prods.push_back(f.leading_monomial() * g.leading_monomial());
    }
    return Ideal(a.ring(), as_polynomials(p, minimal_monomials(std::move(prods))));
  }
  std::vector<Polynomial> prods;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) prods.push_back(f * g);
  }
  return Ideal(a.ring(), linear_basis(prods));
}

Ideal frobenius_power(const Ideal& a, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.frobenius(e));
  return Ideal(a.ring(), std::move(gens));
}

namespace {

Ideal plain_power(const Ideal& a, std::uint64_t n) {
  Ideal result = Ideal::unit(a.ring());
  Ideal base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : ideal_product(result, base);
      first = false;
    }
    n >>= 1;
    if (n > 0) base = ideal_product(base, base);
  }
  return result;
}

}  // namespace

Ideal ideal_power(const Ideal& a, std::uint64_t n, unsigned e_hint) {
  if (n == 0) return Ideal::unit(a.ring());
  if (e_hint > 0 && !a.generators().empty()) {
    const std::uint64_t q = prime_power(a.prime(), e_hint).get_ui();
    const std::uint64_t r = a.generators().size();
    const std::uint64_t slack = (r - 1) * (q - 1);
    if (n >= q + slack) {
      const std::uint64_t m = (n - slack) / q;
      return ideal_product(plain_power(a, n - m * q), frobenius_power(plain_power(a, m), e_hint));
    }
  }
  return plain_power(a, n);
}

PowerChain::PowerChain(Ideal base) : base_(std::move(base)) {
  powers_.push_back(Ideal::unit(base_.ring()));
}

const Ideal& PowerChain::power(std::uint64_t n) {
  while (powers_.size() <= n) powers_.push_back(ideal_product(powers_.back(), base_));
  return powers_[n];
}

}  // namespace bsroots
