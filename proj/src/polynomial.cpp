#include <algorithm>
#include <unordered_map>

#include "bsroots/errors.hpp"
#include "bsroots/polyring.hpp"

namespace bsroots {

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (n > 0) {
    if (n & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    n >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw PreconditionError("division by zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

std::uint32_t from_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

Monomial::Monomial(const std::vector<std::uint32_t>& exps) {
  if (exps.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t i, std::uint32_t power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t v) {
  degree_ = degree_ - exps_[i] + v;
  exps_[i] = v;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

Monomial Monomial::scaled(std::uint32_t factor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = exps_[i] * factor;
  out.degree_ = degree_ * factor;
  return out;
}

Monomial Monomial::floor_div(std::uint64_t q) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = static_cast<std::uint32_t>(exps_[i] / q);
    out.degree_ += out.exps_[i];
  }
  return out;
}

Monomial Monomial::remainder(std::uint64_t q) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = static_cast<std::uint32_t>(exps_[i] % q);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : m.exponents()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

Polynomial Polynomial::constant(std::uint32_t prime, std::int64_t c) {
  return monomial(prime, Monomial(), fp::from_signed(c, prime));
}

Polynomial Polynomial::monomial(std::uint32_t prime, const Monomial& m, std::uint32_t c) {
  Polynomial out(prime);
  if (c % prime != 0) out.terms_.push_back({m, c % prime});
  return out;
}

Polynomial Polynomial::from_terms(std::uint32_t prime, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; });
  Polynomial out(prime);
  for (auto& t : terms) {
    const std::uint32_t c = t.coeff % prime;
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = fp::add(out.terms_.back().coeff, c, prime);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.push_back({t.mono, c});
    }
  }
  return out;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

// Merge of two descending term lists; sign selects addition or subtraction.
Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  const std::uint32_t p = a.prime() != 0 ? a.prime() : b.prime();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    int cmp;
    if (i == a.terms().end()) {
      cmp = -1;
    } else if (j == b.terms().end()) {
      cmp = 1;
    } else {
      cmp = degrevlex_compare(i->mono, j->mono);
    }
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({j->mono, subtract ? fp::neg(j->coeff, p) : j->coeff});
      ++j;
    } else {
      const std::uint32_t c = subtract ? fp::sub(i->coeff, j->coeff, p) : fp::add(i->coeff, j->coeff, p);
      if (c != 0) out.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_terms(p, std::move(out));
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const { return merge(*this, other, false); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return merge(*this, other, true); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  const std::uint32_t p = prime_ != 0 ? prime_ : other.prime_;
  if (is_zero() || other.is_zero()) return Polynomial(p);
  if (other.size() == 1) return times_term(other.terms_[0].mono, other.terms_[0].coeff);
  if (size() == 1) return other.times_term(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(size() * other.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      auto& c = acc[s.mono * t.mono];
      c = fp::add(c, fp::mul(s.coeff, t.coeff, p), p);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return from_terms(p, std::move(terms));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= prime_;
  Polynomial out(prime_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = fp::mul(t.coeff, c, prime_);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  c %= prime_;
  Polynomial out(prime_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, fp::mul(t.coeff, c, prime_)});
  return out;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(prime_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(unsigned e) const {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= prime_;
  Polynomial out(prime_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono.scaled(q), t.coeff});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(fp::inv(leading_coeff(), prime_));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int cmp = degrevlex_compare(a.terms_[i].mono, b.terms_[i].mono);
    if (cmp != 0) return cmp > 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() > b.terms_.size();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += t.mono.to_string(names);
    } else {
      out += std::to_string(t.coeff) + "*" + t.mono.to_string(names);
    }
  }
  return out;
}

}  // namespace bsroots
