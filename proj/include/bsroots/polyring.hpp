#pragma once

// Sparse polynomials over F_p, ideals with cached reduced Groebner bases,
// ideal powers and Frobenius powers. The term order is degrevlex with the
// variable order of the ring declaration.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bsroots {

constexpr std::size_t kMaxVariables = 8;

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t pow(std::uint32_t a, std::uint64_t n, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduces a signed integer into [0, p).
std::uint32_t from_signed(std::int64_t v, std::uint32_t p);

}  // namespace fp

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<std::uint32_t>& exps);

  static Monomial variable(std::size_t i, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::array<std::uint32_t, kMaxVariables>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to be false only in debug; callers check first.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial scaled(std::uint32_t factor) const;
  /// Componentwise floor division by q and remainder mod q.
  Monomial floor_div(std::uint64_t q) const;
  Monomial remainder(std::uint64_t q) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void set(std::size_t i, std::uint32_t v);

  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint64_t degree_ = 0;
};

/// Degree reverse lexicographic comparison: negative, zero or positive.
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::uint32_t prime) : prime_(prime) {}

  static Polynomial constant(std::uint32_t prime, std::int64_t c);
  static Polynomial monomial(std::uint32_t prime, const Monomial& m, std::uint32_t c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(std::uint32_t prime, std::vector<Term> terms);

  std::uint32_t prime() const { return prime_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  Polynomial pow(std::uint64_t n) const;
  /// f^{p^e}: exponents multiplied by p^e, coefficients unchanged.
  Polynomial frobenius(unsigned e) const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  /// Deterministic total order (leading terms first) for canonical lists.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::uint32_t prime_ = 0;
  std::vector<Term> terms_;  // strictly descending degrevlex
};

struct PolyRing {
  std::uint32_t prime = 2;
  std::vector<std::string> variables;

  std::size_t nvars() const { return variables.size(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t prime, std::vector<std::string> variables);

/// Parses `x^2*y*z + 3*x` style text over the ring. Throws ParseError.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);
/// Comma-separated polynomials.
std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text);

class Ideal {
 public:
  /// r defaults to the number of supplied generators.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  Ideal(RingPtr ring, std::vector<Polynomial> generators, std::size_t declared_r);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  static Ideal parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const;
  std::uint32_t prime() const;
  const std::vector<Polynomial>& generators() const;
  /// The declared count r (sizes the window [0, r p^e)).
  std::size_t generator_count() const;
  bool is_monomial() const;

  /// Reduced Groebner basis, monic and sorted descending; computed once.
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  /// Generators of the reduced basis, as text.
  std::string to_string() const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

/// Reduced Groebner basis of the given polynomials (Buchberger with the
/// Gebauer-Moeller criteria).
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens);
/// Fully reduces f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
/// Minimal generators of a monomial ideal, sorted descending.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monos);
/// Row-reduced basis of the F_p-span of the polynomials; same ideal.
std::vector<Polynomial> linear_basis(const std::vector<Polynomial>& polys);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal frobenius_power(const Ideal& a, unsigned e);
/// a^n, with a^0 = (1). When n >= m p^e + (r - 1)(p^e - 1) for the largest
/// such m >= 1, a^n is assembled as a^{n - m p^e} (a^m)^{[p^e]}.
Ideal ideal_power(const Ideal& a, std::uint64_t n, unsigned e_hint = 0);

/// Successive powers a^0, a^1, ... by multiplying by a each step.
class PowerChain {
 public:
  explicit PowerChain(Ideal base);
  const Ideal& base() const { return base_; }
  /// a^n, extending the chain as needed.
  const Ideal& power(std::uint64_t n);

 private:
  Ideal base_;
  std::vector<Ideal> powers_;
};

}  // namespace bsroots
