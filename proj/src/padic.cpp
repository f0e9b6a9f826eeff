#include "bsroots/padic.hpp"

#include <cctype>
#include <string>

#include "bsroots/errors.hpp"

namespace bsroots {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt prime_power(std::uint32_t p, unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  BigInt v(std::string(text.substr(i)), 10);
  return negative ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  BigInt den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

PAdicRational::PAdicRational(Rational value, std::uint32_t prime)
    : value_(std::move(value)), prime_(prime) {
  value_.canonicalize();
  if (!is_prime(prime_)) throw PreconditionError("p = " + std::to_string(prime_) + " is not prime");
  if (mpz_divisible_ui_p(value_.get_den_mpz_t(), prime_)) {
    throw PreconditionError(to_string(value_) + " is not a p-adic integer for p = " +
                            std::to_string(prime_));
  }
}

bool PAdicRational::is_negative_integer() const {
  return value_.get_den() == 1 && value_ < 0;
}

BigInt truncation(const PAdicRational& alpha, unsigned e) {
  const BigInt modulus = prime_power(alpha.prime(), e);
  if (modulus == 1) return 0;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), alpha.value().get_den_mpz_t(), modulus.get_mpz_t());
  BigInt out = alpha.value().get_num() * inv;
  mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

namespace {

void require_periodic(const PAdicRational& alpha, unsigned e) {
  if (e == 0) throw PreconditionError("closed-form truncation needs e >= 1");
  const Rational scaled = Rational(prime_power(alpha.prime(), e) - 1) * alpha.value();
  if (scaled.get_den() != 1) {
    throw PreconditionError("(p^e - 1) * " + to_string(alpha.value()) + " is not an integer for e = " +
                            std::to_string(e));
  }
}

// Both inequalities from the closed form's range argument:
//   0 <= (1 - Q)(alpha - c) + c <= Q - 1  with c = ceil(alpha), Q = p^{ae}.
bool expn_bounds_hold(const PAdicRational& alpha, const BigInt& q_ae) {
  const Rational& a = alpha.value();
  if (alpha.is_negative_integer()) return q_ae + a.get_num() >= 0;
  const BigInt c = ceil_of(a);
  const Rational value = Rational(1 - q_ae) * (a - Rational(c)) + Rational(c);
  return value >= 0 && value <= Rational(q_ae - 1);
}

}  // namespace

unsigned expn_min_multiplier(const PAdicRational& alpha, unsigned e) {
  require_periodic(alpha, e);
  for (unsigned a = 1;; ++a) {
    if (expn_bounds_hold(alpha, prime_power(alpha.prime(), a * e))) return a;
  }
}

BigInt expn_truncation(const PAdicRational& alpha, unsigned e, unsigned a) {
  const unsigned min_a = expn_min_multiplier(alpha, e);
  if (a < min_a) {
    throw PreconditionError("multiplier a = " + std::to_string(a) + " is below the valid bound " +
                            std::to_string(min_a));
  }
  const BigInt q_ae = prime_power(alpha.prime(), a * e);
  const Rational& v = alpha.value();
  if (alpha.is_negative_integer()) return q_ae + v.get_num();
  const BigInt c = ceil_of(v);
  const Rational out = Rational(1 - q_ae) * (v - Rational(c)) + Rational(c);
  return out.get_num();
}

unsigned digit(const PAdicRational& alpha, unsigned i) {
  const BigInt diff = truncation(alpha, i + 1) - truncation(alpha, i);
  const BigInt d = diff / prime_power(alpha.prime(), i);
  return static_cast<unsigned>(d.get_ui());
}

BasePFraction::BasePFraction(Rational value, std::uint32_t prime)
    : value_(std::move(value)), prime_(prime) {
  value_.canonicalize();
  if (!is_prime(prime_)) throw PreconditionError("p = " + std::to_string(prime_) + " is not prime");
  if (value_ <= 0 || value_ > 1) {
    throw PreconditionError("base-p fraction must lie in (0, 1], got " + to_string(value_));
  }
}

Rational base_truncation(const BasePFraction& lambda, unsigned e) {
  if (e == 0) return 0;
  const BigInt q = prime_power(lambda.prime(), e);
  Rational out(ceil_of(Rational(q) * lambda.value()) - 1, q);
  out.canonicalize();
  return out;
}

unsigned base_digit(const BasePFraction& lambda, unsigned e) {
  if (e == 0) return 0;
  const Rational diff = base_truncation(lambda, e) - base_truncation(lambda, e - 1);
  const Rational scaled = diff * Rational(prime_power(lambda.prime(), e));
  return static_cast<unsigned>(scaled.get_num().get_ui());
}

}  // namespace bsroots
