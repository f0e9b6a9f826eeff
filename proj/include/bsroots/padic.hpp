#pragma once

// Exact p-adic and base-p arithmetic on rationals.
//
// Elements of Z_(p) are stored as reduced fractions whose denominator is a
// unit mod p. Every operation is pure; values are immutable after
// construction.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bsroots {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Primality by trial division; primes in this library are word-sized.
bool is_prime(std::uint64_t n);

BigInt prime_power(std::uint32_t p, unsigned e);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

/// Parses "num/den" or "num" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);
/// Prints "num/den", omitting "/1".
std::string to_string(const Rational& q);

/// An element of Z_(p) that is also rational.
class PAdicRational {
 public:
  PAdicRational(Rational value, std::uint32_t prime);

  const Rational& value() const { return value_; }
  std::uint32_t prime() const { return prime_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_negative_integer() const;

  friend bool operator==(const PAdicRational& a, const PAdicRational& b) {
    return a.prime_ == b.prime_ && a.value_ == b.value_;
  }

 private:
  Rational value_;
  std::uint32_t prime_;
};

/// The unique n in [0, p^e) congruent to alpha mod p^e.
BigInt truncation(const PAdicRational& alpha, unsigned e);

/// Smallest multiplier a >= 1 for which the closed-form truncation of
/// expn_truncation is valid. Requires (p^e - 1) * alpha to be an integer.
unsigned expn_min_multiplier(const PAdicRational& alpha, unsigned e);

/// Closed-form truncation alpha_{<e*a} for alpha with (p^e - 1) alpha in Z:
///   (1 - p^{ae})(alpha - ceil(alpha)) + ceil(alpha)  if alpha is not a negative integer,
///   p^{ae} + alpha                                    otherwise.
/// Throws PreconditionError if (p^e - 1) alpha is not integral or a is below
/// expn_min_multiplier.
BigInt expn_truncation(const PAdicRational& alpha, unsigned e, unsigned a);

/// The i-th p-adic digit of alpha, in [0, p - 1].
unsigned digit(const PAdicRational& alpha, unsigned i);

/// A rational in (0, 1] viewed through its non-terminating base-p expansion.
class BasePFraction {
 public:
  BasePFraction(Rational value, std::uint32_t prime);
  const Rational& value() const { return value_; }
  std::uint32_t prime() const { return prime_; }

 private:
  Rational value_;
  std::uint32_t prime_;
};

/// (ceil(p^e lambda) - 1) / p^e, for e >= 1; always strictly below lambda.
Rational base_truncation(const BasePFraction& lambda, unsigned e);

/// The e-th base-p digit of lambda (non-terminating expansion), e >= 1.
unsigned base_digit(const BasePFraction& lambda, unsigned e);

}  // namespace bsroots
