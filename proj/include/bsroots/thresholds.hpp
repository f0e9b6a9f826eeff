#pragma once

// Differential thresholds (limits of nu_e / p^e over differential jumps),
// F-thresholds, Cartier thresholds, test ideals, F-jumping numbers, fpt,
// and the coset correspondence between roots and thresholds.
//
// On F-split presentations lambda is a threshold iff every level e has a
// jump in [p^e lambda - r, p^e lambda]; verification checks this up to a
// level E. Elsewhere the check is the definition itself: some jump within a
// fixed slack of p^e lambda at every level.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/jumps.hpp"
#include "bsroots/padic.hpp"
#include "bsroots/polyring.hpp"
#include "bsroots/roots.hpp"

namespace bsroots {

struct ThresholdWitness {
  unsigned level = 0;
  std::uint64_t jump = 0;
};

struct ThresholdCertificate {
  Rational lambda;
  /// lambda (p^b - 1) p^c is an integer; c is the p-adic valuation of the
  /// denominator and b the least admissible period.
  unsigned b = 1;
  unsigned c = 0;
  unsigned certified_level = 0;
  std::vector<ThresholdWitness> witnesses;
};

struct ThresholdVerdict {
  bool certified = false;
  unsigned failed_level = 0;
  ThresholdCertificate certificate;
};

/// Half-width of the witness window used off the F-split locus.
std::uint64_t threshold_slack(const JumpEngine& engine);

/// Checks levels max(1, min_level) .. E.
ThresholdVerdict verify_threshold(JumpEngine& engine, const Rational& lambda, unsigned E);

/// Thresholds fitted from the jumps whose nearby range meets the interval,
/// with candidate denominators p^c (p^b - 1), c <= c_max, 1 <= b <= b_max.
/// For each jump only the verified candidates of least denominator are
/// kept. Sorted ascending, restricted to the interval.
std::vector<ThresholdCertificate> differential_thresholds(JumpEngine& engine, unsigned E, const Interval& interval,
                                                          unsigned c_max, unsigned b_max);

/// [0, r], the window where every threshold has a representative up to
/// integer shifts (Skoda).
Interval default_threshold_interval(const JumpEngine& engine);

struct FptResult {
  /// False when there are no jumps at all (unit ideal).
  bool exists = false;
  /// A certified minimum; otherwise only the bracket is meaningful.
  std::optional<ThresholdCertificate> value;
  Interval bracket;
  unsigned level = 0;
};

/// Smallest certified differential threshold at level E.
FptResult fpt(JumpEngine& engine, unsigned E, unsigned b_max);

struct ThresholdSequence {
  std::vector<std::uint64_t> nu;  // nu_0 .. nu_E
  /// Set when nu_{e+b} = p^b nu_e + k holds for two consecutive instances.
  bool exact = false;
  Rational limit;
  /// [nu_E / p^E, (nu_E + r) / p^E]; the limit lies inside.
  Interval bracket;
  unsigned period = 0;
  unsigned start = 0;
};

/// F-threshold of a with respect to c: nu_e = max{n : a^n not in c^[p^e]}.
ThresholdSequence f_threshold(const Ideal& a, const Ideal& c, unsigned E);
/// Cartier threshold: nu_e = max{n : C^e a^n not in c}.
ThresholdSequence cartier_threshold(const Ideal& a, const Ideal& c, unsigned E);

struct TestIdealResult {
  Ideal ideal;
  std::vector<Ideal> chain;  // C^e a^{ceil(p^e lambda)}, e = 1 .. e_max
  /// Least e from which the chain is constant through e_max.
  unsigned stabilization_level = 0;
  /// The chain is constant on at least two levels e with p^e clearing the
  /// p-part of the denominator of lambda.
  bool stabilized = false;
  bool ascending = true;
};

TestIdealResult test_ideal(const Ideal& a, const Rational& lambda, unsigned e_max);

/// Grid points g in the interval (denominators p^c (p^b - 1)) where the
/// test ideal differs from the one at the previous grid point, both
/// stabilized. The point below the interval start is used as the first
/// comparison.
std::vector<Rational> f_jumping_numbers(const Ideal& a, const Interval& interval, unsigned e_max, unsigned c_max = 1,
                                        unsigned b_max = 1);

struct CosetReport {
  bool pass = true;
  std::vector<Rational> unmatched_roots;
  std::vector<Rational> unmatched_thresholds;
  /// Unmatched, but some admissible partner lies outside the interval
  /// that was searched.
  std::vector<Rational> cap_limited_roots;
  std::vector<Rational> cap_limited_thresholds;
};

/// Each root alpha needs a threshold lambda with alpha - ceil(alpha) + lambda
/// in {0..r-1} ({1..r} for negative integers); each threshold in Z_(p)
/// needs a root alpha with alpha + lambda - floor(lambda) in {1-r..0}
/// ({-r..0} for integers).
CosetReport coset_correspondence_check(const std::vector<Rational>& roots, const std::vector<Rational>& thresholds,
                                       std::size_t r, const Interval& root_interval,
                                       const Interval& threshold_interval, std::uint32_t p);

}  // namespace bsroots
