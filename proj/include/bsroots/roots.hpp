#pragma once

// Bernstein-Sato root detection. A rational alpha in Z_(p) is a root when,
// at every level e, alpha_{<e} + s p^e is a differential jump for some
// s in {0, ..., r - 1}. A failure at one level is a failure at all higher
// levels, so refutations are proofs; survivors are certified only up to the
// level checked.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/jumps.hpp"
#include "bsroots/padic.hpp"

namespace bsroots {

struct RootWitness {
  unsigned level = 0;
  unsigned s = 0;
  std::uint64_t jump = 0;  // truncation + s p^e
};

struct RootCertificate {
  Rational alpha;
  unsigned certified_level = 0;
  std::vector<RootWitness> witnesses;
};

struct RootVerdict {
  bool certified = false;
  /// First level without a witness; 0 when certified.
  unsigned failed_level = 0;
  RootCertificate certificate;
};

struct Interval {
  Rational lo;
  Rational hi;
};

/// Reduced fractions in [lo, hi] with (p^b - 1) alpha integral for some
/// 1 <= b <= denominator_bound, sorted ascending.
std::vector<Rational> enumerate_candidates(std::uint32_t p, unsigned denominator_bound, const Interval& interval);

/// Checks levels max(1, min_level) .. E.
RootVerdict verify_root_to_level(JumpEngine& engine, const Rational& alpha, unsigned E);

/// [-r, 0] for F-split presentations; otherwise [-r, r], widened to n for
/// K[x]/(x^{n+1}) whose root sits at n.
Interval default_root_interval(const JumpEngine& engine);

/// Default verification level: 3, raised so that at least three levels are
/// checked when the engine starts above level 1, and to twice the first
/// level so that the checked levels cover a full period of every default
/// candidate.
unsigned default_levels(const JumpEngine& engine);

/// Default candidate denominator bound: ceil(E / 2).
unsigned default_denominator_bound(unsigned E);

/// Every enumerated candidate that survives verification to level E.
std::vector<RootCertificate> bernstein_sato_roots(JumpEngine& engine, unsigned E, unsigned denominator_bound,
                                                  const Interval& interval);

struct AdmissibilityReport {
  std::map<unsigned, std::size_t> counts;  // jumps in [0, r p^e)
  std::size_t bound = 0;                   // largest count seen
  /// "consistent_with_admissible" or "growth_detected".
  std::string verdict;
};

/// Jump counts per level; growth is flagged when the count strictly
/// increases at every step over at least three levels.
AdmissibilityReport admissibility_report(JumpEngine& engine, unsigned E);

}  // namespace bsroots
