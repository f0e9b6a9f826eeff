#include "bsroots/roots.hpp"

#include <algorithm>
#include <set>

#include "bsroots/errors.hpp"
#include "bsroots/parallel.hpp"

namespace bsroots {

std::vector<Rational> enumerate_candidates(std::uint32_t p, unsigned denominator_bound, const Interval& interval) {
  if (denominator_bound < 1) throw PreconditionError("denominator bound must be at least 1");
  std::set<Rational> out;
  for (unsigned b = 1; b <= denominator_bound; ++b) {
    const BigInt den = prime_power(p, b) - 1;
    const Rational lo_scaled = interval.lo * Rational(den);
    const Rational hi_scaled = interval.hi * Rational(den);
    for (BigInt k = ceil_of(lo_scaled); k <= floor_of(hi_scaled); ++k) {
      Rational v(k, den);
      v.canonicalize();
      out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

unsigned first_level(const JumpEngine& engine) { return std::max(1u, engine.min_level()); }

}  // namespace

RootVerdict verify_root_to_level(JumpEngine& engine, const Rational& alpha, unsigned E) {
  const PAdicRational a(alpha, engine.prime());
  RootVerdict verdict;
  verdict.certificate.alpha = alpha;
  if (E < first_level(engine)) {
    throw PreconditionError("level " + std::to_string(E) + " is below the first computable level " +
                            std::to_string(first_level(engine)));
  }
  for (unsigned e = first_level(engine); e <= E; ++e) {
    const std::uint64_t q = prime_power(engine.prime(), e).get_ui();
    const std::uint64_t t = truncation(a, e).get_ui();
    bool found = false;
    for (unsigned s = 0; s < engine.generator_count() && !found; ++s) {
      const std::uint64_t n = t + s * q;
      if (engine.is_jump(e, n)) {
        verdict.certificate.witnesses.push_back({e, s, n});
        found = true;
      }
    }
    if (!found) {
      verdict.failed_level = e;
      return verdict;
    }
  }
  verdict.certified = true;
  verdict.certificate.certified_level = E;
  return verdict;
}

Interval default_root_interval(const JumpEngine& engine) {
  const Rational r(static_cast<unsigned long>(engine.generator_count()));
  if (engine.f_split()) return {-r, Rational(0)};
  // The artinian catalog ring carries its root at n (recorded as the
  // threshold offset).
  const Rational widened(static_cast<unsigned long>(engine.threshold_offset()));
  return {-r, std::max(r, widened)};
}

unsigned default_levels(const JumpEngine& engine) {
  // E >= 2 * first keeps E - first >= ceil(E / 2): every candidate period up
  // to the default bound is seen over a full cycle of checked levels.
  return std::max({3u, first_level(engine) + 2, 2 * first_level(engine)});
}

unsigned default_denominator_bound(unsigned E) { return std::max(1u, (E + 1) / 2); }

std::vector<RootCertificate> bernstein_sato_roots(JumpEngine& engine, unsigned E, unsigned denominator_bound,
                                                  const Interval& interval) {
  jump_table(engine, first_level(engine), E);
  const auto candidates = enumerate_candidates(engine.prime(), denominator_bound, interval);
  std::vector<RootVerdict> verdicts(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) { verdicts[i] = verify_root_to_level(engine, candidates[i], E); });
  std::vector<RootCertificate> out;
  for (auto& v : verdicts) {
    if (v.certified) out.push_back(std::move(v.certificate));
  }
  return out;
}

AdmissibilityReport admissibility_report(JumpEngine& engine, unsigned E) {
  AdmissibilityReport report;
  const auto table = jump_table(engine, first_level(engine), E);
  for (const auto& [e, jumps] : table.levels) {
    report.counts[e] = jumps.size();
    report.bound = std::max(report.bound, jumps.size());
  }
  bool growing = report.counts.size() >= 3;
  std::size_t previous = 0;
  bool first = true;
  for (const auto& [e, count] : report.counts) {
    if (!first && count <= previous) growing = false;
    previous = count;
    first = false;
  }
  report.verdict = growing ? "growth_detected" : "consistent_with_admissible";
  return report;
}

}  // namespace bsroots
