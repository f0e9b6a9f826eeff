#include "bsroots/thresholds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "bsroots/errors.hpp"
#include "bsroots/frobenius.hpp"
#include "bsroots/parallel.hpp"

namespace bsroots {

namespace {

unsigned first_level(const JumpEngine& engine) { return std::max(1u, engine.min_level()); }

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw PreconditionError("value " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

std::uint64_t level_modulus(std::uint32_t p, unsigned e) {
  const BigInt q = prime_power(p, e);
  if (!q.fits_ulong_p()) throw PreconditionError("p^e does not fit in 64 bits");
  return q.get_ui();
}

unsigned valuation(BigInt n, std::uint32_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Least b >= 1 with m | p^b - 1, for m coprime to p.
unsigned period_of(const BigInt& m, std::uint32_t p) {
  if (m == 1) return 1;
  BigInt power = p % m;
  for (unsigned b = 1;; ++b) {
    if (power == 1) return b;
    power = (power * p) % m;
  }
}

struct Window {
  std::int64_t lo;
  std::int64_t hi;
};

// Integer window that must contain a jump of level e for lambda.
Window witness_window(const JumpEngine& engine, const Rational& lambda, std::uint64_t q) {
  const Rational scaled = lambda * Rational(static_cast<unsigned long>(q));
  const std::int64_t up = to_i64(ceil_of(scaled));
  const std::int64_t down = to_i64(floor_of(scaled));
  if (engine.f_split()) return {up - static_cast<std::int64_t>(engine.generator_count()), down};
  const auto slack = static_cast<std::int64_t>(threshold_slack(engine));
  return {up - slack, down + slack};
}

// Reduced fractions in [lo, hi] with denominator dividing p^c (p^b - 1),
// ordered by denominator and then value.
std::vector<Rational> threshold_candidates(std::uint32_t p, const Rational& lo, const Rational& hi, unsigned c_max,
                                           unsigned b_max) {
  std::set<Rational> found;
  for (unsigned c = 0; c <= c_max; ++c) {
    for (unsigned b = 1; b <= b_max; ++b) {
      const BigInt den = prime_power(p, c) * (prime_power(p, b) - 1);
      for (BigInt k = ceil_of(lo * Rational(den)); k <= floor_of(hi * Rational(den)); ++k) {
        Rational v(k, den);
        v.canonicalize();
        found.insert(v);
      }
    }
  }
  std::vector<Rational> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Rational& a, const Rational& b) { return a.get_den() < b.get_den(); });
  return out;
}

Rational ratio(std::uint64_t n, std::uint64_t q) {
  Rational v(BigInt(static_cast<unsigned long>(n)), BigInt(static_cast<unsigned long>(q)));
  v.canonicalize();
  return v;
}

Rational ratio_signed(std::int64_t n, std::uint64_t q) {
  Rational v(BigInt(static_cast<long>(n)), BigInt(static_cast<unsigned long>(q)));
  v.canonicalize();
  return v;
}

}  // namespace

std::uint64_t threshold_slack(const JumpEngine& engine) {
  return engine.generator_count() + engine.threshold_offset();
}

ThresholdVerdict verify_threshold(JumpEngine& engine, const Rational& lambda, unsigned E) {
  if (lambda < 0) throw PreconditionError("threshold candidates are non-negative");
  if (E < first_level(engine)) {
    throw PreconditionError("level " + std::to_string(E) + " is below the first computable level " +
                            std::to_string(first_level(engine)));
  }
  ThresholdVerdict verdict;
  auto& cert = verdict.certificate;
  cert.lambda = lambda;
  cert.c = valuation(lambda.get_den(), engine.prime());
  cert.b = period_of(lambda.get_den() / BigInt(prime_power(engine.prime(), cert.c)), engine.prime());
  for (unsigned e = first_level(engine); e <= E; ++e) {
    const std::uint64_t q = level_modulus(engine.prime(), e);
    const Window w = witness_window(engine, lambda, q);
    bool found = false;
    for (std::int64_t n = std::max<std::int64_t>(0, w.lo); n <= w.hi && !found; ++n) {
      if (engine.is_jump(e, static_cast<std::uint64_t>(n))) {
        cert.witnesses.push_back({e, static_cast<std::uint64_t>(n)});
        found = true;
      }
    }
    if (!found) {
      verdict.failed_level = e;
      return verdict;
    }
  }
  verdict.certified = true;
  cert.certified_level = E;
  return verdict;
}

Interval default_threshold_interval(const JumpEngine& engine) {
  return {Rational(0), Rational(static_cast<unsigned long>(engine.generator_count()))};
}

std::vector<ThresholdCertificate> differential_thresholds(JumpEngine& engine, unsigned E, const Interval& interval,
                                                          unsigned c_max, unsigned b_max) {
  if (b_max < 1) throw PreconditionError("denominator bound must be at least 1");
  if (interval.lo < 0 || interval.hi < interval.lo) throw PreconditionError("threshold interval must lie in [0, inf)");
  const std::uint64_t q = level_modulus(engine.prime(), E);
  const auto r = static_cast<std::int64_t>(engine.generator_count());
  const bool split = engine.f_split();
  const auto slack = static_cast<std::int64_t>(threshold_slack(engine));

  // Jumps whose nearby range can meet the interval.
  const std::int64_t reach = split ? r : slack;
  const std::int64_t lo_n = std::max<std::int64_t>(0, to_i64(ceil_of(interval.lo * Rational(q))) - reach);
  const std::int64_t hi_n = to_i64(floor_of(interval.hi * Rational(q))) + (split ? 0 : slack);
  std::vector<std::uint64_t> jumps;
  const auto window = engine.jump_set(E);
  for (auto n : window) {
    if (static_cast<std::int64_t>(n) >= lo_n && static_cast<std::int64_t>(n) <= hi_n) jumps.push_back(n);
  }
  for (auto n = static_cast<std::int64_t>(engine.window_end(E)); n <= hi_n; ++n) {
    if (n >= lo_n && engine.is_jump(E, static_cast<std::uint64_t>(n))) jumps.push_back(static_cast<std::uint64_t>(n));
  }

  std::mutex mutex;
  std::map<Rational, ThresholdVerdict> verified;
  auto verify_cached = [&](const Rational& lambda) {
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = verified.find(lambda);
      if (it != verified.end()) return it->second;
    }
    auto verdict = verify_threshold(engine, lambda, E);
    std::lock_guard<std::mutex> lock(mutex);
    return verified.emplace(lambda, std::move(verdict)).first->second;
  };

  std::vector<std::vector<ThresholdCertificate>> per_jump(jumps.size());
  parallel_for(jumps.size(), [&](std::size_t i) {
    const auto nu = static_cast<std::int64_t>(jumps[i]);
    Rational lo = split ? ratio_signed(nu, q) : ratio_signed(std::max<std::int64_t>(0, nu - slack), q);
    Rational hi = ratio_signed(nu + reach, q);
    lo = std::max(lo, interval.lo);
    hi = std::min(hi, interval.hi);
    if (hi < lo) return;
    const auto candidates = threshold_candidates(engine.prime(), lo, hi, c_max, b_max);
    std::size_t k = 0;
    while (k < candidates.size() && per_jump[i].empty()) {
      const BigInt den = candidates[k].get_den();
      for (; k < candidates.size() && candidates[k].get_den() == den; ++k) {
        const auto verdict = verify_cached(candidates[k]);
        if (verdict.certified) per_jump[i].push_back(verdict.certificate);
      }
    }
  });

  std::map<Rational, ThresholdCertificate> merged;
  for (auto& list : per_jump) {
    for (auto& cert : list) merged.emplace(cert.lambda, std::move(cert));
  }
  std::vector<ThresholdCertificate> out;
  for (auto& [lambda, cert] : merged) out.push_back(std::move(cert));
  return out;
}

FptResult fpt(JumpEngine& engine, unsigned E, unsigned b_max) {
  FptResult result;
  result.level = E;
  const auto jumps = engine.jump_set(E);
  if (jumps.empty()) return result;
  result.exists = true;
  const std::uint64_t q = level_modulus(engine.prime(), E);
  const std::uint64_t nu = jumps.front();
  const std::uint64_t r = engine.generator_count();
  if (engine.f_split()) {
    result.bracket = {ratio(nu, q), ratio(nu + r, q)};
  } else {
    const std::uint64_t slack = threshold_slack(engine);
    result.bracket = {ratio(nu > slack ? nu - slack : 0, q), ratio(nu + slack, q)};
  }
  const auto certs = differential_thresholds(engine, E, {Rational(0), result.bracket.hi}, E, b_max);
  if (!certs.empty()) result.value = certs.front();
  return result;
}

namespace {

ThresholdSequence fit_sequence(std::vector<std::uint64_t> nu, std::uint32_t p, std::size_t r) {
  ThresholdSequence seq;
  const unsigned E = static_cast<unsigned>(nu.size()) - 1;
  const std::uint64_t q = level_modulus(p, E);
  seq.bracket = {ratio(nu[E], q), ratio(nu[E] + r, q)};
  for (unsigned b = 1; 2 * b <= E && !seq.exact; ++b) {
    const BigInt pb = prime_power(p, b);
    for (unsigned s = 0; s + 2 * b <= E && !seq.exact; ++s) {
      const BigInt k1 = BigInt(static_cast<unsigned long>(nu[s + b])) - pb * static_cast<unsigned long>(nu[s]);
      const BigInt k2 = BigInt(static_cast<unsigned long>(nu[s + 2 * b])) - pb * static_cast<unsigned long>(nu[s + b]);
      if (k1 != k2) continue;
      Rational limit = (Rational(BigInt(static_cast<unsigned long>(nu[s]))) + Rational(k1, pb - 1)) /
                       Rational(prime_power(p, s));
      limit.canonicalize();
      if (limit < seq.bracket.lo || limit > seq.bracket.hi) continue;
      seq.exact = true;
      seq.limit = limit;
      seq.period = b;
      seq.start = s;
    }
  }
  seq.nu = std::move(nu);
  return seq;
}

}  // namespace

ThresholdSequence f_threshold(const Ideal& a, const Ideal& c, unsigned E) {
  std::vector<std::uint64_t> nu(E + 1);
  parallel_for(E + 1, [&](std::size_t e) { nu[e] = nu_invariant(a, c, static_cast<unsigned>(e)); });
  return fit_sequence(std::move(nu), a.prime(), a.generator_count());
}

ThresholdSequence cartier_threshold(const Ideal& a, const Ideal& c, unsigned E) {
  std::vector<std::uint64_t> nu(E + 1);
  parallel_for(E + 1, [&](std::size_t e) { nu[e] = cartier_nu_invariant(a, c, static_cast<unsigned>(e)); });
  return fit_sequence(std::move(nu), a.prime(), a.generator_count());
}

TestIdealResult test_ideal(const Ideal& a, const Rational& lambda, unsigned e_max) {
  if (lambda < 0) throw PreconditionError("lambda must be non-negative");
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  std::vector<Ideal> chain;
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = level_modulus(a.prime(), e);
    const auto n = static_cast<std::uint64_t>(to_i64(ceil_of(lambda * Rational(q))));
    chain.push_back(eth_root_of_power(a, n, e));
  }
  TestIdealResult result{chain.back(), chain, e_max, false, true};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i + 1].contains(chain[i])) result.ascending = false;
  }
  while (result.stabilization_level > 1 && chain[result.stabilization_level - 2] == chain.back()) {
    --result.stabilization_level;
  }
  // Constant on at least two levels past the point where p^e clears the
  // p-part of the denominator.
  const unsigned settled = std::max(result.stabilization_level, valuation(lambda.get_den(), a.prime()));
  result.stabilized = settled < e_max;
  return result;
}

std::vector<Rational> f_jumping_numbers(const Ideal& a, const Interval& interval, unsigned e_max, unsigned c_max,
                                        unsigned b_max) {
  if (interval.lo < 0 || interval.hi < interval.lo) throw PreconditionError("interval must lie in [0, inf)");
  if (b_max < 1) throw PreconditionError("denominator bound must be at least 1");
  std::set<Rational> grid;
  std::optional<Rational> below;
  for (unsigned c = 0; c <= c_max; ++c) {
    for (unsigned b = 1; b <= b_max; ++b) {
      const BigInt den = prime_power(a.prime(), c) * (prime_power(a.prime(), b) - 1);
      const BigInt first = ceil_of(interval.lo * Rational(den));
      for (BigInt k = first; k <= floor_of(interval.hi * Rational(den)); ++k) {
        Rational v(k, den);
        v.canonicalize();
        grid.insert(v);
      }
      if (first > 0) {
        Rational v(first - 1, den);
        v.canonicalize();
        if (!below || v > *below) below = v;
      }
    }
  }
  std::vector<Rational> points;
  if (below) points.push_back(*below);
  points.insert(points.end(), grid.begin(), grid.end());
  std::vector<std::optional<TestIdealResult>> taus(points.size());
  parallel_for(points.size(), [&](std::size_t i) { taus[i] = test_ideal(a, points[i], e_max); });
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (taus[i]->stabilized && taus[i - 1]->stabilized && taus[i]->ideal != taus[i - 1]->ideal) {
      out.push_back(points[i]);
    }
  }
  return out;
}

namespace {

bool is_integer(const Rational& v) { return v.get_den() == 1; }

bool inside(const Rational& v, const Interval& interval) { return interval.lo <= v && v <= interval.hi; }

}  // namespace

CosetReport coset_correspondence_check(const std::vector<Rational>& roots, const std::vector<Rational>& thresholds,
                                       std::size_t r, const Interval& root_interval,
                                       const Interval& threshold_interval, std::uint32_t p) {
  CosetReport report;
  const std::set<Rational> root_set(roots.begin(), roots.end());
  const std::set<Rational> threshold_set(thresholds.begin(), thresholds.end());
  const auto rr = static_cast<long>(r);

  for (const auto& alpha : roots) {
    std::vector<Rational> partners;
    if (is_integer(alpha) && alpha < 0) {
      for (long j = 1; j <= rr; ++j) partners.emplace_back(j);
    } else {
      const Rational shift = Rational(ceil_of(alpha)) - alpha;
      for (long j = 0; j < rr; ++j) partners.push_back(shift + j);
    }
    bool matched = false, any_outside = false;
    for (const auto& lambda : partners) {
      if (threshold_set.count(lambda)) matched = true;
      if (!inside(lambda, threshold_interval)) any_outside = true;
    }
    if (matched) continue;
    (any_outside ? report.cap_limited_roots : report.unmatched_roots).push_back(alpha);
  }

  for (const auto& lambda : thresholds) {
    // Part (2) concerns thresholds in Z_(p).
    if (lambda.get_den() % p == 0) continue;
    std::vector<Rational> partners;
    if (is_integer(lambda)) {
      for (long j = -rr; j <= 0; ++j) partners.emplace_back(j);
    } else {
      const Rational frac = lambda - Rational(floor_of(lambda));
      for (long j = 1 - rr; j <= 0; ++j) partners.push_back(Rational(j) - frac);
    }
    bool matched = false, any_outside = false;
    for (const auto& alpha : partners) {
      if (root_set.count(alpha)) matched = true;
      if (!inside(alpha, root_interval)) any_outside = true;
    }
    if (matched) continue;
    (any_outside ? report.cap_limited_thresholds : report.unmatched_thresholds).push_back(lambda);
  }
  report.pass = report.unmatched_roots.empty() && report.unmatched_thresholds.empty();
  return report;
}

}  // namespace bsroots
