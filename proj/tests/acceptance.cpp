// Acceptance run: one PASS/FAIL line per criterion, each with its time
// limit. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "bsroots/cli.hpp"
#include "bsroots/errors.hpp"
#include "bsroots/frobenius.hpp"
#include "bsroots/thresholds.hpp"
#include "oracles.hpp"

using namespace bsroots;

namespace {

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) messages_.push_back(what);
  }
  bool empty() const { return messages_.empty(); }
  std::string summary() const {
    std::string out = messages_.front();
    if (messages_.size() > 1) out += " (+" + std::to_string(messages_.size() - 1) + " more)";
    return out;
  }

 private:
  std::vector<std::string> messages_;
};

using Values = std::vector<Rational>;

std::string show(const Values& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
  return out + "}";
}

std::string show(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + "}";
}

Values vals(std::initializer_list<const char*> texts) {
  Values out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  std::sort(out.begin(), out.end());
  return out;
}

EnginePtr engine(const std::string& ring, const std::string& ideal) { return make_engine(parse_ring(ring), ideal); }

Values roots_of(JumpEngine& E, unsigned levels, unsigned B) {
  Values out;
  for (const auto& c : bernstein_sato_roots(E, levels, B, default_root_interval(E))) out.push_back(c.alpha);
  return out;
}

Values thresholds_of(JumpEngine& E, unsigned levels, unsigned B, const Interval& cap) {
  Values out;
  for (const auto& c : differential_thresholds(E, levels, cap, levels, B)) out.push_back(c.lambda);
  return out;
}

void expect_values(Failures& f, const std::string& what, const Values& expected, const Values& actual) {
  f.expect(expected == actual, what + ": got " + show(actual) + ", expected " + show(expected));
}

std::uint64_t qpow(std::uint32_t p, unsigned e) { return oracle::ipow(p, e); }

// (1) Veronese square of the maximal ideal.
void veronese(Failures& f, std::string& info) {
  for (std::uint32_t p : {3u, 5u}) {
    const std::string P = std::to_string(p);
    auto S = make_regular_engine(Ideal::parse(make_ring(p, {"x", "y"}), "x^2, x*y, y^2"));
    auto R = engine("veronese p=" + P + " vars=x,y degree=2", "x^2, x*y, y^2");
    for (unsigned e = 1; e <= 2; ++e) {
      const std::uint64_t q = qpow(p, e);
      std::set<std::uint64_t> closed;
      for (std::uint64_t b = 1; b * q - 1 < 3 * q; ++b) closed.insert(b * q - 1);
      for (std::uint64_t c = 1; ((2 * c + 1) * q - 3) / 2 < 3 * q; ++c) closed.insert(((2 * c + 1) * q - 3) / 2);
      const std::vector<std::uint64_t> want(closed.begin(), closed.end());
      f.expect(S->jump_set(e) == want, "p=" + P + " e=" + std::to_string(e) + " jumps " + show(S->jump_set(e)));
      f.expect(R->jump_set(e) == want, "p=" + P + " e=" + std::to_string(e) + " summand jumps");
    }
    for (auto* E : {S.get(), R.get()}) {
      expect_values(f, "p=" + P + " roots", vals({"-3/2", "-1"}), roots_of(*E, 2, 1));
      expect_values(f, "p=" + P + " thresholds", vals({"1", "3/2", "2", "5/2", "3"}),
                    thresholds_of(*E, 2, 1, {Rational(0), Rational(3)}));
    }
  }
  info = "p in {3,5}, E=2, polynomial and summand engines";
}

// (2) Example 9.2 at p = 5.
void monomial_triple(Failures& f, std::string& info) {
  const auto R = make_ring(5, {"x", "y", "z"});
  const Ideal a = Ideal::parse(R, "x^2*y*z, x*y^2*z, x*y*z^2");
  const Ideal xyz = Ideal::parse(R, "x*y*z");
  for (const char* lambda : {"1", "5/4", "29/20"}) {
    const auto t = test_ideal(a, parse_rational(lambda), 4);
    f.expect(t.stabilized && t.ideal == xyz, std::string("tau at ") + lambda + " = " + t.ideal.to_string());
  }
  const auto t = test_ideal(a, Rational(3, 2), 4);
  f.expect(t.stabilized && t.ideal != xyz, "tau at 3/2 = " + t.ideal.to_string());
  auto E = make_regular_engine(a);
  f.expect(verify_root_to_level(*E, Rational(-5, 4), 2).certified, "-5/4 not certified at level 2");
  const auto fjn = f_jumping_numbers(a, {Rational(1), Rational(3, 2)}, 4);
  f.expect(std::find(fjn.begin(), fjn.end(), Rational(5, 4)) == fjn.end(), "5/4 reported as F-jumping number");
  info = "F-jumping numbers in [1, 3/2]: " + show(fjn);
}

// (3) Example 9.4 memberships at p = 13.
void thirteenth_roots(Failures& f, std::string& info) {
  const auto S = make_ring(13, {"x", "y"});
  const Ideal g = Ideal::parse(S, "x^4 + y^6");
  f.expect(eth_root_of_power(g, 7, 1).contains(parse_polynomial(*S, "y")), "y not in C(f^7)");
  f.expect(eth_root_of_power(g, 8, 1).contains(parse_polynomial(*S, "x")), "x not in C(f^8)");
  f.expect(eth_root_of_power(g, 9, 1).contains(parse_polynomial(*S, "y^2")), "y^2 not in C(f^9)");
  // The same memberships through the explicit powers.
  f.expect(eth_root(ideal_power(g, 7), 1).contains(parse_polynomial(*S, "y")), "explicit power: y");
  f.expect(eth_root(ideal_power(g, 8), 1).contains(parse_polynomial(*S, "x")), "explicit power: x");
  f.expect(eth_root(ideal_power(g, 9), 1).contains(parse_polynomial(*S, "y^2")), "explicit power: y^2");
  info = "y, x, y^2 in C(f^7), C(f^8), C(f^9)";
}

// Jumps of x^2 in K[S] straight from the closure operator.
std::vector<std::uint64_t> closure_jumps(const NumericalSemigroup& S, std::uint32_t p, unsigned e) {
  const std::uint64_t q = qpow(p, e);
  std::vector<std::uint64_t> out;
  SemigroupIdeal prev = semigroup_diff_closure(S, SemigroupIdeal::unit(S), p, e);
  for (std::uint64_t n = 0; n < q; ++n) {
    SemigroupIdeal next = semigroup_diff_closure(S, SemigroupIdeal(S, {2 * (n + 1)}), p, e);
    if (next != prev) out.push_back(n);
    prev = std::move(next);
  }
  return out;
}

// (4) Examples 9.5 - 9.8.
void singular_rings(Failures& f, std::string& info) {
  const NumericalSemigroup S({2, 3});
  for (std::uint32_t p : {3u, 5u}) {
    for (unsigned e = 1; e <= 2; ++e) {
      const std::uint64_t q = qpow(p, e);
      std::set<std::uint64_t> want{(q + 1) / 2, q - 1};
      f.expect(closure_jumps(S, p, e) == std::vector<std::uint64_t>(want.begin(), want.end()),
               "9.6 p=" + std::to_string(p) + " e=" + std::to_string(e) + " jumps " + show(closure_jumps(S, p, e)));
    }
  }
  for (unsigned e = 1; e <= 3; ++e) {
    const std::uint64_t q = qpow(2, e);
    f.expect(closure_jumps(S, 2, e) == std::vector<std::uint64_t>{q / 2 - 1, q - 1},
             "9.7 e=" + std::to_string(e) + " jumps " + show(closure_jumps(S, 2, e)));
  }
  for (std::uint32_t p : {3u, 5u}) {
    auto E = engine("semigroup p=" + std::to_string(p) + " gens=2,3", "x^2");
    expect_values(f, "9.6 p=" + std::to_string(p) + " roots", vals({"-1", "1/2"}), roots_of(*E, 3, 2));
  }
  auto two = engine("semigroup p=2 gens=2,3", "x^2");
  expect_values(f, "9.7 roots", vals({"-1"}), roots_of(*two, 5, 3));
  auto cross = engine("catalog cross_xy p=3", "");
  expect_values(f, "9.5 roots", vals({"-1", "0"}), roots_of(*cross, 3, 2));
  auto art = engine("catalog artinian_x_pow n=4 p=3", "x");
  const unsigned levels = default_levels(*art);
  expect_values(f, "9.8 roots", vals({"4"}), roots_of(*art, levels, default_denominator_bound(levels)));
  info = "closure jumps p in {2,3,5}; roots at E=3 (9.5, 9.6), E=5 (9.7), E=" + std::to_string(levels) + " (9.8)";
}

// (5) (x) in F_p[x].
void principal(Failures& f, std::string& info) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::string P = std::to_string(p);
    auto E = engine("poly p=" + P + " vars=x", "x");
    expect_values(f, "p=" + P + " roots", vals({"-1"}), roots_of(*E, 3, 2));
    expect_values(f, "p=" + P + " thresholds", vals({"1", "2", "3"}), thresholds_of(*E, 3, 2, {Rational(0), Rational(3)}));
    const auto r = fpt(*E, 3, 2);
    f.expect(r.value && r.value->lambda == 1, "p=" + P + " fpt");
  }
  info = "p in {2,3,5}, E=3";
}

// (6) Every monomial ideal of F_2[x,y] with exponents <= 3.
void monomial_oracle(Failures& f, std::string& info) {
  const auto R = make_ring(2, {"x", "y"});
  std::vector<Monomial> grid;
  for (std::uint32_t i = 0; i <= 3; ++i) {
    for (std::uint32_t j = 0; j <= 3; ++j) grid.push_back(Monomial::variable(0, i) * Monomial::variable(1, j));
  }
  auto divides = [](const Monomial& a, const Monomial& b) { return a.divides(b); };
  int ideals = 0;
  for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (mask >> k & 1) gens.push_back(grid[k]);
    }
    bool antichain = true;
    for (std::size_t a = 0; a < gens.size() && antichain; ++a) {
      for (std::size_t b = 0; b < gens.size() && antichain; ++b) antichain = a == b || !divides(gens[a], gens[b]);
    }
    if (!antichain) continue;
    ++ideals;
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial::monomial(2, m));
    const Ideal a(R, polys);
    auto E = make_regular_engine(a);
    for (unsigned e = 1; e <= 2; ++e) {
      const auto want = oracle::monomial_jump_set(gens, 2, e, 2);
      f.expect(E->jump_set(e) == std::vector<std::uint64_t>(want.begin(), want.end()),
               a.to_string() + " e=" + std::to_string(e));
    }
  }
  info = std::to_string(ideals) + " monomial ideals, e in {1,2}";
}

// (7) Property suite on random inputs.
Ideal random_ideal(std::mt19937_64& rng, const RingPtr& R, std::size_t count, std::uint64_t degree) {
  std::vector<Polynomial> gens;
  while (gens.size() < count) {
    auto g = oracle::random_polynomial(rng, R->prime, R->nvars(), degree, 3);
    if (!g.is_zero() && !g.is_constant()) gens.push_back(g);
  }
  return Ideal(R, gens);
}

void properties(Failures& f, std::string& info) {
  std::mt19937_64 rng(2024);
  const std::uint32_t primes[] = {2, 3, 5};
  int cases = 0;
  auto ring_for = [&](int i, std::size_t nvars) {
    const std::uint32_t p = primes[i % 3];
    return nvars == 1 ? make_ring(p, {"x"}) : make_ring(p, {"x", "y"});
  };

  // Frobenius-root adjunction: C^e a in b iff a in b^[p^e].
  for (int i = 0; i < 50; ++i, ++cases) {
    const auto R = ring_for(i, 1 + i % 2);
    const Ideal a = random_ideal(rng, R, 2, 4), b = random_ideal(rng, R, 2, 2);
    f.expect(b.contains(eth_root(a, 1)) == frobenius_power(b, 1).contains(a), "adjunction " + a.to_string());
  }
  // C^e (b^[p^e]) = b.
  for (int i = 0; i < 30; ++i, ++cases) {
    const auto R = ring_for(i, 1 + i % 2);
    const Ideal b = random_ideal(rng, R, 2, 4);
    const unsigned e = R->prime == 5 ? 1 : 2;
    f.expect(eth_root(frobenius_power(b, e), e) == b, "root of Frobenius power " + b.to_string());
  }
  // Jump-set structure and threshold certificates on random ideals.
  for (int i = 0; i < 30; ++i, ++cases) {
    const std::uint32_t p = primes[i % 3];
    // Two-generator ideals in two variables for p = 2, 3; principal for p = 5.
    const auto R = p == 5 ? ring_for(i, 1 + (i / 3) % 2) : ring_for(i, 2);
    const Ideal a = random_ideal(rng, R, p == 5 ? 1 : 1 + i % 2, p == 5 ? 4 : 3);
      auto E = make_regular_engine(a);
    const std::uint64_t r = a.generator_count();
    const unsigned top = p == 5 ? 2 : 3;
    for (unsigned e = 1; e < top; ++e) {
      const std::uint64_t q = qpow(p, e);
      for (auto n : E->jump_set(e + 1)) f.expect(E->is_jump(e, n), "nesting " + a.to_string());
      for (std::uint64_t n = r * (q - 1) + 1; n < r * q + q; ++n) {
        if (E->is_jump(e, n)) f.expect(E->is_jump(e, n - q), "subtraction " + a.to_string());
      }
      for (auto n : E->jump_set(e)) {
        bool hit = false;
        for (std::uint64_t m = n * p; m <= n * p + r * (p - 1) && !hit; ++m) hit = E->is_jump(e + 1, m);
        f.expect(hit, "propagation " + a.to_string() + " n=" + std::to_string(n));
      }
    }
    for (const auto& c : differential_thresholds(*E, top, {Rational(0), Rational(r + 1)}, top, 1)) {
      if (c.lambda > Rational(r)) f.expect(verify_threshold(*E, c.lambda - 1, top).certified, "Skoda " + a.to_string());
      f.expect(verify_threshold(*E, c.lambda * p, top - 1).certified, "times p " + a.to_string());
    }
  }
  // Test ideals decrease in lambda.
  for (int i = 0; i < 30; ++i, ++cases) {
    const auto R = ring_for(i, 1 + i % 2);
    const Ideal a = random_ideal(rng, R, 1, 3);
    std::uniform_int_distribution<int> num(0, 8);
    Rational l1(num(rng), 4), l2(num(rng), 4);
    l1.canonicalize();
    l2.canonicalize();
    if (l2 < l1) std::swap(l1, l2);
    f.expect(test_ideal(a, l1, 2).ideal.contains(test_ideal(a, l2, 2).ideal), "tau monotone " + a.to_string());
  }
  // Closed-form truncation against modular inverses and exhaustive search.
  for (int i = 0; i < 70; ++i, ++cases) {
    const std::uint32_t p = primes[i % 3];
    const unsigned e = 1 + i % 2;
    const auto period = static_cast<std::int64_t>(qpow(p, e)) - 1;
    std::uniform_int_distribution<std::int64_t> k(-4 * period, 4 * period);
    std::int64_t num = k(rng), den = period;
    const PAdicRational alpha(Rational(num, den), p);
    const unsigned m0 = expn_min_multiplier(alpha, e);
    for (unsigned m = m0; m <= m0 + 1; ++m) {
      f.expect(expn_truncation(alpha, e, m) == truncation(alpha, e * m), "expansion " + to_string(alpha.value()));
      f.expect(truncation(alpha, e * m) == oracle::truncation(alpha.numerator().get_si(),
                                                             alpha.denominator().get_si(), p, e * m),
               "truncation " + to_string(alpha.value()));
    }
  }
  // The named instance: -5/4 at p = 3.
  const PAdicRational minus(Rational(-5, 4), 3);
  for (unsigned m = expn_min_multiplier(minus, 2); m <= expn_min_multiplier(minus, 2) + 2; ++m) {
    f.expect(expn_truncation(minus, 2, m) == truncation(minus, 2 * m), "-5/4 at p=3");
  }
  ++cases;
  info = std::to_string(cases) + " random cases";
  f.expect(cases >= 200, "only " + std::to_string(cases) + " cases");
}

// (8) Coset correspondence on the F-split fixtures.
void cosets(Failures& f, std::string& info) {
  struct Fixture {
    std::string ring, ideal;
    unsigned levels, B;
  };
  const std::vector<Fixture> fixtures{{"veronese p=3 vars=x,y degree=2", "x^2, x*y, y^2", 2, 1},
                                      {"veronese p=5 vars=x,y degree=2", "x^2, x*y, y^2", 2, 1},
                                      {"poly p=3 vars=x,y", "x^2, x*y, y^2", 2, 1},
                                      {"catalog cross_xy p=3", "", 3, 2},
                                      {"catalog cross_xy p=5", "", 3, 2},
                                      {"poly p=2 vars=x", "x", 3, 2},
                                      {"poly p=3 vars=x", "x", 3, 2},
                                      {"poly p=5 vars=x", "x", 3, 2}};
  for (const auto& fx : fixtures) {
    auto E = engine(fx.ring, fx.ideal);
    const Interval ri = default_root_interval(*E), ti{Rational(0), Rational(3)};
    const auto report = coset_correspondence_check(roots_of(*E, fx.levels, fx.B),
                                                   thresholds_of(*E, fx.levels, fx.B, ti), E->generator_count(), ri,
                                                   ti, E->prime());
    f.expect(report.pass, fx.ring + " unmatched roots " + show(report.unmatched_roots) + " thresholds " +
                              show(report.unmatched_thresholds));
  }
  info = std::to_string(fixtures.size()) + " F-split fixtures (9.3, 9.5, (x))";
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Failures&, std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Example 9.3 Veronese jumps, roots, thresholds", 60, veronese},
      {2, "Example 9.2 test ideals, root -5/4, F-jumping numbers", 300, monomial_triple},
      {3, "Example 9.4 Cartier memberships at p=13", 60, thirteenth_roots},
      {4, "Examples 9.5-9.8 semigroup and catalog rings", 60, singular_rings},
      {5, "Principal ideal (x): roots, thresholds, fpt", 10, principal},
      {6, "Monomial ideals vs linear-algebra oracle", 300, monomial_oracle},
      {7, "Property suite on random inputs", 600, properties},
      {8, "Coset correspondence of roots and thresholds", 10, cosets},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures failures;
    std::string info;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(failures, info);
    } catch (const std::exception& err) {
      failures.expect(false, std::string("exception: ") + err.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures.expect(seconds <= c.limit_seconds, "over the time limit");
    const bool pass = failures.empty();
    failed += pass ? 0 : 1;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed << std::setprecision(2)
         << seconds << " s, limit " << static_cast<int>(c.limit_seconds) << " s)";
    if (!info.empty()) line << " - " << info;
    if (!pass) line << " - " << failures.summary();
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
