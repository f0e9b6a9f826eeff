#include <gtest/gtest.h>

#include <random>

#include "bsroots/errors.hpp"
#include "bsroots/jumps.hpp"
#include "oracles.hpp"

using namespace bsroots;

namespace {

using Jumps = std::vector<std::uint64_t>;

EnginePtr engine(const std::string& ring, const std::string& ideal) { return make_engine(parse_ring(ring), ideal); }

// {b q - 1 : b >= 1} and {((2c + 1) q - 3)/2 : c >= 1}, inside [0, 3q).
Jumps veronese_square_closed_form(std::uint64_t q) {
  std::set<std::uint64_t> out;
  for (std::uint64_t b = 1; b * q - 1 < 3 * q; ++b) out.insert(b * q - 1);
  for (std::uint64_t c = 1; ((2 * c + 1) * q - 3) / 2 < 3 * q; ++c) out.insert(((2 * c + 1) * q - 3) / 2);
  return {out.begin(), out.end()};
}

Ideal random_ideal(std::mt19937_64& rng, const RingPtr& R, std::size_t count, std::uint64_t degree) {
  std::vector<Polynomial> gens;
  while (gens.size() < count) {
    auto f = oracle::random_polynomial(rng, R->prime, R->nvars(), degree, 3);
    if (!f.is_zero() && !f.is_constant()) gens.push_back(f);
  }
  return Ideal(R, gens);
}

}  // namespace

TEST(JumpSet, PrincipalVariable) {
  auto E = engine("poly p=5 vars=x", "x");
  EXPECT_EQ(E->jump_set(1), (Jumps{4}));
  EXPECT_TRUE(E->is_jump(1, 9));
  EXPECT_FALSE(E->is_jump(1, 7));
  EXPECT_EQ(E->jump_set(2), (Jumps{24}));
}

TEST(JumpSet, UnitIdealHasNoJumps) {
  auto E = engine("poly p=5 vars=x,y", "1");
  EXPECT_TRUE(E->jump_set(1).empty());
  EXPECT_FALSE(E->is_jump(1, 12));
  EXPECT_THROW(engine("poly p=5 vars=x", "0"), PreconditionError);
}

TEST(JumpSet, VeroneseSquareOfMaximalIdeal) {
  auto E = engine("veronese p=5 vars=x,y degree=2", "x^2, x*y, y^2");
  EXPECT_EQ(E->producer(), Producer::Summand);
  EXPECT_EQ(E->jump_set(1), (Jumps{4, 6, 9, 11, 14}));
  for (std::uint32_t p : {3u, 5u}) {
    auto F = engine("veronese p=" + std::to_string(p) + " vars=x,y degree=2", "x^2, x*y, y^2");
    for (unsigned e = 1; e <= 2; ++e) {
      EXPECT_EQ(F->jump_set(e), veronese_square_closed_form(oracle::ipow(p, e))) << "p=" << p << " e=" << e;
    }
  }
}

TEST(JumpSet, CatalogRings) {
  EXPECT_EQ(engine("catalog cross_xy p=3", "")->jump_set(2), (Jumps{0, 8}));
  EXPECT_EQ(engine("catalog cusp_semigroup p=5", "x^2")->jump_set(1), (Jumps{3, 4}));
  auto art = engine("catalog artinian_x_pow n=4 p=3", "x");
  EXPECT_EQ(art->min_level(), 2u);
  EXPECT_EQ(art->jump_set(3), (Jumps{4}));
  EXPECT_THROW(art->jump_set(1), PreconditionError);
  EXPECT_THROW(engine("catalog cross_xy p=3", "x^2"), UnsupportedError);
  EXPECT_TRUE(engine("catalog cross_xy p=3", "")->is_jump(1, 5));
}

TEST(JumpSet, SemigroupRing) {
  auto E = engine("semigroup p=5 gens=2,3", "x^2");
  EXPECT_EQ(E->producer(), Producer::Semigroup);
  EXPECT_FALSE(E->f_split());
  EXPECT_EQ(E->jump_set(1), (Jumps{3, 4}));
  EXPECT_TRUE(E->is_jump(1, 8));
  EXPECT_FALSE(E->is_jump(1, 10));
  EXPECT_THROW(engine("semigroup p=5 gens=2,3", "x^2 + x^3"), UnsupportedError);
}

TEST(JumpSet, NonExtensibleSubalgebraRefused) {
  EXPECT_THROW(engine("subalgebra p=3 vars=x,y gens=x^2,x*y,y^2", "x^2"), UnsupportedError);
  auto E = engine("subalgebra p=3 vars=x,y gens=x^2,x*y,y^2 extensible=yes", "x^2, x*y, y^2");
  EXPECT_EQ(E->note(), "assumed-extensible");
  EXPECT_EQ(E->jump_set(1), veronese_square_closed_form(3));
}

TEST(JumpSet, MonomialIdealsMatchLinearAlgebraOracle) {
  std::mt19937_64 rng(41);
  const auto R = make_ring(2, {"x", "y"});
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Monomial> monos;
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      Monomial m = oracle::random_monomial(rng, 2, 3);
      if (m.is_one()) m = Monomial::variable(i);
      monos.push_back(m);
      gens.push_back(Polynomial::monomial(2, m));
    }
    auto E = make_regular_engine(Ideal(R, gens));
    for (unsigned e = 1; e <= 2; ++e) {
      const auto want = oracle::monomial_jump_set(monos, 2, e, 2);
      EXPECT_EQ(E->jump_set(e), Jumps(want.begin(), want.end())) << Ideal(R, gens).to_string() << " e=" << e;
    }
  }
}

TEST(JumpTable, JsonShape) {
  auto E = engine("poly p=5 vars=x", "x");
  EXPECT_EQ(jump_table(*E, 1, 1).to_json(), R"({"p":5,"r":1,"producer":"regular","levels":{"1":[4]}})");
  const auto t = jump_table(*E, 1, 3);
  EXPECT_EQ(t.levels.size(), 3u);
  EXPECT_EQ(t.levels.at(3), (Jumps{124}));
}

TEST(JumpProperties, NestingSubtractionAndPropagation) {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto R = make_ring(p, {"x", "y"});
    for (int trial = 0; trial < 12; ++trial) {
      const Ideal a = random_ideal(rng, R, 1 + trial % 2, 3);
      auto E = make_regular_engine(a);
      const std::uint64_t r = a.generator_count();
      for (unsigned e = 1; e <= 2; ++e) {
        const std::uint64_t q = oracle::ipow(p, e);
        const auto jumps = E->jump_set(e);
        // Every jump of level e+1 is a jump of level e.
        for (auto n : E->jump_set(e + 1)) EXPECT_TRUE(E->is_jump(e, n)) << a.to_string() << " e=" << e << " n=" << n;
        // Far enough out, jumps stay jumps after subtracting p^e.
        for (std::uint64_t n = r * (q - 1) + 1; n < r * q + q; ++n) {
          if (E->is_jump(e, n)) EXPECT_TRUE(E->is_jump(e, n - q)) << a.to_string() << " n=" << n;
        }
        // A jump n propagates to a jump of level e+1 in [n p, n p + r (p - 1)].
        for (auto n : jumps) {
          bool hit = false;
          for (std::uint64_t m = n * p; m <= n * p + r * (p - 1) && !hit; ++m) hit = E->is_jump(e + 1, m);
          EXPECT_TRUE(hit) << a.to_string() << " e=" << e << " n=" << n;
        }
        // Principal ideals are p^e-periodic in both directions.
        if (r == 1) {
          for (std::uint64_t n = 0; n < 2 * q; ++n) {
            EXPECT_EQ(E->is_jump(e, n + q), E->is_jump(e, n)) << a.to_string() << " n=" << n;
          }
        }
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Nu, Examples) {
  const auto R = make_ring(5, {"x", "y"});
  const Ideal m = Ideal::parse(R, "x, y");
  EXPECT_EQ(nu_invariant(m, m, 1), 8u);
  EXPECT_EQ(nu_invariant(m, m, 2), 48u);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto S = make_ring(p, {"x"});
    const Ideal x = Ideal::parse(S, "x");
    for (unsigned e = 1; e <= 3; ++e) EXPECT_EQ(nu_invariant(x, x, e), oracle::ipow(p, e) - 1);
  }
  const auto T = make_ring(7, {"x", "y"});
  EXPECT_EQ(nu_invariant(Ideal::parse(T, "x^2 + y^3"), Ideal::parse(T, "x, y"), 1), 5u);
  EXPECT_EQ(nu_invariant(Ideal::parse(T, "x^2 + y^3"), Ideal::parse(T, "x, y"), 2), 40u);
}

TEST(Nu, Preconditions) {
  const auto R = make_ring(5, {"x", "y"});
  EXPECT_THROW(nu_invariant(Ideal::parse(R, "x"), Ideal::parse(R, "1"), 1), PreconditionError);
  EXPECT_THROW(nu_invariant(Ideal::parse(R, "x + 1"), Ideal::parse(R, "x, y"), 1), PreconditionError);
  EXPECT_THROW(nu_invariant(Ideal::parse(R, "y"), Ideal::parse(R, "x"), 1), PreconditionError);
  // x y lies in the radical of (x^2, y^2) but not in the ideal.
  EXPECT_EQ(nu_invariant(Ideal::parse(R, "x*y"), Ideal::parse(R, "x^2, y^2"), 1), 9u);
}

TEST(Nu, CartierFormAgreesAndMatchesOracle) {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto R = make_ring(p, {"x", "y"});
    const Ideal m = Ideal::parse(R, "x, y");
    for (int trial = 0; trial < 8; ++trial) {
      Polynomial f = oracle::random_polynomial(rng, p, 2, 4, 3);
      // Drop the constant term so that f lies in (x, y).
      std::vector<Term> terms;
      for (const auto& t : f.terms()) {
        if (!t.mono.is_one()) terms.push_back(t);
      }
      f = Polynomial::from_terms(p, terms);
      if (f.is_zero()) continue;
      const Ideal a(R, {f});
      for (unsigned e = 1; e <= 2; ++e) {
        const auto nu = nu_invariant(a, m, e);
        EXPECT_EQ(nu, cartier_nu_invariant(a, m, e));
        EXPECT_EQ(nu, oracle::principal_nu(f, 2, oracle::ipow(p, e))) << f.to_string(R->variables);
        if (e == 2) EXPECT_LE(p * nu_invariant(a, m, 1), nu);
      }
    }
  }
}
