#pragma once

// Ring presentations: polynomial rings, monomial subalgebras (direct
// summands of a polynomial ring), numerical semigroup rings, and catalog
// rings whose jump sets are known in closed form.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsroots/polyring.hpp"

namespace bsroots {

class NumericalSemigroup {
 public:
  /// Throws PreconditionError unless the generators are positive with gcd 1.
  explicit NumericalSemigroup(std::vector<std::uint64_t> generators);

  const std::vector<std::uint64_t>& generators() const { return gens_; }
  /// Least c with [c, infinity) inside S.
  std::uint64_t conductor() const { return conductor_; }
  bool contains(std::int64_t s) const;
  /// S = N, i.e. the ring is a polynomial ring in one variable.
  bool is_full() const { return conductor_ == 0; }
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> gens_;
  std::uint64_t conductor_ = 0;
  std::vector<bool> member_;  // membership below the conductor
};

/// A monomial ideal of K[S], by its minimal exponents.
class SemigroupIdeal {
 public:
  SemigroupIdeal() = default;  // the zero ideal
  SemigroupIdeal(const NumericalSemigroup& s, std::vector<std::uint64_t> exponents);

  static SemigroupIdeal unit(const NumericalSemigroup& s) { return SemigroupIdeal(s, {0}); }

  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  bool is_zero() const { return exps_.empty(); }
  bool is_unit() const { return !exps_.empty() && exps_.front() == 0; }
  bool contains(const NumericalSemigroup& s, std::uint64_t t) const;

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const SemigroupIdeal& a, const SemigroupIdeal& b) { return !(a == b); }

 private:
  std::vector<std::uint64_t> exps_;  // sorted, minimal
};

SemigroupIdeal semigroup_product(const NumericalSemigroup& s, const SemigroupIdeal& a, const SemigroupIdeal& b);

/// D^(e) . I for a monomial ideal I of K[S] over F_p. The map x^m -> x^{m+d}
/// extends to an R^{p^e}-linear endomorphism iff s + d lies in S for every
/// s in S congruent to m mod p^e; beyond the conductor this is automatic.
SemigroupIdeal semigroup_diff_closure(const NumericalSemigroup& s, const SemigroupIdeal& ideal,
                                      std::uint32_t p, unsigned e);

struct PolynomialRingPresentation {
  RingPtr ring;
};

struct MonomialSubalgebraPresentation {
  RingPtr ambient;
  std::vector<Monomial> generators;
  /// Level-differential extensibility of the inclusion into the ambient
  /// ring: built in for Veronese subrings, user-asserted otherwise.
  bool extensible = false;
  unsigned veronese_degree = 0;  // 0 when not a Veronese subring
};

struct SemigroupRingPresentation {
  std::uint32_t prime = 2;
  NumericalSemigroup semigroup{{1}};
};

enum class CatalogId { CrossXY, CuspSemigroup, ArtinianXPow };

struct CatalogPresentation {
  CatalogId id = CatalogId::CrossXY;
  std::uint32_t prime = 2;
  std::uint64_t n = 0;  // ArtinianXPow only: R = K[x]/(x^{n+1})
};

using RingPresentation = std::variant<PolynomialRingPresentation, MonomialSubalgebraPresentation,
                                      SemigroupRingPresentation, CatalogPresentation>;

/// Grammar:
///   poly p=5 vars=x,y,z
///   veronese p=5 vars=x,y degree=2
///   subalgebra p=5 vars=x,y gens=x^2,x*y,y^2 [extensible=yes]
///   semigroup p=5 gens=2,3
///   catalog cross_xy p=3 | catalog cusp_semigroup p=5 | catalog artinian_x_pow n=4 p=3
RingPresentation parse_ring(std::string_view text);

std::uint32_t prime_of(const RingPresentation& ring);
std::string describe(const RingPresentation& ring);

/// Presentations known to be F-split: polynomial rings, their monomial
/// direct summands, S = N, and the coordinate cross.
bool is_f_split(const RingPresentation& ring);

/// Monomial x^v lies in the subalgebra generated by the given monomials.
bool in_subalgebra(const MonomialSubalgebraPresentation& pres, const Monomial& v);

/// aS for an ideal a of the subalgebra, given by generators in the ambient
/// variables. Throws UnsupportedError when extensibility is not known (only
/// a containment of jump sets would hold), PreconditionError when a
/// generator is not in the subalgebra.
Ideal lift_ideal(const MonomialSubalgebraPresentation& pres, std::string_view ideal_text);

/// Monomial ideal of K[S] from text in the variable x (`x^2, x^3`).
SemigroupIdeal parse_semigroup_ideal(const NumericalSemigroup& s, std::uint32_t p, std::string_view text,
                                     std::size_t* generator_count = nullptr);

std::string catalog_name(CatalogId id);
/// The distinguished element of a catalog ring, as text.
std::string catalog_element(const CatalogPresentation& pres);
/// Closed-form jump set in [0, p^e) (r = 1). ArtinianXPow needs p^e > n.
std::vector<std::uint64_t> catalog_jump_set(const CatalogPresentation& pres, unsigned e);
/// Smallest level at which the closed form applies.
unsigned catalog_min_level(const CatalogPresentation& pres);

}  // namespace bsroots
