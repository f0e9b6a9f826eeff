#pragma once

// Cartier images, differential closures and Cartier preimages over a
// polynomial ring F_p[x_1, ..., x_n].

#include <cstdint>

#include "bsroots/polyring.hpp"

namespace bsroots {

/// C^e . a: the ideal of p^e-th root coefficients of the generators, i.e.
/// the smallest b with a contained in b^{[p^e]}.
Ideal eth_root(const Ideal& a, unsigned e);

/// D^(e) . a = (C^e . a)^{[p^e]}.
Ideal diff_closure(const Ideal& a, unsigned e);

/// I_e(b) = {f : C^e . f in b} = b^{[p^e]}.
Ideal cartier_preimage(const Ideal& b, unsigned e);

/// C^e . a^n without forming a^n when avoidable: large n are reduced with
/// C^e(a^n) = a^m C^e(a^{n - m p^e}), and monomial ideals with few
/// generators take roots of each product directly.
Ideal eth_root_of_power(const Ideal& a, std::uint64_t n, unsigned e);

}  // namespace bsroots
