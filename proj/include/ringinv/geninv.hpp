#pragma once

// Classical generalized inverses: inner/outer inverses, the group inverse,
// the Drazin inverse (index 0 reported for units, with the >= 1 convention
// kept alongside), quasinilpotents, the generalized Drazin inverse on
// enumerable rings, and the Moore-Penrose inverse for the ring's involution.
//
// Uniqueness of each inverse is a theorem; implementations construct a
// witness and verify the defining equations exactly, and the test suite
// re-checks uniqueness by exhaustive search on enumerable rings.

#include <cstddef>
#include <optional>
#include <vector>

#include "ringinv/ring.hpp"

namespace ringinv {

inline bool is_outer_inverse(const Element& b, const Element& a) { return b * a * b == b; }
inline bool is_inner_inverse(const Element& b, const Element& a) { return a * b * a == a; }

// One inner inverse without enumeration: modular rings solve a^2 z = a (mod n),
// matrix rings use the rank factorization. nullopt iff a is not regular.
std::optional<Element> any_inner_inverse(const Element& a);

inline bool is_regular(const Element& a) { return any_inner_inverse(a).has_value(); }

// Every inner inverse in canonical order for enumerable rings; for
// non-enumerable matrix rings just the rank-factorization witness.
// Empty iff a is not regular.
std::vector<Element> inner_inverses(const Element& a);

// The canonical witness plus up to `extra` distinct alternatives, produced
// from the parametrization z + (1 - z a) u + v (1 - a z) when the ring cannot
// be enumerated. Used to confirm independence from the choice of inner
// inverse.
std::vector<Element> sample_inner_inverses(const Element& a, std::size_t extra);

struct GroupInverseResult {
  Element inverse;
  Element spectral_idempotent;  // 1 - a a#
};
std::optional<GroupInverseResult> group_inverse(const Element& a);

struct DrazinResult {
  Element inverse;
  unsigned index;        // least m >= 0 with a^m x a = a^m; 0 iff a is a unit
  unsigned classical_index;  // same under the m >= 1 convention: max(index, 1)
  Element spectral_idempotent;  // 1 - a a^d
};
std::optional<DrazinResult> drazin_inverse(const Element& a);

// 1 + x a is a unit for every x commuting with a. Enumerable rings only.
bool is_quasinilpotent(const Element& a);

struct GeneralizedDrazinResult {
  Element inverse;
  Element spectral_idempotent;  // 1 - a a^D
};
// Double-commutant definition, checked by exhaustive search; enumerable rings
// only. Coincides with drazin_inverse there (asserted internally).
std::optional<GeneralizedDrazinResult> generalized_drazin_inverse(const Element& a);

struct MoorePenroseResult {
  Element inverse;
};
std::optional<MoorePenroseResult> mp_inverse(const Element& a);

// a a+ == a+ a; throws NonExistence unless a is Moore-Penrose invertible.
bool is_ep(const Element& a);

}  // namespace ringinv
