#pragma once

// The inverse of a along d: the unique outer inverse b of a (b a b = b) whose
// principal ideals agree with d's on both sides (bR = dR and Rb = Rd).
//
// Four routes compute it:
//   definitional  exhaustive search over an enumerable ring; doubles as the
//                 brute-force oracle and asserts uniqueness while scanning
//   corner        invert d a d dbar in the corner (d dbar) R (d dbar), then
//                 multiply by d; the dual corner is computed too and the two
//                 answers must agree
//   unit formula  b = (d a + 1 - d dbar)^{-1} d, with the dual form checked;
//                 a failed unit test counts as non-existence only after the
//                 corner route concurs
//   dxd           b = d x d for any inner inverse x of d a d; independence
//                 from the choice of x is asserted
//
// Set-valued operations return elements in canonical (enumeration) order.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringinv/geninv.hpp"
#include "ringinv/ring.hpp"

namespace ringinv {

enum class AlongRoute { Definitional, Corner, UnitFormula, InnerDxd };

const char* route_name(AlongRoute r);

struct AlongResult {
  Element inverse;
  AlongRoute route;
  // route-specific byproducts: dbar/x/y for corner, dbar/u for the unit
  // formula, x for dxd
  std::vector<std::pair<std::string, Element>> witnesses;
};

// Total for every supported ring kind: principal ideals of zmod:n compare
// through gcd with the modulus, matrix rings through column/row spaces.
bool is_inverse_along(const Element& b, const Element& a, const Element& d);

// Corner-based existence predicate; false when d is not regular.
bool exists_along(const Element& a, const Element& d);

std::optional<AlongResult> inverse_along_definitional(const Element& a, const Element& d);
std::optional<AlongResult> inverse_along_corner(const Element& a, const Element& d,
                                                std::optional<Element> dbar = std::nullopt);
std::optional<AlongResult> inverse_along_unit_formula(const Element& a, const Element& d,
                                                      const Element& dbar);
// Throws NonExistence when a is not invertible along d (the theorem behind
// the route presumes existence, which is established via the corner route).
std::optional<AlongResult> inverse_along_inner(const Element& a, const Element& d);

std::optional<AlongResult> inverse_along(const Element& a, const Element& d, AlongRoute route,
                                         std::optional<Element> dbar = std::nullopt);

// { a : a is invertible along d }, by definitional search. Enumerable rings
// only; empty when d is not regular.
std::vector<Element> invertibles_along(const Element& d);

enum class DecompFlavor { Left, Right, Idempotent };

// Materializes the sum-set description of { a : a invertible along d } that
// matches the flavor, and checks it against invertibles_along(d):
//   Left:        dbar U + (1 - dbar d) R (d dbar) + R (1 - d dbar)
//   Right:       U' dbar + (dbar d) R (1 - d dbar) + (1 - dbar d) R
//   Idempotent:  U'' + p R (1-p) + (1-p) R p + (1-p) R (1-p)   for p = d = dbar
// where U ranges over the units of the indicated corner ring. For the
// idempotent flavor with p = 0 or p = 1 the answer degenerates to all of R,
// resp. the units of R.
std::vector<Element> along_set_decomposition(const Element& d, const Element& dbar,
                                             DecompFlavor flavor);

struct AlongDecomposition {
  DecompFlavor flavor;
  Element s;  // group-invertible part (u for the Right flavor)
  Element t;  // residual part (v for the Right flavor)
  Element along_inverse;
};

// Splits a as dbar s + t (Left), s dbar + t (Right) or s + t (Idempotent,
// d = dbar = p), with s group invertible, the spectral idempotent of s pinned
// to the corner complement and t annihilated by the dbar d ... d dbar
// sandwich. Exists iff a is invertible along d; the pair is unique.
std::optional<AlongDecomposition> decompose_along(const Element& a, const Element& d,
                                                  const Element& dbar, DecompFlavor flavor);

struct EquivalenceReport {
  bool d_regular;  // the thirteen-statement block applies only to regular d
  std::vector<std::pair<std::string, bool>> block4;   // statements i..iv
  std::vector<std::pair<std::string, bool>> block13;  // statements i..xiii
};
// b must be an outer inverse of a (throws RingError otherwise). Evaluates
// every statement independently through ideal comparisons; within each block
// the booleans are provably all-equal, which the theorem catalog sweeps.
EquivalenceReport check_equivalences(const Element& a, const Element& b, const Element& d);

// (x y)^{along d} = y^{along d} x^{along d} for every pair x, y invertible
// along d whose product is again invertible along d (conditional reading;
// the set need not be closed under products). Enumerable rings; throws
// NonExistence when d is not regular. On modular rings and on M_2(Z_2) the
// result coincides with group-invertibility of d; the theorem catalog entry
// THM15 sweeps that dichotomy and reports counterexamples where it fails.
bool reverse_order_law_holds(const Element& d);

struct UnitTranslationReport {
  bool exists_base;    // a invertible along d
  bool exists_right;   // a u^{-1} invertible along u d
  bool exists_left;    // u^{-1} a invertible along d u
  bool right_value_ok; // (a u^{-1})^{along u d} = u a^{along d}
  bool left_value_ok;  // (u^{-1} a)^{along d u} = a^{along d} u
};
UnitTranslationReport translate_by_unit(const Element& a, const Element& d, const Element& u);

struct CommutingReport {
  bool commutes;          // a b = b a for b = a^{along d}
  bool spectral_commute;  // d group invertible and a p_d = p_d a
  bool corner_split;      // d group invertible and a = (unit of qRq) + p R p part
  bool ideal_membership;  // d a in R d and a d in d R
};
// Throws NonExistence when a is not invertible along d. The four booleans are
// provably equal; the catalog asserts that over full sweeps.
CommutingReport is_commuting_along(const Element& a, const Element& d);

struct InnerCriteriaReport {
  bool inner;        // a b a = a
  bool split_right;  // R = dR (+) a^{-1}(0)
  bool split_left;   // R = Rd (+) a_{-1}(0)
  std::optional<bool> sandwich_ok;    // b is inner+outer inverse of dbar d a d dbar
  std::optional<bool> group_formula;  // b = (d# d a d d#)#, when d is group invertible
  std::optional<bool> mp_formula;     // b = (d+ d a d d+)+, when d is MP invertible
};
InnerCriteriaReport inner_inverse_criteria(const Element& a, const Element& d);

enum class ClassicalMode { Group, Mp };

struct ClassicalFromInnerReport {
  std::size_t inner_count = 0;  // inner inverses of a that were checked
  std::size_t cube_count = 0;   // inner inverses of a^3 (resp. a* a a*) checked
  bool absorb_ok = true;        // a x a# = a# = a# x a  (resp. the starred form)
  bool sandwich_ok = true;      // a# = a x a            (resp. a+ = a* x a*)
  std::optional<bool> ep_pair_ok;  // EP elements: the two cross formulas
};
// Recovers the group inverse from inner inverses of a^3 (mode Group) or the
// MP inverse from inner inverses of a* a a* (mode Mp), quantifying over every
// inner inverse that can be enumerated or sampled.
ClassicalFromInnerReport classical_from_inner(const Element& a, ClassicalMode mode);

}  // namespace ringinv
