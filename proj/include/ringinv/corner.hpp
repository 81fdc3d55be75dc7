#pragma once

// Corner rings pRp for an idempotent p. The corner is a ring in its own right
// with unit p; x belongs to it iff pxp = x. corner_invert finds the inverse of
// x within the corner (w in pRp with wx = xw = p), which is unique when it
// exists. Works without enumeration: modular rings reduce to a linear
// congruence, matrix rings to an exact linear system.

#include <optional>
#include <vector>

#include "ringinv/ring.hpp"

namespace ringinv {

struct CornerRing {
  Element p;  // idempotent; the corner's unit
};

CornerRing make_corner(Element p);  // throws RingError unless p is idempotent

bool corner_contains(const CornerRing& c, const Element& x);

// Inverse of x in pRp; nullopt when x is not a corner unit.
// Throws RingError when x is outside the corner.
std::optional<Element> corner_invert(const CornerRing& c, const Element& x);

// Enumerable rings only.
std::vector<Element> corner_members(const CornerRing& c);
std::vector<Element> corner_units(const CornerRing& c);

}  // namespace ringinv
