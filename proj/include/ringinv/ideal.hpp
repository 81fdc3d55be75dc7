#pragma once

// One-sided principal ideals and annihilators with a single comparison
// contract over two representations:
//
//   modular rings:  explicit sorted element sets, computed exhaustively
//                   (requires enumerability)
//   matrix rings:   canonical subspace bases; aR corresponds to the column
//                   space of a, Ra to the row space, the right annihilator
//                   {x : ax = 0} to the null space and the left annihilator
//                   {x : xa = 0} to the left null space
//
// Handles are immutable. Comparisons require matching ring and side.

#include <cstdint>
#include <variant>
#include <vector>

#include "ringinv/ring.hpp"

namespace ringinv {

enum class Side { Right, Left };
enum class IdealOrigin { Principal, Annihilator };

class Ideal {
 public:
  Ideal(Element generator, Side side, IdealOrigin origin);

  Side side() const { return side_; }
  IdealOrigin origin() const { return origin_; }
  const Element& generator() const { return gen_; }
  const Ring& ring() const { return gen_.ring(); }

  bool eq(const Ideal& o) const;
  bool subset_of(const Ideal& o) const;  // *this contained in o
  bool contains(const Element& x) const;
  bool intersection_trivial(const Ideal& o) const;  // meet is {0}
  bool sums_to_ring(const Ideal& o) const;          // join is all of R

  // Explicit representation (modular rings): sorted residues.
  const std::vector<std::uint64_t>& members() const;
  // Subspace representation (matrix rings): basis row count.
  int dim() const;

 private:
  void check_comparable(const Ideal& o) const;
  Element gen_;
  Side side_;
  IdealOrigin origin_;
  std::variant<std::vector<std::uint64_t>, MatZ, MatQ> rep_;
};

inline Ideal ideal(const Element& a, Side side, IdealOrigin origin = IdealOrigin::Principal) {
  return Ideal(a, side, origin);
}

// h1 + h2 = R with h1 meet h2 = {0}.
bool direct_sum(const Ideal& h1, const Ideal& h2);

}  // namespace ringinv
