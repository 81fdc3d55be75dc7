#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "ringinv/corner.hpp"
#include "ringinv/ideal.hpp"
#include "ringinv/ring.hpp"

using namespace ringinv;

TEST_CASE("modular principal ideals are the expected residue sets") {
  RingPtr r = make_ring("zmod:6");
  Ideal two = ideal(r->parse("2"), Side::Right);
  CHECK(two.members() == std::vector<std::uint64_t>{0, 2, 4});
  Ideal four = ideal(r->parse("4"), Side::Right);
  CHECK(two.eq(four));  // gcd(2,6) = gcd(4,6)
  Ideal three = ideal(r->parse("3"), Side::Right);
  CHECK(three.members() == std::vector<std::uint64_t>{0, 3});
  CHECK_FALSE(two.eq(three));
  CHECK(two.intersection_trivial(three));
  CHECK(two.sums_to_ring(three));
  CHECK(direct_sum(two, three));
  CHECK(two.contains(r->parse("4")));
  CHECK_FALSE(two.contains(r->parse("3")));
  Ideal one = ideal(r->one(), Side::Left);
  CHECK(ideal(r->parse("5"), Side::Left).eq(one));  // units generate R
  Ideal full = ideal(r->one(), Side::Right);
  CHECK(two.subset_of(full));
  CHECK_FALSE(full.subset_of(two));
}

TEST_CASE("modular annihilators") {
  RingPtr r = make_ring("zmod:12");
  Ideal ann = ideal(r->parse("4"), Side::Right, IdealOrigin::Annihilator);
  CHECK(ann.members() == std::vector<std::uint64_t>{0, 3, 6, 9});  // 4x = 0 mod 12
  Ideal ann0 = ideal(r->zero(), Side::Right, IdealOrigin::Annihilator);
  CHECK(ann0.eq(ideal(r->one(), Side::Right)));  // everything kills 0
}

TEST_CASE("matrix ideals: same span, different generators") {
  RingPtr m = make_ring("mat:2:z2");
  Element a = m->parse("[[1,0],[0,0]]");
  Element b = m->parse("[[1,0],[1,0]]");
  // rows of b span the same row space as rows of a
  CHECK(ideal(a, Side::Left).eq(ideal(b, Side::Left)));
  // but their column spaces differ
  CHECK_FALSE(ideal(a, Side::Right).eq(ideal(b, Side::Right)));
  CHECK(ideal(a, Side::Right).dim() == 1);
  Element u = m->parse("[[0,1],[1,0]]");
  CHECK(ideal(u, Side::Right).eq(ideal(m->one(), Side::Right)));
  CHECK(ideal(u, Side::Right).dim() == 2);
  CHECK(ideal(m->zero(), Side::Right).dim() == 0);
}

TEST_CASE("matrix subspace comparisons agree with exhaustive element sets") {
  // The decisive cross-check: on an enumerable matrix ring, every handle
  // comparison must coincide with brute-force equality of {x t} / {t x} sets.
  RingPtr m = make_ring("mat:2:z2");
  auto all = enumerate(*m);
  for (const Element& x : all) {
    auto rseto = oracles::right_ideal_set(*m, all, x);
    auto lseto = oracles::left_ideal_set(*m, all, x);
    Ideal rx = ideal(x, Side::Right);
    Ideal lx = ideal(x, Side::Left);
    for (const Element& y : all) {
      CAPTURE(x.str());
      CAPTURE(y.str());
      auto rsety = oracles::right_ideal_set(*m, all, y);
      auto lsety = oracles::left_ideal_set(*m, all, y);
      Ideal ry = ideal(y, Side::Right);
      Ideal ly = ideal(y, Side::Left);
      CHECK(rx.eq(ry) == (rseto == rsety));
      CHECK(lx.eq(ly) == (lseto == lsety));
      CHECK(rx.subset_of(ry) ==
            std::includes(rsety.begin(), rsety.end(), rseto.begin(), rseto.end()));
      bool only_zero = true;
      for (std::uint64_t e : rseto)
        if (e != 0 && std::binary_search(rsety.begin(), rsety.end(), e)) only_zero = false;
      CHECK(rx.intersection_trivial(ry) == only_zero);
      // sum of the two right ideals covers R
      std::vector<char> hit(all.size(), 0);
      for (std::uint64_t i : rseto)
        for (std::uint64_t j : rsety) hit[m->index_of(all[i] + all[j])] = 1;
      bool full = std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; });
      CHECK(rx.sums_to_ring(ry) == full);
      CHECK(direct_sum(rx, ry) == (full && only_zero));
    }
    for (const Element& t : all) {
      bool member = std::binary_search(rseto.begin(), rseto.end(), m->index_of(t));
      CHECK(rx.contains(t) == member);
    }
  }
}

TEST_CASE("matrix annihilators match their defining kill-sets") {
  RingPtr m = make_ring("mat:2:z2");
  auto all = enumerate(*m);
  for (const Element& a : all) {
    Ideal rann = ideal(a, Side::Right, IdealOrigin::Annihilator);  // {x : a x = 0}
    Ideal lann = ideal(a, Side::Left, IdealOrigin::Annihilator);   // {x : x a = 0}
    for (const Element& x : all) {
      CAPTURE(a.str());
      CAPTURE(x.str());
      CHECK(rann.contains(x) == is_zero(a * x));
      CHECK(lann.contains(x) == is_zero(x * a));
    }
  }
}

TEST_CASE("comparisons across sides or rings are rejected") {
  RingPtr r = make_ring("zmod:6");
  Ideal rght = ideal(r->parse("2"), Side::Right);
  Ideal left = ideal(r->parse("2"), Side::Left);
  CHECK_THROWS_AS(rght.eq(left), RingError);
  RingPtr r2 = make_ring("zmod:4");
  Ideal other = ideal(r2->parse("2"), Side::Right);
  CHECK_THROWS_AS(rght.eq(other), RingError);
}

TEST_CASE("corner rings: membership, units, and inversion") {
  RingPtr r = make_ring("zmod:6");
  Element p = r->parse("3");  // idempotent: 9 = 3 mod 6
  CornerRing c = make_corner(p);
  CHECK(corner_contains(c, r->parse("3")));
  CHECK(corner_contains(c, r->zero()));
  CHECK_FALSE(corner_contains(c, r->parse("2")));
  auto members = corner_members(c);
  CHECK(members.size() == 2);  // {0, 3}
  auto units = corner_units(c);
  REQUIRE(units.size() == 1);
  CHECK(units[0] == p);  // the corner's unit is p itself
  auto w = corner_invert(c, p);
  REQUIRE(w.has_value());
  CHECK(*w == p);
  CHECK_FALSE(corner_invert(c, r->zero()).has_value());
  CHECK_THROWS_AS(corner_invert(c, r->parse("2")), RingError);
  CHECK_THROWS_AS(make_corner(r->parse("2")), RingError);  // 4 != 2

  // matrix corner: p = e11 in M_2(Z_3); corner elements are [[x,0],[0,0]]
  RingPtr m = make_ring("mat:2:z3");
  CornerRing cm = make_corner(m->parse("[[1,0],[0,0]]"));
  CHECK(corner_members(cm).size() == 3);
  CHECK(corner_units(cm).size() == 2);
  auto w2 = corner_invert(cm, m->parse("[[2,0],[0,0]]"));
  REQUIRE(w2.has_value());
  CHECK(*w2 == m->parse("[[2,0],[0,0]]"));  // 2 * 2 = 4 = 1 mod 3

  // corner inversion works without enumeration too
  RingPtr q = make_ring("mat:2:q");
  CornerRing cq = make_corner(q->parse("[[1,0],[0,0]]"));
  auto w3 = corner_invert(cq, q->parse("[[5,0],[0,0]]"));
  REQUIRE(w3.has_value());
  CHECK(*w3 == q->parse("[[1/5,0],[0,0]]"));
}
