#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "ringinv/ring.hpp"

using namespace ringinv;

TEST_CASE("ring spec parsing accepts the documented grammar") {
  CHECK(make_ring("zmod:6")->kind() == RingKind::Modular);
  CHECK(make_ring("zmod:6")->modulus() == 6);
  CHECK(make_ring("mat:2:z2")->kind() == RingKind::MatrixZp);
  CHECK(make_ring("mat:2:z2")->dim() == 2);
  CHECK(make_ring("mat:2:z2")->prime() == 2);
  CHECK(make_ring("mat:3:q")->kind() == RingKind::MatrixQ);
  CHECK(make_ring("mat:3:q")->dim() == 3);
}

TEST_CASE("ring spec parsing rejects malformed or out-of-domain specs") {
  CHECK_THROWS_AS(make_ring(""), RingError);
  CHECK_THROWS_AS(make_ring("zmod"), RingError);
  CHECK_THROWS_AS(make_ring("zmod:"), RingError);
  CHECK_THROWS_AS(make_ring("zmod:1"), RingError);
  CHECK_THROWS_AS(make_ring("zmod:0"), RingError);
  CHECK_THROWS_AS(make_ring("zmod:abc"), RingError);
  CHECK_THROWS_AS(make_ring("mat:0:q"), RingError);
  CHECK_THROWS_AS(make_ring("mat:2:z4"), RingError);  // composite characteristic
  CHECK_THROWS_AS(make_ring("mat:2:z1"), RingError);
  CHECK_THROWS_AS(make_ring("mat:2:x"), RingError);
  CHECK_THROWS_AS(make_ring("ring:6"), RingError);
}

TEST_CASE("modular arithmetic wraps exactly") {
  RingPtr r = make_ring("zmod:6");
  Element a = r->parse("4"), b = r->parse("5");
  CHECK((a + b).str() == "3");
  CHECK((a * b).str() == "2");
  CHECK((a - b).str() == "5");
  CHECK((-b).str() == "1");
  CHECK(r->pow(a, 0) == r->one());
  CHECK(r->pow(a, 3).str() == "4");  // 64 mod 6
  CHECK(r->from_int(-1).str() == "5");
  CHECK(r->from_int(13).str() == "1");
}

TEST_CASE("canonical enumeration is a bijection with zero first") {
  for (const char* spec : {"zmod:6", "zmod:12", "mat:2:z2", "mat:2:z3"}) {
    CAPTURE(spec);
    RingPtr r = make_ring(spec);
    REQUIRE(r->enumerable());
    auto all = enumerate(*r);
    REQUIRE(all.size() == r->size());
    CHECK(r->index_of(r->zero()) == 0);
    CHECK(all.front() == r->zero());
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      CHECK(r->index_of(all[i]) == i);
      CHECK(all[i] == r->element_at(i));
      seen.insert(all[i].str());
    }
    CHECK(seen.size() == all.size());
  }
  CHECK(make_ring("mat:2:z2")->size() == 16);
  CHECK(make_ring("mat:2:z3")->size() == 81);
}

TEST_CASE("text round trip: parse(to_string(x)) == x") {
  for (const char* spec : {"zmod:9", "mat:2:z3"}) {
    RingPtr r = make_ring(spec);
    for (const Element& x : enumerate(*r)) CHECK(r->parse(r->to_string(x)) == x);
  }
  RingPtr q = make_ring("mat:2:q");
  Element m = q->parse("[[1/2,-3],[0,7/5]]");
  CHECK(q->parse(q->to_string(m)) == m);
  CHECK(m.str() == "[[1/2,-3],[0,7/5]]");
}

TEST_CASE("element parsing rejects malformed literals") {
  RingPtr r = make_ring("zmod:6");
  CHECK_THROWS_AS(r->parse(""), RingError);
  CHECK_THROWS_AS(r->parse("x"), RingError);
  CHECK(r->parse("7") == r->parse("1"));   // representatives reduce mod n
  CHECK(r->parse("-1") == r->parse("5"));
  RingPtr m = make_ring("mat:2:z2");
  CHECK_THROWS_AS(m->parse("[[1,0],[0]]"), RingError);
  CHECK_THROWS_AS(m->parse("[[1,0],[0,1],[0,0]]"), RingError);
  CHECK_THROWS_AS(m->parse("1,0,0,1"), RingError);
  RingPtr q = make_ring("mat:2:q");
  CHECK_THROWS_AS(q->parse("[[1/0,0],[0,1]]"), RingError);
}

TEST_CASE("mixed-ring operands are rejected") {
  RingPtr r6 = make_ring("zmod:6"), r4 = make_ring("zmod:4");
  CHECK_THROWS_AS(r6->parse("2") * r4->parse("2"), RingError);
  CHECK_THROWS_AS(r6->parse("2") + r4->parse("2"), RingError);
}

TEST_CASE("enumerability and caps") {
  RingPtr q = make_ring("mat:2:q");
  CHECK_FALSE(q->enumerable());
  CHECK_FALSE(q->cardinality().has_value());
  CHECK_THROWS_AS(q->size(), RingError);
  CHECK_THROWS_AS(enumerate(*q), RingError);
  CHECK_THROWS_AS(q->element_at(0), RingError);

  RingPtr big = make_ring("mat:2:z5", /*enum_cap=*/100);  // 625 > 100
  CHECK(big->cardinality().has_value());
  CHECK(*big->cardinality() == 625);
  CHECK_FALSE(big->enumerable());
  CHECK_THROWS_AS(enumerate(*big), RingError);
}

TEST_CASE("involution: identity on modular rings, transpose on matrices") {
  RingPtr r = make_ring("zmod:12");
  for (const Element& x : enumerate(*r)) CHECK(involute(x) == x);

  RingPtr m = make_ring("mat:2:z3");
  auto all = enumerate(*m);
  Element x = m->parse("[[1,2],[0,1]]");
  CHECK(involute(x) == m->parse("[[1,0],[2,1]]"));
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 11) {
      CHECK(involute(involute(all[i])) == all[i]);
      CHECK(involute(all[i] * all[j]) == involute(all[j]) * involute(all[i]));
      CHECK(involute(all[i] + all[j]) == involute(all[i]) + involute(all[j]));
    }
  }
}

TEST_CASE("unit_inverse agrees with the exhaustive oracle") {
  for (const char* spec : {"zmod:6", "zmod:8", "zmod:9", "mat:2:z2"}) {
    CAPTURE(spec);
    RingPtr r = make_ring(spec);
    for (const Element& a : enumerate(*r)) {
      auto mine = unit_inverse(a);
      auto ref = oracles::unit_inverse(*r, a);
      REQUIRE(mine.has_value() == ref.has_value());
      if (mine) {
        CHECK(*mine == *ref);  // two-sided inverses are unique
        CHECK(a * *mine == r->one());
        CHECK(*mine * a == r->one());
      }
    }
  }
}

TEST_CASE("rational matrices stay exact") {
  RingPtr q = make_ring("mat:2:q");
  Element x = q->parse("[[1/3,0],[0,1/7]]");
  Element y = q->parse("[[3,0],[0,7]]");
  CHECK(x * y == q->one());
  Element third = q->parse("[[1/3,0],[0,1/3]]");
  Element sum = third + third + third;
  CHECK(sum == q->one());  // no drift: 1/3 + 1/3 + 1/3 is exactly 1
  CHECK(unit_inverse(q->parse("[[1,2],[3,4]]")).has_value());
  CHECK(unit_inverse(q->parse("[[1,2],[3,4]]"))->str() == "[[-2,1],[3/2,-1/2]]");
  CHECK_FALSE(unit_inverse(q->parse("[[1,2],[2,4]]")).has_value());
}
