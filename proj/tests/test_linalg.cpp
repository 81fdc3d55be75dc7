#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ringinv/linalg.hpp"
#include "ringinv/rational.hpp"

using namespace ringinv::linalg;
using ringinv::Rational;

namespace {

template <class F>
Mat<F> from_rows(const F& f, int r, int c, std::vector<long long> vals) {
  Mat<F> m = Mat<F>::zeros(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = f.reduce(vals[static_cast<size_t>(i) * c + j]);
  return m;
}

}  // namespace

TEST_CASE("prime field inverse is the two-sided multiplicative inverse") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
    CAPTURE(p);
    PrimeField f{p};
    for (std::uint64_t a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.mul(f.inv(a), a) == f.one());
    }
  }
}

TEST_CASE("rref over Z2: rank and canonical form of a known matrix") {
  PrimeField f{2};
  auto m = from_rows(f, 3, 3, {1, 1, 0, 1, 1, 1, 0, 0, 1});
  std::vector<int> pivots;
  CHECK(rref_inplace(f, m, &pivots) == 2);
  CHECK(pivots == std::vector<int>{0, 2});
  auto expect = from_rows(f, 3, 3, {1, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(m == expect);
}

TEST_CASE("rref over Q produces exact fractional pivot rows") {
  RationalField f;
  auto m = from_rows(f, 2, 3, {2, 4, 1, 3, 6, 0});
  CHECK(rref_inplace(f, m) == 2);
  CHECK(m.at(0, 0) == Rational(1));
  CHECK(m.at(0, 1) == Rational(2));
  CHECK(m.at(0, 2) == Rational(0));
  CHECK(m.at(1, 2) == Rational(1));
}

TEST_CASE("row/col/null spaces satisfy rank-nullity and membership") {
  PrimeField f{3};
  auto a = from_rows(f, 2, 2, {1, 2, 2, 1});  // det = 1 - 4 = -3 = 0 mod 3
  CHECK(rank(f, a) == 1);
  auto rs = row_space(f, a);
  CHECK(rs.rows == 1);
  auto ns = null_space(f, a);
  CHECK(ns.rows == 1);  // rank + nullity = 2
  // every null-space basis row x satisfies a x = 0
  auto prod = mul(f, a, transpose(ns));
  CHECK(is_zero_mat(f, prod));
  // row space of a is spanned by (1,2)
  CHECK(subspace_member(f, rs, from_rows(f, 1, 2, {1, 2})));
  CHECK_FALSE(subspace_member(f, rs, from_rows(f, 1, 2, {1, 0})));
}

TEST_CASE("canonical subspace comparison: same span, different generators") {
  PrimeField f{2};
  auto u = row_space(f, from_rows(f, 2, 2, {1, 0, 1, 0}));
  auto v = row_space(f, from_rows(f, 1, 2, {1, 0}));
  CHECK(subspace_eq(u, v));
  auto w = row_space(f, from_rows(f, 1, 2, {0, 1}));
  CHECK_FALSE(subspace_eq(u, w));
  CHECK(subspace_intersection_trivial(f, u, w));
  CHECK(subspace_sum_full(f, u, w, 2));
}

TEST_CASE("solve_right finds exact solutions and detects inconsistency") {
  RationalField f;
  auto A = from_rows(f, 2, 2, {1, 2, 3, 4});
  auto B = from_rows(f, 2, 1, {5, 6});
  auto X = solve_right(f, A, B);
  REQUIRE(X.has_value());
  CHECK(mul(f, A, *X) == B);
  CHECK(X->at(0, 0) == Rational(-4));
  CHECK(X->at(1, 0) == Rational(9) / 2);

  auto S = from_rows(f, 2, 2, {1, 2, 2, 4});  // singular
  auto C = from_rows(f, 2, 1, {1, 0});        // off the column space
  CHECK_FALSE(solve_right(f, S, C).has_value());

  auto Y = solve_left(f, A, from_rows(f, 1, 2, {1, 1}));
  REQUIRE(Y.has_value());
  CHECK(mul(f, *Y, A) == from_rows(f, 1, 2, {1, 1}));
}

TEST_CASE("matrix inverse: exact over Q, existence iff full rank") {
  RationalField f;
  auto A = from_rows(f, 2, 2, {1, 2, 3, 4});
  auto inv = inverse(f, A);
  REQUIRE(inv.has_value());
  CHECK(mul(f, A, *inv) == Mat<RationalField>::identity(f, 2));
  CHECK(inv->at(0, 0) == Rational(-2));
  CHECK(inv->at(1, 1) == Rational(-1) / 2);
  CHECK_FALSE(inverse(f, from_rows(f, 2, 2, {1, 2, 2, 4})).has_value());

  PrimeField g{5};
  auto M = from_rows(g, 3, 3, {1, 2, 0, 0, 1, 3, 4, 0, 2});  // det = 26 = 1 mod 5
  auto Minv = inverse(g, M);
  REQUIRE(Minv.has_value());
  CHECK(mul(g, *Minv, M) == Mat<PrimeField>::identity(g, 3));
}

TEST_CASE("rank factorization reconstructs the matrix with full-rank factors") {
  for (std::uint64_t p : {2ULL, 3ULL}) {
    CAPTURE(p);
    PrimeField f{p};
    std::vector<Mat<PrimeField>> samples = {
        from_rows(f, 2, 2, {1, 1, 1, 1}),
        from_rows(f, 2, 2, {0, 1, 0, 0}),
        from_rows(f, 2, 2, {1, 0, 0, 1}),
        from_rows(f, 3, 3, {1, 2, 0, 2, 1, 1, 0, 0, 0}),
    };
    for (const auto& A : samples) {
      auto fac = rank_factor(f, A);
      CHECK(fac.r == rank(f, A));
      CHECK(mul(f, fac.left, fac.right) == A);
      CHECK(rank(f, fac.left) == fac.r);
      CHECK(rank(f, fac.right) == fac.r);
    }
  }
}

TEST_CASE("inner_inverse satisfies A X A = A, including rank-deficient input") {
  RationalField f;
  std::vector<Mat<RationalField>> samples = {
      from_rows(f, 2, 2, {1, 1, 0, 0}),
      from_rows(f, 2, 2, {1, 2, 2, 4}),
      from_rows(f, 2, 2, {0, 0, 0, 0}),
      from_rows(f, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}),
  };
  for (const auto& A : samples) {
    auto X = inner_inverse(f, A);
    CHECK(mul(f, mul(f, A, X), A) == A);
  }
}

TEST_CASE("solve_mat_equations flattens A X B = C correctly") {
  PrimeField f{3};
  auto A = from_rows(f, 2, 2, {1, 1, 0, 1});
  auto B = from_rows(f, 2, 2, {2, 0, 1, 1});
  auto Xtrue = from_rows(f, 2, 2, {1, 2, 0, 1});
  MatEquation<PrimeField> eq;
  eq.terms.push_back({A, B});
  eq.rhs = mul(f, mul(f, A, Xtrue), B);
  auto X = solve_mat_equations(f, 2, {eq});
  REQUIRE(X.has_value());
  // the solver returns some solution; verify it satisfies the equation
  CHECK(mul(f, mul(f, A, *X), B) == eq.rhs);

  // inconsistent system: X mapped through a singular sandwich cannot hit a
  // full-rank target
  auto S = from_rows(f, 2, 2, {1, 0, 0, 0});
  MatEquation<PrimeField> bad;
  bad.terms.push_back({S, S});
  bad.rhs = Mat<PrimeField>::identity(f, 2);
  CHECK_FALSE(solve_mat_equations(f, 2, {bad}).has_value());
}
