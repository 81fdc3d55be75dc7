#pragma once

// Exact dense linear algebra over a runtime field context. Two contexts are
// provided: PrimeField (Z/p for prime p, fits in uint64_t) and RationalField
// (GMP rationals). Everything is small and dense; matrices here are at most
// a few dozen rows, so plain Gaussian elimination is the right tool.
//
// Subspaces are always represented by their reduced row echelon basis, which
// is canonical: two subspaces are equal iff the representations are identical.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringinv/rational.hpp"

namespace ringinv::linalg {

struct PrimeField {
  using Scalar = std::uint64_t;
  std::uint64_t p;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p; }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Scalar>(r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;  // p < 2^63 is enforced at ring construction
    return s >= p ? s - p : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % p);
  }
  Scalar inv(Scalar a) const {  // p prime, a != 0
    // extended Euclid; avoids pow for clarity with 64-bit moduli
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("PrimeField::inv of non-unit");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<Scalar>(t);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  bool eq(Scalar a, Scalar b) const { return a == b; }
};

struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  Scalar reduce(long long v) const { return Rational(static_cast<long>(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField::inv of zero");
    return 1 / a;
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / inv_guard(b); }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

 private:
  const Scalar& inv_guard(const Scalar& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return b;
  }
};

template <class F>
struct Mat {
  using S = typename F::Scalar;
  int rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c, S fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}
  static Mat zeros(const F& f, int r, int c) { return Mat(r, c, f.zero()); }
  static Mat identity(const F& f, int n) {
    Mat m = zeros(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  S& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.a.resize(m.a.size(), typename F::Scalar{});
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

template <class F>
Mat<F> mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  Mat<F> z = Mat<F>::zeros(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const auto& xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return z;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& x, const Mat<F>& y) {
  Mat<F> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = f.add(z.a[i], y.a[i]);
  return z;
}

template <class F>
Mat<F> sub(const F& f, const Mat<F>& x, const Mat<F>& y) {
  Mat<F> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = f.sub(z.a[i], y.a[i]);
  return z;
}

template <class F>
Mat<F> neg(const F& f, const Mat<F>& x) {
  Mat<F> z = x;
  for (auto& v : z.a) v = f.neg(v);
  return z;
}

template <class F>
bool is_zero_mat(const F& f, const Mat<F>& x) {
  for (const auto& v : x.a)
    if (!f.is_zero(v)) return false;
  return true;
}

// In-place reduced row echelon form. Returns the rank; pivot column indices
// go to *pivots when provided.
template <class F>
int rref_inplace(const F& f, Mat<F>& m, std::vector<int>* pivots = nullptr) {
  int rank = 0;
  if (pivots) pivots->clear();
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(rank, c));
    auto piv = f.inv(m.at(rank, col));
    for (int c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), piv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      auto v = m.at(r, col);
      if (f.is_zero(v)) continue;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(v, m.at(rank, c)));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank(const F& f, Mat<F> m) {
  return rref_inplace(f, m);
}

// Canonical basis (rref rows, zero rows dropped) of the row space.
template <class F>
Mat<F> row_space(const F& f, Mat<F> m) {
  int r = rref_inplace(f, m);
  m.a.resize(static_cast<size_t>(r) * m.cols);
  m.rows = r;
  return m;
}

template <class F>
Mat<F> col_space(const F& f, const Mat<F>& m) {
  return row_space(f, transpose(m));
}

// Canonical basis of {x : m x = 0}, returned as rows.
template <class F>
Mat<F> null_space(const F& f, Mat<F> m) {
  std::vector<int> pivots;
  int rk = rref_inplace(f, m, &pivots);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat<F> basis = Mat<F>::zeros(f, m.cols - rk, m.cols);
  int row = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(row, free) = f.one();
    for (int i = 0; i < rk; ++i) basis.at(row, pivots[i]) = f.neg(m.at(i, free));
    ++row;
  }
  return row_space(f, basis);  // canonicalize
}

// Solves A X = B; returns the particular solution with free variables zero,
// or nullopt when inconsistent.
template <class F>
std::optional<Mat<F>> solve_right(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows) throw std::invalid_argument("solve shape mismatch");
  Mat<F> aug = Mat<F>::zeros(f, A.rows, A.cols + B.cols);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
  }
  std::vector<int> pivots;
  int rk = rref_inplace(f, aug, &pivots);
  for (int i = 0; i < rk; ++i)
    if (pivots[i] >= A.cols) return std::nullopt;  // pivot in the rhs block
  Mat<F> X = Mat<F>::zeros(f, A.cols, B.cols);
  for (int i = 0; i < rk; ++i)
    for (int c = 0; c < B.cols; ++c) X.at(pivots[i], c) = aug.at(i, A.cols + c);
  return X;
}

// Solves Y A = B via the transposed system.
template <class F>
std::optional<Mat<F>> solve_left(const F& f, const Mat<F>& A, const Mat<F>& B) {
  auto xt = solve_right(f, transpose(A), transpose(B));
  if (!xt) return std::nullopt;
  return transpose(*xt);
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(f, A) != A.rows) return std::nullopt;
  return solve_right(f, A, Mat<F>::identity(f, A.rows));
}

// Rank factorization A = F G with F of full column rank r and G of full row
// rank r (G is the nonzero part of rref(A), F the matching pivot columns).
template <class F>
struct RankFactor {
  int r;
  Mat<F> left;   // rows(A) x r
  Mat<F> right;  // r x cols(A)
  std::vector<int> pivots;
};

template <class F>
RankFactor<F> rank_factor(const F& f, const Mat<F>& A) {
  Mat<F> R = A;
  RankFactor<F> out;
  out.r = rref_inplace(f, R, &out.pivots);
  out.left = Mat<F>::zeros(f, A.rows, out.r);
  out.right = Mat<F>::zeros(f, out.r, A.cols);
  for (int i = 0; i < out.r; ++i) {
    for (int r = 0; r < A.rows; ++r) out.left.at(r, i) = A.at(r, out.pivots[i]);
    for (int c = 0; c < A.cols; ++c) out.right.at(i, c) = R.at(i, c);
  }
  return out;
}

// One inner inverse (A Z A = A); exists for every matrix over a field.
template <class F>
Mat<F> inner_inverse(const F& f, const Mat<F>& A) {
  auto fac = rank_factor(f, A);
  if (fac.r == 0) return Mat<F>::zeros(f, A.cols, A.rows);
  // right inverse of G: the pivot columns of an rref matrix form an identity
  Mat<F> Gr = Mat<F>::zeros(f, A.cols, fac.r);
  for (int i = 0; i < fac.r; ++i) Gr.at(fac.pivots[i], i) = f.one();
  auto Fl = solve_left(f, fac.left, Mat<F>::identity(f, fac.r));
  if (!Fl) throw std::logic_error("full-column-rank factor has a left inverse");
  return mul(f, Gr, *Fl);
}

// ---- canonical subspace helpers (operands must come from row_space/null_space)

template <class F>
Mat<F> stack(const Mat<F>& top, const Mat<F>& bottom) {
  if (top.cols != bottom.cols) throw std::invalid_argument("stack width mismatch");
  Mat<F> s = top;
  s.rows = top.rows + bottom.rows;
  s.a.insert(s.a.end(), bottom.a.begin(), bottom.a.end());
  return s;
}

template <class F>
bool subspace_eq(const Mat<F>& u, const Mat<F>& v) {
  return u == v;  // canonical representation
}

template <class F>
bool subspace_contains(const F& f, const Mat<F>& big, const Mat<F>& small) {
  if (small.rows == 0) return true;
  return rank(f, stack(big, small)) == big.rows;
}

template <class F>
bool subspace_intersection_trivial(const F& f, const Mat<F>& u, const Mat<F>& v) {
  return rank(f, stack(u, v)) == u.rows + v.rows;
}

template <class F>
bool subspace_sum_full(const F& f, const Mat<F>& u, const Mat<F>& v, int ambient_dim) {
  return rank(f, stack(u, v)) == ambient_dim;
}

template <class F>
bool subspace_member(const F& f, const Mat<F>& space, const Mat<F>& vecs) {
  return subspace_contains(f, space, row_space(f, vecs));
}

// ---- linear systems in a matrix unknown ----------------------------------
//
// Equations of the form  sum_i  A_i X B_i = C  with X a k x k unknown are
// flattened to ordinary linear systems: the coefficient of X[s][t] in entry
// (i,j) of A X B is A[i][s] * B[t][j].

template <class F>
struct MatEquation {
  std::vector<std::pair<Mat<F>, Mat<F>>> terms;
  Mat<F> rhs;
};

template <class F>
std::optional<Mat<F>> solve_mat_equations(const F& f, int k,
                                          const std::vector<MatEquation<F>>& eqs) {
  const int unknowns = k * k;
  const int total_rows = static_cast<int>(eqs.size()) * unknowns;
  Mat<F> M = Mat<F>::zeros(f, total_rows, unknowns);
  Mat<F> rhs = Mat<F>::zeros(f, total_rows, 1);
  int base = 0;
  for (const auto& eq : eqs) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int row = base + i * k + j;
        rhs.at(row, 0) = eq.rhs.at(i, j);
        for (const auto& [A, B] : eq.terms)
          for (int s = 0; s < k; ++s) {
            if (f.is_zero(A.at(i, s))) continue;
            for (int t = 0; t < k; ++t)
              M.at(row, s * k + t) =
                  f.add(M.at(row, s * k + t), f.mul(A.at(i, s), B.at(t, j)));
          }
      }
    base += unknowns;
  }
  auto x = solve_right(f, M, rhs);
  if (!x) return std::nullopt;
  Mat<F> X = Mat<F>::zeros(f, k, k);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) X.at(s, t) = x->at(s * k + t, 0);
  return X;
}

}  // namespace ringinv::linalg
