#include "ringinv/ideal.hpp"

#include <algorithm>
#include <iterator>

namespace ringinv {
namespace {

using u64 = std::uint64_t;

std::vector<u64> modular_members(const Ring& r, const Element& a, Side side, IdealOrigin origin) {
  // commutative, so the side only matters for the handle's tag
  (void)side;
  const u64 n = r.size();  // enumerability guard
  std::vector<u64> out;
  const u64 av = a.residue();
  for (u64 x = 0; x < n; ++x) {
    const u64 prod = static_cast<u64>(static_cast<unsigned __int128>(av) * x % n);
    if (origin == IdealOrigin::Principal)
      out.push_back(prod);
    else if (prod == 0)
      out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
linalg::Mat<F> matrix_basis(const F& f, const linalg::Mat<F>& a, Side side, IdealOrigin origin) {
  if (origin == IdealOrigin::Principal)
    return side == Side::Right ? linalg::col_space(f, a) : linalg::row_space(f, a);
  return side == Side::Right ? linalg::null_space(f, a)
                             : linalg::null_space(f, linalg::transpose(a));
}

// Rows of x that must lie in the subspace: columns for right-sided handles,
// rows for left-sided ones.
template <class F>
linalg::Mat<F> relevant_vectors(const F& f, const linalg::Mat<F>& x, Side side) {
  return side == Side::Right ? linalg::row_space(f, linalg::transpose(x))
                             : linalg::row_space(f, x);
}

}  // namespace

Ideal::Ideal(Element generator, Side side, IdealOrigin origin)
    : gen_(std::move(generator)), side_(side), origin_(origin) {
  const Ring& r = gen_.ring();
  switch (r.kind()) {
    case RingKind::Modular:
      rep_ = modular_members(r, gen_, side_, origin_);
      break;
    case RingKind::MatrixZp:
      rep_ = matrix_basis(r.zp_field(), gen_.zmat(), side_, origin_);
      break;
    case RingKind::MatrixQ:
      rep_ = matrix_basis(linalg::RationalField{}, gen_.qmat(), side_, origin_);
      break;
  }
}

void Ideal::check_comparable(const Ideal& o) const {
  if (!ring().same_as(o.ring())) throw RingError("ideal comparison across different rings");
  if (side_ != o.side_) throw RingError("ideal comparison across different sides");
}

bool Ideal::eq(const Ideal& o) const {
  check_comparable(o);
  return rep_ == o.rep_;  // both representations are canonical
}

bool Ideal::subset_of(const Ideal& o) const {
  check_comparable(o);
  if (auto* fin = std::get_if<std::vector<u64>>(&rep_)) {
    const auto& big = std::get<std::vector<u64>>(o.rep_);
    return std::includes(big.begin(), big.end(), fin->begin(), fin->end());
  }
  if (auto* mz = std::get_if<MatZ>(&rep_))
    return linalg::subspace_contains(ring().zp_field(), std::get<MatZ>(o.rep_), *mz);
  return linalg::subspace_contains(linalg::RationalField{}, std::get<MatQ>(o.rep_),
                                   std::get<MatQ>(rep_));
}

bool Ideal::contains(const Element& x) const {
  ring().check_mine(x);
  if (auto* fin = std::get_if<std::vector<u64>>(&rep_))
    return std::binary_search(fin->begin(), fin->end(), x.residue());
  if (auto* mz = std::get_if<MatZ>(&rep_)) {
    auto f = ring().zp_field();
    return linalg::subspace_contains(f, *mz, relevant_vectors(f, x.zmat(), side_));
  }
  linalg::RationalField f;
  return linalg::subspace_contains(f, std::get<MatQ>(rep_), relevant_vectors(f, x.qmat(), side_));
}

bool Ideal::intersection_trivial(const Ideal& o) const {
  check_comparable(o);
  if (auto* fin = std::get_if<std::vector<u64>>(&rep_)) {
    const auto& other = std::get<std::vector<u64>>(o.rep_);
    std::vector<u64> common;
    std::set_intersection(fin->begin(), fin->end(), other.begin(), other.end(),
                          std::back_inserter(common));
    return common.size() == 1 && common[0] == 0;  // both contain 0
  }
  if (auto* mz = std::get_if<MatZ>(&rep_))
    return linalg::subspace_intersection_trivial(ring().zp_field(), *mz, std::get<MatZ>(o.rep_));
  return linalg::subspace_intersection_trivial(linalg::RationalField{}, std::get<MatQ>(rep_),
                                               std::get<MatQ>(o.rep_));
}

bool Ideal::sums_to_ring(const Ideal& o) const {
  check_comparable(o);
  if (auto* fin = std::get_if<std::vector<u64>>(&rep_)) {
    const auto& other = std::get<std::vector<u64>>(o.rep_);
    const u64 n = ring().size();
    std::vector<char> hit(n, 0);
    u64 count = 0;
    for (u64 u : *fin)
      for (u64 v : other) {
        u64 s = u + v;
        if (s >= n) s -= n;
        if (!hit[s]) {
          hit[s] = 1;
          ++count;
        }
      }
    return count == n;
  }
  if (auto* mz = std::get_if<MatZ>(&rep_))
    return linalg::subspace_sum_full(ring().zp_field(), *mz, std::get<MatZ>(o.rep_), ring().dim());
  return linalg::subspace_sum_full(linalg::RationalField{}, std::get<MatQ>(rep_),
                                   std::get<MatQ>(o.rep_), ring().dim());
}

const std::vector<u64>& Ideal::members() const {
  if (auto* fin = std::get_if<std::vector<u64>>(&rep_)) return *fin;
  throw RingError("ideal has a subspace representation, not an element set");
}

int Ideal::dim() const {
  if (auto* mz = std::get_if<MatZ>(&rep_)) return mz->rows;
  if (auto* mq = std::get_if<MatQ>(&rep_)) return mq->rows;
  throw RingError("ideal has an element-set representation, not a subspace");
}

bool direct_sum(const Ideal& h1, const Ideal& h2) {
  return h1.intersection_trivial(h2) && h1.sums_to_ring(h2);
}

}  // namespace ringinv
