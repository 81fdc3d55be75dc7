#include "ringinv/corner.hpp"

#include <numeric>

namespace ringinv {
namespace {

using u64 = std::uint64_t;

// Smallest v with c*v = r (mod n), or nullopt when gcd(c, n) does not
// divide r.
std::optional<u64> solve_congruence(u64 c, u64 r, u64 n) {
  u64 g = std::gcd(c == 0 ? n : c, n);
  if (r % g != 0) return std::nullopt;
  const u64 n2 = n / g;
  if (n2 == 1) return 0;
  // modular inverse of (c/g) mod n2 via extended Euclid
  long long t = 0, nt = 1;
  long long rr = static_cast<long long>(n2), nr = static_cast<long long>((c / g) % n2);
  while (nr != 0) {
    long long q = rr / nr;
    t -= q * nt;
    std::swap(t, nt);
    rr -= q * nr;
    std::swap(rr, nr);
  }
  if (t < 0) t += static_cast<long long>(n2);
  return static_cast<u64>(static_cast<unsigned __int128>(r / g) % n2 * static_cast<u64>(t) % n2);
}

template <class F>
std::optional<linalg::Mat<F>> corner_solve(const F& f, const linalg::Mat<F>& p,
                                           const linalg::Mat<F>& x) {
  // unknown W: W x = p, x W = p, p W p = W.  Any solution is the corner
  // inverse (uniqueness: w1 = w1 x w2 = w2).
  const int k = p.rows;
  auto I = linalg::Mat<F>::identity(f, k);
  std::vector<linalg::MatEquation<F>> eqs;
  eqs.push_back({{{I, x}}, p});                           // W x = p
  eqs.push_back({{{x, I}}, p});                           // x W = p
  eqs.push_back({{{p, p}, {linalg::neg(f, I), I}}, linalg::Mat<F>::zeros(f, k, k)});  // pWp = W
  return linalg::solve_mat_equations(f, k, eqs);
}

}  // namespace

CornerRing make_corner(Element p) {
  if (!is_idempotent(p)) throw RingError("corner requires an idempotent");
  return CornerRing{std::move(p)};
}

bool corner_contains(const CornerRing& c, const Element& x) { return c.p * x * c.p == x; }

std::optional<Element> corner_invert(const CornerRing& c, const Element& x) {
  if (!corner_contains(c, x)) throw RingError("element is outside the corner ring");
  const Ring& r = c.p.ring();
  switch (r.kind()) {
    case RingKind::Modular: {
      // x = px, so solve x*v = p (mod n) and take w = p*v; commutativity
      // gives xw = wx = p and pwp = w automatically.
      auto v = solve_congruence(x.residue(), c.p.residue(), r.modulus());
      if (!v) return std::nullopt;
      Element w = c.p * r.from_int(static_cast<long long>(*v % r.modulus()));
      if (w * x != c.p) return std::nullopt;  // defensive; cannot trigger
      return w;
    }
    case RingKind::MatrixZp: {
      auto w = corner_solve(r.zp_field(), c.p.zmat(), x.zmat());
      if (!w) return std::nullopt;
      return r.from_zmat(std::move(*w));
    }
    case RingKind::MatrixQ: {
      auto w = corner_solve(linalg::RationalField{}, c.p.qmat(), x.qmat());
      if (!w) return std::nullopt;
      return r.from_qmat(std::move(*w));
    }
  }
  throw std::logic_error("bad ring kind");
}

std::vector<Element> corner_members(const CornerRing& c) {
  std::vector<Element> out;
  for (const Element& x : enumerate(c.p.ring()))
    if (corner_contains(c, x)) out.push_back(x);
  return out;
}

std::vector<Element> corner_units(const CornerRing& c) {
  std::vector<Element> out;
  for (const Element& x : enumerate(c.p.ring()))
    if (corner_contains(c, x) && corner_invert(c, x)) out.push_back(x);
  return out;
}

}  // namespace ringinv
