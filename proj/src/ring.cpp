#include "ringinv/ring.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace ringinv {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// gcd-based modular inverse; returns nullopt when gcd(a, n) != 1.
std::optional<u64> modinv(u64 a, u64 n) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(n), nr = static_cast<long long>(a % n);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<long long>(n);
  return static_cast<u64>(t);
}

u64 parse_u64(std::string_view s, const char* what) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw RingError(std::string("bad ") + what + " in ring spec");
  return v;
}

// Digit-wise reduction of a (possibly signed, arbitrarily long) decimal
// literal mod n.  Keeps element parsing exact for any modulus.
u64 decimal_mod(std::string_view s, u64 n, const char* what) {
  bool negative = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw RingError(std::string("bad ") + what + " literal");
  u64 r = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw RingError(std::string("bad ") + what + " literal: " + std::string(s));
    r = (mulmod(r, 10, n) + static_cast<u64>(s[i] - '0')) % n;
  }
  return negative && r != 0 ? n - r : r;
}

struct ListParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw RingError(std::string("expected '") + c + "' in matrix literal");
  }
  std::string_view scalar_token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw RingError("empty entry in matrix literal");
    return s.substr(start, pos - start);
  }
  void done() {
    skip_ws();
    if (pos != s.size()) throw RingError("trailing junk in element literal");
  }
};

}  // namespace

bool Element::operator==(const Element& o) const {
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  if (!ring_->same_as(*o.ring_)) throw RingError("comparing elements of different rings");
  return v_ == o.v_;
}

std::string Element::str() const { return ring_->to_string(*this); }

RingPtr Ring::make(std::string_view spec, u64 enum_cap) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->cap_ = enum_cap;
  std::string s(spec);
  if (s.rfind("zmod:", 0) == 0) {
    u64 n = parse_u64(s.substr(5), "modulus");
    if (n < 2) throw RingError("zmod modulus must be at least 2");
    if (n > (u64(1) << 62)) throw RingError("zmod modulus too large");
    ring->kind_ = RingKind::Modular;
    ring->n_ = n;
    ring->card_ = n;
    ring->spec_ = "zmod:" + std::to_string(n);
  } else if (s.rfind("mat:", 0) == 0) {
    std::string rest = s.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw RingError("bad matrix ring spec: " + s);
    u64 k = parse_u64(rest.substr(0, colon), "dimension");
    if (k < 1 || k > 16) throw RingError("matrix dimension must be in 1..16");
    std::string field = rest.substr(colon + 1);
    ring->k_ = static_cast<int>(k);
    if (field == "q") {
      ring->kind_ = RingKind::MatrixQ;
      ring->card_ = std::nullopt;  // infinite
      ring->spec_ = "mat:" + std::to_string(k) + ":q";
    } else if (!field.empty() && field[0] == 'z') {
      u64 p = parse_u64(field.substr(1), "prime");
      if (!is_prime_u64(p)) throw RingError("matrix field characteristic must be prime");
      if (p > (u64(1) << 62)) throw RingError("prime too large");
      ring->kind_ = RingKind::MatrixZp;
      ring->p_ = p;
      // cardinality p^(k^2) when it fits in 64 bits
      u64 card = 1;
      bool fits = true;
      for (int i = 0; i < ring->k_ * ring->k_; ++i) {
        if (card > std::numeric_limits<u64>::max() / p) {
          fits = false;
          break;
        }
        card *= p;
      }
      ring->card_ = fits ? std::optional<u64>(card) : std::nullopt;
      ring->spec_ = "mat:" + std::to_string(k) + ":z" + std::to_string(p);
    } else {
      throw RingError("bad matrix field in ring spec: " + s);
    }
  } else {
    throw RingError("unknown ring spec: " + s);
  }
  ring->enumerable_ = ring->card_.has_value() && *ring->card_ <= ring->cap_;
  return ring;
}

void Ring::check_mine(const Element& a) const {
  if (!a.ring_ || !same_as(*a.ring_)) throw RingError("element does not belong to ring " + spec_);
}

std::uint64_t Ring::size() const {
  if (!enumerable_)
    throw RingError("ring " + spec_ + " is not enumerable (cap " + std::to_string(cap_) + ")");
  return *card_;
}

Element Ring::zero() const { return from_int(0); }
Element Ring::one() const { return from_int(1); }

Element Ring::from_int(long long v) const {
  switch (kind_) {
    case RingKind::Modular: {
      long long r = v % static_cast<long long>(n_);
      if (r < 0) r += static_cast<long long>(n_);
      return Element(shared_from_this(), static_cast<u64>(r));
    }
    case RingKind::MatrixZp: {
      linalg::PrimeField f{p_};
      MatZ m = MatZ::zeros(f, k_, k_);
      for (int i = 0; i < k_; ++i) m.at(i, i) = f.reduce(v);
      return Element(shared_from_this(), std::move(m));
    }
    case RingKind::MatrixQ: {
      linalg::RationalField f;
      MatQ m = MatQ::zeros(f, k_, k_);
      for (int i = 0; i < k_; ++i) m.at(i, i) = f.reduce(v);
      return Element(shared_from_this(), std::move(m));
    }
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::from_zmat(MatZ m) const {
  if (kind_ != RingKind::MatrixZp || m.rows != k_ || m.cols != k_)
    throw RingError("matrix payload does not match ring " + spec_);
  return Element(shared_from_this(), std::move(m));
}

Element Ring::from_qmat(MatQ m) const {
  if (kind_ != RingKind::MatrixQ || m.rows != k_ || m.cols != k_)
    throw RingError("matrix payload does not match ring " + spec_);
  return Element(shared_from_this(), std::move(m));
}

Element Ring::element_at(u64 index) const {
  if (index >= size()) throw RingError("element index out of range");
  switch (kind_) {
    case RingKind::Modular:
      return Element(shared_from_this(), index);
    case RingKind::MatrixZp: {
      // big-endian base-p digits over row-major entries: enumeration order is
      // lexicographic in the entries
      MatZ m;
      m.rows = m.cols = k_;
      m.a.assign(static_cast<size_t>(k_) * k_, 0);
      for (int i = k_ * k_ - 1; i >= 0; --i) {
        m.a[static_cast<size_t>(i)] = index % p_;
        index /= p_;
      }
      return Element(shared_from_this(), std::move(m));
    }
    case RingKind::MatrixQ:
      break;
  }
  throw RingError("ring " + spec_ + " is not enumerable");
}

std::uint64_t Ring::index_of(const Element& a) const {
  check_mine(a);
  size();  // enumerability guard
  switch (kind_) {
    case RingKind::Modular:
      return a.residue();
    case RingKind::MatrixZp: {
      u64 idx = 0;
      for (u64 digit : a.zmat().a) idx = idx * p_ + digit;
      return idx;
    }
    case RingKind::MatrixQ:
      break;
  }
  throw RingError("ring " + spec_ + " is not enumerable");
}

Element Ring::add(const Element& a, const Element& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case RingKind::Modular:
      return Element(shared_from_this(), (a.residue() + b.residue()) % n_);
    case RingKind::MatrixZp:
      return Element(shared_from_this(), linalg::add(zp_field(), a.zmat(), b.zmat()));
    case RingKind::MatrixQ:
      return Element(shared_from_this(), linalg::add(linalg::RationalField{}, a.qmat(), b.qmat()));
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::sub(const Element& a, const Element& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case RingKind::Modular: {
      u64 x = a.residue(), y = b.residue();
      return Element(shared_from_this(), x >= y ? x - y : x + n_ - y);
    }
    case RingKind::MatrixZp:
      return Element(shared_from_this(), linalg::sub(zp_field(), a.zmat(), b.zmat()));
    case RingKind::MatrixQ:
      return Element(shared_from_this(), linalg::sub(linalg::RationalField{}, a.qmat(), b.qmat()));
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::mul(const Element& a, const Element& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case RingKind::Modular:
      return Element(shared_from_this(), mulmod(a.residue(), b.residue(), n_));
    case RingKind::MatrixZp:
      return Element(shared_from_this(), linalg::mul(zp_field(), a.zmat(), b.zmat()));
    case RingKind::MatrixQ:
      return Element(shared_from_this(), linalg::mul(linalg::RationalField{}, a.qmat(), b.qmat()));
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::neg(const Element& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::Modular: {
      u64 x = a.residue();
      return Element(shared_from_this(), x == 0 ? 0 : n_ - x);
    }
    case RingKind::MatrixZp:
      return Element(shared_from_this(), linalg::neg(zp_field(), a.zmat()));
    case RingKind::MatrixQ:
      return Element(shared_from_this(), linalg::neg(linalg::RationalField{}, a.qmat()));
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::pow(const Element& a, unsigned e) const {
  Element r = one();
  Element base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Element Ring::involute(const Element& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::Modular:
      return a;
    case RingKind::MatrixZp:
      return Element(shared_from_this(), linalg::transpose(a.zmat()));
    case RingKind::MatrixQ:
      return Element(shared_from_this(), linalg::transpose(a.qmat()));
  }
  throw std::logic_error("bad ring kind");
}

std::optional<Element> Ring::unit_inverse(const Element& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::Modular: {
      auto inv = modinv(a.residue(), n_);
      if (!inv) return std::nullopt;
      return Element(shared_from_this(), *inv);
    }
    case RingKind::MatrixZp: {
      auto inv = linalg::inverse(zp_field(), a.zmat());
      if (!inv) return std::nullopt;
      return Element(shared_from_this(), std::move(*inv));
    }
    case RingKind::MatrixQ: {
      auto inv = linalg::inverse(linalg::RationalField{}, a.qmat());
      if (!inv) return std::nullopt;
      return Element(shared_from_this(), std::move(*inv));
    }
  }
  throw std::logic_error("bad ring kind");
}

Element Ring::parse(std::string_view text) const {
  switch (kind_) {
    case RingKind::Modular:
      return Element(shared_from_this(), decimal_mod(text, n_, "residue"));
    case RingKind::MatrixZp:
    case RingKind::MatrixQ: {
      ListParser lp{text};
      lp.expect('[');
      MatZ mz;
      MatQ mq;
      if (kind_ == RingKind::MatrixZp) {
        mz.rows = mz.cols = k_;
        mz.a.reserve(static_cast<size_t>(k_) * k_);
      } else {
        mq.rows = mq.cols = k_;
        mq.a.reserve(static_cast<size_t>(k_) * k_);
      }
      for (int r = 0; r < k_; ++r) {
        if (r > 0) lp.expect(',');
        lp.expect('[');
        for (int c = 0; c < k_; ++c) {
          if (c > 0) lp.expect(',');
          auto tok = lp.scalar_token();
          if (kind_ == RingKind::MatrixZp)
            mz.a.push_back(decimal_mod(tok, p_, "matrix entry"));
          else {
            try {
              mq.a.push_back(rat_parse(tok));
            } catch (const std::invalid_argument& e) {
              throw RingError(e.what());
            }
          }
        }
        lp.expect(']');
      }
      lp.expect(']');
      lp.done();
      if (kind_ == RingKind::MatrixZp) return Element(shared_from_this(), std::move(mz));
      return Element(shared_from_this(), std::move(mq));
    }
  }
  throw std::logic_error("bad ring kind");
}

std::string Ring::to_string(const Element& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::Modular:
      return std::to_string(a.residue());
    case RingKind::MatrixZp:
    case RingKind::MatrixQ: {
      std::string out = "[";
      for (int r = 0; r < k_; ++r) {
        if (r > 0) out += ',';
        out += '[';
        for (int c = 0; c < k_; ++c) {
          if (c > 0) out += ',';
          if (kind_ == RingKind::MatrixZp)
            out += std::to_string(a.zmat().at(r, c));
          else
            out += rat_to_string(a.qmat().at(r, c));
        }
        out += ']';
      }
      out += ']';
      return out;
    }
  }
  throw std::logic_error("bad ring kind");
}

std::vector<Element> enumerate(const Ring& r) {
  std::vector<Element> out;
  const u64 n = r.size();
  out.reserve(n);
  for (u64 i = 0; i < n; ++i) out.push_back(r.element_at(i));
  return out;
}

}  // namespace ringinv
