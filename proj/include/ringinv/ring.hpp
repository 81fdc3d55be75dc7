#pragma once

// Unital rings with exact element arithmetic. Three kinds are supported:
//
//   zmod:<n>       residues mod n (n >= 2), identity involution
//   mat:<k>:z<p>   k x k matrices over Z/p (p prime), transpose involution
//   mat:<k>:q      k x k matrices over Q, transpose involution
//
// A ring is "enumerable" when its cardinality is finite and at most the
// enumeration cap; enumerable rings expose a fixed bijection between
// {0, ..., size-1} and elements, which defines the canonical element order
// used by every set-valued operation.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringinv/linalg.hpp"
#include "ringinv/rational.hpp"

namespace ringinv {

// Usage-level failures: malformed ring specs or element literals, mixed-ring
// operands, enumeration requested beyond the cap, operations unsupported for
// the ring kind.  The CLI maps these to exit code 2.
struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematical non-existence raised by operations whose contract requires an
// inverse to exist (e.g. "d is not regular").  The CLI maps these to exit 1.
struct NonExistence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RingKind { Modular, MatrixZp, MatrixQ };

using MatZ = linalg::Mat<linalg::PrimeField>;
using MatQ = linalg::Mat<linalg::RationalField>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Element {
 public:
  Element() = default;

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const MatZ& zmat() const { return std::get<MatZ>(v_); }
  const MatQ& qmat() const { return std::get<MatQ>(v_); }

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  std::string str() const;

 private:
  friend class Ring;
  Element(RingPtr r, std::variant<std::uint64_t, MatZ, MatQ> v)
      : ring_(std::move(r)), v_(std::move(v)) {}
  RingPtr ring_;
  std::variant<std::uint64_t, MatZ, MatQ> v_;
};

inline constexpr std::uint64_t kDefaultEnumCap = 100000;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  // Spec grammar: "zmod:<n>" | "mat:<k>:z<p>" | "mat:<k>:q".  Throws RingError
  // on malformed specs, n < 2, k < 1, composite p.
  static RingPtr make(std::string_view spec, std::uint64_t enum_cap = kDefaultEnumCap);

  RingKind kind() const { return kind_; }
  const std::string& spec() const { return spec_; }
  bool same_as(const Ring& o) const { return this == &o || spec_ == o.spec_; }

  std::uint64_t modulus() const { return n_; }                  // Modular
  int dim() const { return k_; }                                // matrix kinds
  std::uint64_t prime() const { return p_; }                    // MatrixZp
  linalg::PrimeField zp_field() const { return {p_}; }

  std::optional<std::uint64_t> cardinality() const { return card_; }
  bool enumerable() const { return enumerable_; }
  std::uint64_t enum_cap() const { return cap_; }
  std::uint64_t size() const;  // throws RingError when not enumerable

  // ---- element construction
  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;  // v * 1
  Element from_zmat(MatZ m) const;
  Element from_qmat(MatQ m) const;
  Element element_at(std::uint64_t index) const;          // enumerable only
  std::uint64_t index_of(const Element& a) const;         // enumerable only

  // ---- arithmetic (operands must belong to this ring)
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element pow(const Element& a, unsigned e) const;
  Element involute(const Element& a) const;  // identity (zmod) or transpose
  std::optional<Element> unit_inverse(const Element& a) const;

  // ---- text round trip; parse(to_string(x)) == x
  Element parse(std::string_view text) const;
  std::string to_string(const Element& a) const;

  void check_mine(const Element& a) const;

 private:
  Ring() = default;
  RingKind kind_{};
  std::string spec_;
  std::uint64_t n_ = 0;  // modulus
  int k_ = 0;            // matrix dimension
  std::uint64_t p_ = 0;  // prime characteristic
  std::uint64_t cap_ = kDefaultEnumCap;
  std::optional<std::uint64_t> card_;
  bool enumerable_ = false;
};

inline RingPtr make_ring(std::string_view spec, std::uint64_t enum_cap = kDefaultEnumCap) {
  return Ring::make(spec, enum_cap);
}

// Every element exactly once, in canonical (index) order.
std::vector<Element> enumerate(const Ring& r);

// ---- operators and small helpers ------------------------------------------

inline Element operator+(const Element& a, const Element& b) { return a.ring().add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return a.ring().sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return a.ring().mul(a, b); }
inline Element operator-(const Element& a) { return a.ring().neg(a); }

inline bool is_zero(const Element& a) { return a == a.ring().zero(); }
inline bool is_one(const Element& a) { return a == a.ring().one(); }
inline bool is_idempotent(const Element& a) { return a * a == a; }
inline Element involute(const Element& a) { return a.ring().involute(a); }
inline std::optional<Element> unit_inverse(const Element& a) { return a.ring().unit_inverse(a); }

}  // namespace ringinv
