#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringinv {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) as long as canonicalize() is called after raw construction;
// every path below does so.
using Rational = mpq_class;

inline Rational rat_from_long(long v) { return Rational(v); }

// Accepts "p" or "p/q" with optional leading '-'. Throws on q == 0 or junk.
inline Rational rat_parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical form: "p/q" in lowest terms with q > 0, plain "p" when q == 1.
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

}  // namespace ringinv
