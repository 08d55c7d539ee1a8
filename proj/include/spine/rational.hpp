#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spine {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q" (q != 0) into canonical form; throws
// Error(syntax) otherwise.
Rational parse_rational(std::string_view text);

// Canonical spelling: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(Rational const& r) { return r.get_str(); }

inline bool is_integer(Rational const& r) { return r.get_den() == 1; }

inline Integer floor(Rational const& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// r - floor(r), in [0, 1).
inline Rational frac(Rational const& r) { return r - Rational(floor(r)); }

inline Rational dot(RationalVector const& a, RationalVector const& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lexicographic by value; vectors of different length compare by length first.
struct RationalVectorLess {
  bool operator()(RationalVector const& a, RationalVector const& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

std::string to_string(RationalVector const& v);

}  // namespace spine
