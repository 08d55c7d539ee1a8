#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spine/rational.hpp"

namespace spine {

bool is_prime(Integer const& p);

// ν_p(r). An empty exponent is the +∞ marker returned for r = 0.
struct Valuation {
  std::optional<std::int64_t> exponent;

  bool is_infinite() const noexcept { return !exponent.has_value(); }
  bool operator==(Valuation const&) const = default;
};

// Throws Error(invalid_argument) if p is not prime.
Valuation nu_p(Integer const& p, Rational const& r);

// |r|_p = p^(-ν_p(r)) exactly, with |0|_p = 0.
Rational abs_p(Integer const& p, Rational const& r);

// r = p^valuation · (a/b) with a, b prime to p.
struct PAdicWitness {
  Integer p;
  Rational r;
  Valuation valuation;
  Rational norm;
  Rational unit_part;  // r · p^(-valuation); 0 when r = 0
};

PAdicWitness padic_witness(Integer const& p, Rational const& r);

struct DistinctnessRow {
  std::int64_t n;
  Rational abs_at_p;  // |pⁿ/qⁿ|_p = p^(-n)
  Rational abs_at_q;  // |pⁿ/qⁿ|_q = qⁿ
};

// The sequence r_n = pⁿ/qⁿ tends to 0 p-adically and to ∞ q-adically, which
// separates the p- and q-adic topologies on ℚ. Rows for 1 ≤ n ≤ n_max.
std::vector<DistinctnessRow> q_distinctness_witness(Integer const& p, Integer const& q,
                                                    std::int64_t n_max);

}  // namespace spine
