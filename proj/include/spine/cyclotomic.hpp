#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spine/rational.hpp"

namespace spine {

// Largest conductor handled exactly. Beyond it, callers fall back to
// double precision.
inline constexpr std::uint64_t kMaxExactConductor = 20000;

// An element of the cyclotomic field ℚ(ζ_N), ζ_N = e^{2πi/N}, stored at its
// minimal conductor N (never ≡ 2 mod 4). The coordinates are taken in the
// tensor-product basis
//
//     ∏_{p^e ∥ N} ζ_{p^e}^{k_p},   0 ≤ k_p < φ(p^e),
//
// which contains the basis of every subfield ℚ(ζ_M), M | N. The element
// lies in ℚ(ζ_M) exactly when its coordinates vanish off that sub-basis, so
// the canonical form is unique and equality is structural.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(Rational r);  // NOLINT: rationals embed implicitly
  Cyclotomic(int r) : Cyclotomic(Rational(r)) {}

  // e^{2πi·phase}.
  static Cyclotomic root_of_unity(Rational const& phase);
  static Cyclotomic gaussian(Rational const& re, Rational const& im);
  // Inverse of conductor()/coordinates(); throws Error(invalid_argument)
  // unless the input is already canonical.
  static Cyclotomic from_coordinates(std::uint64_t conductor, std::vector<Rational> coords);

  std::uint64_t conductor() const noexcept { return _n; }
  std::vector<Rational> const& coordinates() const noexcept { return _c; }

  bool is_zero() const;
  bool is_rational() const noexcept { return _n == 1; }
  bool is_gaussian() const noexcept { return _n == 1 || _n == 4; }
  Rational const& rational_value() const;  // requires is_rational()
  Rational real_part() const;              // requires is_gaussian()
  Rational imag_part() const;              // requires is_gaussian()

  Cyclotomic conjugate() const;
  std::complex<double> to_complex() const;

  // |z| as an exact rational when |z|² is the square of a rational.
  std::optional<Rational> exact_modulus() const;
  double modulus() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic const& a, Cyclotomic const& b);
  friend Cyclotomic operator-(Cyclotomic const& a, Cyclotomic const& b);
  friend Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b);
  Cyclotomic& operator+=(Cyclotomic const& b) { return *this = *this + b; }
  Cyclotomic& operator*=(Cyclotomic const& b) { return *this = *this * b; }

  bool operator==(Cyclotomic const& b) const = default;

 private:
  Cyclotomic(std::uint64_t n, std::vector<Rational> c);
  void canonicalise();
  Cyclotomic lifted(std::uint64_t n) const;

  std::uint64_t _n;
  std::vector<Rational> _c;
};

// Sum of c·E(N)^k terms in the power basis of the conductor, GAP style:
// "1/2", "3 + -1*E(4)", "1/2*E(3) + ...".
std::string to_string(Cyclotomic const& z);

// Conductor of e^{2πi·phase}, i.e. the reduced denominator of the phase.
std::uint64_t phase_conductor(Rational const& phase);

std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b);

// A character value: exact while every phase is rational and the conductor
// stays within kMaxExactConductor, double precision otherwise.
class CharacterValue {
 public:
  CharacterValue(Cyclotomic z) : _v(std::move(z)) {}
  CharacterValue(std::complex<double> z) : _v(z) {}

  bool is_exact() const noexcept { return std::holds_alternative<Cyclotomic>(_v); }
  Cyclotomic const& exact() const { return std::get<Cyclotomic>(_v); }
  std::complex<double> numeric() const;

  friend CharacterValue operator*(CharacterValue const& a, CharacterValue const& b);
  friend CharacterValue operator+(CharacterValue const& a, CharacterValue const& b);

 private:
  std::variant<Cyclotomic, std::complex<double>> _v;
};

inline constexpr double kNumericTolerance = 1e-9;

// Exact equality when both sides are exact; |a - b| ≤ tolerance otherwise.
bool agrees(CharacterValue const& a, CharacterValue const& b,
            double tolerance = kNumericTolerance);

}  // namespace spine
