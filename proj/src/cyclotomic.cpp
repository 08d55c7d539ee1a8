#include "spine/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "spine/error.hpp"

namespace spine {

namespace {

struct PrimePower {
  std::uint64_t p;
  unsigned e;
  std::uint64_t q;    // p^e
  std::uint64_t phi;  // (p-1)p^(e-1)
};

// Factorisation of N and the mixed-radix strides of the tensor basis.
struct Layout {
  std::uint64_t n;
  std::vector<PrimePower> factors;
  std::vector<std::uint64_t> stride;
  std::uint64_t size = 1;

  explicit Layout(std::uint64_t n_) : n(n_) {
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      PrimePower f{p, 0, 1, 0};
      while (m % p == 0) {
        m /= p;
        ++f.e;
        f.q *= p;
      }
      factors.push_back(f);
    }
    if (m > 1) factors.push_back({m, 1, m, 0});
    for (auto& f : factors) {
      f.phi = f.q / f.p * (f.p - 1);
      stride.push_back(size);
      size *= f.phi;
    }
  }

  std::vector<std::uint64_t> decode(std::uint64_t index) const {
    std::vector<std::uint64_t> k(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      k[i] = index / stride[i] % factors[i].phi;
    }
    return k;
  }
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = std::int64_t(m), new_r = std::int64_t(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += std::int64_t(m);
  return std::uint64_t(t);
}

void require_exact_range(std::uint64_t n) {
  if (n > kMaxExactConductor) {
    throw Error(ErrorKind::size_limit,
                "conductor " + std::to_string(n) + " exceeds the exact limit " +
                    std::to_string(kMaxExactConductor));
  }
}

// Adds c · ∏ ζ_{q_i}^{j_i} (0 ≤ j_i < q_i) to `out`, rewriting exponents at or
// beyond φ(q) through Φ_q(x) = Σ_{t<p} x^{t·q/p}.
void accumulate(Layout const& layout, std::vector<std::uint64_t> const& exps,
                Rational const& c, std::vector<Rational>& out) {
  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t index, bool negate) -> void {
    if (i == layout.factors.size()) {
      if (negate) {
        out[index] -= c;
      } else {
        out[index] += c;
      }
      return;
    }
    auto const& f = layout.factors[i];
    std::uint64_t j = exps[i];
    if (j < f.phi) {
      self(self, i + 1, index + j * layout.stride[i], negate);
      return;
    }
    std::uint64_t step = f.q / f.p;
    std::uint64_t r = j - f.phi;  // j = (p-1)·step + r, r < step
    for (std::uint64_t t = 0; t + 1 < f.p; ++t) {
      self(self, i + 1, index + (t * step + r) * layout.stride[i], !negate);
    }
  };
  recurse(recurse, 0, 0, false);
}

}  // namespace

std::uint64_t phase_conductor(Rational const& phase) {
  Rational f = frac(phase);
  if (!f.get_den().fits_ulong_p()) return UINT64_MAX;
  return f.get_den().get_ui();
}

std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b) return UINT64_MAX;
  return q * b;
}

Cyclotomic::Cyclotomic() : _n(1), _c{Rational(0)} {}

Cyclotomic::Cyclotomic(Rational r) : _n(1), _c{std::move(r)} {}

Cyclotomic::Cyclotomic(std::uint64_t n, std::vector<Rational> c) : _n(n), _c(std::move(c)) {
  canonicalise();
}

Cyclotomic Cyclotomic::root_of_unity(Rational const& phase) {
  Rational f = frac(phase);
  std::uint64_t n = phase_conductor(f);
  require_exact_range(n);
  if (n == 1) return Cyclotomic(Rational(1));
  std::uint64_t a = f.get_num().get_ui();
  Layout layout(n);
  std::vector<std::uint64_t> exps;
  for (auto const& pp : layout.factors) {
    std::uint64_t cofactor = n / pp.q;
    exps.push_back(a % pp.q * inverse_mod(cofactor % pp.q, pp.q) % pp.q);
  }
  std::vector<Rational> c(layout.size, Rational(0));
  accumulate(layout, exps, Rational(1), c);
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::gaussian(Rational const& re, Rational const& im) {
  return Cyclotomic(4, {re, im});
}

Cyclotomic Cyclotomic::from_coordinates(std::uint64_t conductor, std::vector<Rational> coords) {
  if (conductor == 0 || conductor % 4 == 2) {
    throw Error(ErrorKind::invalid_argument, "invalid conductor " + std::to_string(conductor));
  }
  require_exact_range(conductor);
  if (coords.size() != Layout(conductor).size) {
    throw Error(ErrorKind::invalid_argument, "coordinate count does not match the conductor");
  }
  Cyclotomic z(conductor, coords);
  if (z._n != conductor || z._c != coords) {
    throw Error(ErrorKind::invalid_argument, "cyclotomic coordinates are not canonical");
  }
  return z;
}

void Cyclotomic::canonicalise() {
  bool zero = true;
  for (auto const& x : _c) zero = zero && x == 0;
  if (zero) {
    _n = 1;
    _c.assign(1, Rational(0));
    return;
  }
  bool changed = true;
  while (changed && _n > 1) {
    changed = false;
    Layout layout(_n);
    for (std::size_t i = 0; i < layout.factors.size(); ++i) {
      auto const& f = layout.factors[i];
      bool descends = true;
      for (std::uint64_t idx = 0; idx < _c.size() && descends; ++idx) {
        if (_c[idx] == 0) continue;
        std::uint64_t k = idx / layout.stride[i] % f.phi;
        descends = f.e >= 2 ? k % f.p == 0 : k == 0;
      }
      if (!descends) continue;
      Layout smaller(_n / f.p);
      std::vector<Rational> c(smaller.size, Rational(0));
      for (std::uint64_t idx = 0; idx < _c.size(); ++idx) {
        if (_c[idx] == 0) continue;
        auto k = layout.decode(idx);
        std::uint64_t target = 0;
        for (std::size_t s = 0; s < smaller.factors.size(); ++s) {
          // Factor order is preserved; the descended prime either keeps a
          // smaller exponent (k/p) or disappears.
          std::size_t from = s;
          if (f.e == 1 && s >= i) from = s + 1;
          std::uint64_t kk = k[from];
          if (from == i) kk /= f.p;
          target += kk * smaller.stride[s];
        }
        c[target] = std::move(_c[idx]);
      }
      _n = smaller.n;
      _c = std::move(c);
      changed = true;
      break;
    }
  }
}

Cyclotomic Cyclotomic::lifted(std::uint64_t n) const {
  if (n == _n) return *this;
  Layout from(_n), to(n);
  std::vector<Rational> c(to.size, Rational(0));
  for (std::uint64_t idx = 0; idx < _c.size(); ++idx) {
    if (_c[idx] == 0) continue;
    auto k = from.decode(idx);
    std::uint64_t target = 0;
    std::size_t j = 0;
    for (std::size_t s = 0; s < to.factors.size(); ++s) {
      auto const& f = to.factors[s];
      std::uint64_t kk = 0;
      if (j < from.factors.size() && from.factors[j].p == f.p) {
        kk = k[j] * (f.q / from.factors[j].q);
        ++j;
      }
      target += kk * to.stride[s];
    }
    c[target] = _c[idx];
  }
  Cyclotomic z;
  z._n = n;
  z._c = std::move(c);
  return z;
}

bool Cyclotomic::is_zero() const { return _n == 1 && _c[0] == 0; }

Rational const& Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::invalid_argument, "not a rational number");
  return _c[0];
}

Rational Cyclotomic::real_part() const {
  if (!is_gaussian()) throw Error(ErrorKind::invalid_argument, "not a Gaussian rational");
  return _c[0];
}

Rational Cyclotomic::imag_part() const {
  if (!is_gaussian()) throw Error(ErrorKind::invalid_argument, "not a Gaussian rational");
  return _n == 1 ? Rational(0) : _c[1];
}

Cyclotomic Cyclotomic::conjugate() const {
  if (_n == 1) return *this;
  Layout layout(_n);
  std::vector<Rational> c(layout.size, Rational(0));
  for (std::uint64_t idx = 0; idx < _c.size(); ++idx) {
    if (_c[idx] == 0) continue;
    auto k = layout.decode(idx);
    for (std::size_t i = 0; i < k.size(); ++i) {
      k[i] = (layout.factors[i].q - k[i]) % layout.factors[i].q;
    }
    accumulate(layout, k, _c[idx], c);
  }
  return Cyclotomic(_n, std::move(c));
}

std::complex<double> Cyclotomic::to_complex() const {
  Layout layout(_n);
  long double re = 0, im = 0;
  for (std::uint64_t idx = 0; idx < _c.size(); ++idx) {
    if (_c[idx] == 0) continue;
    auto k = layout.decode(idx);
    long double angle = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      angle += static_cast<long double>(k[i]) / layout.factors[i].q;
    }
    angle *= 2 * std::numbers::pi_v<long double>;
    long double c = _c[idx].get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::optional<Rational> Cyclotomic::exact_modulus() const {
  if (is_rational()) return abs(_c[0]);
  Cyclotomic m2 = *this * conjugate();
  if (!m2.is_rational()) return std::nullopt;
  Rational const& r = m2.rational_value();
  if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  return Rational(num, den);
}

double Cyclotomic::modulus() const { return std::abs(to_complex()); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& x : z._c) x = -x;
  return z;
}

Cyclotomic operator+(Cyclotomic const& a, Cyclotomic const& b) {
  if (a._n == 1 && b._n == 1) return Cyclotomic(a._c[0] + b._c[0]);
  std::uint64_t n = lcm_conductor(a._n, b._n);
  require_exact_range(n);
  Cyclotomic x = a.lifted(n), y = b.lifted(n);
  for (std::size_t i = 0; i < x._c.size(); ++i) x._c[i] += y._c[i];
  x.canonicalise();
  return x;
}

Cyclotomic operator-(Cyclotomic const& a, Cyclotomic const& b) { return a + (-b); }

Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b) {
  if (a._n == 1 && b._n == 1) return Cyclotomic(a._c[0] * b._c[0]);
  if (a._n == 1 || b._n == 1) {
    Cyclotomic const& scalar = a._n == 1 ? a : b;
    Cyclotomic z = a._n == 1 ? b : a;
    for (auto& x : z._c) x *= scalar._c[0];
    z.canonicalise();
    return z;
  }
  std::uint64_t n = lcm_conductor(a._n, b._n);
  require_exact_range(n);
  Layout layout(n);
  Cyclotomic x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> c(layout.size, Rational(0));
  std::vector<std::uint64_t> exps(layout.factors.size());
  for (std::uint64_t i = 0; i < x._c.size(); ++i) {
    if (x._c[i] == 0) continue;
    auto ki = layout.decode(i);
    for (std::uint64_t j = 0; j < y._c.size(); ++j) {
      if (y._c[j] == 0) continue;
      auto kj = layout.decode(j);
      for (std::size_t s = 0; s < exps.size(); ++s) {
        exps[s] = (ki[s] + kj[s]) % layout.factors[s].q;
      }
      accumulate(layout, exps, x._c[i] * y._c[j], c);
    }
  }
  return Cyclotomic(n, std::move(c));
}

std::string to_string(Cyclotomic const& z) {
  if (z.is_rational()) return z.rational_value().get_str();
  Layout layout(z.conductor());
  std::string out;
  auto const& c = z.coordinates();
  for (std::uint64_t idx = 0; idx < c.size(); ++idx) {
    if (c[idx] == 0) continue;
    auto k = layout.decode(idx);
    std::uint64_t power = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      power = (power + k[i] * (layout.n / layout.factors[i].q)) % layout.n;
    }
    if (!out.empty()) out += " + ";
    if (power == 0) {
      out += c[idx].get_str();
      continue;
    }
    out += c[idx].get_str() + "*E(" + std::to_string(layout.n) + ")";
    if (power != 1) out += "^" + std::to_string(power);
  }
  return out;
}

std::complex<double> CharacterValue::numeric() const {
  if (is_exact()) return exact().to_complex();
  return std::get<std::complex<double>>(_v);
}

CharacterValue operator*(CharacterValue const& a, CharacterValue const& b) {
  if (a.is_exact() && b.is_exact() &&
      lcm_conductor(a.exact().conductor(), b.exact().conductor()) <= kMaxExactConductor) {
    return CharacterValue(a.exact() * b.exact());
  }
  return CharacterValue(a.numeric() * b.numeric());
}

CharacterValue operator+(CharacterValue const& a, CharacterValue const& b) {
  if (a.is_exact() && b.is_exact() &&
      lcm_conductor(a.exact().conductor(), b.exact().conductor()) <= kMaxExactConductor) {
    return CharacterValue(a.exact() + b.exact());
  }
  return CharacterValue(a.numeric() + b.numeric());
}

bool agrees(CharacterValue const& a, CharacterValue const& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return std::abs(a.numeric() - b.numeric()) <= tolerance;
}

}  // namespace spine
