#include "spine/padic.hpp"

#include "spine/error.hpp"

namespace spine {

namespace {

void require_prime(Integer const& p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::invalid_argument, p.get_str() + " is not prime");
  }
}

std::int64_t strip(Integer& value, Integer const& p) {
  std::int64_t k = 0;
  while (value != 0 && mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

Rational power(Integer const& p, std::int64_t e) {
  Integer q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), q) : Rational(q);
}

}  // namespace

bool is_prime(Integer const& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Valuation nu_p(Integer const& p, Rational const& r) {
  require_prime(p);
  if (r == 0) return {};
  Integer num = r.get_num(), den = r.get_den();
  return {strip(num, p) - strip(den, p)};
}

Rational abs_p(Integer const& p, Rational const& r) {
  auto v = nu_p(p, r);
  if (v.is_infinite()) return 0;
  return power(p, -*v.exponent);
}

PAdicWitness padic_witness(Integer const& p, Rational const& r) {
  auto v = nu_p(p, r);
  Rational unit = v.is_infinite() ? Rational(0) : r * power(p, -*v.exponent);
  return {p, r, v, abs_p(p, r), unit};
}

std::vector<DistinctnessRow> q_distinctness_witness(Integer const& p, Integer const& q,
                                                    std::int64_t n_max) {
  require_prime(p);
  require_prime(q);
  if (p == q) throw Error(ErrorKind::invalid_argument, "p and q must be distinct primes");
  if (n_max < 1) throw Error(ErrorKind::invalid_argument, "n_max must be at least 1");
  std::vector<DistinctnessRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    Rational r = power(p, n) / power(q, n);
    rows.push_back({n, abs_p(p, r), abs_p(q, r)});
  }
  return rows;
}

}  // namespace spine
