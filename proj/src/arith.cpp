#include "fermat/arith.hpp"

#include "fermat/error.hpp"

namespace fermat {

BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat pow_ui(const BigRat& base, unsigned long exp) {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt pth_root_floor(const BigInt& n, unsigned long p) {
  // mpz_root truncates toward zero; for negative n the floor is one below
  // unless the root is exact.
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), p);
  if (n < 0 && !exact) r -= 1;
  return r;
}

bool is_pth_power_free(const BigInt& n, unsigned long p) {
  if (n == 0) throw Error(Errc::bad_input, "is_pth_power_free: n must be nonzero");
  BigInt m = abs(n);
  if (m == 1) return true;
  BigInt bound = pth_root_floor(m, p);
  BigInt dp;
  for (BigInt d = 2; d <= bound; d += 1) {
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), p);
    if (mpz_divisible_p(m.get_mpz_t(), dp.get_mpz_t())) return false;
  }
  return true;
}

std::optional<BigInt> integer_pth_root(const BigInt& n, unsigned long p) {
  if (n < 0 && p % 2 == 0) return std::nullopt;
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), p);
  if (!exact) return std::nullopt;
  // mpz_root reports exactness, but verify with one exponentiation anyway.
  if (pow_ui(r, p) != n) return std::nullopt;
  return r;
}

std::optional<BigRat> rational_pth_root(const BigRat& q, unsigned long p) {
  BigInt num(mpq_numref(q.get_mpq_t()));
  BigInt den(mpq_denref(q.get_mpq_t()));
  auto rn = integer_pth_root(num, p);
  if (!rn) return std::nullopt;
  auto rd = integer_pth_root(den, p);
  if (!rd) return std::nullopt;
  BigRat s(*rn, *rd);
  s.canonicalize();
  return s;
}

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigRat parse_rational(const std::string& text) {
  BigRat q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw Error(Errc::bad_input, "malformed rational: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw Error(Errc::bad_input, "zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q) {
  return q.get_str();
}

} // namespace fermat
