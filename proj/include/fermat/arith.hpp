#ifndef FERMAT_ARITH_HPP
#define FERMAT_ARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fermat {

// Exact arithmetic only; nothing in this library ever rounds.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt pow_ui(const BigInt& base, unsigned long exp);
BigRat pow_ui(const BigRat& base, unsigned long exp);

/// Nonnegative gcd; gcd(0,0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Deterministic primality by trial division. Intended for exponents,
/// which are small; not a general-purpose primality test.
bool is_prime(unsigned long n);

/// Largest r with r^p <= n (p odd, so negative n is fine).
BigInt pth_root_floor(const BigInt& n, unsigned long p);

/// True iff no prime q has q^p | n. Checks candidate bases up to
/// floor(|n|^(1/p)) instead of factoring n. Rejects n = 0.
bool is_pth_power_free(const BigInt& n, unsigned long p);

/// Exact p-th root for odd p, or nullopt; the root carries the sign of n.
std::optional<BigInt> integer_pth_root(const BigInt& n, unsigned long p);

/// Exact p-th root of a rational in lowest terms: exists iff numerator
/// and denominator are both exact p-th powers.
std::optional<BigRat> rational_pth_root(const BigRat& q, unsigned long p);

/// Nonnegative r with r^2 = n, or nullopt (all negative n included).
std::optional<BigInt> integer_sqrt_exact(const BigInt& n);

/// Parses "n" or "n/d" into a canonicalized rational. Throws on malformed
/// input or zero denominator.
BigRat parse_rational(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const BigRat& q);

} // namespace fermat

#endif
