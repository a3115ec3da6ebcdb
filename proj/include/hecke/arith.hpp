#pragma once

// Exact integer/rational types and the elementary number theory shared by
// every module (factorization, divisor functions, Kronecker symbol).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;
using i64 = std::int64_t;

struct PrimePower {
    i64 prime;
    int exponent;
};

/// Nonnegative residue of a modulo n (n > 0).
i64 mod(i64 a, i64 n);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 powmod(i64 base, i64 exp, i64 n);

/// floor(sqrt(n)) for n >= 0.
i64 isqrt(i64 n);
bool is_square(i64 n);
bool is_prime(i64 n);
bool is_squarefree(i64 n);

/// Trial-division factorization of |n|, n != 0; primes ascending.
std::vector<PrimePower> factorize(i64 n);
/// Positive divisors of n >= 1, ascending.
std::vector<i64> divisors(i64 n);

i64 euler_phi(i64 n);
/// Dedekind psi: n prod_{p|n} (1 + 1/p).
i64 dedekind_psi(i64 n);
/// Sum of positive divisors.
i64 sigma(i64 n);

/// Kronecker symbol (a/n) for arbitrary integers, including n even and n <= 0.
int kronecker(i64 a, i64 n);

/// num/den in canonical form; throws on a zero denominator.
Rational fraction(const Integer& num, const Integer& den);

Integer ipow(i64 base, unsigned exp);
Rational rpow(const Rational& base, int exp);

/// "p/q" with q >= 1 always present.
std::string to_string(const Rational& r);
/// Accepts "p", "p/q" or a decimal like "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace hecke
