#pragma once

// Deliberately naive reference computations, independent of the trace
// formula pipeline: q-expansions of eta products, dimension formulas,
// elliptic curve point counts and divisor sums.

#include <array>
#include <utility>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke::oracle {

/// Coefficients a_0..a_M of q prod_{n>=1} (1 - q^n)^24; a_n = tau(n).
std::vector<Integer> delta_expansion(unsigned M);

/*
 * prod_i eta(d_i z)^{r_i} with r_i >= 0 and sum d_i r_i divisible by 24.
 * Returned as coefficients a_0..a_M of the q-expansion (the leading power
 * q^{sum d_i r_i / 24} included).
 */
std::vector<Integer> eta_product(const std::vector<std::pair<unsigned, unsigned>>& factors, unsigned M);

/// dim S_k(SL_2(Z)); 0 for odd or negative k.
i64 dim_Sk_level1(int k);
/// dim S_k(Gamma_0(N)) with trivial character, k >= 2 even.
i64 dim_Sk_gamma0(int k, i64 N);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
using Weierstrass = std::array<i64, 5>;

Integer ec_discriminant(const Weierstrass& E);
/// p + 1 - #E(F_p) by exhaustive count; throws at bad reduction.
i64 ec_ap(const Weierstrass& E, i64 p);
/// a_n for n built from primes of good reduction, via the Hecke recurrences.
Integer ec_an(const Weierstrass& E, i64 n);

/// (sigma(m), sum_{d | m} min(d, m/d)) by direct enumeration.
std::pair<i64, i64> sigma_and_min_sum(i64 m);
/// sum_{t^2 < 4m} H(4m - t^2) = 2 sigma(m) - sum min(d, m/d) + [m square] / 6.
Rational class_number_mass(i64 m);

/// a(p^0..p^nu) from a(p): a(p^{j+1}) = a(p) a(p^j) - chi_p p^{k-1} a(p^{j-1}).
std::vector<Integer> hecke_prime_power(const Integer& ap, i64 p, int k, int chi_p, unsigned nu);

}  // namespace hecke::oracle
