#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke {

/// Integer coefficients of the e-th cyclotomic polynomial, ascending degree.
/// Built by dividing X^e - 1 by Phi_d for every proper divisor d of e.
const std::vector<i64>& cyclotomic_polynomial(unsigned e);

/*
 * Exact element of Q(zeta_e), stored as its coefficient vector in the power
 * basis 1, zeta, ..., zeta^{phi(e)-1}.  The vector is always reduced modulo
 * Phi_e, so two values of the same order are equal iff their coefficients
 * are.  Binary operations on values of different orders lift both operands
 * to Q(zeta_lcm) first.
 */
class CyclotomicRational
{
public:
    CyclotomicRational();
    CyclotomicRational(Rational r, unsigned order = 1);  // NOLINT(implicit)
    CyclotomicRational(long r) : CyclotomicRational(Rational(r)) {}  // NOLINT(implicit)
    CyclotomicRational(int r) : CyclotomicRational(Rational(r)) {}  // NOLINT(implicit)

    /// zeta_e^j for any integer j.
    static CyclotomicRational zeta_power(unsigned order, i64 j);

    /// sum_j coeffs[j] zeta_e^j with no restriction on coeffs.size().
    static CyclotomicRational from_powers(unsigned order, std::span<const Rational> coeffs);
    static CyclotomicRational from_powers(unsigned order, std::span<const Integer> coeffs);

    unsigned order() const { return order_; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error when the value is not rational.
    Rational rational_value() const;

    /// The same element written in Q(zeta_n); requires order() | n.
    CyclotomicRational lifted(unsigned n) const;

    CyclotomicRational pow(unsigned exp) const;
    std::complex<double> to_complex() const;
    double abs() const { return std::abs(to_complex()); }
    std::string to_string() const;

    CyclotomicRational& operator+=(const CyclotomicRational& o);
    CyclotomicRational& operator-=(const CyclotomicRational& o);
    CyclotomicRational& operator*=(const CyclotomicRational& o);
    CyclotomicRational& operator*=(const Rational& r);

    friend CyclotomicRational operator+(CyclotomicRational a, const CyclotomicRational& b) { return a += b; }
    friend CyclotomicRational operator-(CyclotomicRational a, const CyclotomicRational& b) { return a -= b; }
    friend CyclotomicRational operator*(CyclotomicRational a, const CyclotomicRational& b) { return a *= b; }
    friend CyclotomicRational operator*(CyclotomicRational a, const Rational& r) { return a *= r; }
    friend CyclotomicRational operator*(const Rational& r, CyclotomicRational a) { return a *= r; }
    CyclotomicRational operator-() const;

    friend bool operator==(const CyclotomicRational& a, const CyclotomicRational& b);

private:
    unsigned order_ = 1;
    std::vector<Rational> coeffs_;

    void reduce(std::vector<Rational> poly);
    void align(CyclotomicRational& o);
};

}  // namespace hecke
