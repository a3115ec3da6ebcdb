#pragma once

// The measures mu_m = sum_{t^2 < 4m} H(4m - t^2) delta_{t / (2 sqrt m)} and their
// character-twisted analogues, moments, interval masses and sweeps.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hecke/arith.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/dirichlet.hpp"

namespace hecke {

using Decimal = boost::multiprecision::cpp_dec_float_50;

struct Atom
{
    i64 t;
    Rational weight;
};

struct DiscreteMeasure
{
    i64 m = 1;
    std::vector<Atom> atoms;  // t ascending, every t with t^2 < 4m

    Rational total_mass() const;
    /// t / (2 sqrt m) in floating point.
    double location(const Atom& a) const;
};

DiscreteMeasure build_measure(i64 m);

/// <mu_m, x^n>; exact, 0 for odd n.
Rational moment_x(i64 m, unsigned n);
/// <mu_m, U_l>; exact, 0 for odd l.
Rational moment_U(i64 m, unsigned l);

/// Mass of atoms with alpha <= t/(2 sqrt m) <= beta, decided exactly.
Rational interval_mass(i64 m, const Rational& alpha, const Rational& beta);
Rational interval_mass(const DiscreteMeasure& mu, const Rational& alpha, const Rational& beta);

/// (2/pi) int_alpha^beta sqrt(1 - x^2) dx.
Decimal semicircle_mass(const Rational& alpha, const Rational& beta);

struct GridCell
{
    Rational alpha, beta;
    double empirical;   // interval mass / total mass
    double semicircle;
    double difference;  // |empirical - semicircle|
};

struct EquidistRow
{
    unsigned nu;
    i64 m;
    Rational total_mass;
    double scaled_mass;      // total / (2 q^nu), tends to 1/(1 - 1/q)
    double normalized_mass;  // (1 - 1/q) total / (2 q^nu), tends to 1
    double discrepancy;      // max cell difference
    std::vector<GridCell> cells;
};

std::vector<EquidistRow> equidist_report(i64 q, const std::vector<unsigned>& nus, unsigned grid);

struct BoundRow
{
    unsigned n;
    unsigned nu;
    Rational moment_x;       // <mu_{q^nu}, x^n>
    Rational moment_U;       // <mu_{q^nu}, U_n>
    double x_scaled;         // |moment_x| q^{-nu/2}
    double U_scaled;         // |moment_U| q^{-nu/2}
    double U_eps_scaled;     // |moment_U| q^{-nu (1/2 + eps)}
    double U_running_max;    // of U_eps_scaled over nu' <= nu
};

struct BoundSeries
{
    unsigned n;
    std::vector<BoundRow> rows;
    /// The maximum of U_eps_scaled is reached before the last nu.
    bool max_before_last = false;
};

/// Even n in [2, n_max], nu in [0, nu_max].
std::vector<BoundSeries> bound_sweep(i64 q, unsigned n_max, unsigned nu_max, double eps = 0.1);

/// <mu_m, U_l> for m = prod primes[i]^exponents[i].
Rational multiprime_moment(const std::vector<i64>& primes, const std::vector<unsigned>& exponents, unsigned l);

struct MultiprimeRow
{
    std::vector<unsigned> exponents;
    i64 m;
    Rational value;
    double scaled;  // |value| m^{-power}
};

/// Every exponent tuple with entries <= nu_max.
std::vector<MultiprimeRow> multiprime_sweep(const std::vector<i64>& primes, unsigned nu_max, unsigned l,
                                            double power = 0.6);

/// <mu_nu^{N,chi,q}, 1> = (2 q^nu)^{-1} sum_t H_{N,chi}(4 q^nu - t^2).
CyclotomicRational twisted_mass(const DirichletCharacter& chi, i64 q, unsigned nu);
/// (2 q^nu)^{-1} sum_t H_{N,chi}(4 q^nu - t^2) U_l(t / (2 q^{nu/2})); l even.
CyclotomicRational twisted_moment_U(const DirichletCharacter& chi, i64 q, unsigned nu, unsigned l);

}  // namespace hecke
