#pragma once

#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/cyclotomic.hpp"

namespace hecke {

/// One generator of (Z/NZ)^x in the CRT decomposition: a generator of the
/// cyclic factor it lives in, lifted to Z/NZ.
struct UnitGenerator
{
    i64 prime;        // the prime whose component this generator belongs to
    i64 prime_power;  // modulus of that component
    i64 residue;      // generator modulo prime_power
    i64 order;
};

/// Generators in prime order; for 2^k, k >= 3, the pair (-1, 5).
std::vector<UnitGenerator> unit_group_generators(i64 N);

/*
 * Dirichlet character modulo N, given by exponents a_i on the generators
 * g_i of (Z/NZ)^x: chi(g_i) = exp(2 pi i a_i / ord(g_i)).  Values are kept
 * as a table of exponents j with chi(x) = zeta_e^j, e = order of chi.
 */
class DirichletCharacter
{
public:
    static DirichletCharacter trivial(i64 N);
    static DirichletCharacter from_exponents(i64 N, std::vector<i64> exponents);

    i64 modulus() const { return modulus_; }
    unsigned order() const { return order_; }
    i64 conductor() const { return conductor_; }
    /// chi(-1) as +1 or -1.
    int parity() const;
    bool is_trivial() const { return order_ == 1; }
    const std::vector<i64>& exponents() const { return exponents_; }

    /// j with chi(x) = zeta_e^j, or -1 when gcd(x, N) > 1.
    int exponent_at(i64 x) const { return table_[static_cast<std::size_t>(mod(x, modulus_))]; }
    CyclotomicRational operator()(i64 x) const;
    std::complex<double> complex_value(i64 x) const;

    /// "trivial" or "exps=a,b,..."
    std::string label() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
    {
        return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
    }

private:
    DirichletCharacter() = default;

    i64 modulus_ = 1;
    std::vector<i64> exponents_;
    unsigned order_ = 1;
    i64 conductor_ = 1;
    std::vector<int> table_;
};

/// All phi(N) characters, exponent tuples in lexicographic order.
std::vector<DirichletCharacter> enumerate_characters(i64 N);
/// Characters mod N with chi(-1) = (-1)^k.
std::vector<DirichletCharacter> characters_with_parity(i64 N, int k);

/// Minimal modulus through which chi factors, by direct search over divisors of N.
i64 conductor(const DirichletCharacter& chi);

/// chi = chi_c x chi_c', chi_c carrying the prime-power parts of f_chi that divide c.
struct CharacterSplit
{
    i64 c;
    i64 c1;
    i64 c2;
    DirichletCharacter chi_c;
    DirichletCharacter chi_c_prime;
};

CharacterSplit split_at(const DirichletCharacter& chi, i64 c);

/// Order of q in (Z/lZ)^x; 1 for l = 1.
i64 mult_order(i64 q, i64 l);

}  // namespace hecke
