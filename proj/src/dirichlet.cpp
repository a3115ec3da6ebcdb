#include "hecke/dirichlet.hpp"

#include <numbers>
#include <stdexcept>

namespace hecke {

namespace {

i64 primitive_root_odd(i64 p, int e)
{
    i64 phi = p - 1;
    auto fac = factorize(phi);
    for (i64 g = 2;; ++g) {
        bool ok = true;
        for (auto const& pp : fac)
            if (powmod(g, phi / pp.prime, p) == 1) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (e >= 2 && powmod(g, p - 1, p * p) == 1)
            g += p;
        return g;
    }
}

// Discrete-log table over residues mod the generator's component; -1 off the unit group.
std::vector<std::vector<i64>> log_tables(const std::vector<UnitGenerator>& gens)
{
    std::vector<std::vector<i64>> logs(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto const& g = gens[i];
        logs[i].assign(static_cast<std::size_t>(g.prime_power), -1);
        if (g.prime != 2 || g.prime_power == 4) {
            i64 x = 1;
            for (i64 k = 0; k < g.order; ++k) {
                logs[i][static_cast<std::size_t>(x)] = k;
                x = x * g.residue % g.prime_power;
            }
            continue;
        }
        // 2^k with k >= 3: x = (-1)^u 5^v
        bool is_sign = g.residue == g.prime_power - 1;
        i64 P = g.prime_power;
        i64 five = 1;
        for (i64 v = 0; v < P / 4; ++v) {
            logs[i][static_cast<std::size_t>(five)] = is_sign ? 0 : v;
            logs[i][static_cast<std::size_t>(P - five)] = is_sign ? 1 : v;
            five = five * 5 % P;
        }
    }
    return logs;
}

}  // namespace

std::vector<UnitGenerator> unit_group_generators(i64 N)
{
    if (N < 1)
        throw std::invalid_argument("modulus must be positive");
    std::vector<UnitGenerator> gens;
    if (N == 1)
        return gens;
    for (auto const& [p, e] : factorize(N)) {
        i64 P = 1;
        for (int i = 0; i < e; ++i)
            P *= p;
        if (p == 2) {
            if (e == 2)
                gens.push_back({2, 4, 3, 2});
            else if (e >= 3) {
                gens.push_back({2, P, P - 1, 2});
                gens.push_back({2, P, 5, P / 4});
            }
        } else {
            gens.push_back({p, P, primitive_root_odd(p, e), P / p * (p - 1)});
        }
    }
    return gens;
}

DirichletCharacter DirichletCharacter::trivial(i64 N)
{
    return from_exponents(N, std::vector<i64>(unit_group_generators(N).size(), 0));
}

DirichletCharacter DirichletCharacter::from_exponents(i64 N, std::vector<i64> exponents)
{
    auto gens = unit_group_generators(N);
    if (exponents.size() != gens.size())
        throw std::invalid_argument("character mod " + std::to_string(N) + " needs " + std::to_string(gens.size()) +
                                    " generator exponents");
    i64 E = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        exponents[i] = mod(exponents[i], gens[i].order);
        E = lcm(E, gens[i].order);
    }
    auto logs = log_tables(gens);

    DirichletCharacter chi;
    chi.modulus_ = N;
    chi.exponents_ = std::move(exponents);
    std::vector<i64> raw(static_cast<std::size_t>(N), -1);
    i64 g = E;
    for (i64 x = 0; x < N; ++x) {
        if (gcd(x, N) != 1)
            continue;
        i64 s = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            i64 lg = logs[i][static_cast<std::size_t>(x % gens[i].prime_power)];
            s = (s + chi.exponents_[i] * lg % gens[i].order * (E / gens[i].order)) % E;
        }
        raw[static_cast<std::size_t>(x)] = s;
        g = gcd(g, s);
    }
    chi.order_ = static_cast<unsigned>(E / g);
    chi.table_.resize(static_cast<std::size_t>(N));
    for (i64 x = 0; x < N; ++x)
        chi.table_[static_cast<std::size_t>(x)] = raw[static_cast<std::size_t>(x)] < 0 ? -1 : static_cast<int>(raw[static_cast<std::size_t>(x)] / g);
    chi.conductor_ = hecke::conductor(chi);
    return chi;
}

int DirichletCharacter::parity() const
{
    return exponent_at(-1) == 0 ? 1 : -1;
}

CyclotomicRational DirichletCharacter::operator()(i64 x) const
{
    int j = exponent_at(x);
    if (j < 0)
        return CyclotomicRational(Rational(0), order_);
    return CyclotomicRational::zeta_power(order_, j);
}

std::complex<double> DirichletCharacter::complex_value(i64 x) const
{
    int j = exponent_at(x);
    if (j < 0)
        return 0.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * j / order_);
}

std::string DirichletCharacter::label() const
{
    if (is_trivial())
        return "trivial";
    std::string s = "exps=";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(exponents_[i]);
    }
    return s;
}

std::vector<DirichletCharacter> enumerate_characters(i64 N)
{
    auto gens = unit_group_generators(N);
    std::vector<DirichletCharacter> out;
    std::vector<i64> exps(gens.size(), 0);
    while (true) {
        out.push_back(DirichletCharacter::from_exponents(N, exps));
        bool advanced = false;
        for (std::size_t i = gens.size(); i-- > 0;) {
            if (++exps[i] < gens[i].order) {
                advanced = true;
                break;
            }
            exps[i] = 0;
        }
        if (!advanced)
            break;
    }
    return out;
}

std::vector<DirichletCharacter> characters_with_parity(i64 N, int k)
{
    int want = (k % 2 == 0) ? 1 : -1;
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_characters(N))
        if (chi.parity() == want)
            out.push_back(std::move(chi));
    return out;
}

i64 conductor(const DirichletCharacter& chi)
{
    i64 N = chi.modulus();
    for (i64 f : divisors(N)) {
        bool factors = true;
        for (i64 x = 1; x < N && factors; x += f)
            if (gcd(x, N) == 1 && chi.exponent_at(x) != 0)
                factors = false;
        if (factors)
            return f;
    }
    return N;
}

CharacterSplit split_at(const DirichletCharacter& chi, i64 c)
{
    i64 N = chi.modulus();
    if (c < 1 || N % c != 0)
        throw std::invalid_argument("split_at: " + std::to_string(c) + " does not divide " + std::to_string(N));
    auto gens = unit_group_generators(N);
    std::vector<i64> own(gens.size(), 0), rest(gens.size(), 0);
    i64 c1 = 1;
    i64 f = chi.conductor();
    for (auto const& [p, e] : factorize(N)) {
        i64 pr = 1;
        while (f % (pr * p) == 0)
            pr *= p;
        bool to_c = pr > 1 && c % pr == 0;
        if (to_c)
            c1 *= pr;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].prime == p)
                (to_c ? own : rest)[i] = chi.exponents()[i];
    }
    return {c, c1, c / c1, DirichletCharacter::from_exponents(N, own), DirichletCharacter::from_exponents(N, rest)};
}

i64 mult_order(i64 q, i64 l)
{
    if (l < 1)
        throw std::invalid_argument("mult_order: modulus must be positive");
    if (l == 1)
        return 1;
    if (gcd(q, l) != 1)
        throw std::invalid_argument("mult_order: q not a unit mod l");
    i64 x = mod(q, l), k = 1;
    while (x != 1) {
        x = x * mod(q, l) % l;
        ++k;
    }
    return k;
}

}  // namespace hecke
