#include "hecke/oracle.hpp"

#include <stdexcept>

namespace hecke::oracle {

namespace {

using Poly = std::vector<Integer>;

Poly multiply(const Poly& a, const Poly& b, unsigned M)
{
    Poly c(M + 1, 0);
    for (unsigned i = 0; i <= M && i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (unsigned j = 0; i + j <= M && j < b.size(); ++j)
            if (b[j] != 0)
                c[i + j] += a[i] * b[j];
    }
    return c;
}

Poly power(Poly base, unsigned e, unsigned M)
{
    Poly result(M + 1, 0);
    result[0] = 1;
    while (e) {
        if (e & 1)
            result = multiply(result, base, M);
        e >>= 1;
        if (e)
            base = multiply(base, base, M);
    }
    return result;
}

// prod_{n >= 1} (1 - q^{d n}) from Euler's pentagonal number theorem.
Poly euler_product(unsigned d, unsigned M)
{
    Poly p(M + 1, 0);
    for (i64 k = 0;; ++k) {
        bool any = false;
        for (int sign : {1, -1}) {
            if (k == 0 && sign < 0)
                continue;
            i64 s = sign * k;
            i64 pent = s * (3 * s - 1) / 2 * d;
            if (pent > static_cast<i64>(M))
                continue;
            any = true;
            p[static_cast<std::size_t>(pent)] += (k % 2 == 0) ? 1 : -1;
        }
        if (!any && k * (3 * k - 1) / 2 * static_cast<i64>(d) > static_cast<i64>(M))
            break;
    }
    return p;
}

}  // namespace

std::vector<Integer> eta_product(const std::vector<std::pair<unsigned, unsigned>>& factors, unsigned M)
{
    unsigned weight24 = 0;
    for (auto [d, r] : factors) {
        if (d == 0)
            throw std::invalid_argument("eta_product: d must be positive");
        weight24 += d * r;
    }
    if (weight24 % 24)
        throw std::invalid_argument("eta_product: sum d r must be divisible by 24");
    unsigned lead = weight24 / 24;
    Poly out(M + 1, 0);
    if (lead > M)
        return out;
    unsigned L = M - lead;
    Poly prod(L + 1, 0);
    prod[0] = 1;
    for (auto [d, r] : factors)
        prod = multiply(prod, power(euler_product(d, L), r, L), L);
    for (unsigned i = 0; i <= L; ++i)
        out[i + lead] = prod[i];
    return out;
}

std::vector<Integer> delta_expansion(unsigned M)
{
    return eta_product({{1, 24}}, M);
}

i64 dim_Sk_level1(int k)
{
    if (k < 0 || k % 2)
        return 0;
    if (k == 2)
        return 0;
    i64 d = k / 12;
    if (k % 12 == 2)
        return d - 1;
    return k == 0 ? 0 : d;
}

i64 dim_Sk_gamma0(int k, i64 N)
{
    if (k < 2 || k % 2)
        throw std::invalid_argument("dim_Sk_gamma0 needs even k >= 2");
    Rational mu = dedekind_psi(N);
    i64 nu2 = 0, nu3 = 0, cusps = 0;
    if (N % 4) {
        nu2 = 1;
        for (auto const& pp : factorize(N))
            nu2 *= 1 + kronecker(-4, pp.prime);
    }
    if (N % 9) {
        nu3 = 1;
        for (auto const& pp : factorize(N))
            nu3 *= 1 + kronecker(-3, pp.prime);
    }
    for (i64 d : divisors(N))
        cusps += euler_phi(gcd(d, N / d));
    Rational g = 1 + mu / 12 - fraction(nu2, 4) - fraction(nu3, 3) - fraction(cusps, 2);
    if (g.get_den() != 1)
        throw std::logic_error("genus is not an integer");
    i64 genus = g.get_num().get_si();
    if (k == 2)
        return genus;
    return (k - 1) * (genus - 1) + (k / 2 - 1) * cusps + nu2 * (k / 4) + nu3 * (k / 3);
}

Integer ec_discriminant(const Weierstrass& E)
{
    Integer a1 = E[0], a2 = E[1], a3 = E[2], a4 = E[3], a6 = E[4];
    Integer b2 = a1 * a1 + 4 * a2;
    Integer b4 = 2 * a4 + a1 * a3;
    Integer b6 = a3 * a3 + 4 * a6;
    Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

i64 ec_ap(const Weierstrass& E, i64 p)
{
    if (!is_prime(p))
        throw std::invalid_argument("ec_ap needs a prime");
    Integer disc = ec_discriminant(E);
    if (disc % p == 0)
        throw std::invalid_argument("bad reduction at " + std::to_string(p));
    i64 a1 = mod(E[0], p), a2 = mod(E[1], p), a3 = mod(E[2], p), a4 = mod(E[3], p), a6 = mod(E[4], p);
    i64 count = 1;  // point at infinity
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y) {
            i64 lhs = mod(y * y + a1 * x % p * y + a3 * y, p);
            i64 rhs = mod(x * x % p * x + a2 * x % p * x + a4 * x + a6, p);
            if (lhs == rhs)
                ++count;
        }
    i64 ap = p + 1 - count;
    if (ap * ap > 4 * p)
        throw std::logic_error("Hasse bound violated");
    return ap;
}

Integer ec_an(const Weierstrass& E, i64 n)
{
    if (n < 1)
        throw std::invalid_argument("ec_an needs n >= 1");
    Integer a = 1;
    for (auto const& [p, e] : factorize(n)) {
        auto seq = hecke_prime_power(ec_ap(E, p), p, 2, 1, static_cast<unsigned>(e));
        a *= seq.back();
    }
    return a;
}

std::pair<i64, i64> sigma_and_min_sum(i64 m)
{
    if (m < 1)
        throw std::invalid_argument("sigma_and_min_sum needs m >= 1");
    i64 s = 0, mins = 0;
    for (i64 d = 1; d <= m; ++d)
        if (m % d == 0) {
            s += d;
            mins += std::min(d, m / d);
        }
    return {s, mins};
}

Rational class_number_mass(i64 m)
{
    auto [s, mins] = sigma_and_min_sum(m);
    i64 r = 0;
    while ((r + 1) * (r + 1) <= m)
        ++r;
    Rational out(2 * s - mins);
    if (r * r == m)
        out += Rational(1, 6);
    return out;
}

std::vector<Integer> hecke_prime_power(const Integer& ap, i64 p, int k, int chi_p, unsigned nu)
{
    std::vector<Integer> a{1};
    if (nu >= 1)
        a.push_back(ap);
    Integer w = ipow(p, static_cast<unsigned>(k - 1)) * chi_p;
    for (unsigned j = 2; j <= nu; ++j)
        a.push_back(ap * a[j - 1] - w * a[j - 2]);
    return a;
}

}  // namespace hecke::oracle
