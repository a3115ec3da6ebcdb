#include "hecke/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hecke {

i64 mod(i64 a, i64 n)
{
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 powmod(i64 base, i64 exp, i64 n)
{
    if (n == 1)
        return 0;
    __int128 result = 1;
    __int128 b = mod(base, n);
    while (exp > 0) {
        if (exp & 1)
            result = result * b % n;
        b = b * b % n;
        exp >>= 1;
    }
    return static_cast<i64>(result);
}

i64 isqrt(i64 n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative number");
    auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n)
        --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(i64 n)
{
    if (n < 0)
        return false;
    i64 r = isqrt(n);
    return r * r == n;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<PrimePower> factorize(i64 n)
{
    if (n == 0)
        throw std::domain_error("factorize(0)");
    if (n < 0)
        n = -n;
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

bool is_squarefree(i64 n)
{
    for (auto const& pp : factorize(n))
        if (pp.exponent > 1)
            return false;
    return true;
}

std::vector<i64> divisors(i64 n)
{
    if (n <= 0)
        throw std::domain_error("divisors of nonpositive number");
    std::vector<i64> out{1};
    for (auto const& [p, e] : factorize(n)) {
        std::size_t base = out.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n)
{
    i64 r = n;
    for (auto const& pp : factorize(n))
        r = r / pp.prime * (pp.prime - 1);
    return r;
}

i64 dedekind_psi(i64 n)
{
    i64 r = n;
    for (auto const& pp : factorize(n))
        r = r / pp.prime * (pp.prime + 1);
    return r;
}

i64 sigma(i64 n)
{
    i64 r = 1;
    for (auto const& [p, e] : factorize(n)) {
        i64 s = 1, pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            s += pk;
        }
        r *= s;
    }
    return r;
}

int kronecker(i64 a, i64 b)
{
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (b == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0)
        return 0;
    int v = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++v;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (b < 0) {
        b = -b;
        if (a < 0)
            k = -k;
    }
    // b odd and positive from here on
    while (true) {
        if (a == 0)
            return b > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2)
            k *= tab2[b & 7];
        if ((a & b & 2) != 0)
            k = -k;
        i64 r = a < 0 ? -a : a;
        a = mod(b, r);
        b = r;
    }
}

Rational fraction(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer ipow(i64 base, unsigned exp)
{
    Integer r;
    Integer b = static_cast<long>(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, int exp)
{
    Rational r = 1;
    Rational b = base;
    if (exp < 0) {
        if (b == 0)
            throw std::domain_error("zero to a negative power");
        b = 1 / b;
        exp = -exp;
    }
    while (exp > 0) {
        if (exp & 1)
            r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    Rational r;
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad decimal: " + s);
        Integer num;
        if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
            throw std::invalid_argument("bad decimal: " + s);
        r = fraction(num, ipow(10, static_cast<unsigned>(frac)));
    } else {
        if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
            throw std::invalid_argument("bad rational: " + s);
        if (r.get_den() == 0)
            throw std::invalid_argument("zero denominator: " + s);
    }
    r.canonicalize();
    return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hecke
