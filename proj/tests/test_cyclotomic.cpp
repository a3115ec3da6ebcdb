#include <doctest.h>

#include "hecke/cyclotomic.hpp"

using namespace hecke;

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<i64>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
}

TEST_CASE("roots of unity")
{
    for (unsigned e : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 10u, 12u}) {
        auto z = CyclotomicRational::zeta_power(e, 1);
        CHECK(z.pow(e) == CyclotomicRational(1));
        CyclotomicRational s(Rational(0), e);
        for (unsigned j = 0; j < e; ++j)
            s += CyclotomicRational::zeta_power(e, j);
        CHECK(s == CyclotomicRational(e == 1 ? 1 : 0));
    }
    // zeta_3 + zeta_3^2 = -1
    CHECK(CyclotomicRational::zeta_power(3, 1) + CyclotomicRational::zeta_power(3, 2) == CyclotomicRational(-1));
    // zeta_4^2 = -1
    CHECK(CyclotomicRational::zeta_power(4, 2) == CyclotomicRational(-1));
    CHECK(CyclotomicRational::zeta_power(4, 2).is_rational());
    CHECK_FALSE(CyclotomicRational::zeta_power(4, 1).is_rational());
    CHECK_THROWS(CyclotomicRational::zeta_power(4, 1).rational_value());
}

TEST_CASE("mixed orders lift to the common field")
{
    auto i = CyclotomicRational::zeta_power(4, 1);
    auto w = CyclotomicRational::zeta_power(3, 1);
    auto p = i * w;
    CHECK(p.order() == 12);
    CHECK(p == CyclotomicRational::zeta_power(12, 7));
    CHECK(std::abs(p.to_complex() - std::polar(1.0, 2 * 3.14159265358979323846 * 7 / 12)) < 1e-12);
    CHECK(i.lifted(12) == CyclotomicRational::zeta_power(12, 3));
}

TEST_CASE("ring laws on random elements")
{
    unsigned seed = 12345;
    auto next = [&seed] {
        seed = seed * 1103515245u + 12345u;
        return static_cast<long>((seed >> 16) % 11) - 5;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> a(6), b(6), c(6);
        for (int j = 0; j < 6; ++j) {
            a[j] = next();
            b[j] = fraction(next(), 3);
            c[j] = next();
        }
        auto x = CyclotomicRational::from_powers(7, a);
        auto y = CyclotomicRational::from_powers(7, b);
        auto z = CyclotomicRational::from_powers(7, c);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == CyclotomicRational(Rational(0), 7));
    }
}
