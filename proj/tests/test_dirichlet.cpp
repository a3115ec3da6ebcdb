#include <doctest.h>

#include <algorithm>
#include <random>

#include "hecke/dirichlet.hpp"

using namespace hecke;

namespace {

// Smallest divisor d of N such that chi(x) = 1 whenever x = 1 (mod d), by a
// direct scan of all x < N.
i64 naive_conductor(const DirichletCharacter& chi)
{
    i64 N = chi.modulus();
    for (i64 d = 1; d <= N; ++d) {
        if (N % d)
            continue;
        bool ok = true;
        for (i64 x = 0; x < N && ok; ++x)
            if (gcd(x, N) == 1 && mod(x, d) == mod(1, d) && !(chi(x) == CyclotomicRational(1)))
                ok = false;
        if (ok)
            return d;
    }
    return N;
}

}  // namespace

TEST_CASE("enumeration")
{
    auto one = enumerate_characters(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_trivial());

    auto five = enumerate_characters(5);
    REQUIRE(five.size() == 4);
    std::vector<unsigned> orders;
    for (auto const& chi : five)
        orders.push_back(chi.order());
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<unsigned>{1, 2, 4, 4});

    auto eight = enumerate_characters(8);
    REQUIRE(eight.size() == 4);
    for (auto const& chi : eight)
        CHECK(chi.order() <= 2);

    for (i64 N = 1; N <= 60; ++N)
        CHECK(static_cast<i64>(enumerate_characters(N).size()) == euler_phi(N));
}

TEST_CASE("conductors")
{
    CHECK(DirichletCharacter::trivial(12).conductor() == 1);
    auto four = DirichletCharacter::from_exponents(4, {1});
    CHECK(four.conductor() == 4);
    CHECK(four.parity() == -1);
    auto legendre5 = DirichletCharacter::from_exponents(5, {2});
    CHECK(legendre5.order() == 2);
    CHECK(legendre5.conductor() == 5);
    for (i64 N = 1; N <= 40; ++N)
        for (auto const& chi : enumerate_characters(N))
            CHECK(chi.conductor() == naive_conductor(chi));
}

TEST_CASE("values are multiplicative roots of unity")
{
    std::mt19937_64 rng(7);
    for (i64 N = 1; N <= 60; ++N) {
        for (auto const& chi : enumerate_characters(N)) {
            CHECK(chi(1) == CyclotomicRational(1));
            std::uniform_int_distribution<i64> pick(0, 10 * N);
            for (int i = 0; i < 10000; ++i) {
                i64 x = pick(rng), y = pick(rng);
                int a = chi.exponent_at(x), b = chi.exponent_at(y), c = chi.exponent_at(x * y);
                if (a < 0 || b < 0) {
                    CHECK(c < 0);
                    continue;
                }
                CHECK(c == static_cast<int>((a + b) % chi.order()));
            }
            for (i64 x = 0; x < N; ++x)
                CHECK((chi.exponent_at(x) < 0) == (gcd(x, N) != 1));
        }
    }
    for (i64 N : {7, 12, 13, 16, 21}) {
        for (auto const& chi : enumerate_characters(N)) {
            for (i64 x = 1; x < N; ++x)
                for (i64 y = 1; y < N; ++y)
                    CHECK(chi(x * y) == chi(x) * chi(y));
        }
    }
}

TEST_CASE("orthogonality")
{
    for (i64 N = 2; N <= 40; ++N)
        for (auto const& chi : enumerate_characters(N)) {
            CyclotomicRational s(Rational(0), chi.order());
            for (i64 x = 0; x < N; ++x)
                s += chi(x);
            CHECK(s == CyclotomicRational(chi.is_trivial() ? euler_phi(N) : 0));
        }
}

TEST_CASE("split at a divisor")
{
    auto triv = DirichletCharacter::trivial(12);
    for (i64 c : divisors(12)) {
        auto s = split_at(triv, c);
        CHECK(s.chi_c.is_trivial());
        CHECK(s.chi_c_prime.is_trivial());
    }

    // conductor 4 modulo 12
    DirichletCharacter chi4 = DirichletCharacter::trivial(12);
    for (auto const& chi : enumerate_characters(12))
        if (chi.conductor() == 4)
            chi4 = chi;
    REQUIRE(chi4.conductor() == 4);
    auto s = split_at(chi4, 4);
    CHECK(s.c1 == 4);
    CHECK(s.chi_c_prime.is_trivial());

    for (auto const& chi : enumerate_characters(15))
        if (chi.conductor() == 15) {
            auto t = split_at(chi, 3);
            CHECK(t.c1 == 3);
            CHECK(t.chi_c_prime.conductor() == 5);
        }

    CHECK_THROWS_AS(split_at(triv, 5), std::invalid_argument);

    for (i64 N = 1; N <= 60; ++N)
        for (auto const& chi : enumerate_characters(N))
            for (i64 c : divisors(N)) {
                auto sp = split_at(chi, c);
                for (i64 x = 1; x < N; ++x)
                    if (gcd(x, N) == 1)
                        CHECK(sp.chi_c(x) * sp.chi_c_prime(x) == chi(x));
                CHECK(sp.chi_c.conductor() == sp.c1);
                CHECK(sp.chi_c_prime.conductor() == chi.conductor() / sp.c1);
                CHECK(gcd(sp.c1, chi.conductor() / sp.c1) == 1);
                CHECK(sp.c1 * sp.c2 == c);
            }
}

TEST_CASE("multiplicative order")
{
    CHECK(mult_order(2, 1) == 1);
    CHECK(mult_order(2, 5) == 4);
    CHECK(mult_order(3, 7) == 6);
    CHECK_THROWS_AS(mult_order(2, 4), std::invalid_argument);
    for (i64 l = 1; l <= 80; ++l)
        for (i64 q = 1; q < 30; ++q)
            if (gcd(q, l) == 1)
                CHECK(euler_phi(l) % mult_order(q, l) == 0);
}

TEST_CASE("labels")
{
    CHECK(DirichletCharacter::trivial(11).label() == "trivial");
    CHECK(DirichletCharacter::from_exponents(15, {1, 2}).label() == "exps=1,2");
    CHECK_THROWS_AS(DirichletCharacter::from_exponents(15, {1}), std::invalid_argument);
}
