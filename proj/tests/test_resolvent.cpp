#include <doctest.h>

#include "hecke/equidist.hpp"
#include "hecke/oracle.hpp"
#include "hecke/resolvent.hpp"

using namespace hecke;

namespace {

CyclotomicRational Q(long p, long q = 1) { return CyclotomicRational(fraction(p, q)); }
DirichletCharacter triv(i64 N) { return DirichletCharacter::trivial(N); }

TruncatedSeries series(std::vector<long> c)
{
    std::vector<CyclotomicRational> v;
    for (long x : c)
        v.push_back(Q(x));
    return TruncatedSeries(static_cast<unsigned>(c.size()) - 1, v);
}

std::vector<TraceContext> contexts()
{
    std::vector<TraceContext> out;
    for (i64 N : {1, 11, 15})
        for (int k : {2, 4, 6, 12})
            for (auto const& chi : characters_with_parity(N, k))
                out.emplace_back(k, chi);
    return out;
}

}  // namespace

TEST_CASE("truncated series arithmetic")
{
    CHECK(TruncatedSeries::geometric(Q(1), 1, 3) == series({1, 1, 1, 1}));
    CHECK(series({1, -1, 0, 0}) * TruncatedSeries::geometric(Q(1), 1, 3) == series({1, 0, 0, 0}));
    auto a = CyclotomicRational::zeta_power(3, 1);
    auto g = TruncatedSeries::geometric(a, 2, 5);
    CHECK(g[0] == Q(1));
    CHECK(g[1] == Q(0));
    CHECK(g[2] == a);
    CHECK(g[4] == a * a);
    CHECK(g[5] == Q(0));
    CHECK(series({1, 2, 3}).shifted(1) == series({0, 1, 2}));
    CHECK_THROWS(series({1, 2}) + series({1, 2, 3}));

    unsigned seed = 99;
    auto next = [&seed] {
        seed = seed * 1664525u + 1013904223u;
        return static_cast<long>((seed >> 20) % 9) - 4;
    };
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> x(8), y(8), z(8);
        for (int i = 0; i < 8; ++i) {
            x[i] = next();
            y[i] = next();
            z[i] = next();
        }
        auto X = series(x), Y = series(y), Z = series(z);
        CHECK((X * Y) * Z == X * (Y * Z));
        CHECK(X * (Y + Z) == X * Y + X * Z);
        CHECK(X * Y == Y * X);
    }
}

TEST_CASE("trace series at level 1")
{
    TraceContext k12(12, triv(1));
    auto tau = oracle::delta_expansion(4096);
    auto lhs = lhs_series(2, k12, 4);
    CHECK(lhs == series({0, 1, -24, -1472, 84480}));
    CHECK(lhs[3] == Q(static_cast<long>(tau[4].get_si())));
    auto l12 = lhs_series(2, k12, 12);
    for (unsigned nu = 0; nu < 12; ++nu)
        CHECK(l12[nu + 1] == CyclotomicRational(Rational(tau[std::size_t{1} << nu])));
    CHECK(lhs_series(3, TraceContext(2, triv(1)), 8).is_zero());
    CHECK(lhs_series(3, TraceContext(4, triv(1)), 8).is_zero());
    CHECK_THROWS_AS(lhs_series(11, TraceContext(2, triv(11)), 3), std::invalid_argument);
}

TEST_CASE("first term series")
{
    TraceContext k12(12, triv(1));
    auto s = A1_series(2, k12, 5);
    Rational c(11, 12);
    CHECK(s[1] == CyclotomicRational(c));
    CHECK(s[3] == CyclotomicRational(c * 1024));
    CHECK(s[5] == CyclotomicRational(c * 1024 * 1024));
    CHECK(s[2] == Q(0));
    CHECK(s[4] == Q(0));
    auto k2 = A1_series(3, TraceContext(2, triv(1)), 5);
    CHECK(k2[1] == Q(1, 12));
    CHECK(k2[3] == Q(1, 12));
}

TEST_CASE("fourth term series")
{
    CHECK(A4_series(2, TraceContext(2, triv(1)), 4) == series({0, 1, 3, 7, 15}));
    CHECK(A4_series(2, TraceContext(4, triv(1)), 4).is_zero());
    auto s = A4_series(5, TraceContext(2, triv(1)), 8);
    for (unsigned nu = 0; nu < 8; ++nu)
        CHECK(s[nu + 1] == CyclotomicRational(Rational((ipow(5, nu + 1) - 1) / 4)));
}

TEST_CASE("closed form of the third term series")
{
    TraceContext k2(2, triv(1));
    auto F = A3_series_closed(2, k2, 4);
    CHECK(F[0] == Q(-1, 2));
    CHECK(F[1] == Q(-1));
    CHECK(F[2] == Q(-2));
    // -1/((1 - 2z^2)(1 - z)) + (1/2)/(1 - 2z^2)
    auto geo2 = TruncatedSeries::geometric(Q(2), 2, 4);
    auto expect = geo2 * (TruncatedSeries::monomial(Q(1, 2), 0, 4) - TruncatedSeries::geometric(Q(1), 1, 4));
    CHECK(F == expect);
    CHECK(A3_series_closed(2, TraceContext(2, triv(11)), 12) == A3_series_direct(2, TraceContext(2, triv(11)), 12));
}

TEST_CASE("closed forms agree with direct sums")
{
    for (auto const& ctx : contexts())
        for (i64 q : {2, 3, 5, 7}) {
            if (ctx.level() % q == 0)
                continue;
            CHECK(A1_series(q, ctx, 10) == A1_series_direct(q, ctx, 10));
            CHECK(A3_series_closed(q, ctx, 12) == A3_series_direct(q, ctx, 12));
            CHECK(A4_series(q, ctx, 10) == A4_series_direct(q, ctx, 10));
        }
}

TEST_CASE("moments")
{
    TraceContext k2(2, triv(1)), k12(12, triv(1));
    for (i64 q : {2, 3, 5})
        for (unsigned nu = 0; nu <= 8; ++nu) {
            i64 m = ipow(q, nu).get_si();
            CHECK(moment_A(2, q, nu, k2).value == CyclotomicRational(oracle::class_number_mass(m)));
        }
    CHECK(moment_A(2, 2, 1, k2).value == Q(4));
    CHECK(moment_A(12, 2, 0, k12).value == Q(-7, 6));
    CHECK_THROWS_AS(moment_A(3, 2, 0, TraceContext(3, DirichletCharacter::from_exponents(7, {3}))),
                    std::invalid_argument);
    for (int k = 2; k <= 12; k += 2) {
        TraceContext ctx(k, triv(1));
        for (unsigned nu = 0; nu <= 12; ++nu) {
            auto A = moment_A(k, 2, nu, ctx).value;
            CHECK(A == CyclotomicRational(moment_U(ipow(2, nu).get_si(), static_cast<unsigned>(k - 2))));
            Rational scale = Rational(ipow(2, nu * static_cast<unsigned>((k - 2) / 2)));
            CHECK(moment_hat(2, nu, ctx) == A * scale);
        }
    }
}

TEST_CASE("resolvent identity")
{
    TraceContext k12(12, triv(1));
    auto r = verify_rtf(2, k12, 12);
    CHECK(r.all_pass());
    CHECK(r.pass.size() == 13);
    CHECK(r.first_fail == -1);

    auto u = verify_rtf(2, k12, 12, A3Placement::unshifted);
    CHECK_FALSE(u.all_pass());
    CHECK(u.first_fail == 0);

    auto k4 = verify_rtf(3, TraceContext(4, triv(1)), 12);
    CHECK(k4.all_pass());
    for (auto const& c : k4.lhs)
        CHECK(c == Q(0));

    CHECK(verify_rtf(2, TraceContext(2, triv(11)), 10).all_pass());

    for (auto const& ctx : contexts())
        for (i64 q : {2, 3}) {
            if (ctx.level() % q == 0)
                continue;
            CHECK_MESSAGE(verify_rtf(q, ctx, 8).all_pass(), "N=", ctx.level(), " k=", ctx.weight(),
                          " chi=", ctx.character().label(), " q=", q);
        }

    auto odd = TraceContext(2, DirichletCharacter::from_exponents(4, {1}));
    CHECK_THROWS_AS(verify_rtf(3, odd, 4), std::invalid_argument);
}

TEST_CASE("odd weight with a quadratic character")
{
    TraceContext c7(3, DirichletCharacter::from_exponents(7, {3}));
    CHECK(verify_rtf(2, c7, 10).all_pass());
    CHECK(verify_rtf(3, c7, 8).all_pass());
    CHECK(A3_series_closed(2, c7, 12) == A3_series_direct(2, c7, 12));
}

TEST_CASE("growth probe")
{
    // Without cusp forms of weight 4 the moments are pure A1/A3 terms of size ~ q^{nu/2}.
    auto rows = radius_probe(2, 4, 24);
    REQUIRE(rows.size() == 25);
    double sup4 = 0;
    for (auto const& r : rows)
        sup4 = std::max(sup4, r.scaled_value);
    CHECK(sup4 < 10);
    CHECK(rows.back().scaled_value > 0.1);
    auto r12 = radius_probe(2, 12, 20);
    double sup = 0;
    for (auto const& r : r12)
        sup = std::max(sup, r.scaled_value);
    CHECK(sup < 100);
    CHECK(r12.back().scaled_value > 1e-3);
    CHECK(r12[3].scaled.size() > 20);
    CHECK_THROWS_AS(radius_probe(2, 2, 5), std::invalid_argument);
}
