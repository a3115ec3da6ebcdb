#include "hecke/resolvent.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace hecke {

namespace {

void require_good_prime(i64 q, const TraceContext& ctx)
{
    if (!is_prime(q))
        throw std::invalid_argument("q must be prime, got " + std::to_string(q));
    if (ctx.level() % q == 0)
        throw std::invalid_argument("q divides the level");
}

i64 prime_power(i64 q, unsigned nu)
{
    Integer v = ipow(q, nu);
    if (!v.fits_slong_p() || v > Integer(1L << 58))
        throw std::overflow_error("q^nu too large");
    return v.get_si();
}

CyclotomicRational chi_at(const DirichletCharacter& chi, i64 x) { return chi(x); }

}  // namespace

TruncatedSeries lhs_series(i64 q, const TraceContext& ctx, unsigned M, RootCounting rc)
{
    require_good_prime(q, ctx);
    TruncatedSeries s(M);
    for (unsigned nu = 0; nu < M; ++nu)
        s.coeff(nu + 1) = trace_T(prime_power(q, nu), ctx, rc).total;
    return s;
}

TruncatedSeries A1_series(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    const int k = ctx.weight();
    Rational lead(Integer(k - 1) * dedekind_psi(ctx.level()), 12);
    lead.canonicalize();
    auto ratio = chi_at(ctx.character(), q) * Rational(ipow(q, static_cast<unsigned>(k - 2)));
    return TruncatedSeries::geometric(ratio, 2, M).shifted(1) * CyclotomicRational(lead);
}

TruncatedSeries A1_series_direct(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    TruncatedSeries s(M);
    for (unsigned nu = 0; nu < M; ++nu)
        s.coeff(nu + 1) = A1(prime_power(q, nu), ctx);
    return s;
}

CyclotomicRational moment_hat(i64 q, unsigned nu, const TraceContext& ctx, RootCounting rc)
{
    require_good_prime(q, ctx);
    return weighted_class_sum(prime_power(q, nu), ctx, rc);
}

TruncatedSeries A2_series(i64 q, const TraceContext& ctx, unsigned M, RootCounting rc)
{
    TruncatedSeries s(M);
    for (unsigned nu = 0; nu < M; ++nu)
        s.coeff(nu + 1) = moment_hat(q, nu, ctx, rc) * Rational(-1, 2);
    return s;
}

TruncatedSeries A3_series_closed(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    const auto& chi = ctx.character();
    const i64 N = ctx.level();
    const i64 free_part = N / chi.conductor();
    auto x2 = chi_at(chi, q) * Rational(ipow(q, static_cast<unsigned>(ctx.weight() - 1)));
    auto outer = TruncatedSeries::geometric(x2, 2, M);

    TruncatedSeries sum(M);
    Rational phi_total = 0;
    for (i64 c : divisors(N)) {
        i64 l = gcd(c, N / c);
        if (free_part % l != 0)
            continue;
        auto split = split_at(chi, c);
        unsigned mo = static_cast<unsigned>(mult_order(q, l));
        auto inner = TruncatedSeries::geometric(chi_at(split.chi_c_prime, q).pow(mo), mo, M);
        sum += inner * CyclotomicRational(Rational(euler_phi(l)));
        phi_total += euler_phi(l);
    }
    TruncatedSeries half(M);
    half.coeff(0) = CyclotomicRational(phi_total / 2);
    return outer * (half - sum);
}

TruncatedSeries A3_series_direct(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    TruncatedSeries s(M);
    for (unsigned nu = 0; nu <= M; ++nu)
        s.coeff(nu) = A3(prime_power(q, nu), ctx);
    return s;
}

TruncatedSeries A4_series(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    if (ctx.weight() != 2 || !ctx.character().is_trivial())
        return TruncatedSeries(M);
    auto a = TruncatedSeries::geometric(CyclotomicRational(static_cast<long>(q)), 1, M);
    auto b = TruncatedSeries::geometric(CyclotomicRational(1), 1, M);
    return (a * b).shifted(1);
}

TruncatedSeries A4_series_direct(i64 q, const TraceContext& ctx, unsigned M)
{
    require_good_prime(q, ctx);
    TruncatedSeries s(M);
    for (unsigned nu = 0; nu < M; ++nu)
        s.coeff(nu + 1) = A4(prime_power(q, nu), ctx);
    return s;
}

MomentValue moment_A(int k, i64 q, unsigned nu, const TraceContext& ctx, RootCounting rc)
{
    if (k != ctx.weight())
        throw std::invalid_argument("moment_A: k does not match the context");
    if (k % 2 != 0)
        throw std::invalid_argument("moment_A needs even k; use moment_hat for odd k");
    auto hat = moment_hat(q, nu, ctx, rc);
    Rational scale(1);
    scale /= Rational(ipow(q, nu * static_cast<unsigned>((k - 2) / 2)));
    return {k, q, nu, hat * scale};
}

std::string to_string(A3Placement p)
{
    return p == A3Placement::shifted ? "shifted" : "unshifted";
}

RtfReport verify_rtf(i64 q, const TraceContext& ctx, unsigned M, A3Placement placement, RootCounting rc)
{
    require_good_prime(q, ctx);
    if (ctx.degenerate())
        throw std::invalid_argument("verify_rtf: chi(-1) != (-1)^k, the space is zero");
    auto lhs = lhs_series(q, ctx, M, rc);
    auto F = A3_series_closed(q, ctx, M);
    auto rhs = A1_series(q, ctx, M) + A2_series(q, ctx, M, rc) + A4_series(q, ctx, M) +
               (placement == A3Placement::shifted ? F.shifted(1) : F);
    RtfReport r;
    r.order = M;
    r.placement = placement;
    for (unsigned i = 0; i <= M; ++i) {
        bool ok = lhs[i] == rhs[i];
        r.pass.push_back(ok);
        r.lhs.push_back(lhs[i]);
        r.rhs.push_back(rhs[i]);
        if (!ok && r.first_fail < 0)
            r.first_fail = static_cast<int>(i);
    }
    return r;
}

std::vector<RadiusRow> radius_probe(i64 q, int k, unsigned M)
{
    using Decimal = boost::multiprecision::cpp_dec_float_50;
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("radius_probe needs even k >= 4");
    TraceContext ctx(k, DirichletCharacter::trivial(1));
    std::vector<RadiusRow> rows;
    for (unsigned nu = 0; nu <= M; ++nu) {
        Rational A = moment_A(k, q, nu, ctx).value.rational_value();
        Decimal v = Decimal(Integer(abs(A.get_num())).get_str()) / Decimal(A.get_den().get_str());
        v /= boost::multiprecision::pow(Decimal(q), Decimal(nu) / 2);
        std::ostringstream os;
        os << std::setprecision(30) << v;
        rows.push_back({nu, A, os.str(), static_cast<double>(v)});
    }
    return rows;
}

}  // namespace hecke
