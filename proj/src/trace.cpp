#include "hecke/trace.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "hecke/quadforms.hpp"

namespace hecke {

TraceContext::TraceContext(int k, DirichletCharacter chi) : k_(k), chi_(std::move(chi))
{
    if (k < 2)
        throw std::invalid_argument("trace formula needs weight k >= 2");
    degenerate_ = chi_.parity() != ((k % 2 == 0) ? 1 : -1);
}

std::vector<Integer> chebyshev_U(unsigned n)
{
    std::vector<Integer> prev{1}, cur{1};
    if (n == 0)
        return cur;
    cur = {0, 2};
    for (unsigned i = 1; i < n; ++i) {
        std::vector<Integer> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j)
            next[j + 1] += 2 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j)
            next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational chebyshev_U_value(unsigned n, const Rational& x)
{
    Rational prev = 1, cur = 2 * x;
    if (n == 0)
        return prev;
    for (unsigned i = 1; i < n; ++i) {
        Rational next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer chebyshev_P(unsigned n, i64 t, i64 m)
{
    Integer prev = 1, cur = static_cast<long>(t);
    if (n == 0)
        return prev;
    Integer tt = static_cast<long>(t), mm = static_cast<long>(m);
    for (unsigned i = 1; i < n; ++i) {
        Integer next = tt * cur - mm * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

void require_coprime(i64 m, i64 N)
{
    if (m < 1)
        throw std::invalid_argument("m must be positive");
    if (gcd(m, N) != 1)
        throw std::invalid_argument("gcd(m, N) > 1: m=" + std::to_string(m) + " N=" + std::to_string(N));
}

// Number of roots x of x^2 - t x + m (mod N Nf), sorted by the exponent of chi(x).
std::vector<i64> root_counts(const DirichletCharacter& chi, i64 t, i64 m, i64 Nf, RootCounting rc)
{
    const i64 N = chi.modulus();
    const i64 M = N * Nf;
    const i64 tm = mod(t, M), mm = mod(m, M);
    auto is_root = [&](i64 y) { return mod(y * y - tm * y + mm, M) == 0; };
    std::vector<i64> counts(chi.order(), 0);
    for (i64 x = 0; x < N; ++x) {
        int j = chi.exponent_at(x);
        if (j < 0)
            continue;
        for (i64 i = 0; i < Nf; ++i) {
            if (!is_root(x + i * N))
                continue;
            ++counts[static_cast<std::size_t>(j)];
            if (rc == RootCounting::residues_mod_N)
                break;
        }
    }
    return counts;
}

// psi(N) / psi(N / g) is always an integer.
i64 psi_ratio(i64 N, i64 g) { return dedekind_psi(N) / dedekind_psi(N / g); }

}  // namespace

CyclotomicRational mu_local(i64 t, i64 f, i64 m, const TraceContext& ctx, RootCounting rc)
{
    const i64 N = ctx.level();
    require_coprime(m, N);
    if (f < 1 || (4 * m - t * t) % (f * f) != 0)
        throw std::invalid_argument("mu_local: f^2 must divide t^2 - 4m");
    i64 g = gcd(N, f);
    auto counts = root_counts(ctx.character(), t, m, g, rc);
    auto out = CyclotomicRational::from_powers(ctx.character().order(),
                                               std::vector<Rational>(counts.begin(), counts.end()));
    return out * Rational(psi_ratio(N, g));
}

CyclotomicRational generalized_H(const DirichletCharacter& chi, i64 t, i64 m, RootCounting rc)
{
    const i64 N = chi.modulus();
    require_coprime(m, N);
    const i64 D = 4 * m - t * t;
    if (D <= 0)
        throw std::invalid_argument("generalized_H needs t^2 < 4m");
    TraceContext ctx(2 + (chi.parity() < 0 ? 1 : 0), chi);
    CyclotomicRational sum(Rational(0), chi.order());
    for (i64 f = 1; f * f <= D; ++f) {
        if (D % (f * f))
            continue;
        i64 d = -(D / (f * f));
        if (!is_negative_discriminant(d))
            continue;
        sum += mu_local(t, f, m, ctx, rc) * unit_weighted_h(d);
    }
    return sum;
}

TwistedClassRow::TwistedClassRow(i64 m, i64 t_max, unsigned order, std::vector<i64> six)
    : m_(m), t_max_(t_max), order_(order), six_(std::move(six))
{
}

std::span<const i64> TwistedClassRow::six_powers(i64 t) const
{
    if (t < -t_max_ || t > t_max_)
        throw std::out_of_range("t^2 >= 4m in TwistedClassRow");
    return std::span<const i64>(six_).subspan(static_cast<std::size_t>(t + t_max_) * order_, order_);
}

CyclotomicRational TwistedClassRow::value(i64 t) const
{
    auto p = six_powers(t);
    std::vector<Rational> q(p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        q[j] = fraction(p[j], 6);
    return CyclotomicRational::from_powers(order_, q);
}

TwistedClassRow twisted_class_row(const DirichletCharacter& chi, i64 m, RootCounting rc)
{
    const i64 N = chi.modulus();
    require_coprime(m, N);
    auto row = hurwitz_row(m);
    const i64 T = row->t_max();
    const unsigned e = chi.order();
    std::vector<i64> six(static_cast<std::size_t>(2 * T + 1) * e, 0);
    if (N == 1) {
        for (i64 t = -T; t <= T; ++t)
            six[static_cast<std::size_t>(t + T)] = row->H6(t);
        return TwistedClassRow(m, T, 1, std::move(six));
    }
    std::map<std::pair<i64, i64>, std::vector<i64>> local;  // (N_f, t mod N N_f) -> weighted root counts
    for (i64 t = -T; t <= T; ++t) {
        i64* out = six.data() + static_cast<std::size_t>(t + T) * e;
        for (auto const& term : row->terms(t)) {
            i64 g = gcd(N, term.f);
            auto key = std::make_pair(g, mod(t, N * g));
            auto it = local.find(key);
            if (it == local.end()) {
                auto counts = root_counts(chi, t, m, g, rc);
                i64 scale = psi_ratio(N, g);
                for (auto& c : counts)
                    c *= scale;
                it = local.emplace(key, std::move(counts)).first;
            }
            for (unsigned j = 0; j < e; ++j)
                out[j] += term.hw6 * it->second[j];
        }
    }
    return TwistedClassRow(m, T, e, std::move(six));
}

CyclotomicRational weighted_class_sum(i64 m, const TraceContext& ctx, RootCounting rc)
{
    auto row = twisted_class_row(ctx.character(), m, rc);
    const unsigned e = row.order();
    const auto n = static_cast<unsigned>(ctx.weight() - 2);
    std::vector<Integer> acc(e, 0);
    for (i64 t = -row.t_max(); t <= row.t_max(); ++t) {
        auto six = row.six_powers(t);
        bool any = false;
        for (auto v : six)
            any = any || v != 0;
        if (!any)
            continue;
        Integer P = chebyshev_P(n, t, m);
        for (unsigned j = 0; j < e; ++j)
            if (six[j] != 0)
                acc[j] += P * static_cast<long>(six[j]);
    }
    return CyclotomicRational::from_powers(e, acc) * Rational(1, 6);
}

CyclotomicRational A1(i64 m, const TraceContext& ctx)
{
    require_coprime(m, ctx.level());
    const unsigned e = ctx.character().order();
    if (!is_square(m))
        return CyclotomicRational(Rational(0), e);
    i64 s = isqrt(m);
    Rational scale(ipow(s, static_cast<unsigned>(ctx.weight() - 2)) * (ctx.weight() - 1) * dedekind_psi(ctx.level()));
    scale /= 12;
    return ctx.character()(s) * scale;
}

CyclotomicRational A2(i64 m, const TraceContext& ctx, RootCounting rc)
{
    return weighted_class_sum(m, ctx, rc) * Rational(-1, 2);
}

CyclotomicRational A3(i64 m, const TraceContext& ctx)
{
    require_coprime(m, ctx.level());
    const auto& chi = ctx.character();
    const i64 N = ctx.level();
    const i64 free_part = N / chi.conductor();
    CyclotomicRational total(Rational(0), chi.order());
    for (i64 d : divisors(m)) {
        if (d * d > m)
            break;
        i64 e2 = m / d;
        std::vector<i64> inner(chi.order(), 0);
        for (i64 c : divisors(N)) {
            i64 l = gcd(c, N / c);
            if (gcd(free_part, e2 - d) % l != 0)
                continue;
            int j = -2;
            for (i64 y = mod(d, c); y < N; y += c) {
                if (mod(y - e2, N / c) != 0)
                    continue;
                int jy = chi.exponent_at(y);
                if (j == -2)
                    j = jy;
                else if (j != jy)
                    throw std::logic_error("A3: chi(y) depends on the lift of y");
            }
            if (j == -2)
                throw std::logic_error("A3: no CRT solution for y");
            if (j >= 0)
                inner[static_cast<std::size_t>(j)] += euler_phi(l);
        }
        Rational weight(ipow(d, static_cast<unsigned>(ctx.weight() - 1)));
        if (d * d == m)
            weight /= 2;
        total += CyclotomicRational::from_powers(chi.order(), std::vector<Rational>(inner.begin(), inner.end())) * weight;
    }
    return -total;
}

CyclotomicRational A4(i64 m, const TraceContext& ctx)
{
    if (ctx.weight() == 2 && ctx.character().is_trivial())
        return CyclotomicRational(Rational(sigma(m)), ctx.character().order());
    return CyclotomicRational(Rational(0), ctx.character().order());
}

TraceBreakdown trace_T(i64 m, const TraceContext& ctx, RootCounting rc)
{
    require_coprime(m, ctx.level());
    TraceBreakdown out;
    const unsigned e = ctx.character().order();
    if (ctx.degenerate()) {
        CyclotomicRational zero(Rational(0), e);
        out = {zero, zero, zero, zero, zero, true};
        return out;
    }
    out.A1 = A1(m, ctx);
    out.A2 = A2(m, ctx, rc);
    out.A3 = A3(m, ctx);
    out.A4 = A4(m, ctx);
    out.total = out.A1 + out.A2 + out.A3 + out.A4;
    return out;
}

}  // namespace hecke
