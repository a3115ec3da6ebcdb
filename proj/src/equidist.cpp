#include "hecke/equidist.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "hecke/quadforms.hpp"
#include "hecke/trace.hpp"

namespace hecke {

namespace {

Rational six_to_rational(i64 six)
{
    Rational r(six, 6);
    r.canonicalize();
    return r;
}

i64 checked_power(i64 q, unsigned nu)
{
    Integer v = ipow(q, nu);
    if (v > Integer(1L << 58))
        throw std::overflow_error("prime power too large");
    return v.get_si();
}

double as_double(const Decimal& d) { return static_cast<double>(d); }

// t / (2 sqrt m) >= alpha
bool at_least(i64 t, i64 m, const Rational& alpha)
{
    if (t >= 0 && sgn(alpha) <= 0)
        return true;
    if (t < 0 && sgn(alpha) >= 0)
        return false;
    Rational lhs = Rational(Integer(t) * t);
    Rational rhs = Rational(4 * m) * alpha * alpha;
    return t >= 0 ? lhs >= rhs : lhs <= rhs;
}

}  // namespace

Rational DiscreteMeasure::total_mass() const
{
    Rational s = 0;
    for (auto const& a : atoms)
        s += a.weight;
    return s;
}

double DiscreteMeasure::location(const Atom& a) const
{
    return static_cast<double>(a.t) / (2.0 * std::sqrt(static_cast<double>(m)));
}

DiscreteMeasure build_measure(i64 m)
{
    if (m < 1)
        throw std::invalid_argument("build_measure needs m >= 1");
    auto row = hurwitz_row(m);
    DiscreteMeasure mu;
    mu.m = m;
    for (i64 t = -row->t_max(); t <= row->t_max(); ++t)
        mu.atoms.push_back({t, six_to_rational(row->H6(t))});
    return mu;
}

Rational moment_x(i64 m, unsigned n)
{
    if (n % 2)
        return 0;
    auto row = hurwitz_row(m);
    Integer acc = 0;
    for (i64 t = -row->t_max(); t <= row->t_max(); ++t)
        acc += ipow(t, n) * row->H6(t);
    Rational r(acc, ipow(4 * m, n / 2) * 6);
    r.canonicalize();
    return r;
}

Rational moment_U(i64 m, unsigned l)
{
    if (l % 2)
        return 0;
    auto row = hurwitz_row(m);
    Integer acc = 0;
    for (i64 t = -row->t_max(); t <= row->t_max(); ++t)
        acc += chebyshev_P(l, t, m) * row->H6(t);
    Rational r(acc, ipow(m, l / 2) * 6);
    r.canonicalize();
    return r;
}

Rational interval_mass(const DiscreteMeasure& mu, const Rational& alpha, const Rational& beta)
{
    if (alpha >= beta)
        throw std::invalid_argument("interval_mass needs alpha < beta");
    Rational s = 0;
    for (auto const& a : mu.atoms)
        if (at_least(a.t, mu.m, alpha) && at_least(-a.t, mu.m, -beta))
            s += a.weight;
    return s;
}

Rational interval_mass(i64 m, const Rational& alpha, const Rational& beta)
{
    return interval_mass(build_measure(m), alpha, beta);
}

Decimal semicircle_mass(const Rational& alpha, const Rational& beta)
{
    if (alpha < -1 || beta > 1 || alpha >= beta)
        throw std::invalid_argument("semicircle_mass needs -1 <= alpha < beta <= 1");
    auto F = [](const Rational& r) -> Decimal {
        Decimal x = Decimal(r.get_num().get_str()) / Decimal(r.get_den().get_str());
        return x * sqrt(1 - x * x) + asin(x);
    };
    return (F(beta) - F(alpha)) / boost::math::constants::pi<Decimal>();
}

std::vector<EquidistRow> equidist_report(i64 q, const std::vector<unsigned>& nus, unsigned grid)
{
    if (!is_prime(q))
        throw std::invalid_argument("equidist_report needs q prime");
    if (grid < 1)
        throw std::invalid_argument("grid must be positive");
    std::vector<Decimal> target(grid);
    std::vector<Rational> edges(grid + 1);
    for (unsigned i = 0; i <= grid; ++i) {
        edges[i] = fraction(2 * static_cast<long>(i), grid) - 1;
    }
    for (unsigned i = 0; i < grid; ++i)
        target[i] = semicircle_mass(edges[i], edges[i + 1]);

    std::vector<EquidistRow> out;
    for (unsigned nu : nus) {
        EquidistRow row;
        row.nu = nu;
        row.m = checked_power(q, nu);
        auto mu = build_measure(row.m);
        row.total_mass = mu.total_mass();
        Rational scaled = row.total_mass / Rational(2 * row.m);
        row.scaled_mass = to_double(scaled);
        row.normalized_mass = to_double(scaled * fraction(q - 1, q));
        row.discrepancy = 0;
        for (unsigned i = 0; i < grid; ++i) {
            GridCell c;
            c.alpha = edges[i];
            c.beta = edges[i + 1];
            c.empirical = to_double(interval_mass(mu, c.alpha, c.beta) / row.total_mass);
            c.semicircle = as_double(target[i]);
            c.difference = std::abs(c.empirical - c.semicircle);
            row.discrepancy = std::max(row.discrepancy, c.difference);
            row.cells.push_back(c);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<BoundSeries> bound_sweep(i64 q, unsigned n_max, unsigned nu_max, double eps)
{
    if (!is_prime(q))
        throw std::invalid_argument("bound_sweep needs q prime");
    std::vector<BoundSeries> out;
    for (unsigned n = 2; n <= n_max; n += 2) {
        BoundSeries s;
        s.n = n;
        double running = -1;
        unsigned arg = 0;
        for (unsigned nu = 0; nu <= nu_max; ++nu) {
            i64 m = checked_power(q, nu);
            BoundRow r;
            r.n = n;
            r.nu = nu;
            r.moment_x = moment_x(m, n);
            r.moment_U = moment_U(m, n);
            double root = std::pow(static_cast<double>(q), 0.5 * nu);
            r.x_scaled = std::abs(to_double(r.moment_x)) / root;
            r.U_scaled = std::abs(to_double(r.moment_U)) / root;
            r.U_eps_scaled = r.U_scaled / std::pow(static_cast<double>(q), eps * nu);
            if (r.U_eps_scaled > running) {
                running = r.U_eps_scaled;
                arg = nu;
            }
            r.U_running_max = running;
            s.rows.push_back(r);
        }
        s.max_before_last = arg < nu_max;
        out.push_back(std::move(s));
    }
    return out;
}

Rational multiprime_moment(const std::vector<i64>& primes, const std::vector<unsigned>& exponents, unsigned l)
{
    if (primes.size() != exponents.size())
        throw std::invalid_argument("one exponent per prime");
    Integer m = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw std::invalid_argument("multiprime_moment: " + std::to_string(primes[i]) + " is not prime");
        for (std::size_t j = 0; j < i; ++j)
            if (primes[j] == primes[i])
                throw std::invalid_argument("multiprime_moment: primes must be distinct");
        m *= ipow(primes[i], exponents[i]);
    }
    if (m > Integer(1L << 58))
        throw std::overflow_error("m too large");
    return moment_U(m.get_si(), l);
}

std::vector<MultiprimeRow> multiprime_sweep(const std::vector<i64>& primes, unsigned nu_max, unsigned l, double power)
{
    std::vector<MultiprimeRow> out;
    std::vector<unsigned> e(primes.size(), 0);
    while (true) {
        MultiprimeRow r;
        r.exponents = e;
        r.value = multiprime_moment(primes, e, l);
        Integer m = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            m *= ipow(primes[i], e[i]);
        r.m = m.get_si();
        r.scaled = std::abs(to_double(r.value)) / std::pow(static_cast<double>(r.m), power);
        out.push_back(std::move(r));
        std::size_t i = primes.size();
        while (i > 0 && e[i - 1] == nu_max)
            e[--i] = 0;
        if (i == 0)
            break;
        ++e[i - 1];
    }
    return out;
}

namespace {

CyclotomicRational twisted_sum(const DirichletCharacter& chi, i64 q, unsigned nu, unsigned l)
{
    if (!is_prime(q) || chi.modulus() % q == 0)
        throw std::invalid_argument("twisted measure needs a prime q not dividing N");
    if (l % 2)
        throw std::invalid_argument("twisted_moment_U needs even l");
    const i64 m = checked_power(q, nu);
    auto row = twisted_class_row(chi, m);
    std::vector<Integer> acc(row.order(), 0);
    for (i64 t = -row.t_max(); t <= row.t_max(); ++t) {
        auto six = row.six_powers(t);
        Integer P = chebyshev_P(l, t, m);
        for (unsigned j = 0; j < row.order(); ++j)
            if (six[j])
                acc[j] += P * six[j];
    }
    Rational scale(1);
    scale /= Rational(Integer(12) * m * ipow(m, l / 2));
    return CyclotomicRational::from_powers(row.order(), acc) * scale;
}

}  // namespace

CyclotomicRational twisted_mass(const DirichletCharacter& chi, i64 q, unsigned nu)
{
    return twisted_sum(chi, q, nu, 0);
}

CyclotomicRational twisted_moment_U(const DirichletCharacter& chi, i64 q, unsigned nu, unsigned l)
{
    return twisted_sum(chi, q, nu, l);
}

}  // namespace hecke
