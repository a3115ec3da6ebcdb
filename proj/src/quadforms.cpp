#include "hecke/quadforms.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace hecke {

bool BinaryQuadraticForm::is_reduced() const
{
    i64 ab = b < 0 ? -b : b;
    if (a <= 0 || ab > a || a > c)
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q)
{
    return os << "(" << q.a << "," << q.b << "," << q.c << ")";
}

bool is_negative_discriminant(i64 D)
{
    if (D >= 0)
        return false;
    i64 r = mod(D, 4);
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(i64 D0)
{
    if (D0 >= 0)
        return false;
    if (mod(D0, 4) == 1)
        return is_squarefree(D0);
    if (mod(D0, 4) != 0)
        return false;
    i64 n = D0 / 4;
    i64 r = mod(n, 4);
    return (r == 2 || r == 3) && is_squarefree(n);
}

OrderDiscriminant::OrderDiscriminant(i64 D) : value_(D)
{
    if (!is_negative_discriminant(D))
        throw std::invalid_argument("not a negative discriminant: " + std::to_string(D));
    i64 core = 1, square = 1;
    for (auto const& [p, e] : factorize(D)) {
        if (e % 2)
            core *= p;
        for (int i = 0; i < e / 2; ++i)
            square *= p;
    }
    i64 d = -core;
    if (mod(d, 4) == 1) {
        fundamental_ = d;
        conductor_ = square;
    } else {
        fundamental_ = 4 * d;
        conductor_ = square / 2;
    }
}

OrderDiscriminant::OrderDiscriminant(i64 D0, i64 f) : value_(D0 * f * f), fundamental_(D0), conductor_(f)
{
    if (!is_fundamental_discriminant(D0))
        throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(D0));
    if (f < 1)
        throw std::invalid_argument("conductor must be positive");
}

std::vector<BinaryQuadraticForm> reduced_forms(i64 D, FormScope scope)
{
    if (!is_negative_discriminant(D))
        throw std::invalid_argument("not a negative discriminant: " + std::to_string(D));
    std::vector<BinaryQuadraticForm> out;
    i64 n = -D;
    for (i64 a = 1; 3 * a * a <= n; ++a) {
        i64 b0 = -a + 1;
        if (mod(b0 - D, 2) != 0)
            ++b0;
        for (i64 b = b0; b <= a; b += 2) {
            i64 num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            BinaryQuadraticForm q{a, b, c};
            if (scope == FormScope::primitive && !q.is_primitive())
                continue;
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 class_number(i64 D) { return static_cast<i64>(reduced_forms(D).size()); }

i64 unit_count(i64 D)
{
    if (!is_negative_discriminant(D))
        throw std::invalid_argument("not a negative discriminant: " + std::to_string(D));
    return D == -3 ? 6 : D == -4 ? 4 : 2;
}

Rational unit_weighted_h(i64 D)
{
    Rational r(2 * class_number(D), unit_count(D));
    r.canonicalize();
    return r;
}

Rational hw_from_fundamental(i64 D0, i64 f)
{
    OrderDiscriminant od(D0, f);
    Rational r = unit_weighted_h(D0) * Rational(f);
    for (auto const& pp : factorize(f))
        r *= fraction(pp.prime - kronecker(D0, pp.prime), pp.prime);
    r.canonicalize();
    return r;
}

Rational stabilizer_weight(const BinaryQuadraticForm& q)
{
    if (q.a == q.b && q.b == q.c)
        return Rational(1, 3);
    if (q.b == 0 && q.a == q.c)
        return Rational(1, 2);
    return Rational(1);
}

namespace {

void require_hurwitz_argument(i64 D)
{
    if (D <= 0)
        throw std::invalid_argument("H(D) needs D > 0, got " + std::to_string(D));
    i64 r = mod(D, 4);
    if (r != 0 && r != 3)
        throw std::invalid_argument("H(D) needs D = 0,3 mod 4, got " + std::to_string(D));
}

Rational hurwitz_H_uncached(i64 D)
{
    Rational sum = 0;
    for (i64 f = 1; f * f <= D; ++f) {
        if (D % (f * f))
            continue;
        i64 d = -(D / (f * f));
        if (is_negative_discriminant(d))
            sum += unit_weighted_h(d);
    }
    sum.canonicalize();
    return sum;
}

}  // namespace

Rational hurwitz_H(i64 D)
{
    require_hurwitz_argument(D);
    static std::mutex lock;
    static std::unordered_map<i64, Rational> cache;
    {
        std::lock_guard g(lock);
        auto it = cache.find(D);
        if (it != cache.end())
            return it->second;
    }
    Rational value = hurwitz_H_uncached(D);
    std::lock_guard g(lock);
    cache.emplace(D, value);
    return value;
}

Rational hurwitz_H_direct(i64 D)
{
    require_hurwitz_argument(D);
    Rational sum = 0;
    for (auto const& q : reduced_forms(-D, FormScope::all))
        sum += stabilizer_weight(q);
    sum.canonicalize();
    return sum;
}

void write_hurwitz_csv(std::ostream& os, i64 D_min, i64 D_max)
{
    os << "D,H_numerator,H_denominator\n";
    for (i64 D = std::max<i64>(D_min, 1); D <= D_max; ++D) {
        i64 r = mod(D, 4);
        if (r != 0 && r != 3)
            continue;
        Rational h = hurwitz_H(D);
        os << D << "," << h.get_num().get_str() << "," << h.get_den().get_str() << "\n";
    }
}

HurwitzRow::HurwitzRow(i64 m, std::vector<std::vector<ConductorTerm>> terms) : m_(m), terms_(std::move(terms)) {}

const std::vector<ConductorTerm>& HurwitzRow::terms(i64 t) const
{
    i64 at = t < 0 ? -t : t;
    if (at > t_max())
        throw std::out_of_range("t^2 >= 4m in HurwitzRow");
    return terms_[static_cast<std::size_t>(at)];
}

i64 HurwitzRow::H6(i64 t) const
{
    i64 s = 0;
    for (auto const& term : terms(t))
        s += term.hw6;
    return s;
}

namespace {

using RowTerms = std::vector<std::vector<ConductorTerm>>;

void add_term(std::vector<ConductorTerm>& cell, i64 f, i64 w)
{
    for (auto& term : cell)
        if (term.f == f) {
            term.hw6 += w;
            return;
        }
    cell.push_back({f, w});
}

// Reduced forms (a, b, c) with 4ac - b^2 = 4m - t^2, for a = first, first + stride, ...
void scan_forms(i64 m, i64 a_first, i64 stride, RowTerms& row)
{
    const i64 four_m = 4 * m;
    const i64 t_top = static_cast<i64>(row.size()) - 1;
    std::vector<i64> head, next, b_of;
    for (i64 a = a_first; 3 * a * a <= four_m; a += stride) {
        const i64 L = 4 * a;
        head.assign(static_cast<std::size_t>(L), -1);
        next.clear();
        b_of.clear();
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 s = (b * b) % L;
            b_of.push_back(b);
            next.push_back(head[static_cast<std::size_t>(s)]);
            head[static_cast<std::size_t>(s)] = static_cast<i64>(b_of.size()) - 1;
        }
        const i64 four_m_mod = four_m % L;
        const i64 base = four_m - 4 * a * a;
        for (i64 r = 0; r < L && r <= t_top; ++r) {
            i64 s = mod((r * r) % L - four_m_mod, L);
            for (i64 idx = head[static_cast<std::size_t>(s)]; idx >= 0; idx = next[static_cast<std::size_t>(idx)]) {
                i64 b = b_of[static_cast<std::size_t>(idx)];
                i64 lim = b * b + base;  // c >= a  <=>  t^2 <= lim
                if (lim < r * r)
                    continue;
                i64 t_lim = std::min(isqrt(lim), t_top);
                for (i64 t = r; t <= t_lim; t += L) {
                    i64 c = (b * b + four_m - t * t) / L;
                    if (c == a && b < 0)
                        continue;
                    i64 w = (b == a && c == a) ? 2 : (b == 0 && c == a) ? 3 : 6;
                    add_term(row[static_cast<std::size_t>(t)], gcd(gcd(a, b), c), w);
                }
            }
        }
    }
}

}  // namespace

HurwitzRow compute_hurwitz_row(i64 m, unsigned threads)
{
    if (m < 1)
        throw std::invalid_argument("hurwitz row needs m >= 1");
    if (m > (i64{1} << 58))
        throw std::invalid_argument("m too large for 64-bit enumeration");
    i64 t_top = isqrt(4 * m - 1);
    threads = std::max(1u, threads);
    std::vector<RowTerms> parts(threads, RowTerms(static_cast<std::size_t>(t_top + 1)));
    if (threads == 1) {
        scan_forms(m, 1, 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < threads; ++j)
            pool.emplace_back(scan_forms, m, static_cast<i64>(j) + 1, static_cast<i64>(threads), std::ref(parts[j]));
        for (auto& th : pool)
            th.join();
    }
    RowTerms merged = std::move(parts[0]);
    for (unsigned j = 1; j < threads; ++j)
        for (std::size_t t = 0; t < merged.size(); ++t)
            for (auto const& term : parts[j][t])
                add_term(merged[t], term.f, term.hw6);
    for (auto& cell : merged)
        std::sort(cell.begin(), cell.end(), [](auto const& x, auto const& y) { return x.f < y.f; });
    return HurwitzRow(m, std::move(merged));
}

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_worker_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned worker_threads() { return g_threads; }

std::shared_ptr<const HurwitzRow> hurwitz_row(i64 m)
{
    static std::mutex lock;
    static std::map<i64, std::shared_ptr<const HurwitzRow>> cache;
    {
        std::lock_guard g(lock);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }
    auto row = std::make_shared<const HurwitzRow>(compute_hurwitz_row(m, g_threads));
    std::lock_guard g(lock);
    return cache.emplace(m, std::move(row)).first->second;
}

}  // namespace hecke
