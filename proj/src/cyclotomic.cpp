#include "hecke/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hecke {

namespace {

// Exact division of integer polynomials (ascending coefficients) by a monic divisor.
std::vector<i64> divide_monic(std::vector<i64> num, const std::vector<i64>& den)
{
    std::size_t dn = den.size() - 1;
    std::vector<i64> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        i64 c = num[i];
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j)
        if (num[j] != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(unsigned e)
{
    if (e == 0)
        throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::mutex lock;
    static std::map<unsigned, std::unique_ptr<std::vector<i64>>> cache;
    {
        std::lock_guard g(lock);
        auto it = cache.find(e);
        if (it != cache.end())
            return *it->second;
    }
    std::vector<i64> poly(e + 1, 0);
    poly[0] = -1;
    poly[e] = 1;
    for (i64 d : divisors(e))
        if (d < static_cast<i64>(e))
            poly = divide_monic(std::move(poly), cyclotomic_polynomial(static_cast<unsigned>(d)));
    std::lock_guard g(lock);
    auto [it, inserted] = cache.emplace(e, std::make_unique<std::vector<i64>>(std::move(poly)));
    return *it->second;
}

CyclotomicRational::CyclotomicRational() : coeffs_(1) {}

CyclotomicRational::CyclotomicRational(Rational r, unsigned order) : order_(order)
{
    if (order == 0)
        throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
    coeffs_[0] = std::move(r);
}

CyclotomicRational CyclotomicRational::zeta_power(unsigned order, i64 j)
{
    std::vector<Rational> powers(order, Rational(0));
    powers[static_cast<std::size_t>(mod(j, order))] = 1;
    return from_powers(order, powers);
}

CyclotomicRational CyclotomicRational::from_powers(unsigned order, std::span<const Rational> coeffs)
{
    CyclotomicRational out(Rational(0), order);
    out.reduce(std::vector<Rational>(coeffs.begin(), coeffs.end()));
    return out;
}

CyclotomicRational CyclotomicRational::from_powers(unsigned order, std::span<const Integer> coeffs)
{
    std::vector<Rational> q(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        q[i] = Rational(coeffs[i]);
    return from_powers(order, q);
}

void CyclotomicRational::reduce(std::vector<Rational> poly)
{
    const auto& phi = cyclotomic_polynomial(order_);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0)
                poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg, Rational(0));
    coeffs_ = std::move(poly);
}

bool CyclotomicRational::is_zero() const
{
    for (auto const& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicRational::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CyclotomicRational::rational_value() const
{
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational: " + to_string());
    return coeffs_[0];
}

CyclotomicRational CyclotomicRational::lifted(unsigned n) const
{
    if (n == order_)
        return *this;
    if (n % order_ != 0)
        throw std::invalid_argument("lift target must be a multiple of the order");
    unsigned step = n / order_;
    std::vector<Rational> powers(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        powers[j * step] = coeffs_[j];
    return from_powers(n, powers);
}

void CyclotomicRational::align(CyclotomicRational& o)
{
    if (order_ == o.order_)
        return;
    auto n = static_cast<unsigned>(lcm(order_, o.order_));
    if (order_ != n)
        *this = lifted(n);
    if (o.order_ != n)
        o = o.lifted(n);
}

CyclotomicRational& CyclotomicRational::operator+=(const CyclotomicRational& o)
{
    if (o.order_ == order_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CyclotomicRational rhs = o;
    align(rhs);
    return *this += rhs;
}

CyclotomicRational& CyclotomicRational::operator-=(const CyclotomicRational& o)
{
    return *this += -o;
}

CyclotomicRational& CyclotomicRational::operator*=(const CyclotomicRational& o)
{
    if (o.order_ != order_) {
        CyclotomicRational rhs = o;
        align(rhs);
        return *this *= rhs;
    }
    if (coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    reduce(std::move(prod));
    return *this;
}

CyclotomicRational& CyclotomicRational::operator*=(const Rational& r)
{
    for (auto& c : coeffs_)
        c *= r;
    return *this;
}

CyclotomicRational CyclotomicRational::operator-() const
{
    CyclotomicRational out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CyclotomicRational CyclotomicRational::pow(unsigned exp) const
{
    CyclotomicRational result(Rational(1), order_);
    CyclotomicRational base = *this;
    while (exp > 0) {
        if (exp & 1)
            result *= base;
        exp >>= 1;
        if (exp)
            base *= base;
    }
    return result;
}

bool operator==(const CyclotomicRational& a, const CyclotomicRational& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    CyclotomicRational x = a, y = b;
    x.align(y);
    return x.coeffs_ == y.coeffs_;
}

std::complex<double> CyclotomicRational::to_complex() const
{
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / order_);
    std::complex<double> acc = 0, zk = 1;
    for (auto const& c : coeffs_) {
        acc += c.get_d() * zk;
        zk *= z;
    }
    return acc;
}

std::string CyclotomicRational::to_string() const
{
    if (is_rational())
        return hecke::to_string(coeffs_[0]);
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + hecke::to_string(coeffs_[i]) + ")";
        if (i > 0)
            s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
    }
    return s.empty() ? "0/1" : s;
}

}  // namespace hecke
