#include "hecke/series.hpp"

#include <stdexcept>

namespace hecke {

TruncatedSeries::TruncatedSeries(unsigned M) : coeffs_(M + 1, CyclotomicRational(0)) {}

TruncatedSeries::TruncatedSeries(unsigned M, std::vector<CyclotomicRational> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(M + 1, CyclotomicRational(0));
}

TruncatedSeries TruncatedSeries::geometric(const CyclotomicRational& a, unsigned d, unsigned M)
{
    if (d == 0)
        throw std::invalid_argument("geometric: d must be positive");
    TruncatedSeries s(M);
    CyclotomicRational power(1);
    for (unsigned i = 0; i <= M; i += d) {
        s.coeffs_[i] = power;
        power *= a;
    }
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const CyclotomicRational& c, unsigned power, unsigned M)
{
    TruncatedSeries s(M);
    if (power <= M)
        s.coeffs_[power] = c;
    return s;
}

TruncatedSeries TruncatedSeries::shifted(unsigned s) const
{
    TruncatedSeries out(order());
    for (unsigned i = 0; i + s <= order(); ++i)
        out.coeffs_[i + s] = coeffs_[i];
    return out;
}

bool TruncatedSeries::is_zero() const
{
    for (auto const& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

std::string TruncatedSeries::to_string() const
{
    std::string s;
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        if (i)
            s += " + ";
        s += "(" + coeffs_[i].to_string() + ")z^" + std::to_string(i);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    if (o.order() != order())
        throw std::invalid_argument("series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    if (o.order() != order())
        throw std::invalid_argument("series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const CyclotomicRational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("series orders differ");
    TruncatedSeries out(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= a.order(); ++j)
            if (!b.coeffs_[j].is_zero())
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& x : out.coeffs_)
        x = -x;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i]))
            return false;
    return true;
}

}  // namespace hecke
