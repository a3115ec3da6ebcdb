#pragma once

#include <string>
#include <vector>

#include "hecke/cyclotomic.hpp"

namespace hecke {

/*
 * Power series c_0 + c_1 z + ... + c_M z^M over Q(zeta_e), truncated at
 * order M.  Products of two series of order M are exact up to z^M.
 */
class TruncatedSeries
{
public:
    explicit TruncatedSeries(unsigned M = 0);
    TruncatedSeries(unsigned M, std::vector<CyclotomicRational> coeffs);

    /// 1 / (1 - a z^d) truncated at M; d >= 1.
    static TruncatedSeries geometric(const CyclotomicRational& a, unsigned d, unsigned M);
    /// c z^power (zero if power > M).
    static TruncatedSeries monomial(const CyclotomicRational& c, unsigned power, unsigned M);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const CyclotomicRational& operator[](unsigned i) const { return coeffs_.at(i); }
    CyclotomicRational& coeff(unsigned i) { return coeffs_.at(i); }
    const std::vector<CyclotomicRational>& coefficients() const { return coeffs_; }

    /// z^s times this series, truncated at the same order.
    TruncatedSeries shifted(unsigned s) const;
    bool is_zero() const;
    std::string to_string() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const CyclotomicRational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const CyclotomicRational& c) { return a *= c; }
    friend TruncatedSeries operator*(const CyclotomicRational& c, TruncatedSeries a) { return a *= c; }
    TruncatedSeries operator-() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<CyclotomicRational> coeffs_;
};

}  // namespace hecke
