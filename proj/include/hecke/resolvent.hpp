#pragma once

/*
 * Generating series in z for the traces of T(q^nu) and for each term of the
 * trace formula.  Everything is written in z, where X = chi(q)^{1/2} q^{(k-1)/2} z,
 * so no square roots of chi(q) or q appear:
 *
 *   sum_nu tr T(q^nu) z^{nu+1} = A1(z) + A2(z) + z F(z) + A4(z),
 *   F(z) = sum_nu A3(q^nu) z^nu.
 */

#include <string>
#include <vector>

#include "hecke/series.hpp"
#include "hecke/trace.hpp"

namespace hecke {

/// c_0 = 0, c_{nu+1} = tr T(q^nu) for nu = 0..M-1.
TruncatedSeries lhs_series(i64 q, const TraceContext& ctx, unsigned M,
                           RootCounting rc = default_root_counting);

/// (k-1) psi(N) / 12 * z / (1 - chi(q) q^{k-2} z^2).
TruncatedSeries A1_series(i64 q, const TraceContext& ctx, unsigned M);
/// sum_nu A1(q^nu) z^{nu+1}.
TruncatedSeries A1_series_direct(i64 q, const TraceContext& ctx, unsigned M);

/// -1/2 sum_nu Ahat(nu) z^{nu+1}.
TruncatedSeries A2_series(i64 q, const TraceContext& ctx, unsigned M,
                          RootCounting rc = default_root_counting);

/// F(z) from its rational closed form.
TruncatedSeries A3_series_closed(i64 q, const TraceContext& ctx, unsigned M);
/// F(z) = sum_{nu=0}^{M} A3(q^nu) z^nu by direct summation.
TruncatedSeries A3_series_direct(i64 q, const TraceContext& ctx, unsigned M);

/// z / ((1 - q z)(1 - z)) for k = 2 and trivial chi, else 0.
TruncatedSeries A4_series(i64 q, const TraceContext& ctx, unsigned M);
/// sum_nu A4(q^nu) z^{nu+1}.
TruncatedSeries A4_series_direct(i64 q, const TraceContext& ctx, unsigned M);

/// Ahat(nu) = sum_t H_{N,chi}(4 q^nu - t^2) P_{k-2}(t, q^nu).
CyclotomicRational moment_hat(i64 q, unsigned nu, const TraceContext& ctx,
                              RootCounting rc = default_root_counting);

struct MomentValue
{
    int k;
    i64 q;
    unsigned nu;
    CyclotomicRational value;
};

/// A_{k,q}(nu) = q^{-nu(k-2)/2} Ahat(nu); needs even k.
MomentValue moment_A(int k, i64 q, unsigned nu, const TraceContext& ctx,
                     RootCounting rc = default_root_counting);

/// Whether F(z) enters the identity as z F(z) or as F(z).
enum class A3Placement { shifted, unshifted };
std::string to_string(A3Placement p);

struct RtfReport
{
    unsigned order = 0;
    A3Placement placement = A3Placement::shifted;
    std::vector<bool> pass;  // orders 0..M
    std::vector<CyclotomicRational> lhs, rhs;
    int first_fail = -1;

    bool all_pass() const { return first_fail < 0; }
};

/// Coefficient-wise comparison of both sides for z^0..z^M.
RtfReport verify_rtf(i64 q, const TraceContext& ctx, unsigned M,
                     A3Placement placement = A3Placement::shifted,
                     RootCounting rc = default_root_counting);

struct RadiusRow
{
    unsigned nu;
    Rational A;           // A_{k,q}(nu)
    std::string scaled;   // |A| q^{-nu/2}, 30 significant digits
    double scaled_value;
};

/// |A_{k,q}(nu)| q^{-nu/2} for nu = 0..M at level 1; k >= 4 even.
std::vector<RadiusRow> radius_probe(i64 q, int k, unsigned M);

}  // namespace hecke
