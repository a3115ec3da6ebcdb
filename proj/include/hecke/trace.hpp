#pragma once

// Eichler-Selberg trace formula for T(m) on S_k(Gamma_0(N), chi):
//   tr T(m) = A1(m) + A2(m) + A3(m) + A4(m),   gcd(m, N) = 1.

#include <span>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/dirichlet.hpp"

namespace hecke {

class TraceContext
{
public:
    TraceContext(int k, DirichletCharacter chi);

    int weight() const { return k_; }
    i64 level() const { return chi_.modulus(); }
    const DirichletCharacter& character() const { return chi_; }
    /// chi(-1) != (-1)^k: the space is zero.
    bool degenerate() const { return degenerate_; }

private:
    int k_;
    DirichletCharacter chi_;
    bool degenerate_;
};

struct TraceBreakdown
{
    CyclotomicRational A1, A2, A3, A4, total;
    bool degenerate = false;
};

/// Coefficients of U_n in x, ascending.
std::vector<Integer> chebyshev_U(unsigned n);
Rational chebyshev_U_value(unsigned n, const Rational& x);
/// m^{n/2} U_n(t / (2 sqrt m)) as an integer: P_0 = 1, P_1 = t, P_n = t P_{n-1} - m P_{n-2}.
Integer chebyshev_P(unsigned n, i64 t, i64 m);

/*
 * How the root count inside mu(t, f, m) is read when N_f = gcd(N, f) > 1:
 *   residues_mod_N   x ranges over (Z/NZ)^x, counted once if some lift
 *                    solves x^2 - t x + m = 0 (mod N N_f);
 *   lifts_mod_N_Nf   every solution x mod N N_f with gcd(x, N) = 1 counts.
 * Both agree when N_f = 1.
 */
enum class RootCounting { residues_mod_N, lifts_mod_N_Nf };
inline constexpr RootCounting default_root_counting = RootCounting::residues_mod_N;

CyclotomicRational mu_local(i64 t, i64 f, i64 m, const TraceContext& ctx,
                            RootCounting rc = default_root_counting);

/// H_{N,chi}(4m - t^2) from per-discriminant class numbers.
CyclotomicRational generalized_H(const DirichletCharacter& chi, i64 t, i64 m,
                                 RootCounting rc = default_root_counting);

/*
 * 6 H_{N,chi}(4m - t^2) for every t with t^2 < 4m, built on the cached
 * HurwitzRow.  Each value is an integer vector over the powers
 * 1, zeta_e, ..., zeta_e^{e-1} (not reduced mod Phi_e).
 */
class TwistedClassRow
{
public:
    TwistedClassRow(i64 m, i64 t_max, unsigned order, std::vector<i64> six);

    i64 m() const { return m_; }
    i64 t_max() const { return t_max_; }
    unsigned order() const { return order_; }
    std::span<const i64> six_powers(i64 t) const;
    CyclotomicRational value(i64 t) const;

private:
    i64 m_;
    i64 t_max_;
    unsigned order_;
    std::vector<i64> six_;
};

TwistedClassRow twisted_class_row(const DirichletCharacter& chi, i64 m,
                                  RootCounting rc = default_root_counting);

/// sum_{t^2 < 4m} P_{k-2}(t, m) H_{N,chi}(4m - t^2); A2(m) is -1/2 of this.
CyclotomicRational weighted_class_sum(i64 m, const TraceContext& ctx,
                                      RootCounting rc = default_root_counting);

CyclotomicRational A1(i64 m, const TraceContext& ctx);
CyclotomicRational A2(i64 m, const TraceContext& ctx, RootCounting rc = default_root_counting);
CyclotomicRational A3(i64 m, const TraceContext& ctx);
CyclotomicRational A4(i64 m, const TraceContext& ctx);

TraceBreakdown trace_T(i64 m, const TraceContext& ctx, RootCounting rc = default_root_counting);

}  // namespace hecke
