#pragma once

// Positive definite binary quadratic forms and the class numbers built from
// them: h_D, the unit-weighted h_w(D) and the Hurwitz class number H(D).

#include <compare>
#include <iosfwd>
#include <memory>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke {

/// a x^2 + b xy + c y^2 with a > 0 and b^2 - 4ac < 0.
struct BinaryQuadraticForm
{
    i64 a = 1;
    i64 b = 0;
    i64 c = 1;

    i64 discriminant() const { return b * b - 4 * a * c; }
    i64 content() const { return gcd(gcd(a, b), c); }
    bool is_primitive() const { return content() == 1; }
    /// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
    bool is_reduced() const;

    auto operator<=>(const BinaryQuadraticForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q);

/// True for D < 0 with D = 0, 1 (mod 4).
bool is_negative_discriminant(i64 D);
bool is_fundamental_discriminant(i64 D0);

/// A negative discriminant D split as D0 * f^2 with D0 fundamental.
class OrderDiscriminant
{
public:
    explicit OrderDiscriminant(i64 D);
    OrderDiscriminant(i64 D0, i64 f);

    i64 value() const { return value_; }
    i64 fundamental() const { return fundamental_; }
    i64 conductor() const { return conductor_; }

private:
    i64 value_;
    i64 fundamental_;
    i64 conductor_;
};

enum class FormScope { primitive, all };

/// One reduced representative per SL2(Z)-class, sorted by (a, b, c).
/// FormScope::primitive is the class group; FormScope::all also lists the
/// imprimitive classes g * Q.
std::vector<BinaryQuadraticForm> reduced_forms(i64 D, FormScope scope = FormScope::primitive);

i64 class_number(i64 D);
/// #O_D^x: 6 for D = -3, 4 for D = -4, 2 otherwise.
i64 unit_count(i64 D);
/// 2 h_D / #O_D^x.
Rational unit_weighted_h(i64 D);
/// h_w(D0) * f * prod_{p | f} (1 - (D0/p)/p); equals unit_weighted_h(D0 f^2).
Rational hw_from_fundamental(i64 D0, i64 f);

/// 1/#Gamma_Q for a reduced form Q: 1/3 on the class of a(x^2+xy+y^2),
/// 1/2 on a(x^2+y^2), 1 elsewhere.
Rational stabilizer_weight(const BinaryQuadraticForm& q);

/// H(D) for D > 0, D = 0, 3 (mod 4), as the conductor sum of h_w(-D/f^2).
/// Memoized in a process-wide, mutex-guarded cache.
Rational hurwitz_H(i64 D);
/// H(D) as sum_Q 1/#Gamma_Q over every reduced form of discriminant -D.
Rational hurwitz_H_direct(i64 D);

/// CSV table "D,H_numerator,H_denominator" (header included, LF endings)
/// for every admissible D in [D_min, D_max].
void write_hurwitz_csv(std::ostream& os, i64 D_min, i64 D_max);

/// 6 h_w(-(4m - t^2)/f^2) for one conductor f.
struct ConductorTerm
{
    i64 f;
    i64 hw6;
};

/*
 * Class-number data for every discriminant t^2 - 4m with 0 <= t, t^2 < 4m.
 * Computed in one pass over reduced forms (a, b, c) with 4ac - b^2 = 4m - t^2:
 * for each a the admissible t are the residues mod 4a with t^2 = b^2 + 4m,
 * so the pass costs O(m) instead of one enumeration per discriminant.
 * A form of content f contributes to the h_w(-D/f^2) term.
 */
class HurwitzRow
{
public:
    HurwitzRow(i64 m, std::vector<std::vector<ConductorTerm>> terms);

    i64 m() const { return m_; }
    /// Largest t >= 0 with t^2 < 4m.
    i64 t_max() const { return static_cast<i64>(terms_.size()) - 1; }
    /// Terms for |t|, sorted by f.
    const std::vector<ConductorTerm>& terms(i64 t) const;
    /// 6 H(4m - t^2).
    i64 H6(i64 t) const;
    Rational H(i64 t) const { return fraction(H6(t), 6); }

private:
    i64 m_;
    std::vector<std::vector<ConductorTerm>> terms_;
};

HurwitzRow compute_hurwitz_row(i64 m, unsigned threads = 1);
/// Cached compute_hurwitz_row, safe for concurrent callers.
std::shared_ptr<const HurwitzRow> hurwitz_row(i64 m);

/// Worker count used by hurwitz_row (default 1). Results do not depend on it.
void set_worker_threads(unsigned n);
unsigned worker_threads();

}  // namespace hecke
