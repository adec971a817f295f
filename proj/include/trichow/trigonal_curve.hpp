#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trichow/errors.hpp"
#include "trichow/fp.hpp"
#include "trichow/hirzebruch.hpp"
#include "trichow/poly.hpp"
#include "trichow/rational.hpp"
#include "trichow/upoly.hpp"

namespace trichow {

/// Genus of a smooth member of |3s + kf| on F_m: 2k - 3m - 2 (adjunction).
inline int genus_from_class(int m, int k) {
    int g = 2 * k - 3 * m - 2;
    if (g < 2) throw CalcError("genus too small", "class gives genus below 2");
    return g;
}

/// An explicit curve G = sum_i c_i(x0, x1) y0^(3-i) y1^i on F_m, with c_i a
/// binary form of degree k - i*m (absent when that degree is negative).
/// Coefficients are stored ascending in the x0-power.
template <class K>
struct TrigonalCurve {
    int m = 0;
    int k = 0;
    std::array<std::vector<K>, 4> coeffs;

    int coeff_degree(int i) const { return k - i * m; }

    bool is_identically_zero() const {
        for (const auto& c : coeffs)
            for (const auto& v : c)
                if (!v.is_zero()) return false;
        return true;
    }

    void validate() const {
        if (m != 0 && m != 1) throw CalcError("bad degree", "ambient surface must be F_0 or F_1");
        for (int i = 0; i < 4; ++i) {
            int d = coeff_degree(i);
            if (d < 0) {
                if (!coeffs[static_cast<size_t>(i)].empty())
                    throw CalcError("arity", "coefficient present at negative degree");
            } else if (coeffs[static_cast<size_t>(i)].size() != static_cast<size_t>(d) + 1) {
                throw CalcError("arity", "coefficient length does not match its degree");
            }
        }
        if (is_identically_zero()) throw CalcError("zero input", "curve equation is identically zero");
        genus_from_class(m, k);
    }

    int genus() const { return genus_from_class(m, k); }
};

namespace lab {

/// Fiber-cubic coefficients A y0^3 + B y0^2 y1 + C y0 y1^2 + D y1^3 as
/// univariate polynomials on one x-chart (chart A: x = x0 with x1 = 1;
/// chart B: x = x1 with x0 = 1, i.e. the reversed coefficient lists).
template <class K>
struct FiberCoeffs {
    UPoly<K> A, B, C, D;
};

template <class K>
FiberCoeffs<K> fiber_on_chart(const TrigonalCurve<K>& c, bool chart_a) {
    auto mk = [&](int i) {
        std::vector<K> v = c.coeffs[static_cast<size_t>(i)];
        if (!chart_a) std::reverse(v.begin(), v.end());
        return UPoly<K>(std::move(v));
    };
    return {mk(0), mk(1), mk(2), mk(3)};
}

template <class K>
UPoly<K> fiber_discriminant(const FiberCoeffs<K>& f) {
    const auto& [A, B, C, D] = f;
    return (A * B * C * D).scaled(K(18)) - (B * B * B * D).scaled(K(4)) + B * B * C * C
        - (A * C * C * C).scaled(K(4)) - (A * A * D * D).scaled(K(27));
}

/// The perfect-cube conditions of the fiber cubic, as x-polynomials.
template <class K>
std::array<UPoly<K>, 3> fiber_triple_conditions(const FiberCoeffs<K>& f) {
    const auto& [A, B, C, D] = f;
    return {B * B - (A * C).scaled(K(3)), B * C - (A * D).scaled(K(9)),
            C * C - (B * D).scaled(K(3))};
}

/// gcd of all four coefficient binary forms; a nonconstant common factor
/// means a union of ruling lines splits off the curve.
template <class K>
bool has_vertical_component(const TrigonalCurve<K>& c) {
    auto fa = fiber_on_chart(c, true);
    // a common x0-root shows up in the gcd of the chart-A polynomials;
    // a common x1-power only as their shared degree deficit
    UPoly<K> g;
    int min_x1 = 1 << 20;
    for (int i = 0; i < 4; ++i) {
        int d = c.coeff_degree(i);
        const UPoly<K>& p = (i == 0 ? fa.A : i == 1 ? fa.B : i == 2 ? fa.C : fa.D);
        if (d < 0 || p.is_zero()) continue;  // a vanished coefficient constrains nothing
        g = g.is_zero() ? p : upoly_gcd(g, p);
        min_x1 = std::min(min_x1, d - p.degree());
    }
    if (g.is_zero()) return true;  // all coefficients zero is caught earlier
    return g.degree() > 0 || min_x1 > 0;
}

/// Split a squarefree modulus by a polynomial: (part where h = 0, rest).
template <class K>
std::pair<UPoly<K>, UPoly<K>> split_by(const UPoly<K>& q, const UPoly<K>& h) {
    UPoly<K> hz = upoly_mod(h, q);
    if (hz.is_zero()) return {q, UPoly<K>::constant(K(1))};
    UPoly<K> zero_part = upoly_gcd(q, hz);
    return {zero_part, exact_div(q, zero_part)};
}

/// Does any root of the squarefree q carry a singular point of the curve?
/// Precondition: every root of q is a root of the chart discriminant of
/// multiplicity >= 2. Exactness notes: a multiple root of a cubic is
/// rational over the coefficient ring, so all the work happens inside
/// k[x]/(q) with gcd splitting and no field extensions.
template <class K>
bool factor_has_singularity(const FiberCoeffs<K>& f, const UPoly<K>& q) {
    auto [P1, P2, P3] = fiber_triple_conditions(f);

    // triple-root part: all three conditions vanish
    UPoly<K> qt = upoly_gcd(upoly_gcd(split_by(q, P1).first, split_by(q, P2).first),
                            split_by(q, P3).first);
    if (qt.degree() < q.degree()) {
        // Some root has a double (not triple) point in its fiber. A smooth
        // double vertical contact forces discriminant order exactly 1; here
        // the order is >= 2, so that point is singular.
        return true;
    }

    // triple-root fibers: singular iff the x-derivative vanishes there too
    auto [q_inf, q_fin] = split_by(qt, f.A);
    if (q_fin.degree() > 0) {
        // finite triple root u* = -B / (3A) in the y0-direction
        UPoly<K> ainv3 = upoly_invmod(upoly_mod(f.A.scaled(K(3)), q_fin), q_fin);
        UPoly<K> u = upoly_mod(-(f.B) * ainv3, q_fin);
        UPoly<K> u2 = upoly_mod(u * u, q_fin);
        UPoly<K> u3 = upoly_mod(u2 * u, q_fin);
        UPoly<K> gx = upoly_mod(
            f.A.derivative() * u3 + f.B.derivative() * u2 + f.C.derivative() * u + f.D.derivative(),
            q_fin);
        if (gx.is_zero()) return true;
        if (upoly_gcd(q_fin, gx).degree() > 0) return true;
    }
    if (q_inf.degree() > 0) {
        // triple root at (y0:y1) = (1:0); on the chart y0 = 1 the curve is
        // A + B v + C v^2 + D v^3 and the point is v = 0, so the singularity
        // test is A' = 0 there.
        UPoly<K> gx = upoly_mod(f.A.derivative(), q_inf);
        if (gx.is_zero()) return true;
        if (upoly_gcd(q_inf, gx).degree() > 0) return true;
    }
    return false;
}

} // namespace lab

/// Exact smoothness test, chartwise over the coefficient field. Singular
/// points sit over discriminant roots of multiplicity >= 2 (a node already
/// gives order 2, a smooth vertical tangency gives order exactly 1, a
/// smooth triple contact exactly 2), so only the repeated factors of the
/// branch binary form need the fiberwise analysis.
template <class K>
bool is_smooth(const TrigonalCurve<K>& c) {
    c.validate();
    if (lab::has_vertical_component(c)) return false;

    auto fa = lab::fiber_on_chart(c, true);
    UPoly<K> da = lab::fiber_discriminant(fa);
    int full_degree = 4 * c.k - 6 * c.m;
    if (da.is_zero()) return false;  // every fiber degenerate: non-reduced curve

    for (const auto& [q, e] : upoly_squarefree(da)) {
        if (e < 2) continue;
        if (lab::factor_has_singularity(fa, q)) return false;
    }

    int inf_mult = full_degree - da.degree();
    if (inf_mult >= 2) {
        auto fb = lab::fiber_on_chart(c, false);
        if (lab::factor_has_singularity(fb, UPoly<K>::x())) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Branch reports
// ---------------------------------------------------------------------------

enum class RamProfile { simple21, triple3, anomalous };

inline const char* profile_name(RamProfile p) {
    switch (p) {
        case RamProfile::simple21: return "(2,1)";
        case RamProfile::triple3: return "(3)";
        case RamProfile::anomalous: return "anomalous";
    }
    return "?";
}

template <class K>
struct BranchPoint {
    Poly<K> factor;      // irreducible over the factors we separate; squarefree always
    int degree = 0;      // number of geometric points in the factor
    int multiplicity = 0;
    RamProfile profile = RamProfile::simple21;
};

template <class K>
struct BranchReport {
    Poly<K> disc;  // binary form of degree 4k - 6m in (x0, x1)
    std::vector<BranchPoint<K>> points;

    int branch_point_count() const {
        int n = 0;
        for (const auto& p : points) n += p.degree;
        return n;
    }
    /// sum of (e - 1) over ramification points: each simple fiber
    /// contributes 1, each triple fiber 2, matching the disc multiplicity.
    int ramification_weight() const {
        int n = 0;
        for (const auto& p : points) n += p.degree * p.multiplicity;
        return n;
    }
};

namespace lab {

/// Homogenize a chart-A univariate factor of degree d to a binary form.
template <class K>
Poly<K> homogenize_factor(const UPoly<K>& q) {
    static const std::vector<std::string> XV{"x0", "x1"};
    Poly<K> out(XV);
    int d = q.degree();
    for (int j = 0; j <= d; ++j) {
        K cj = q.coeff(static_cast<size_t>(j));
        if (cj.is_zero()) continue;
        Mono m{static_cast<unsigned>(j), static_cast<unsigned>(d - j)};
        out.set_term(m, cj);
    }
    return out;
}

/// Push a (possibly mixed) squarefree factor into report entries, splitting
/// so every reported factor has a uniform profile.
template <class K>
void report_factor(const FiberCoeffs<K>& f, const UPoly<K>& q, int mult,
                   std::vector<BranchPoint<K>>& out) {
    if (q.degree() <= 0) return;
    auto [P1, P2, P3] = fiber_triple_conditions(f);
    UPoly<K> qt = upoly_gcd(upoly_gcd(split_by(q, P1).first, split_by(q, P2).first),
                            split_by(q, P3).first);
    UPoly<K> qrest = qt.degree() > 0 ? exact_div(q, qt) : q;
    if (qt.degree() > 0)
        out.push_back({homogenize_factor(qt), qt.degree(), mult, RamProfile::triple3});
    if (qrest.degree() > 0)
        out.push_back({homogenize_factor(qrest), qrest.degree(), mult,
                       mult >= 2 ? RamProfile::anomalous : RamProfile::simple21});
}

} // namespace lab

/// Branch divisor of a smooth curve: the squarefree-decomposed discriminant
/// with a per-factor ramification profile. Factors are squarefree and
/// pairwise coprime; the x0 and x1 (infinity) roots are split off so the
/// familiar coordinate points appear individually.
template <class K>
BranchReport<K> branch_report(const TrigonalCurve<K>& c) {
    if (!is_smooth(c)) throw CalcError("not smooth", "branch report requires a smooth curve");
    auto fa = lab::fiber_on_chart(c, true);
    UPoly<K> da = lab::fiber_discriminant(fa);
    int full_degree = 4 * c.k - 6 * c.m;

    BranchReport<K> rep;
    {
        static const std::vector<std::string> XV{"x0", "x1"};
        Poly<K> disc(XV);
        for (int j = 0; j <= da.degree(); ++j) {
            K cj = da.coeff(static_cast<size_t>(j));
            if (cj.is_zero()) continue;
            Mono m{static_cast<unsigned>(j), static_cast<unsigned>(full_degree - j)};
            disc.set_term(m, cj);
        }
        rep.disc = disc;
    }

    for (auto& [q, e] : upoly_squarefree(da)) {
        UPoly<K> rest = q;
        if (rest.coeff(0).is_zero()) {  // split off the x0 = 0 root
            rest = exact_div(rest, UPoly<K>::x());
            lab::report_factor(fa, UPoly<K>::x(), e, rep.points);
        }
        lab::report_factor(fa, rest, e, rep.points);
    }
    int inf_mult = full_degree - da.degree();
    if (inf_mult > 0) {
        auto fb = lab::fiber_on_chart(c, false);
        auto [P1, P2, P3] = lab::fiber_triple_conditions(fb);
        bool triple = P1.evaluate(K(0)).is_zero() && P2.evaluate(K(0)).is_zero()
            && P3.evaluate(K(0)).is_zero();
        static const std::vector<std::string> XV{"x0", "x1"};
        Poly<K> x1_factor = Poly<K>::variable(XV, "x1");
        rep.points.push_back({x1_factor, 1, inf_mult,
                              triple ? RamProfile::triple3
                                     : (inf_mult >= 2 ? RamProfile::anomalous : RamProfile::simple21)});
    }

    int total = 0;
    for (const auto& p : rep.points) total += p.degree * p.multiplicity;
    if (total != full_degree) throw VerifyError("branch degrees do not add up to 4k - 6m");
    return rep;
}

// ---------------------------------------------------------------------------
// Forbidden-strata audit
// ---------------------------------------------------------------------------

struct AuditRow {
    std::string factor;
    int degree = 0;
    int multiplicity = 0;
    std::string profile;
    bool single_multiple_root = false;
};

struct AuditReport {
    bool pass = false;
    int fibers = 0;
    int simple_fibers = 0;
    int triple_fibers = 0;
    int maxwell_violations = 0;    // two multiple roots in one fiber
    int fourfold_violations = 0;   // profile beyond a triple point
    int mixed_violations = 0;      // simple and triple over the same point
    int anomalous_fibers = 0;      // repeated disc factor with a (2,1) profile
    int ramification_weight = 0;
    std::vector<AuditRow> rows;

    std::string summary() const {
        std::string s;
        s += "S_1_2 violations: " + std::to_string(maxwell_violations) + "\n";
        s += "S_3_1 violations: " + std::to_string(fourfold_violations) + "\n";
        s += "S_1_1_2_1 violations: " + std::to_string(mixed_violations) + "\n";
        s += "anomalous fibers: " + std::to_string(anomalous_fibers) + "\n";
        return s;
    }
};

/// Check, fiber by branch fiber, that no forbidden ramification pattern
/// occurs: a cubic fiber has at most one multiple root (no two simple
/// ramification points over one branch point), never a 4-fold point, and a
/// triple point leaves no room for extra ramification in its fiber.
/// Failures are reported, not thrown.
template <class K>
AuditReport forbidden_strata_audit(const TrigonalCurve<K>& c) {
    BranchReport<K> rep = branch_report(c);
    AuditReport audit;
    for (const auto& p : rep.points) {
        AuditRow row;
        row.factor = p.factor.str();
        row.degree = p.degree;
        row.multiplicity = p.multiplicity;
        row.profile = profile_name(p.profile);
        // a cubic with a multiple root has exactly one: a second double root
        // would need degree >= 4
        row.single_multiple_root = true;
        audit.rows.push_back(row);
        audit.fibers += p.degree;
        switch (p.profile) {
            case RamProfile::simple21: audit.simple_fibers += p.degree; break;
            case RamProfile::triple3: audit.triple_fibers += p.degree; break;
            case RamProfile::anomalous: audit.anomalous_fibers += p.degree; break;
        }
    }
    audit.ramification_weight = rep.ramification_weight();
    int expected = 2 * c.genus() + 4;
    audit.pass = audit.maxwell_violations == 0 && audit.fourfold_violations == 0
        && audit.mixed_violations == 0 && audit.anomalous_fibers == 0
        && audit.ramification_weight == expected;
    return audit;
}

} // namespace trichow
