#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trichow/jet_divisors.hpp"
#include "trichow/linalg.hpp"
#include "trichow/trigonal_curve.hpp"

namespace trichow {

/// Deterministic generator used by every sampling operation; seeds are part
/// of the experiment identity, so no global randomness anywhere.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : s_(seed + 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

struct SampledCurve {
    TrigonalCurve<Rational> curve;
    int attempts = 0;
};

/// Rejection-sample a smooth curve of genus g with integer coefficients in
/// a fixed box, deterministically in (g, seed).
inline SampledCurve random_smooth_curve(int g, std::uint64_t seed, int max_attempts = 1000) {
    auto data = trigonal_class_data(g);
    SplitMix rng(seed * 0x100000001b3ull + static_cast<std::uint64_t>(g));
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        TrigonalCurve<Rational> c;
        c.m = data.m;
        c.k = data.k;
        for (int i = 0; i < 4; ++i) {
            int d = c.coeff_degree(i);
            if (d < 0) continue;
            std::vector<Rational> v(static_cast<size_t>(d) + 1);
            for (auto& x : v) x = Rational(rng.range(-3, 3));
            c.coeffs[static_cast<size_t>(i)] = std::move(v);
        }
        if (c.is_identically_zero()) continue;
        try {
            if (is_smooth(c)) return {c, attempt};
        } catch (const CalcError&) {
            continue;
        }
    }
    throw CalcError("sampling failed", "no smooth curve found within the attempt budget");
}

// ---------------------------------------------------------------------------
// Evaluation-map ranks
// ---------------------------------------------------------------------------

/// Rank of the evaluation of the full section space of O(C) to the length-n
/// jet along the ruling line at a point (x*, u*) on the chart x1 = y1 = 1.
/// The point must avoid coordinate degeneracies (x* of a well-defined chart
/// point; any rational values work).
inline size_t jet_evaluation_rank(int g, int n, const Rational& xstar, const Rational& ustar) {
    if (n < 1 || n > 4) throw CalcError("bad degree", "jet order must be 1..4");
    auto data = trigonal_class_data(g);
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n));
    // sections y0^(3-i) y1^i x0^j x1^(d_i - j) restricted to the chart are
    // u^(3-i) x^j; the jet takes u-derivatives of order 0..n-1 at the point
    for (int t = 0; t < n; ++t) {
        auto& row = rows[static_cast<size_t>(t)];
        for (int i = 0; i <= 3; ++i) {
            int d = data.k - i * data.m;
            if (d < 0) continue;
            // d^t/du^t u^(3-i) at u*
            int e = 3 - i;
            Rational ud(1);
            long fall = 1;
            for (int a = 0; a < t; ++a) fall *= (e - a);
            if (e - t < 0) ud = Rational(0);
            else {
                for (int a = 0; a < e - t; ++a) ud *= ustar;
                ud *= Rational(fall);
            }
            Rational xp(1);
            for (int j = 0; j <= d; ++j) {
                row.push_back(ud * xp);
                xp *= xstar;
            }
        }
    }
    return matrix_rank(rows);
}

/// Seed-derived generic sample point for the rank check.
inline size_t jet_evaluation_rank(int g, int n, std::uint64_t seed) {
    SplitMix rng(seed ^ 0xabcdefull);
    Rational x(rng.range(1, 7), rng.range(1, 5));
    Rational u(rng.range(1, 7), rng.range(1, 5));
    return jet_evaluation_rank(g, n, x, u);
}

// ---------------------------------------------------------------------------
// Pencil counting
// ---------------------------------------------------------------------------

struct PencilExperiment {
    int genus = 0;
    std::uint64_t seed = 0;
    TrigonalCurve<Rational> member0, member1;
    long count = 0;      // solutions with multiplicity over the closure
    long predicted = 0;  // z_degree(g)
    bool match = false;
    std::vector<std::pair<int, int>> count_profile;  // (degree, multiplicity) of the parameter locus
    std::string field_desc;
};

namespace lab {

/// x-polynomials whose coefficients are polynomials in the pencil parameter.
template <class K>
using XT = UPoly<UPoly<K>>;

template <class K>
XT<K> pencil_coeff(const std::vector<K>& c0, const std::vector<K>& c1, int formal_degree) {
    if (formal_degree < 0) return XT<K>();
    std::vector<UPoly<K>> xs(static_cast<size_t>(formal_degree) + 1, UPoly<K>());
    for (size_t j = 0; j < xs.size(); ++j) {
        K a = j < c0.size() ? c0[j] : K(0);
        K b = j < c1.size() ? c1[j] : K(0);
        xs[j] = UPoly<K>(std::vector<K>{a, b});  // a + t*b
    }
    return XT<K>(std::move(xs));
}

/// Resultant of two x-polynomials with parameter coefficients, taken at the
/// stated formal degrees so roots at x-infinity (vanishing leading forms)
/// are part of the bookkeeping rather than a separate chart.
template <class K>
UPoly<K> parameter_resultant(const XT<K>& f, int fdeg, const XT<K>& g, int gdeg) {
    if (fdeg < 1 || gdeg < 1) throw CalcError("arity", "resultant needs positive formal degrees");
    size_t size = static_cast<size_t>(fdeg + gdeg);
    std::vector<std::vector<UPoly<K>>> m(size, std::vector<UPoly<K>>(size, UPoly<K>()));
    auto fc = [&](int j) { return j <= f.degree() ? f.coeff(static_cast<size_t>(j)) : UPoly<K>(); };
    auto gc = [&](int j) { return j <= g.degree() ? g.coeff(static_cast<size_t>(j)) : UPoly<K>(); };
    for (int r = 0; r < gdeg; ++r)
        for (int j = 0; j <= fdeg; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = fc(fdeg - j);
    for (int r = 0; r < fdeg; ++r)
        for (int j = 0; j <= gdeg; ++j)
            m[static_cast<size_t>(gdeg + r)][static_cast<size_t>(r + j)] = gc(gdeg - j);
    return bareiss_determinant(m, UPoly<K>(1));
}

template <class K>
std::vector<K> to_field(const std::vector<Rational>& v, std::uint64_t p) {
    std::vector<K> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(rational_to<K>(q));
    return out;
}

template <>
inline std::vector<Fp> to_field<Fp>(const std::vector<Rational>& v, std::uint64_t p) {
    std::vector<Fp> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(Fp(q.mod(p), p));
    return out;
}

/// Count the parameter values (with multiplicity, over the algebraic
/// closure, including t at infinity) where some fiber cubic of the pencil
/// member becomes a perfect cube. The three pairwise resultants of the
/// perfect-cube conditions are intersected by gcd: each pair carries its
/// own spurious component (two consecutive fiber coefficients vanishing),
/// and the three spurious loci are disjoint for a generic pencil, so the
/// gcd keeps exactly the triple locus. Degenerate pencils throw.
template <class K>
std::pair<long, std::vector<std::pair<int, int>>> count_triple_parameters(
    const TrigonalCurve<Rational>& m0, const TrigonalCurve<Rational>& m1, std::uint64_t p) {
    int mm = m0.m, kk = m0.k;
    if (m1.m != mm || m1.k != kk) throw CalcError("arity", "pencil members of different classes");

    std::array<XT<K>, 4> c;
    for (int i = 0; i < 4; ++i)
        c[static_cast<size_t>(i)] = pencil_coeff<K>(
            to_field<K>(m0.coeffs[static_cast<size_t>(i)], p),
            to_field<K>(m1.coeffs[static_cast<size_t>(i)], p), kk - i * mm);
    const XT<K>&A = c[0], &B = c[1], &C = c[2], &D = c[3];

    XT<K> P1 = B * B - (A * C).scaled(UPoly<K>(3));
    XT<K> P2 = B * C - (A * D).scaled(UPoly<K>(9));
    XT<K> P3 = C * C - (B * D).scaled(UPoly<K>(3));
    int d1 = 2 * (kk - mm), d2 = 2 * kk - 3 * mm, d3 = 2 * (kk - 2 * mm);

    UPoly<K> r12 = parameter_resultant(P1, d1, P2, d2);
    UPoly<K> r13 = parameter_resultant(P1, d1, P3, d3);
    UPoly<K> r23 = parameter_resultant(P2, d2, P3, d3);
    if (r12.is_zero() || r13.is_zero() || r23.is_zero())
        throw CalcError("retry with new seed", "pencil is degenerate: a resultant vanished");

    // t-degrees of the resultants as parameter forms: every entry of the
    // Sylvester matrix is a binary form of degree 2 in the pencil parameter
    int full12 = 2 * (d1 + d2), full13 = 2 * (d1 + d3), full23 = 2 * (d2 + d3);
    long inf = std::min({full12 - r12.degree(), full13 - r13.degree(), full23 - r23.degree()});
    UPoly<K> rho = upoly_gcd(upoly_gcd(r12, r13), r23);

    long count = rho.degree() + inf;
    std::vector<std::pair<int, int>> profile;
    if (rho.degree() > 0)
        for (auto& [q, e] : upoly_squarefree(rho)) profile.emplace_back(q.degree(), e);
    if (inf > 0) profile.emplace_back(1, static_cast<int>(inf));
    return {count, profile};
}

} // namespace lab

/// Form the pencil of two seed-fixed smooth curves and count its members
/// carrying a triple ramification point, with multiplicity, then compare
/// against the symbolic prediction. `prime` = 0 runs over Q; a prime p > 3
/// runs the same experiment over F_p (the integer curve coefficients reduce
/// mod p).
inline PencilExperiment pencil_triple_count(int g, std::uint64_t seed,
                                            std::uint64_t prime = 0) {
    PencilExperiment ex;
    ex.genus = g;
    ex.seed = seed;
    auto s0 = random_smooth_curve(g, seed);
    auto s1 = random_smooth_curve(g, seed + 7919);
    ex.member0 = s0.curve;
    ex.member1 = s1.curve;
    if (ex.member0.coeffs == ex.member1.coeffs)
        throw CalcError("retry with new seed", "pencil members coincide");

    std::pair<long, std::vector<std::pair<int, int>>> res;
    if (prime == 0) {
        ex.field_desc = "Q";
        res = lab::count_triple_parameters<Rational>(ex.member0, ex.member1, 0);
    } else {
        Fp::check_modulus(prime);
        // resultant parameter forms reach degree 2(d_i + d_j) <= 8k, and the
        // squarefree machinery needs the characteristic above every degree
        if (prime <= static_cast<std::uint64_t>(8 * ex.member0.k))
            throw CalcError("bad prime", "prime must exceed the relevant degrees");
        ex.field_desc = "F_" + std::to_string(prime);
        res = lab::count_triple_parameters<Fp>(ex.member0, ex.member1, prime);
    }
    ex.count = res.first;
    ex.count_profile = res.second;
    Rational zd = z_degree(g);
    if (!zd.is_integer() || !zd.num().fits_slong_p())
        throw VerifyError("symbolic triple-locus degree is not an integer");
    ex.predicted = zd.num().get_si();
    ex.match = ex.count == ex.predicted;
    return ex;
}

} // namespace trichow
