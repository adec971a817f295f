#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trichow/chern.hpp"
#include "trichow/graded_ring.hpp"
#include "trichow/ratfunc.hpp"

namespace trichow {

/// The total space of the trivial P^1-fibration with a horizontal section
/// sigma: the total ring adjoins sigma with sigma^2 = 0 to a free base ring,
/// and the pushforward rule is pi_*(sigma . pi^* b) = b, pi_*(pi^* b) = 0.
template <class K>
class ProductRing {
public:
    ProductRing(std::vector<std::pair<std::string, int>> base_gens, int cap) {
        RingPresentation<K> pb;
        pb.generators = base_gens;
        pb.cap = cap;
        base_ = RingContext<K>::build(pb);

        RingPresentation<K> pt;
        pt.generators = base_gens;
        pt.generators.push_back({"sigma", 1});
        std::vector<std::string> names;
        for (auto& [n, d] : pt.generators) names.push_back(n);
        Poly<K> sg = Poly<K>::variable(names, "sigma");
        pt.relations = {sg * sg};
        pt.cap = cap;
        total_ = RingContext<K>::build(pt);
    }

    const RingPtr<K>& base() const { return base_; }
    const RingPtr<K>& total() const { return total_; }
    int cap() const { return base_->cap(); }

    RingElt<K> sigma() const { return RingElt<K>::generator(total_, "sigma"); }

    RingElt<K> pull(const RingElt<K>& b) const {
        RingElt<K> out(total_);
        for (int d = 0; d <= base_->cap(); ++d) {
            const auto& pc = base_->piece(d);
            const auto& coords = b.coords(d);
            for (size_t i = 0; i < coords.size(); ++i) {
                if (coords[i].is_zero()) continue;
                Mono m(pc.monomials[i]);
                m.push_back(0);
                Poly<K> t(total_->gen_names());
                t.set_term(m, coords[i]);
                out += RingElt<K>::from_poly(total_, t);
            }
        }
        return out;
    }

    /// pi_*: keep the sigma-linear part, stripping sigma; drop the rest.
    RingElt<K> pushforward(const RingElt<K>& x) const {
        return map_down(x, /*want_sigma=*/1);
    }

    /// Restriction to the section: sigma has trivial self-intersection, so
    /// sigma |-> 0 and pi^* b |-> b.
    RingElt<K> section_restrict(const RingElt<K>& x) const {
        return map_down(x, /*want_sigma=*/0);
    }

private:
    RingElt<K> map_down(const RingElt<K>& x, unsigned want_sigma) const {
        RingElt<K> out(base_);
        size_t nb = base_->ngens();
        for (int d = 0; d <= total_->cap(); ++d) {
            const auto& pc = total_->piece(d);
            const auto& coords = x.coords(d);
            for (size_t i = 0; i < coords.size(); ++i) {
                if (coords[i].is_zero()) continue;
                const Mono& m = pc.monomials[i];
                if (m[nb] != want_sigma) continue;
                Mono bm(m.begin(), m.begin() + static_cast<long>(nb));
                Poly<K> t(base_->gen_names());
                t.set_term(bm, coords[i]);
                out += RingElt<K>::from_poly(base_, t);
            }
        }
        return out;
    }

    RingPtr<K> base_;
    RingPtr<K> total_;
};

template <class K>
long integer_value(const K& v);

template <>
inline long integer_value<Rational>(const Rational& v) {
    if (!v.is_integer() || !v.num().fits_slong_p())
        throw CalcError("rank", "expected an integer rank");
    return v.num().get_si();
}

template <>
inline long integer_value<RatFunc>(const RatFunc& v) {
    if (!v.is_polynomial() || !v.num().is_constant())
        throw CalcError("rank", "expected a constant rank");
    return integer_value<Rational>(v.num().constant_value() / v.den().constant_value());
}

/// Pushforward along the fibration by Grothendieck-Riemann-Roch:
/// ch(result) = pi_*(ch(e) * (1 + sigma)), with the rank read off as the
/// fiberwise Euler characteristic. Valid through degree cap-1 of the base.
template <class K>
SheafClass<K> grr_pushforward(const ProductRing<K>& pr, const SheafClass<K>& e) {
    RingElt<K> ch = chern_character(e, pr.cap());
    RingElt<K> pushed = pr.pushforward(
        ch * (RingElt<K>::scalar(pr.total(), K(1)) + pr.sigma()));
    Mono unit(pr.base()->ngens(), 0);
    K r0 = pushed.coeff(unit);
    long rank = integer_value(r0);
    return chern_from_character(pushed, rank);
}

/// Thom-Porteous determinantal class for the locus where a map of bundles
/// of ranks e -> f drops to rank r: the (e-r) x (e-r) determinant with
/// (i, j) entry c_{f-r+j-i} of the virtual difference (target - source).
template <class K>
RingElt<K> porteous_class(const RingElt<K>& total_chern, long e, long f, long r) {
    if (r < 0 || e < r || f < r) throw CalcError("rank", "porteous needs e, f >= r >= 0");
    long n = e - r;
    const auto& ring = total_chern.ring();
    auto entry = [&](long i, long j) -> RingElt<K> {
        long idx = f - r + j - i;
        if (idx < 0) return RingElt<K>(ring);
        if (idx == 0) return RingElt<K>::scalar(ring, K(1));
        if (idx > ring->cap()) return RingElt<K>(ring);
        return total_chern.component(static_cast<int>(idx));
    };
    std::vector<std::vector<RingElt<K>>> m(static_cast<size_t>(n),
                                           std::vector<RingElt<K>>(static_cast<size_t>(n), RingElt<K>(ring)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i + 1, j + 1);
    // cofactor expansion; the matrices here are tiny
    std::function<RingElt<K>(std::vector<std::vector<RingElt<K>>>&)> det =
        [&](std::vector<std::vector<RingElt<K>>>& a) -> RingElt<K> {
        size_t sz = a.size();
        if (sz == 0) return RingElt<K>::scalar(ring, K(1));
        if (sz == 1) return a[0][0];
        RingElt<K> acc(ring);
        for (size_t c = 0; c < sz; ++c) {
            if (a[0][c].is_zero()) continue;
            std::vector<std::vector<RingElt<K>>> minor;
            for (size_t i = 1; i < sz; ++i) {
                std::vector<RingElt<K>> row;
                for (size_t j = 0; j < sz; ++j)
                    if (j != c) row.push_back(a[i][j]);
                minor.push_back(std::move(row));
            }
            RingElt<K> term = a[0][c] * det(minor);
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return det(m);
}

// ---------------------------------------------------------------------------
// The universal rank-2 bundle on the product and the Z-class derivation
// ---------------------------------------------------------------------------

inline ProductRing<Rational> make_generic_product_ring(int cap = 3) {
    return ProductRing<Rational>({{"X", 1}, {"Y", 1}, {"Z", 2}, {"kappa1", 1}}, cap);
}

/// The rank-2 class with c1 = -(g+2) sigma + pi^* X and
/// c2 = sigma pi^* Y + pi^* Z.
inline SheafClass<Rational> universal_rank2_bundle(const ProductRing<Rational>& pr, int g) {
    RingElt<Rational> X = RingElt<Rational>::generator(pr.total(), "X");
    RingElt<Rational> Y = RingElt<Rational>::generator(pr.total(), "Y");
    RingElt<Rational> Z = RingElt<Rational>::generator(pr.total(), "Z");
    RingElt<Rational> sg = pr.sigma();
    RingElt<Rational> c1 = sg.scaled(Rational(-(g + 2))) + X;
    RingElt<Rational> c2 = sg * Y + Z;
    return SheafClass<Rational>(2, RingElt<Rational>::scalar(pr.total(), Rational(1)) + c1 + c2);
}

struct SolveZResult {
    Rational z_coefficient;            // g/2
    RingElt<Rational> z_expression;    // ((g+1) X^2 + X Y)/g on the base ring
    std::string identity;              // printed "Z = ..."
};

/// Solve the degree-2 pushforward identity
///   0 = pi_*((c1^3 - 3 c1 c2)/6) + pi_*((c1^2/2 - c2) sigma)
/// for Z; the left side vanishes because the degree-3 coefficient of the
/// Todd series of a line bundle is zero. Returns the coefficient of Z (g/2)
/// and the solved expression, and checks that back-substitution kills the
/// identity exactly.
inline SolveZResult solve_Z(int g, int cap = 3) {
    if (g == 0) throw CalcError("coefficient vanishes", "Z coefficient g/2 vanishes at g = 0");
    if (g < 0) throw CalcError("genus too small", "solve_Z needs g >= 1");
    if (cap < 3) throw CalcError("beyond cap", "solve_Z needs cap >= 3");
    if (todd_series(3)[3] != Rational(0))
        throw VerifyError("degree-3 Todd coefficient must vanish");
    ProductRing<Rational> pr = make_generic_product_ring(cap);
    auto E = universal_rank2_bundle(pr, g);
    RingElt<Rational> ch = chern_character(E, cap);
    RingElt<Rational> rhs = pr.pushforward(
        ch * (RingElt<Rational>::scalar(pr.total(), Rational(1)) + pr.sigma())).component(2);

    Mono zmono{0, 0, 1, 0};
    Rational coeff = rhs.coeff(zmono);
    if (coeff != Rational(g, 2)) throw VerifyError("Z coefficient is not g/2");
    RingElt<Rational> Z = RingElt<Rational>::generator(pr.base(), "Z");
    RingElt<Rational> rest = rhs - Z.scaled(coeff);
    RingElt<Rational> z_expr = (-rest).scaled(coeff.inv());

    // back-substitute: rebuild the bundle with c2 = sigma Y + pi^*(z_expr)
    RingElt<Rational> X = RingElt<Rational>::generator(pr.total(), "X");
    RingElt<Rational> Y = RingElt<Rational>::generator(pr.total(), "Y");
    RingElt<Rational> c1 = pr.sigma().scaled(Rational(-(g + 2))) + X;
    RingElt<Rational> c2 = pr.sigma() * Y + pr.pull(z_expr);
    SheafClass<Rational> E2(2, RingElt<Rational>::scalar(pr.total(), Rational(1)) + c1 + c2);
    RingElt<Rational> check = pr.pushforward(
        chern_character(E2, cap) * (RingElt<Rational>::scalar(pr.total(), Rational(1)) + pr.sigma()))
        .component(2);
    if (!check.is_zero()) throw VerifyError("solved Z does not kill the degree-2 identity");

    return {coeff, z_expr, "Z = " + z_expr.str()};
}

// ---------------------------------------------------------------------------
// Maroni stratum classes through the Porteous pipeline
// ---------------------------------------------------------------------------

struct MaroniClass {
    int n = 0;                      // splitting-gap value
    int codim = 0;                  // max(0, n-1)
    RatFunc coefficient;            // in Q[x0, y0]
    std::string monomial;           // "kappa1^d"
    std::vector<std::string> assumptions;

    std::string str() const {
        if (codim == 0) return "1";
        return "(" + coefficient.str() + ")*" + monomial;
    }
};

inline std::vector<std::string> maroni_assumptions() {
    return {
        "divisor classes X and Y are the multiples x0*kappa1 and y0*kappa1 of kappa1",
        "R^1 of the twisted pushforwards vanishes on the open stratum, so the"
        " pushed characters are Chern data of bundles",
        "the stratum closure has its expected codimension",
    };
}

/// Class of the closure of the splitting-gap-n stratum as a multiple of a
/// kappa1 power, computed by twisting the universal rank-2 class so its
/// generic fiberwise splitting is balanced, pushing forward with GRR, and
/// applying Thom-Porteous to the restriction map against the section.
/// The proportionality scalars x0, y0 stay symbolic throughout.
inline MaroniClass maroni_stratum_class(int g, int n) {
    if (g < 2) throw CalcError("genus too small", "maroni_stratum_class needs g >= 2");
    if (n < 0 || (n - g) % 2 != 0) throw CalcError("parity", "stratum value must match genus parity");
    MaroniClass out;
    out.n = n;
    out.codim = std::max(0, n - 1);
    out.assumptions = maroni_assumptions();
    if (n < 2) {  // the whole space
        out.coefficient = RatFunc(1);
        out.monomial = "1";
        return out;
    }

    int k = (g % 2 == 0) ? (n - 2) / 2 : (n - 3) / 2;
    int c = (g + 3) / 2;  // ceil((g+2)/2)
    int cap = std::max(4, n);
    ProductRing<RatFunc> pr({{"kappa1", 1}}, cap);

    const std::vector<std::string> params{"x0", "y0"};
    RatFunc x0 = RatFunc::variable(params, "x0");
    RatFunc y0 = RatFunc::variable(params, "y0");
    RingElt<RatFunc> kp = RingElt<RatFunc>::generator(pr.total(), "kappa1");
    RingElt<RatFunc> sg = pr.sigma();

    // Z from the solved degree-2 identity, with X = x0 kappa1, Y = y0 kappa1
    SolveZResult zres = solve_Z(g);
    RingElt<RatFunc> zsub(pr.total());
    {
        const auto& zelt = zres.z_expression;  // lives on the generic base ring
        const auto& zring = zelt.ring();
        const auto& pc = zring->piece(2);
        const auto& coords = zelt.coords(2);
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            const Mono& m = pc.monomials[i];  // exponents of (X, Y, Z, kappa1)
            if (m[2] != 0) throw VerifyError("solved Z expression mentions Z");
            RatFunc scalar(coords[i]);
            for (unsigned e = 0; e < m[0]; ++e) scalar *= x0;
            for (unsigned e = 0; e < m[1]; ++e) scalar *= y0;
            zsub += kp.pow(m[0] + m[1] + m[3]).scaled(scalar);
        }
    }

    RingElt<RatFunc> c1 = sg.scaled(RatFunc(-(g + 2))) + kp.scaled(x0);
    RingElt<RatFunc> c2 = sg * kp.scaled(y0) + zsub;
    SheafClass<RatFunc> E(2, RingElt<RatFunc>::scalar(pr.total(), RatFunc(1)) + c1 + c2);

    SheafClass<RatFunc> twisted = twist_by_line(E, sg.scaled(RatFunc(c + k)));
    SheafClass<RatFunc> A = grr_pushforward(pr, twisted);
    long expected_rank = 2L * (c + k) - g;
    if (A.rank != expected_rank || A.rank != n)
        throw VerifyError("pushforward rank disagrees with the splitting bookkeeping");
    SheafClass<RatFunc> B(2, pr.section_restrict(twisted.chern));

    RingElt<RatFunc> virt = B.chern * series_inverse(A.chern);
    RingElt<RatFunc> cls = porteous_class(virt, A.rank, 2, 1);

    if (!cls.is_homogeneous(out.codim))
        throw VerifyError("stratum class degree differs from expected codimension");
    Mono kmono{static_cast<unsigned>(out.codim)};
    RatFunc coeff = cls.coeff(kmono);
    RingElt<RatFunc> kpow = RingElt<RatFunc>::generator(pr.base(), "kappa1").pow(static_cast<unsigned>(out.codim));
    if (cls != kpow.scaled(coeff))
        throw VerifyError("stratum class is not a single kappa1-power monomial");
    if (!coeff.is_polynomial())
        throw VerifyError("stratum coefficient is not polynomial in x0, y0");
    out.coefficient = coeff;
    out.monomial = out.codim == 1 ? "kappa1" : ("kappa1^" + std::to_string(out.codim));
    return out;
}

} // namespace trichow
