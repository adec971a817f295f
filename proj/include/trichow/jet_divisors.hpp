#pragma once

#include <string>
#include <vector>

#include "trichow/chern.hpp"
#include "trichow/hirzebruch.hpp"
#include "trichow/linalg.hpp"
#include "trichow/ratfunc.hpp"

namespace trichow {

/// Everything about genus g needed to build jet bundles on the balanced
/// surface: the surface ring, the curve class and the structure classes.
struct JetContext {
    FmRing F;
    TrigonalClassData curve;
    StructureClasses cls;

    explicit JetContext(int g)
        : F(trigonal_class_data(g).m),
          curve(trigonal_class_data(g)),
          cls(structure_classes(curve.m)) {}

    RingElt<Rational> div(const FmDivisor& d) const { return F.elt(d); }
};

enum class JetKind {
    rel_n,  // n-th order jets along ruling lines, rank n
    fat3,   // full first-order jets, rank 3
    ram4    // ramified-contact jets, rank 4
};

/// Total Chern class of the chosen jet bundle of O(C).
/// rel_n: prod_{i=0..n-1} (1 + C + i*omega_pi);
/// fat3:  (1 + C + pi^*omega_{P1}) * c(rel_2);
/// ram4:  (1 + C + pi^*omega_{P1}) * c(rel_3).
inline SheafClass<Rational> jet_class(const JetContext& ctx, JetKind kind, int n = 0) {
    auto line_factor = [&](const FmDivisor& d) {
        return SheafClass<Rational>::line(ctx.div(d));
    };
    auto rel = [&](int order) {
        SheafClass<Rational> j = SheafClass<Rational>::trivial(ctx.F.ring(), 0);
        for (int i = 0; i < order; ++i)
            j = whitney_sum(j, line_factor(ctx.curve.C + ctx.cls.omega_pi.scaled(Rational(i))));
        return j;
    };
    switch (kind) {
        case JetKind::rel_n:
            if (n < 1 || n > 4) throw CalcError("bad degree", "relative jet order must be 1..4");
            return rel(n);
        case JetKind::fat3:
            return whitney_sum(line_factor(ctx.curve.C + ctx.cls.pullback_omega_p1), rel(2));
        case JetKind::ram4:
            return whitney_sum(line_factor(ctx.curve.C + ctx.cls.pullback_omega_p1), rel(3));
    }
    throw CalcError("bad degree", "unknown jet kind");
}

/// Kernel of the (assumed surjective) evaluation of sections to a jet
/// bundle: rank (N+1) - rank(jet), Chern class the series inverse.
inline SheafClass<Rational> kernel_class(const JetContext& ctx, const SheafClass<Rational>& jet) {
    long sections = h0_line_bundle(ctx.curve.m, ctx.curve.C);
    if (sections <= jet.rank) throw CalcError("rank", "jet rank is not below the section count");
    return whitney_quotient(SheafClass<Rational>::trivial(ctx.F.ring(), sections), jet);
}

/// Class h + p2^*(base_part) of a divisor in a projectivized kernel bundle.
struct DivisorClassPW {
    Rational h_coeff;
    FmDivisor base_part;

    std::string str() const { return h_coeff.str() + "*h + (" + base_part.str() + ")"; }
};

enum class PWClass { delta_n, xi_tr, delta_red, delta_ram };

inline const char* pw_class_name(PWClass w) {
    switch (w) {
        case PWClass::delta_n: return "delta_n";
        case PWClass::xi_tr: return "xi_tr";
        case PWClass::delta_red: return "delta_red";
        case PWClass::delta_ram: return "delta_ram";
    }
    return "?";
}

/// Divisor class of a corank-1 projective subbundle, computed from its
/// kernel exact sequence: the quotient line bundle is recovered by a
/// Whitney quotient of the two kernels, and the class is h + p2^* c1 of it.
/// Name-to-sequence pairing: delta_n takes the order-3 vanishing quotient
/// of the 2-jet kernel, xi_tr its transverse (full first-order) quotient;
/// delta_red takes the order-4 quotient of the 3-jet kernel, delta_ram its
/// ramified-contact quotient.
inline DivisorClassPW subbundle_divisor_class(const JetContext& ctx, PWClass which) {
    SheafClass<Rational> ambient = (which == PWClass::delta_n || which == PWClass::xi_tr)
        ? kernel_class(ctx, jet_class(ctx, JetKind::rel_n, 2))
        : kernel_class(ctx, jet_class(ctx, JetKind::rel_n, 3));
    auto sub = [&]() -> SheafClass<Rational> {
        switch (which) {
            case PWClass::delta_n: return kernel_class(ctx, jet_class(ctx, JetKind::rel_n, 3));
            case PWClass::xi_tr: return kernel_class(ctx, jet_class(ctx, JetKind::fat3));
            case PWClass::delta_red: return kernel_class(ctx, jet_class(ctx, JetKind::rel_n, 4));
            case PWClass::delta_ram: return kernel_class(ctx, jet_class(ctx, JetKind::ram4));
        }
        throw CalcError("bad degree", "unknown divisor class");
    }();
    SheafClass<Rational> quotient = whitney_quotient(ambient, sub);
    if (quotient.rank != 1) throw CalcError("rank", "subbundle quotient is not a line bundle");
    return {Rational(1), ctx.F.divisor(quotient.chern.component(1))};
}

/// Rank of the coefficient matrix of divisor classes in the basis {h, f, s}.
/// With `include_delta` an extra row mu*h is added, mu an indeterminate
/// nonzero multiple, and the rank is taken over the rational function field
/// Q(mu).
inline size_t independence_rank(const std::vector<DivisorClassPW>& classes, bool include_delta) {
    static const std::vector<std::string> muvar{"mu"};
    std::vector<std::vector<RatFunc>> rows;
    if (include_delta) {
        rows.push_back({RatFunc::variable(muvar, "mu"), RatFunc(0), RatFunc(0)});
    }
    for (const auto& c : classes) {
        rows.push_back({RatFunc(c.h_coeff), RatFunc(c.base_part.a), RatFunc(c.base_part.b)});
    }
    return matrix_rank(rows);
}

/// Projective bundle of a sheaf class over F_m: the ring adjoins the
/// hyperplane class h; the defining relation sum_i c_i(W) h^(r-i) sits in
/// degree r, far beyond the cap, so below the cap the ring is free over the
/// base. Pushforward to the base is realized degreewise by the Segre rule
/// p2_*(h^(r-1+j) . p2^* beta) = s_j(W) . beta.
class ProjBundleRing {
public:
    ProjBundleRing(const FmRing& base, SheafClass<Rational> bundle, int cap = 3)
        : base_(base), bundle_(std::move(bundle)) {
        RingPresentation<Rational> p;
        p.generators = {{"f", 1}, {"s", 1}, {"h", 1}};
        std::vector<std::string> v{"f", "s", "h"};
        Poly<Rational> f = Poly<Rational>::variable(v, "f");
        Poly<Rational> s = Poly<Rational>::variable(v, "s");
        Poly<Rational> h = Poly<Rational>::variable(v, "h");
        p.relations = {f * f, s * s + (f * s).scaled(Rational(base.m()))};
        if (bundle_.rank >= 1 && bundle_.rank <= cap) {
            // sum_i c_i(W) h^(r-i); vacuous whenever the rank exceeds the cap
            Poly<Rational> grothendieck(v);
            for (int i = 0; i <= static_cast<int>(bundle_.rank); ++i) {
                RingElt<Rational> ci = bundle_.chern.component(i);
                const auto& pc = base.ring()->piece(i);
                const auto& coords = ci.coords(i);
                for (size_t t = 0; t < coords.size(); ++t) {
                    if (coords[t].is_zero()) continue;
                    Poly<Rational> term(v);
                    Mono m{pc.monomials[t][0], pc.monomials[t][1],
                           static_cast<unsigned>(bundle_.rank - i)};
                    term.set_term(m, coords[t]);
                    grothendieck += term;
                }
            }
            p.relations.push_back(grothendieck);
        }
        p.cap = cap;
        ring_ = RingContext<Rational>::build(p);
    }

    const RingPtr<Rational>& ring() const { return ring_; }
    const SheafClass<Rational>& bundle() const { return bundle_; }

    RingElt<Rational> h() const { return RingElt<Rational>::generator(ring_, "h"); }

    RingElt<Rational> lift(const DivisorClassPW& d) const {
        return h().scaled(d.h_coeff)
            + RingElt<Rational>::generator(ring_, "f").scaled(d.base_part.a)
            + RingElt<Rational>::generator(ring_, "s").scaled(d.base_part.b);
    }

    /// p2-pushforward to the base ring (drops degree by rank-1).
    RingElt<Rational> pushforward(const RingElt<Rational>& x) const {
        RingElt<Rational> out(base_.ring());
        RingElt<Rational> seg = segre(bundle_);
        long r = bundle_.rank;
        for (int d = 0; d <= ring_->cap(); ++d) {
            const auto& pc = ring_->piece(d);
            const auto& coords = x.coords(d);
            for (size_t i = 0; i < coords.size(); ++i) {
                if (coords[i].is_zero()) continue;
                const Mono& m = pc.monomials[i];  // exponents of (f, s, h)
                long j = static_cast<long>(m[2]) - (r - 1);
                if (j < 0) continue;  // h-power below r-1 pushes to zero
                RingElt<Rational> base_mono = RingElt<Rational>::scalar(base_.ring(), coords[i]);
                Mono bm{m[0], m[1]};
                Poly<Rational> bp(std::vector<std::string>{"f", "s"});
                bp.set_term(bm, Rational(1));
                base_mono = base_mono * RingElt<Rational>::from_poly(base_.ring(), bp);
                out += base_mono * seg.component(static_cast<int>(j));
            }
        }
        return out;
    }

private:
    FmRing base_;
    SheafClass<Rational> bundle_;
    RingPtr<Rational> ring_;
};

/// Degree of the triple-ramification locus in the section space: the
/// surface integral of the degree-2 part of c(J) for the order-3 relative
/// jet bundle (equivalently of s_2 of its kernel, the two being inverse).
inline Rational z_degree(int g) {
    JetContext ctx(g);
    auto jet3 = jet_class(ctx, JetKind::rel_n, 3);
    return ctx.F.integrate(jet3.chern.component(2));
}

/// Fixed-order divisor table, one line per class: "name = h + (a*f + b*s)".
inline std::string divisor_table(int g) {
    JetContext ctx(g);
    std::string out;
    for (PWClass w : {PWClass::delta_n, PWClass::xi_tr, PWClass::delta_red, PWClass::delta_ram}) {
        auto d = subbundle_divisor_class(ctx, w);
        out += std::string(pw_class_name(w)) + " = h + (" + d.base_part.str() + ")\n";
    }
    return out;
}

} // namespace trichow
