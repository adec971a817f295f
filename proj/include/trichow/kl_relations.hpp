#pragma once

#include <string>
#include <vector>

#include "trichow/chern.hpp"
#include "trichow/graded_ring.hpp"
#include "trichow/ratfunc.hpp"

namespace trichow {

/// The ring of basic classes Q[psi, xi1, xi2] with degrees (1, 1, 2),
/// together with the branch count b. K is Rational with b a number, or
/// RatFunc with b a symbol for the generic derivation.
template <class K>
struct BasicClassRing {
    RingPtr<K> ring;  // free, cap 3
    K b;

    explicit BasicClassRing(K bval, int cap = 3) : b(std::move(bval)) {
        RingPresentation<K> p;
        p.generators = {{"psi", 1}, {"xi1", 1}, {"xi2", 2}};
        p.cap = cap;
        ring = RingContext<K>::build(p);
    }

    RingElt<K> psi() const { return RingElt<K>::generator(ring, "psi"); }
    RingElt<K> xi1() const { return RingElt<K>::generator(ring, "xi1"); }
    RingElt<K> xi2() const { return RingElt<K>::generator(ring, "xi2"); }
};

/// The four ramification-stratum classes in the basic classes:
///   sigma_2_1    = 2 xi1 - b psi
///   sigma_1_2    = -3 xi1 + (1/2) b (b+2) psi
///   sigma_3_1    = 2 b psi^2 - 7 xi1 psi + 6 xi2
///   sigma_1_1_2_1 = -b (b+6) psi^2 + 2 (b+12) xi1 psi - 24 xi2
template <class K>
struct StrataClasses {
    RingElt<K> sigma21, sigma12, sigma31, sigma1121;
};

template <class K>
StrataClasses<K> strata_in(const BasicClassRing<K>& R) {
    const K& b = R.b;
    K half = rational_to<K>(Rational(1, 2));
    RingElt<K> psi = R.psi(), xi1 = R.xi1(), xi2 = R.xi2();
    StrataClasses<K> s{
        xi1.scaled(K(2)) - psi.scaled(b),
        xi1.scaled(K(-3)) + psi.scaled(half * b * (b + K(2))),
        (psi * psi).scaled(K(2) * b) - (xi1 * psi).scaled(K(7)) + xi2.scaled(K(6)),
        -(psi * psi).scaled(b * (b + K(6))) + (xi1 * psi).scaled(K(2) * (b + K(12)))
            - xi2.scaled(K(24)),
    };
    return s;
}

/// Numeric strata table for degree d, genus g (b = 2d + 2g - 2).
struct NumericStrata {
    BasicClassRing<Rational> R;
    StrataClasses<Rational> s;
};

inline NumericStrata strata_classes(int d, int g) {
    if (d < 2 || g < 0) throw CalcError("genus too small", "strata need d >= 2, g >= 0");
    BasicClassRing<Rational> R(Rational(2 * d + 2 * g - 2));
    auto s = strata_in(R);
    return {std::move(R), std::move(s)};
}

struct DerivationStep {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::string provenance;  // "computed" | "assumption" | "override"
};

/// Result of imposing the empty-stratum relations at degree 3 and
/// eliminating: the three derived identities in order, the quotient ring
/// they live in, and the final nonzero coefficient (b^2 - b)/3.
template <class K>
struct Elimination {
    K b;
    std::vector<DerivationStep> steps;
    RingPtr<K> quotient;
    K final_coeff;
    bool psi2_vanishes = false;
};

namespace detail {

template <class K>
Poly<K> to_poly(const RingElt<K>& e) {
    // rebuild the element as a polynomial in the generator names
    Poly<K> out(e.ring()->gen_names());
    for (int d = 0; d <= e.ring()->cap(); ++d) {
        const auto& pc = e.ring()->piece(d);
        const auto& coords = e.coords(d);
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            Poly<K> t(e.ring()->gen_names());
            t.set_term(pc.monomials[i], coords[i]);
            out += t;
        }
    }
    return out;
}

} // namespace detail

/// Eliminate the basic classes against the degree-3 empty strata. For d = 3
/// the three strata with no room in a 3-sheeted fiber are imposed as ideal
/// generators and the chain
///   xi1 = (1/6) b (b+2) psi,
///   -b psi^2 + 2 xi1 psi = 0,
///   (1/3)(b^2 - b) psi^2 = 0
/// is derived by exact linear algebra, each identity checked both as an
/// exact combination of the generators and by normal form in the quotient.
/// For d >= 4 those strata are not all empty, so the call refuses unless
/// `force` is set; the forced mode is a what-if control that imposes only
/// the two-simple-points relation and reports that psi^2 survives.
template <class K>
Elimination<K> eliminate_relations_in(const BasicClassRing<K>& R, int d, bool force) {
    const K& b = R.b;
    auto s = strata_in(R);
    RingElt<K> psi = R.psi(), xi1 = R.xi1();
    Elimination<K> out;
    out.b = b;

    if (d != 3) {
        if (d < 3) throw CalcError("genus too small", "elimination is specific to degree 3");
        if (!force)
            throw CalcError("strata nonempty",
                            "for degree >= 4 the imposed strata are not all empty; pass the "
                            "override to run the what-if elimination");
        // what-if: impose only the two-simple-points relation
        RingPresentation<K> p = R.ring->presentation();
        p.relations = {detail::to_poly(s.sigma12)};
        out.quotient = RingContext<K>::build(p);
        RingElt<K> psi2 = RingElt<K>::from_poly(out.quotient, detail::to_poly(psi * psi));
        out.psi2_vanishes = psi2.is_zero();
        out.final_coeff = K(0);
        out.steps.push_back({"override-imposed", "sigma_1_2", "0", "override"});
        out.steps.push_back({"override-psi-squared",
                             "psi^2",
                             out.psi2_vanishes ? "0" : "nonzero in the quotient",
                             "override"});
        return out;
    }

    // exact representation checks in the free ring
    K sixth = rational_to<K>(Rational(1, 6));
    K third = rational_to<K>(Rational(1, 3));
    RingElt<K> rhs1 = psi.scaled(sixth * b * (b + K(2)));
    if (xi1 - rhs1 != s.sigma12.scaled(rational_to<K>(Rational(-1, 3))))
        throw VerifyError("xi1 elimination is not -1/3 of the two-simple-points class");

    RingElt<K> latter = -(psi * psi).scaled(b) + (xi1 * psi).scaled(K(2));
    if (latter.scaled(b - K(2)) != s.sigma31.scaled(K(4)) + s.sigma1121)
        throw VerifyError("psi^2 relation is not the stated combination of the degree-2 strata");

    RingElt<K> psi2lhs = (psi * psi).scaled(third * (b * b - b));
    if (psi2lhs != latter - (xi1 - rhs1) * psi.scaled(K(2)))
        throw VerifyError("final identity does not follow from the first two");

    // quotient by the three empty strata
    RingPresentation<K> p = R.ring->presentation();
    p.relations = {detail::to_poly(s.sigma12), detail::to_poly(s.sigma31),
                   detail::to_poly(s.sigma1121)};
    out.quotient = RingContext<K>::build(p);
    auto in_quotient = [&](const RingElt<K>& e) {
        return RingElt<K>::from_poly(out.quotient, detail::to_poly(e));
    };
    if (!in_quotient(xi1 - rhs1).is_zero()) throw VerifyError("xi1 identity fails in the quotient");
    if (!in_quotient(latter).is_zero()) throw VerifyError("psi^2 relation fails in the quotient");
    if (!in_quotient(psi * psi).is_zero()) throw VerifyError("psi^2 is not in the ideal");
    if (in_quotient(psi).is_zero()) throw VerifyError("psi itself fell into the ideal");

    out.final_coeff = third * (b * b - b);
    if (out.final_coeff.is_zero()) throw CalcError("coefficient vanishes", "(b^2-b)/3 vanished");
    out.psi2_vanishes = true;

    out.steps.push_back({"xi1-elimination", xi1.str(), rhs1.str(), "computed"});
    out.steps.push_back({"psi2-xi1psi-relation", latter.str(), "0", "computed"});
    out.steps.push_back({"psi2-vanishing", psi2lhs.str(), "0", "computed"});
    return out;
}

inline Elimination<Rational> eliminate_relations(int g, int d = 3, bool force = false) {
    if (g < 2) throw CalcError("genus too small", "elimination needs g >= 2");
    BasicClassRing<Rational> R(Rational(2 * d + 2 * g - 2));
    return eliminate_relations_in(R, d, force);
}

inline Elimination<RatFunc> eliminate_relations_symbolic() {
    static const std::vector<std::string> bvar{"b"};
    BasicClassRing<RatFunc> R(RatFunc::variable(bvar, "b"));
    return eliminate_relations_in(R, 3, false);
}

// ---------------------------------------------------------------------------
// The main-relation certificate
// ---------------------------------------------------------------------------

struct RelationCertificate {
    int genus = 0;
    Rational b;
    std::vector<DerivationStep> steps;
    std::vector<std::string> assumptions;
    std::string conclusion;
};

inline std::vector<std::string> certificate_assumptions() {
    return {
        "A1: the degree-1 Chow group is freely generated by kappa1",
        "A2: the triple-ramification divisor class sigma_2_1 is nontrivial",
        "A3: the Chow ring is generated by kappa1",
        "A4: the kernel of the framing pullback is generated by the normalized second Chern"
        " class, which is supported in the triple-ramification divisor",
    };
}

/// Assemble the full certificate for genus g: the three computed
/// elimination identities, the computed identity
/// sigma_2_1 = (1/3)(b^2 - b) psi, the named geometric assumptions, and the
/// conclusion kappa1^2 = 0.
inline RelationCertificate main_certificate(int g) {
    if (g < 2) throw CalcError("genus too small", "certificate needs g >= 2");
    RelationCertificate cert;
    cert.genus = g;
    cert.b = Rational(2 * 3 + 2 * g - 2);
    BasicClassRing<Rational> R(cert.b);
    auto elim = eliminate_relations_in(R, 3, false);
    cert.steps = elim.steps;

    // sigma_2_1 = (1/3)(b^2-b) psi modulo the imposed strata
    auto s = strata_in(R);
    RingElt<Rational> target = R.psi().scaled(elim.final_coeff);
    RingElt<Rational> diff = s.sigma21 - target;
    RingElt<Rational> diff_q = RingElt<Rational>::from_poly(elim.quotient, detail::to_poly(diff));
    if (!diff_q.is_zero()) throw VerifyError("sigma_2_1 identity fails in the quotient");
    cert.steps.push_back({"triple-locus-class", s.sigma21.str(), target.str(), "computed"});

    cert.assumptions = certificate_assumptions();
    cert.conclusion =
        "psi is a nonzero multiple of kappa1, so kappa1^2 = 0 and the Chow ring is "
        "Q[kappa1]/(kappa1^2)";
    return cert;
}

/// Re-verify a loaded certificate: rebuild the quotient for its genus and
/// check every computed step by normal form. Returns false on any mismatch.
inline bool verify_certificate(const RelationCertificate& cert) {
    if (cert.genus < 2) return false;
    if (cert.b != Rational(2 * 3 + 2 * cert.genus - 2)) return false;
    BasicClassRing<Rational> R(cert.b);
    auto s = strata_in(R);
    RingPresentation<Rational> p = R.ring->presentation();
    p.relations = {detail::to_poly(s.sigma12), detail::to_poly(s.sigma31),
                   detail::to_poly(s.sigma1121)};
    auto quotient = RingContext<Rational>::build(p);
    const auto names = R.ring->gen_names();
    int computed = 0;
    for (const auto& step : cert.steps) {
        if (step.provenance != "computed") continue;
        Poly<Rational> lhs, rhs;
        try {
            lhs = parse_poly(names, step.lhs);
            rhs = parse_poly(names, step.rhs);
        } catch (const CalcError&) {
            return false;
        }
        auto diff = RingElt<Rational>::from_poly(quotient, lhs - rhs);
        if (!diff.is_zero()) return false;
        ++computed;
    }
    return computed >= 4;
}

} // namespace trichow
