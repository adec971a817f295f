#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichow/kl_relations.hpp"

using namespace trichow;

using Elt = RingElt<Rational>;

TEST_CASE("strata classes at d = 3, g = 2 (b = 8)") {
    auto st = strata_classes(3, 2);
    Elt psi = st.R.psi(), xi1 = st.R.xi1(), xi2 = st.R.xi2();
    CHECK(st.s.sigma21 == xi1.scaled(Rational(2)) - psi.scaled(Rational(8)));
    CHECK(st.s.sigma12 == xi1.scaled(Rational(-3)) + psi.scaled(Rational(40)));
    CHECK(st.s.sigma31 == (psi * psi).scaled(Rational(16)) - (xi1 * psi).scaled(Rational(7))
        + xi2.scaled(Rational(6)));
    CHECK(st.s.sigma1121 == -(psi * psi).scaled(Rational(112))
        + (xi1 * psi).scaled(Rational(40)) - xi2.scaled(Rational(24)));
}

TEST_CASE("elimination chain at g = 2") {
    auto e = eliminate_relations(2);
    REQUIRE(e.steps.size() == 3);
    CHECK(e.steps[0].name == "xi1-elimination");
    CHECK(e.steps[0].lhs == "xi1");
    CHECK(e.steps[0].rhs == "40/3*psi");
    CHECK(e.steps[1].lhs == "2*psi*xi1 - 8*psi^2");
    CHECK(e.steps[1].rhs == "0");
    CHECK(e.steps[2].lhs == "56/3*psi^2");
    CHECK(e.final_coeff == Rational(56, 3));
    CHECK(e.psi2_vanishes);
    // psi survives in degree 1, psi^2 dies in degree 2
    CHECK(e.quotient->graded_dim(1) == 1);
    Elt psi2 = Elt::from_poly(e.quotient, parse_poly({"psi", "xi1", "xi2"}, "psi^2"));
    CHECK(psi2.is_zero());
    Elt psi = Elt::from_poly(e.quotient, parse_poly({"psi", "xi1", "xi2"}, "psi"));
    CHECK(!psi.is_zero());
    // with only the two degree-2 strata imposed, degree 1 is untouched
    auto st = strata_classes(3, 2);
    RingPresentation<Rational> p = st.R.ring->presentation();
    p.relations = {detail::to_poly(st.s.sigma31), detail::to_poly(st.s.sigma1121)};
    auto q2 = RingContext<Rational>::build(p);
    CHECK(q2->graded_dim(1) == 2);
}

TEST_CASE("elimination sweep g = 2..30 with exact coefficients") {
    for (int g = 2; g <= 30; ++g) {
        Rational b(2 * g + 4);
        auto e = eliminate_relations(g);
        CHECK(e.b == b);
        CHECK(e.final_coeff == (b * b - b) * Rational(1, 3));
        CHECK(e.psi2_vanishes);
    }
    // g = 7: (1/3)(18^2 - 18) = 102
    CHECK(eliminate_relations(7).final_coeff == Rational(102));
}

TEST_CASE("symbolic-b derivation agrees with the numeric one") {
    auto e = eliminate_relations_symbolic();
    CHECK(e.psi2_vanishes);
    // (b^2 - b)/3 as a rational function
    static const std::vector<std::string> bv{"b"};
    RatFunc b = RatFunc::variable(bv, "b");
    CHECK(e.final_coeff == (b * b - b) / RatFunc(3));
    CHECK(!e.final_coeff.is_zero());
}

TEST_CASE("order independence: solving the degree-2 strata first") {
    auto st = strata_classes(3, 4);
    RingPresentation<Rational> p = st.R.ring->presentation();
    p.relations = {detail::to_poly(st.s.sigma31), detail::to_poly(st.s.sigma1121),
                   detail::to_poly(st.s.sigma12)};
    auto q1 = RingContext<Rational>::build(p);
    auto e = eliminate_relations(4);
    for (int d = 0; d <= 3; ++d) {
        CHECK(q1->graded_dim(d) == e.quotient->graded_dim(d));
        CHECK(q1->piece(d).basis == e.quotient->piece(d).basis);
    }
}

TEST_CASE("degree-4 guard") {
    CHECK_THROWS_AS(eliminate_relations(2, 4, false), CalcError);
    auto forced = eliminate_relations(2, 4, true);
    CHECK_FALSE(forced.psi2_vanishes);
    REQUIRE(forced.steps.size() == 2);
    CHECK(forced.steps[0].provenance == "override");
}

TEST_CASE("main certificate content") {
    auto cert = main_certificate(2);
    CHECK(cert.genus == 2);
    CHECK(cert.b == Rational(8));
    REQUIRE(cert.steps.size() == 4);
    CHECK(cert.steps[3].name == "triple-locus-class");
    CHECK(cert.steps[3].lhs == "2*xi1 - 8*psi");
    CHECK(cert.steps[3].rhs == "56/3*psi");
    CHECK(cert.assumptions.size() == 4);
    CHECK(verify_certificate(cert));

    auto cert7 = main_certificate(7);
    CHECK(cert7.steps[3].rhs == "102*psi");
    CHECK(verify_certificate(cert7));

    // corrupting a computed step must fail verification
    auto bad = cert;
    bad.steps[0].rhs = "41/3*psi";
    CHECK_FALSE(verify_certificate(bad));
}
