#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichow/grr_porteous.hpp"

#include "test_util.hpp"

using namespace trichow;

using Elt = RingElt<Rational>;

TEST_CASE("pushforward and pullback contracts") {
    auto pr = make_generic_product_ring(3);
    XorShift rng(17);
    for (int t = 0; t < 15; ++t) {
        Elt beta(pr.base());
        Elt X = Elt::generator(pr.base(), "X");
        Elt Y = Elt::generator(pr.base(), "Y");
        beta = X.scaled(Rational(rng.range(-4, 4))) + Y.scaled(Rational(rng.range(-4, 4)))
            + (X * Y).scaled(Rational(rng.range(-4, 4)));
        CHECK(pr.pushforward(pr.pull(beta)).is_zero());
        CHECK(pr.pushforward(pr.sigma() * pr.pull(beta)) == beta);
        CHECK(pr.section_restrict(pr.pull(beta)) == beta);
        CHECK(pr.section_restrict(pr.sigma() * pr.pull(beta)).is_zero());
    }
    CHECK((pr.sigma() * pr.sigma()).is_zero());
}

TEST_CASE("fiberwise euler characteristics") {
    auto pr = make_generic_product_ring(3);
    auto triv = SheafClass<Rational>::trivial(pr.total(), 1);
    CHECK(grr_pushforward(pr, triv).rank == 1);
    auto osigma = SheafClass<Rational>::line(pr.sigma());
    CHECK(grr_pushforward(pr, osigma).rank == 2);
    for (int g = 1; g <= 8; ++g) {
        auto E = universal_rank2_bundle(pr, g);
        CHECK(grr_pushforward(pr, E).rank == -g);
    }
}

TEST_CASE("solve_Z: coefficient, closed form, and back-substitution") {
    for (int g = 1; g <= 30; ++g) {
        auto res = solve_Z(g);
        CHECK(res.z_coefficient == Rational(g, 2));
    }
    auto res2 = solve_Z(2);
    // Z = (3 X^2 + X Y)/2 at g = 2
    auto pr = make_generic_product_ring(3);
    Elt X = Elt::generator(pr.base(), "X");
    Elt Y = Elt::generator(pr.base(), "Y");
    CHECK(res2.z_expression.ring()->gen_names() == pr.base()->gen_names());
    auto expect = ((X * X).scaled(Rational(3)) + X * Y).scaled(Rational(1, 2));
    // compare coordinates through the shared presentation
    CHECK(res2.z_expression.str() == expect.str());
    CHECK(res2.identity == "Z = 1/2*X*Y + 3/2*X^2");

    CHECK_THROWS_AS(solve_Z(0), CalcError);
}

TEST_CASE("solve_Z is independent of the ring cap") {
    for (int cap : {3, 4, 5}) {
        auto r = solve_Z(5, cap);
        CHECK(r.z_coefficient == Rational(5, 2));
        CHECK(r.identity == "Z = 1/5*X*Y + 6/5*X^2");
    }
}

TEST_CASE("porteous determinants") {
    RingPresentation<Rational> p;
    p.generators = {{"c1", 1}, {"c2", 2}, {"c3", 3}};
    p.cap = 4;
    auto ring = RingContext<Rational>::build(p);
    Elt c1 = Elt::generator(ring, "c1");
    Elt c2 = Elt::generator(ring, "c2");
    Elt c3 = Elt::generator(ring, "c3");
    Elt total = Elt::scalar(ring, Rational(1)) + c1 + c2 + c3;
    CHECK(porteous_class(total, 1, 1, 0) == c1);
    CHECK(porteous_class(total, 2, 2, 1) == c1);
    CHECK(porteous_class(total, 2, 2, 0) == c2 * c2 - c1 * c3);
    CHECK_THROWS_AS(porteous_class(total, 1, 1, 2), CalcError);
}

TEST_CASE("maroni stratum classes: degree, shape, regression values") {
    // n = 2 at even genus: 1x1 determinant, coefficient (c + k) x0 + y0
    auto m42 = maroni_stratum_class(4, 2);
    CHECK(m42.codim == 1);
    CHECK(m42.monomial == "kappa1");
    static const std::vector<std::string> params{"x0", "y0"};
    RatFunc x0 = RatFunc::variable(params, "x0");
    RatFunc y0 = RatFunc::variable(params, "y0");
    CHECK(m42.coefficient == RatFunc(3) * x0 + y0);

    auto m62 = maroni_stratum_class(6, 2);
    CHECK(m62.codim == 1);
    CHECK(m62.coefficient == RatFunc(4) * x0 + y0);

    for (auto [g, n] : std::vector<std::pair<int, int>>{{5, 3}, {7, 3}}) {
        auto mc = maroni_stratum_class(g, n);
        CHECK(mc.codim == 2);
        CHECK(mc.monomial == "kappa1^2");
        CHECK(mc.coefficient.is_polynomial());
        CHECK(!mc.coefficient.is_zero());
    }

    // minimal values give the class of the whole space
    CHECK(maroni_stratum_class(4, 0).codim == 0);
    CHECK(maroni_stratum_class(5, 1).codim == 0);

    CHECK_THROWS_AS(maroni_stratum_class(4, 3), CalcError);  // parity mismatch
    CHECK_THROWS_AS(maroni_stratum_class(5, 2), CalcError);

    // expected codimension max(0, n-1) across a small sweep
    for (int g = 4; g <= 9; ++g)
        for (int n = g % 2; n <= 4; n += 2) {
            auto mc = maroni_stratum_class(g, n);
            CHECK(mc.codim == std::max(0, n - 1));
        }
}
