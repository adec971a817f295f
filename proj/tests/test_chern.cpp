#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichow/chern.hpp"

#include "test_util.hpp"

using namespace trichow;

using QP = Poly<Rational>;
using Elt = RingElt<Rational>;

namespace {

RingPtr<Rational> free_ring(const std::vector<std::pair<std::string, int>>& gens, int cap) {
    RingPresentation<Rational> p;
    p.generators = gens;
    p.cap = cap;
    return RingContext<Rational>::build(p);
}

} // namespace

TEST_CASE("whitney quotient as truncated geometric series") {
    auto r = free_ring({{"j1", 1}}, 3);
    Elt j1 = Elt::generator(r, "j1");
    auto sub = SheafClass<Rational>::line(j1);
    auto q = whitney_quotient(SheafClass<Rational>::trivial(r, 12), sub);
    CHECK(q.rank == 11);
    CHECK(q.chern == Elt::scalar(r, Rational(1)) - j1 + j1 * j1 - j1 * j1 * j1);
}

TEST_CASE("whitney sum and quotient invert each other") {
    auto r = free_ring({{"a", 1}, {"b", 1}}, 3);
    Elt a = Elt::generator(r, "a"), b = Elt::generator(r, "b");
    auto A = SheafClass<Rational>::line(a);
    auto B = SheafClass<Rational>::line(b);
    auto sum = whitney_sum(A, B);
    CHECK(sum.chern == (Elt::scalar(r, Rational(1)) + a) * (Elt::scalar(r, Rational(1)) + b));
    auto q = whitney_quotient(sum, A);
    CHECK(q.rank == 1);
    CHECK(q.chern == B.chern);

    XorShift rng(3);
    for (int t = 0; t < 20; ++t) {
        Elt c1 = a.scaled(Rational(rng.range(-3, 3))) + b.scaled(Rational(rng.range(-3, 3)));
        Elt c2 = (a * b).scaled(Rational(rng.range(-3, 3)));
        SheafClass<Rational> E(2, Elt::scalar(r, Rational(1)) + c1 + c2);
        SheafClass<Rational> F(1, Elt::scalar(r, Rational(1)) + a.scaled(Rational(rng.range(-2, 2))));
        CHECK(whitney_quotient(whitney_sum(E, F), F).chern == E.chern);
    }
}

TEST_CASE("segre examples and inversion") {
    auto r = free_ring({{"c1", 1}, {"c2", 2}}, 3);
    Elt c1 = Elt::generator(r, "c1"), c2 = Elt::generator(r, "c2");
    SheafClass<Rational> L(1, Elt::scalar(r, Rational(1)) + c1);
    CHECK(segre(L).component(1) == -c1);
    SheafClass<Rational> E(2, Elt::scalar(r, Rational(1)) + c1 + c2);
    CHECK(segre(E).component(2) == c1 * c1 - c2);
    // if c(U) * c(J) = 1 then s(U) = c(J)
    SheafClass<Rational> U(5, series_inverse(E.chern));
    CHECK(segre(U) == E.chern);
}

TEST_CASE("line twist formulas") {
    auto r = free_ring({{"c1", 1}, {"c2", 2}, {"t", 1}}, 2);
    Elt c1 = Elt::generator(r, "c1"), c2 = Elt::generator(r, "c2"), t = Elt::generator(r, "t");
    auto O2 = SheafClass<Rational>::trivial(r, 2);
    auto tw = twist_by_line(O2, t);
    CHECK(tw.c(1) == t.scaled(Rational(2)));
    CHECK(tw.c(2) == t * t);

    SheafClass<Rational> L(1, Elt::scalar(r, Rational(1)) + c1);
    CHECK(twist_by_line(L, t).c(1) == c1 + t);

    SheafClass<Rational> E(2, Elt::scalar(r, Rational(1)) + c1 + c2);
    auto back = twist_by_line(twist_by_line(E, t), -t);
    CHECK(back.chern == E.chern);

    CHECK_THROWS_AS(twist_by_line(E, c2), CalcError);
}

TEST_CASE("chern character: line exponential and rank-2 degree-3 term") {
    auto r = free_ring({{"t", 1}}, 3);
    Elt t = Elt::generator(r, "t");
    auto L = SheafClass<Rational>::line(t);
    Elt ch = chern_character(L, 3);
    Elt expect = Elt::scalar(r, Rational(1)) + t + (t * t).scaled(Rational(1, 2))
        + (t * t * t).scaled(Rational(1, 6));
    CHECK(ch == expect);

    auto r2 = free_ring({{"c1", 1}, {"c2", 2}}, 3);
    Elt c1 = Elt::generator(r2, "c1"), c2 = Elt::generator(r2, "c2");
    SheafClass<Rational> E(2, Elt::scalar(r2, Rational(1)) + c1 + c2);
    Elt ch3 = chern_character(E, 3).component(3);
    CHECK(ch3 == (c1 * c1 * c1 - (c1 * c2).scaled(Rational(3))).scaled(Rational(1, 6)));
}

TEST_CASE("chern character is additive and multiplicative on line classes") {
    auto r = free_ring({{"a", 1}, {"b", 1}}, 3);
    Elt a = Elt::generator(r, "a"), b = Elt::generator(r, "b");
    auto La = SheafClass<Rational>::line(a);
    auto Lb = SheafClass<Rational>::line(b);
    CHECK(chern_character(whitney_sum(La, Lb), 3) == chern_character(La, 3) + chern_character(Lb, 3));
    // tensor of line bundles: characters multiply
    auto Lab = SheafClass<Rational>::line(a + b);
    CHECK(chern_character(Lab, 3) == chern_character(La, 3) * chern_character(Lb, 3));
}

TEST_CASE("character round-trips through chern_from_character") {
    auto r = free_ring({{"c1", 1}, {"c2", 2}, {"c3", 3}}, 3);
    SheafClass<Rational> E(3, Elt::scalar(r, Rational(1)) + Elt::generator(r, "c1")
        + Elt::generator(r, "c2") + Elt::generator(r, "c3"));
    auto back = chern_from_character(chern_character(E, 3), 3);
    CHECK(back.chern == E.chern);
}

TEST_CASE("todd series values") {
    auto t3 = todd_series(3);
    REQUIRE(t3.size() == 4);
    CHECK(t3[0] == Rational(1));
    CHECK(t3[1] == Rational(1, 2));
    CHECK(t3[2] == Rational(1, 12));
    CHECK(t3[3] == Rational(0));
    auto t4 = todd_series(4);
    CHECK(t4[4] == Rational(-1, 720));
    auto t0 = todd_series(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0] == Rational(1));
}

TEST_CASE("pgl-normalized c2") {
    auto r = free_ring({{"a", 1}, {"c2", 2}, {"t", 1}}, 2);
    Elt a = Elt::generator(r, "a"), c2 = Elt::generator(r, "c2"), t = Elt::generator(r, "t");
    // O(a) + O(a): c1 = 2a, c2 = a^2
    SheafClass<Rational> split(2, Elt::scalar(r, Rational(1)) + a.scaled(Rational(2)) + a * a);
    CHECK(pgl_normalized_c2(split).is_zero());
    SheafClass<Rational> W(2, Elt::scalar(r, Rational(1)) + c2);
    CHECK(pgl_normalized_c2(W) == c2);
    // symbolic twist invariance with indeterminate t
    auto r2 = free_ring({{"c1", 1}, {"c2", 2}, {"t", 1}}, 2);
    SheafClass<Rational> V(2, Elt::scalar(r2, Rational(1)) + Elt::generator(r2, "c1")
        + Elt::generator(r2, "c2"));
    Elt tt = Elt::generator(r2, "t");
    CHECK(pgl_normalized_c2(twist_by_line(V, tt)) == pgl_normalized_c2(V));
    CHECK_THROWS_AS(pgl_normalized_c2(SheafClass<Rational>::trivial(r2, 3)), CalcError);
}
