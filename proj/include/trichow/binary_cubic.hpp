#pragma once

#include <array>
#include <tuple>

#include "trichow/poly.hpp"

namespace trichow {

/// Binary cubic form c3*u^3 + c2*u^2*v + c1*u*v^2 + c0*v^3 whose
/// coefficients are polynomials in base variables. This is the fiberwise
/// equation of a degree-3 cover; its repeated roots encode branching.
template <class K>
struct BinaryCubic {
    Poly<K> c3, c2, c1, c0;

    BinaryCubic(Poly<K> a3, Poly<K> a2, Poly<K> a1, Poly<K> a0)
        : c3(std::move(a3)), c2(std::move(a2)), c1(std::move(a1)), c0(std::move(a0)) {
        if (c3.is_zero() && c2.is_zero() && c1.is_zero() && c0.is_zero())
            throw CalcError("zero input", "binary cubic with all coefficients zero");
    }
};

/// Discriminant 18*c3*c2*c1*c0 - 4*c2^3*c0 + c2^2*c1^2 - 4*c3*c1^3 - 27*c3^2*c0^2.
/// Vanishes at a parameter point iff the fiber cubic has a repeated
/// projective root (including at infinity).
template <class K>
Poly<K> cubic_discriminant(const BinaryCubic<K>& c) {
    const auto& a = c.c3;
    const auto& b = c.c2;
    const auto& cc = c.c1;
    const auto& d = c.c0;
    return (a * b * cc * d).scaled(K(18)) - (b * b * b * d).scaled(K(4)) + b * b * cc * cc
        - (a * cc * cc * cc).scaled(K(4)) - (a * a * d * d).scaled(K(27));
}

/// Perfect-cube conditions: P1 = c2^2 - 3*c3*c1, P2 = c1*c2 - 9*c3*c0,
/// P3 = c1^2 - 3*c2*c0. At any point where the four coefficients do not all
/// vanish, the cubic is the cube of a linear form iff P1 = P2 = P3 = 0
/// (P3 covers the chart where c3 vanishes). These are the coefficients of
/// the Hessian of the form, up to a constant.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> cubic_triple_root_conditions(const BinaryCubic<K>& c) {
    Poly<K> p1 = c.c2 * c.c2 - (c.c3 * c.c1).scaled(K(3));
    Poly<K> p2 = c.c1 * c.c2 - (c.c3 * c.c0).scaled(K(9));
    Poly<K> p3 = c.c1 * c.c1 - (c.c2 * c.c0).scaled(K(3));
    return {p1, p2, p3};
}

} // namespace trichow
