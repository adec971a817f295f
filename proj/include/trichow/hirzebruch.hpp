#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trichow/chern.hpp"
#include "trichow/graded_ring.hpp"
#include "trichow/rational.hpp"

namespace trichow {

/// Divisor class a*f + b*s on the surface F_m, with f the ruling line class
/// and s the (-m)-directrix.
struct FmDivisor {
    Rational a;  // coefficient of f
    Rational b;  // coefficient of s

    FmDivisor() = default;
    FmDivisor(Rational fa, Rational sb) : a(std::move(fa)), b(std::move(sb)) {}
    FmDivisor(long fa, long sb) : a(fa), b(sb) {}

    FmDivisor operator+(const FmDivisor& o) const { return {a + o.a, b + o.b}; }
    FmDivisor operator-(const FmDivisor& o) const { return {a - o.a, b - o.b}; }
    FmDivisor scaled(const Rational& c) const { return {a * c, b * c}; }
    bool operator==(const FmDivisor& o) const { return a == o.a && b == o.b; }

    std::string str() const { return a.str() + "*f + " + b.str() + "*s"; }
};

/// The intersection ring of the Hirzebruch surface F_m:
/// Q[f, s] / (f^2, s^2 + m*f*s), capped in degree 2, with the integration
/// functional reading off the coefficient of f*s.
class FmRing {
public:
    explicit FmRing(int m, int cap = 2) : m_(m) {
        if (m < 0) throw CalcError("bad degree", "F_m needs m >= 0");
        RingPresentation<Rational> p;
        p.generators = {{"f", 1}, {"s", 1}};
        std::vector<std::string> vars{"f", "s"};
        Poly<Rational> f = Poly<Rational>::variable(vars, "f");
        Poly<Rational> s = Poly<Rational>::variable(vars, "s");
        p.relations = {f * f, s * s + (f * s).scaled(Rational(m))};
        p.cap = cap;
        ring_ = RingContext<Rational>::build(p);
    }

    int m() const { return m_; }
    const RingPtr<Rational>& ring() const { return ring_; }

    RingElt<Rational> f() const { return RingElt<Rational>::generator(ring_, "f"); }
    RingElt<Rational> s() const { return RingElt<Rational>::generator(ring_, "s"); }

    RingElt<Rational> elt(const FmDivisor& d) const {
        return f().scaled(d.a) + s().scaled(d.b);
    }

    /// Read a degree-1 element back as a divisor.
    FmDivisor divisor(const RingElt<Rational>& x) const {
        if (!x.is_homogeneous(1)) throw CalcError("inhomogeneous", "not a divisor class");
        Mono mf{1, 0}, ms{0, 1};
        return {x.coeff(mf), x.coeff(ms)};
    }

    /// Integration over F_m: the coefficient of f*s after normal form.
    /// Requires the input to be homogeneous of degree 2.
    Rational integrate(const RingElt<Rational>& x) const {
        if (!x.is_homogeneous(2)) throw CalcError("inhomogeneous", "integrate needs a degree-2 class");
        Mono fs{1, 1};
        return x.coeff(fs);
    }

    Rational pair(const FmDivisor& d1, const FmDivisor& d2) const {
        return integrate(elt(d1) * elt(d2));
    }

private:
    int m_;
    RingPtr<Rational> ring_;
};

struct StructureClasses {
    FmDivisor K;         // canonical class
    FmDivisor omega_pi;  // relative dualizing class of the ruling
    FmDivisor pullback_omega_p1;
};

/// K = -2s - (m+2)f, omega_pi = K - pi^*K_{P1} = -2s - m*f,
/// pi^*omega_{P1} = -2f.
inline StructureClasses structure_classes(int m) {
    if (m < 0) throw CalcError("bad degree", "F_m needs m >= 0");
    return {FmDivisor(-(m + 2), -2), FmDivisor(-m, -2), FmDivisor(-2, 0)};
}

struct TrigonalClassData {
    int m = 0;   // 0 or 1: balanced surface by genus parity
    int k = 0;   // fiber coefficient of the curve class
    FmDivisor C; // 3s + k*f
};

/// The unique class of genus-g curves mapping with degree 3 under the
/// ruling of the balanced surface: m = g mod 2, k = (g + 3m + 2)/2,
/// C = 3s + kf. Satisfies adjunction 2g - 2 = C.(C + K).
inline TrigonalClassData trigonal_class_data(int g) {
    if (g < 2) throw CalcError("genus too small", "trigonal class data needs g >= 2");
    int m = g % 2;
    int k = (g + 3 * m + 2) / 2;
    return {m, k, FmDivisor(k, 3)};
}

/// h^0 of O(a*f + b*s) on F_m: zero when b < 0, otherwise
/// sum_{i=0..b} max(0, a - i*m + 1).
inline long h0_line_bundle(int m, long a, long b) {
    if (m < 0) throw CalcError("bad degree", "F_m needs m >= 0");
    if (b < 0) return 0;
    long total = 0;
    for (long i = 0; i <= b; ++i) total += std::max<long>(0, a - i * m + 1);
    return total;
}

inline long h0_line_bundle(int m, const FmDivisor& d) {
    if (!d.a.is_integer() || !d.b.is_integer())
        throw CalcError("arity", "h0 needs integer coefficients");
    return h0_line_bundle(m, d.a.num().get_si(), d.b.num().get_si());
}

/// True iff the coefficient vectors are linearly dependent.
inline bool proportionality_check(const FmDivisor& d1, const FmDivisor& d2) {
    return (d1.a * d2.b - d2.a * d1.b).is_zero();
}

/// The admissible values of the splitting gap for genus g: same parity as
/// g, between the balanced value (0 or 1) and floor((g+2)/3).
inline std::vector<int> admissible_maroni(int g) {
    if (g < 2) throw CalcError("genus too small", "admissible_maroni needs g >= 2");
    std::vector<int> out;
    int top = (g + 2) / 3;
    for (int m = g % 2; m <= top; m += 2) out.push_back(m);
    return out;
}

} // namespace trichow
