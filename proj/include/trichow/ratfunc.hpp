#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trichow/poly.hpp"
#include "trichow/rational.hpp"

namespace trichow {

/// Rational function field Q(p_1, ..., p_n): fractions of multivariate
/// polynomials over Q, kept reduced (gcd divided out, denominator monic).
/// Used wherever a computation carries named indeterminate parameters
/// exactly (the unknown divisor multiple mu, a symbolic branch count b,
/// the proportionality scalars x0 and y0).
class RatFunc {
public:
    using P = Poly<Rational>;

    RatFunc() : num_(), den_(P::constant(Rational(1))) {}
    RatFunc(long n) : num_(P::constant(Rational(n))), den_(P::constant(Rational(1))) {}
    explicit RatFunc(const Rational& q) : num_(P::constant(q)), den_(P::constant(Rational(1))) {}
    explicit RatFunc(const P& num) : num_(num), den_(P::constant(Rational(1), num.vars())) {}
    RatFunc(const P& num, const P& den) : num_(num), den_(den) { reduce(); }

    static RatFunc variable(const std::vector<std::string>& vars, const std::string& name) {
        return RatFunc(P::variable(vars, name));
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    /// True when the denominator is a constant, i.e. the value lies in the
    /// polynomial subring Q[p_1, ..., p_n].
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw CalcError("division by zero", "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inv() const {
        if (is_zero()) throw CalcError("division by zero", "inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw CalcError("division by zero", "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = P::constant(Rational(1), den_.vars());
            return;
        }
        P g = poly_gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational lc = den_.leading_term().second;
        num_ = num_.scaled(lc.inv());
        den_ = den_.scaled(lc.inv());
    }

    P num_;
    P den_;
};

} // namespace trichow
