#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trichow/errors.hpp"

namespace trichow {

/// Dense univariate polynomial over a field K, coefficients ascending.
/// This is the workhorse for discriminant/branch analysis and the pencil
/// counting resultants, where dense representation and tight loops matter.
template <class K>
class UPoly {
public:
    UPoly() = default;
    UPoly(long n) : c_{K(n)} { trim(); }  // NOLINT: constants promote implicitly
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    K lead() const {
        if (c_.empty()) throw CalcError("zero input", "leading coefficient of zero");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& k : r.c_) k = -k;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
    UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

    UPoly scaled(const K& k) const {
        if (k.is_zero()) return UPoly();
        UPoly r(*this);
        for (auto& c : r.c_) c = c * k;
        return r;
    }

    UPoly shifted(size_t e) const {  // multiply by x^e
        if (is_zero()) return UPoly();
        std::vector<K> c(e, K(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return UPoly(std::move(c));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly monic() const { return is_zero() ? *this : scaled(lead().inv()); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    K evaluate(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly reversed(size_t formal_degree) const {
        if (static_cast<int>(formal_degree) < degree())
            throw CalcError("arity", "reversed: formal degree below actual");
        std::vector<K> c(formal_degree + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) c[formal_degree - i] = c_[i];
        return UPoly(std::move(c));
    }

    friend std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw CalcError("division by zero", "UPoly division by zero");
        UPoly r = a;
        if (a.degree() < b.degree()) return {UPoly(), r};
        std::vector<K> q(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
        K linv = b.lead().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            K f = r.lead() * linv;
            q[shift] = f;
            r -= b.shifted(shift).scaled(f);
        }
        return {UPoly(std::move(q)), r};
    }

    friend UPoly exact_div(const UPoly& a, const UPoly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw CalcError("not divisible", "UPoly exact_div: not divisible");
        return q;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string abs = neg ? cs.substr(1) : cs;
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            std::string term = mono.empty() ? abs : (abs == "1" ? mono : abs + "*" + mono);
            if (out.empty()) out = (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> upoly_xgcd(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
    UPoly<K> t0, t1 = UPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly<K> s = s0 - q * s1;
        UPoly<K> t = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s;
        t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K linv = r0.lead().inv();
    return {r0.scaled(linv), s0.scaled(linv), t0.scaled(linv)};
}

/// Yun squarefree decomposition; factors monic with exact multiplicities.
template <class K>
std::vector<std::pair<UPoly<K>, int>> upoly_squarefree(const UPoly<K>& f) {
    if (f.is_zero()) throw CalcError("zero input", "squarefree of zero");
    std::vector<std::pair<UPoly<K>, int>> out;
    if (f.degree() <= 0) return out;
    UPoly<K> p = f.monic();
    UPoly<K> dp = p.derivative();
    if (dp.is_zero())  // only possible when the characteristic divides exponents
        throw CalcError("bad prime", "squarefree decomposition needs characteristic above the degree");
    UPoly<K> g = upoly_gcd(p, dp);
    UPoly<K> c = exact_div(p, g);
    UPoly<K> d = exact_div(dp, g) - c.derivative();
    int mult = 1;
    while (c.degree() > 0) {
        UPoly<K> fac = upoly_gcd(c, d);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), mult);
        c = exact_div(c, fac);
        d = exact_div(d, fac) - c.derivative();
        ++mult;
    }
    return out;
}

/// Remainder of a modulo m (monic not required).
template <class K>
UPoly<K> upoly_mod(const UPoly<K>& a, const UPoly<K>& m) {
    return divrem(a, m).second;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
template <class K>
UPoly<K> upoly_invmod(const UPoly<K>& a, const UPoly<K>& m) {
    auto [g, u, v] = upoly_xgcd(a, m);
    (void)v;
    if (g.degree() != 0) throw CalcError("not invertible", "UPoly invmod: inputs not coprime");
    return upoly_mod(u, m);
}

} // namespace trichow
