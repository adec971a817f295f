#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "trichow/errors.hpp"

namespace trichow {

/// Arbitrary-precision rational number. Always stored canonically:
/// gcd(|num|, den) = 1 and den >= 1. Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw CalcError("division by zero", "rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw CalcError("division by zero", "rational with zero denominator");
        q_.canonicalize();
    }

    /// Parse "num/den" or "num" (arbitrary length, optional leading '-').
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw CalcError("division by zero", "rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const {
        if (is_zero()) throw CalcError("division by zero", "inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    /// Canonical text: "num/den", den omitted when 1.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Reduce mod p; throws if the denominator vanishes mod p.
    std::uint64_t mod(std::uint64_t p) const {
        mpz_class pp(static_cast<unsigned long>(p));
        mpz_class n = q_.get_num() % pp;
        if (n < 0) n += pp;
        mpz_class d = q_.get_den() % pp;
        if (d == 0) throw CalcError("bad prime", "denominator vanishes mod p");
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()) == 0)
            throw CalcError("bad prime", "denominator not invertible mod p");
        mpz_class r = (n * dinv) % pp;
        return static_cast<std::uint64_t>(r.get_ui());
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

/// n! as a Rational; used for character/Todd series coefficients.
inline Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// Generalized binomial coefficient binom(r, k) for integer r (possibly
/// negative) and k >= 0.
inline Rational binomial(long r, int k) {
    if (k < 0) return Rational(0);
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc *= Rational(r - i, 1) / Rational(i + 1, 1);
    return acc;
}

} // namespace trichow
