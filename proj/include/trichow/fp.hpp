#pragma once

#include <cstdint>
#include <string>

#include "trichow/errors.hpp"

namespace trichow {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Prime-field element. The modulus is carried per element; an element with
/// p == 0 is an "unreduced integer constant" (generic code builds small
/// constants with no modulus in scope) and adopts a modulus on first contact.
/// Moduli are restricted to primes p > 3 so cubic-covariant identities match
/// characteristic zero.
class Fp {
public:
    Fp() : v_(0), p_(0) { sv_ = 0; unset_ = true; }
    Fp(long n) : v_(0), p_(0) { sv_ = n; unset_ = true; }
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    static Fp make(long n, std::uint64_t p) {
        check_modulus(p);
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    static void check_modulus(std::uint64_t p) {
        if (p <= 3) throw CalcError("bad prime", "prime field modulus must exceed 3");
        if (!is_prime_u64(p)) throw CalcError("bad prime", "modulus is not prime");
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return p_ ? v_ : 0; }

    bool is_zero() const {
        if (unset_) return sv_ == 0;
        return v_ == 0;
    }
    bool is_one() const {
        if (unset_) return sv_ == 1;
        return v_ == 1;
    }

    Fp operator-() const {
        if (unset_) return Fp(-sv_);
        return Fp(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp operator+(const Fp& o) const { auto [a, b] = align(*this, o); return a.unset_ ? Fp(a.sv_ + b.sv_) : Fp((a.v_ + b.v_) % a.p_, a.p_); }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const {
        auto [a, b] = align(*this, o);
        return a.unset_ ? Fp(a.sv_ * b.sv_) : Fp(detail::mulmod_u64(a.v_, b.v_, a.p_), a.p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
    Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

    Fp inv() const {
        if (unset_) {
            if (sv_ == 1) return Fp(1);
            if (sv_ == -1) return Fp(-1);
            throw CalcError("division by zero", "cannot invert unreduced constant without modulus");
        }
        if (v_ == 0) throw CalcError("division by zero", "inverse of zero in F_p");
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    bool operator==(const Fp& o) const {
        auto [a, b] = align(*this, o);
        return a.unset_ ? a.sv_ == b.sv_ : a.v_ == b.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const {
        if (unset_) return std::to_string(sv_);
        return std::to_string(v_);
    }

private:
    Fp reduced_to(std::uint64_t p) const {
        if (!unset_) return *this;
        long r = sv_ % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    static std::pair<Fp, Fp> align(const Fp& x, const Fp& y) {
        if (x.unset_ && y.unset_) return {x, y};
        if (x.unset_) return {x.reduced_to(y.p_), y};
        if (y.unset_) return {x, y.reduced_to(x.p_)};
        if (x.p_ != y.p_) throw CalcError("modulus mismatch", "mixing different prime fields");
        return {x, y};
    }

    std::uint64_t v_;
    std::uint64_t p_;
    long sv_ = 0;
    bool unset_ = false;
};

} // namespace trichow
