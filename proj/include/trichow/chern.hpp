#pragma once

#include <vector>

#include "trichow/graded_ring.hpp"
#include "trichow/rational.hpp"

namespace trichow {

/// Embed a rational constant into the coefficient field K. The generic
/// route goes through machine integers; Rational short-circuits.
template <class K>
K rational_to(const Rational& q) {
    if (!q.num().fits_slong_p() || !q.den().fits_slong_p())
        throw CalcError("overflow", "rational constant too large for field embedding");
    return K(q.num().get_si()) / K(q.den().get_si());
}

template <>
inline Rational rational_to<Rational>(const Rational& q) { return q; }

/// Formal vector-bundle class valued in a graded ring: a rank (negative for
/// virtual differences) and a total Chern class with degree-0 part 1.
template <class K>
struct SheafClass {
    long rank = 0;
    RingElt<K> chern;

    SheafClass(long r, RingElt<K> c) : rank(r), chern(std::move(c)) {
        Mono unit(chern.ring()->ngens(), 0);
        if (chern.coeff(unit) != K(1))
            throw CalcError("bad chern", "total Chern class must have degree-0 part 1");
    }

    static SheafClass trivial(const RingPtr<K>& ring, long rank) {
        return SheafClass(rank, RingElt<K>::scalar(ring, K(1)));
    }

    /// Line-bundle class with first Chern class c1.
    static SheafClass line(const RingElt<K>& c1) {
        return SheafClass(1, RingElt<K>::scalar(c1.ring(), K(1)) + c1.component(1));
    }

    RingElt<K> c(int i) const { return chern.component(i); }
};

/// Multiplicative inverse of a power series with constant term 1, truncated
/// at the ring cap.
template <class K>
RingElt<K> series_inverse(const RingElt<K>& u) {
    const auto& ring = u.ring();
    Mono unit(ring->ngens(), 0);
    if (u.coeff(unit) != K(1)) throw CalcError("bad chern", "series inverse needs constant term 1");
    RingElt<K> v = RingElt<K>::scalar(ring, K(1));
    for (int d = 1; d <= ring->cap(); ++d) {
        RingElt<K> acc(ring);
        for (int j = 1; j <= d; ++j) acc += u.component(j) * v.component(d - j);
        v -= acc.component(d);
    }
    return v;
}

template <class K>
SheafClass<K> whitney_sum(const SheafClass<K>& a, const SheafClass<K>& b) {
    return SheafClass<K>(a.rank + b.rank, a.chern * b.chern);
}

/// Chern data of the kernel/quotient in an exact sequence: rank subtracts
/// and the total class divides as a truncated power series.
template <class K>
SheafClass<K> whitney_quotient(const SheafClass<K>& total, const SheafClass<K>& sub) {
    return SheafClass<K>(total.rank - sub.rank, total.chern * series_inverse(sub.chern));
}

template <class K>
SheafClass<K> dual(const SheafClass<K>& e) {
    RingElt<K> c(e.chern.ring());
    for (int i = 0; i <= e.chern.ring()->cap(); ++i) {
        RingElt<K> ci = e.chern.component(i);
        c += (i % 2 == 0) ? ci : -ci;
    }
    return SheafClass<K>(e.rank, c);
}

/// Tensor with a line bundle of first Chern class t (homogeneous degree 1):
/// Chern roots all shift by t, so c_k' = sum_j binom(rank-j, k-j) c_j t^(k-j).
template <class K>
SheafClass<K> twist_by_line(const SheafClass<K>& e, const RingElt<K>& t) {
    if (!t.is_homogeneous(1)) throw CalcError("bad degree", "twist class must be homogeneous of degree 1");
    const auto& ring = e.chern.ring();
    RingElt<K> c = RingElt<K>::scalar(ring, K(1));
    for (int k = 1; k <= ring->cap(); ++k) {
        RingElt<K> ck(ring);
        for (int j = 0; j <= k; ++j) {
            Rational bin = binomial(e.rank - j, k - j);
            if (bin.is_zero()) continue;
            RingElt<K> term = e.chern.component(j);
            for (int i = 0; i < k - j; ++i) term = term * t;
            ck += term.scaled(rational_to<K>(bin));
        }
        c += ck.component(k);
    }
    return SheafClass<K>(e.rank, c);
}

/// Chern character through degree `cap`: rank + p_1 + p_2/2! + ... with the
/// power sums p_k obtained from the Chern classes by Newton's identities.
template <class K>
RingElt<K> chern_character(const SheafClass<K>& e, int cap) {
    const auto& ring = e.chern.ring();
    if (cap > ring->cap()) throw CalcError("beyond cap", "character cap exceeds ring cap");
    RingElt<K> ch = RingElt<K>::scalar(ring, K(static_cast<long>(e.rank)));
    std::vector<RingElt<K>> p(static_cast<size_t>(cap) + 1, RingElt<K>(ring));
    for (int k = 1; k <= cap; ++k) {
        // p_k = sum_{i=1..k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
        RingElt<K> pk(ring);
        for (int i = 1; i < k; ++i) {
            RingElt<K> term = e.chern.component(i) * p[static_cast<size_t>(k - i)];
            pk += (i % 2 == 1) ? term : -term;
        }
        RingElt<K> top = e.chern.component(k).scaled(K(static_cast<long>(k)));
        pk += (k % 2 == 1) ? top : -top;
        p[static_cast<size_t>(k)] = pk.component(k);
        ch += pk.scaled(rational_to<K>(factorial(k).inv()));
    }
    return ch;
}

/// Inverse of chern_character: recover (rank, total Chern class) from a
/// character whose degree-0 part is an integer constant.
template <class K>
SheafClass<K> chern_from_character(const RingElt<K>& ch, long rank) {
    const auto& ring = ch.ring();
    int cap = ring->cap();
    RingElt<K> c = RingElt<K>::scalar(ring, K(1));
    std::vector<RingElt<K>> p(static_cast<size_t>(cap) + 1, RingElt<K>(ring));
    std::vector<RingElt<K>> e(static_cast<size_t>(cap) + 1, RingElt<K>(ring));
    e[0] = RingElt<K>::scalar(ring, K(1));
    for (int k = 1; k <= cap; ++k)
        p[static_cast<size_t>(k)] = ch.component(k).scaled(rational_to<K>(factorial(k)));
    for (int k = 1; k <= cap; ++k) {
        // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
        RingElt<K> ek(ring);
        for (int i = 1; i <= k; ++i) {
            RingElt<K> term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
            ek += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<size_t>(k)] = ek.scaled(K(static_cast<long>(k)).inv()).component(k);
        c += e[static_cast<size_t>(k)];
    }
    return SheafClass<K>(rank, c);
}

/// Coefficients of t / (1 - e^{-t}) through degree cap.
inline std::vector<Rational> todd_series(int cap) {
    if (cap < 0) throw CalcError("bad degree", "todd_series needs cap >= 0");
    // denominator (1 - e^{-t})/t = sum_j (-1)^j t^j / (j+1)!
    std::vector<Rational> den(static_cast<size_t>(cap) + 1);
    for (int j = 0; j <= cap; ++j) {
        Rational c = factorial(j + 1).inv();
        den[static_cast<size_t>(j)] = (j % 2 == 0) ? c : -c;
    }
    std::vector<Rational> inv(static_cast<size_t>(cap) + 1, Rational(0));
    inv[0] = Rational(1);
    for (int d = 1; d <= cap; ++d) {
        Rational acc(0);
        for (int j = 1; j <= d; ++j) acc += den[static_cast<size_t>(j)] * inv[static_cast<size_t>(d - j)];
        inv[static_cast<size_t>(d)] = -acc;
    }
    return inv;
}

/// Total Segre class s = 1/c, truncated; s_0 = 1.
template <class K>
RingElt<K> segre(const SheafClass<K>& e) {
    return series_inverse(e.chern);
}

/// The twist-invariant combination c_2 - (1/4) c_1^2 of a rank-2 class.
template <class K>
RingElt<K> pgl_normalized_c2(const SheafClass<K>& w) {
    if (w.rank != 2) throw CalcError("rank", "pgl_normalized_c2 requires rank exactly 2");
    RingElt<K> c1 = w.chern.component(1);
    RingElt<K> c2 = w.chern.component(2);
    return c2 - (c1 * c1).scaled(rational_to<K>(Rational(1, 4)));
}

} // namespace trichow
