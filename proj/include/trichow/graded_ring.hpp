#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "trichow/errors.hpp"
#include "trichow/linalg.hpp"
#include "trichow/poly.hpp"

namespace trichow {

/// Presentation of a finitely generated graded commutative Q-algebra:
/// named generators with positive degrees, homogeneous relations written
/// as polynomials in the generator names, and a degree cap.
template <class K>
struct RingPresentation {
    std::vector<std::pair<std::string, int>> generators;
    std::vector<Poly<K>> relations;
    int cap = 4;
};

/// A built ring context. For each degree d <= cap a basis of the quotient
/// graded piece is fixed: monomials in graded-lex order with the subspace
/// spanned by {relation * complementary monomial} removed by row reduction.
/// The construction is deterministic in the presentation, so normal forms
/// and printed certificates are reproducible.
template <class K>
class RingContext : public std::enable_shared_from_this<RingContext<K>> {
public:
    struct Piece {
        std::vector<Mono> monomials;              // graded-lex, greatest first
        std::map<Mono, size_t> index;             // monomial -> position
        std::vector<std::vector<K>> rows;         // RREF of the relation span
        std::vector<size_t> pivots;               // pivot column per row
        std::vector<size_t> basis;                // non-pivot columns
    };

    static std::shared_ptr<const RingContext> build(const RingPresentation<K>& p) {
        return std::shared_ptr<const RingContext>(new RingContext(p));
    }

    const RingPresentation<K>& presentation() const { return pres_; }
    int cap() const { return pres_.cap; }
    size_t ngens() const { return pres_.generators.size(); }
    const std::vector<std::string>& gen_names() const { return names_; }

    int weighted_degree(const Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * pres_.generators[i].second;
        return d;
    }

    const Piece& piece(int d) const {
        if (d < 0 || d > pres_.cap) throw CalcError("beyond cap", "degree beyond cap");
        return pieces_[static_cast<size_t>(d)];
    }

    size_t graded_dim(int d) const { return piece(d).basis.size(); }

    /// Reduce a coefficient vector (over the full degree-d monomial list)
    /// against the relation rows, in place.
    void reduce(int d, std::vector<K>& v) const {
        const Piece& pc = piece(d);
        for (size_t r = 0; r < pc.rows.size(); ++r) {
            size_t col = pc.pivots[r];
            if (v[col].is_zero()) continue;
            K f = v[col];
            for (size_t j = col; j < v.size(); ++j) v[j] = v[j] - f * pc.rows[r][j];
        }
    }

private:
    explicit RingContext(const RingPresentation<K>& p) : pres_(p) {
        for (auto& [name, deg] : p.generators) {
            if (deg <= 0) throw CalcError("bad degree", "generator degree must be positive");
            names_.push_back(name);
        }
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw CalcError("duplicate generator", names_[i]);
        pieces_.resize(static_cast<size_t>(p.cap) + 1);
        for (int d = 0; d <= p.cap; ++d) {
            Piece& pc = pieces_[static_cast<size_t>(d)];
            enumerate_monomials(d, pc.monomials);
            std::sort(pc.monomials.begin(), pc.monomials.end(), MonoGreater{});
            for (size_t i = 0; i < pc.monomials.size(); ++i) pc.index[pc.monomials[i]] = i;
        }
        // relation rows per degree
        for (auto& rel : p.relations) {
            Poly<K> r = rel.vars().empty() ? rel.promote(names_) : rel;
            if (r.vars() != names_) r = r.promote(names_);
            if (r.is_zero()) continue;
            int rd = -1;
            for (auto& [m, c] : r.terms()) {
                int d = weighted_degree(m);
                if (rd < 0) rd = d;
                else if (rd != d) throw CalcError("inhomogeneous", "relation is not homogeneous: " + r.str());
            }
            if (rd > p.cap) throw CalcError("beyond cap", "relation degree exceeds cap");
            rel_polys_.push_back(r);
            rel_degrees_.push_back(rd);
        }
        for (int d = 0; d <= p.cap; ++d) {
            Piece& pc = pieces_[static_cast<size_t>(d)];
            std::vector<std::vector<K>> rows;
            for (size_t r = 0; r < rel_polys_.size(); ++r) {
                int rd = rel_degrees_[r];
                if (rd > d) continue;
                const Piece& comp = pieces_[static_cast<size_t>(d - rd)];
                for (const Mono& m : comp.monomials) {
                    std::vector<K> row(pc.monomials.size(), K(0));
                    for (auto& [rm, rc] : rel_polys_[r].terms()) {
                        Mono prod(rm);
                        for (size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
                        row[pc.index.at(prod)] += rc;
                    }
                    rows.push_back(std::move(row));
                }
            }
            pc.pivots = rref(rows);
            pc.rows = std::move(rows);
            size_t pi = 0;
            for (size_t col = 0; col < pc.monomials.size(); ++col) {
                if (pi < pc.pivots.size() && pc.pivots[pi] == col) { ++pi; continue; }
                pc.basis.push_back(col);
            }
        }
    }

    void enumerate_monomials(int d, std::vector<Mono>& out) const {
        Mono m(pres_.generators.size(), 0);
        rec_enumerate(0, d, m, out);
    }
    void rec_enumerate(size_t i, int rem, Mono& m, std::vector<Mono>& out) const {
        if (i == m.size()) {
            if (rem == 0) out.push_back(m);
            return;
        }
        int gd = pres_.generators[i].second;
        for (int e = 0; e * gd <= rem; ++e) {
            m[i] = static_cast<unsigned>(e);
            rec_enumerate(i + 1, rem - e * gd, m, out);
        }
        m[i] = 0;
    }

    RingPresentation<K> pres_;
    std::vector<std::string> names_;
    std::vector<Poly<K>> rel_polys_;
    std::vector<int> rel_degrees_;
    std::vector<Piece> pieces_;
};

template <class K>
using RingPtr = std::shared_ptr<const RingContext<K>>;

/// Element of a built graded ring, stored degreewise on the full monomial
/// coordinates of each graded piece, always reduced to the quotient normal
/// form. Components beyond the cap are dropped.
template <class K>
class RingElt {
public:
    RingElt() = default;
    explicit RingElt(RingPtr<K> ring) : ring_(std::move(ring)) {
        comp_.resize(static_cast<size_t>(ring_->cap()) + 1);
        for (int d = 0; d <= ring_->cap(); ++d)
            comp_[static_cast<size_t>(d)].assign(ring_->piece(d).monomials.size(), K(0));
    }

    static RingElt from_poly(const RingPtr<K>& ring, const Poly<K>& p) {
        RingElt e(ring);
        Poly<K> q = (p.vars() == ring->gen_names()) ? p : p.promote(ring->gen_names());
        for (auto& [m, c] : q.terms()) {
            int d = ring->weighted_degree(m);
            if (d > ring->cap()) continue;
            e.comp_[static_cast<size_t>(d)][ring->piece(d).index.at(m)] += c;
        }
        e.normalize();
        return e;
    }

    static RingElt scalar(const RingPtr<K>& ring, const K& c) {
        return from_poly(ring, Poly<K>::constant(c, ring->gen_names()));
    }

    static RingElt generator(const RingPtr<K>& ring, const std::string& name) {
        return from_poly(ring, Poly<K>::variable(ring->gen_names(), name));
    }

    const RingPtr<K>& ring() const { return ring_; }

    bool is_zero() const {
        for (auto& v : comp_)
            for (auto& c : v)
                if (!c.is_zero()) return false;
        return true;
    }

    /// Homogeneous degree-d part.
    RingElt component(int d) const {
        RingElt e(ring_);
        if (d >= 0 && d <= ring_->cap()) e.comp_[static_cast<size_t>(d)] = comp_[static_cast<size_t>(d)];
        return e;
    }

    bool is_homogeneous(int d) const {
        for (int j = 0; j <= ring_->cap(); ++j) {
            if (j == d) continue;
            for (auto& c : comp_[static_cast<size_t>(j)])
                if (!c.is_zero()) return false;
        }
        return true;
    }

    int top_degree() const {
        for (int d = ring_->cap(); d >= 0; --d)
            for (auto& c : comp_[static_cast<size_t>(d)])
                if (!c.is_zero()) return d;
        return -1;
    }

    const std::vector<K>& coords(int d) const { return comp_.at(static_cast<size_t>(d)); }

    /// Coefficient of a specific monomial (given in generator exponents).
    K coeff(const Mono& m) const {
        int d = ring_->weighted_degree(m);
        if (d > ring_->cap()) return K(0);
        return comp_[static_cast<size_t>(d)][ring_->piece(d).index.at(m)];
    }

    RingElt operator-() const {
        RingElt e(*this);
        for (auto& v : e.comp_)
            for (auto& c : v) c = -c;
        return e;
    }
    friend RingElt operator+(const RingElt& a, const RingElt& b) {
        a.check_same_ring(b);
        RingElt e(a);
        for (size_t d = 0; d < e.comp_.size(); ++d)
            for (size_t i = 0; i < e.comp_[d].size(); ++i) e.comp_[d][i] += b.comp_[d][i];
        return e;
    }
    friend RingElt operator-(const RingElt& a, const RingElt& b) { return a + (-b); }
    friend RingElt operator*(const RingElt& a, const RingElt& b) {
        a.check_same_ring(b);
        RingElt e(a.ring_);
        int cap = a.ring_->cap();
        for (int da = 0; da <= cap; ++da) {
            for (size_t ia = 0; ia < a.comp_[static_cast<size_t>(da)].size(); ++ia) {
                const K& ca = a.comp_[static_cast<size_t>(da)][ia];
                if (ca.is_zero()) continue;
                const Mono& ma = a.ring_->piece(da).monomials[ia];
                for (int db = 0; da + db <= cap; ++db) {
                    for (size_t ib = 0; ib < b.comp_[static_cast<size_t>(db)].size(); ++ib) {
                        const K& cb = b.comp_[static_cast<size_t>(db)][ib];
                        if (cb.is_zero()) continue;
                        const Mono& mb = a.ring_->piece(db).monomials[ib];
                        Mono m(ma);
                        for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                        e.comp_[static_cast<size_t>(da + db)][a.ring_->piece(da + db).index.at(m)] += ca * cb;
                    }
                }
            }
        }
        e.normalize();
        return e;
    }
    RingElt& operator+=(const RingElt& o) { *this = *this + o; return *this; }
    RingElt& operator-=(const RingElt& o) { *this = *this - o; return *this; }
    RingElt& operator*=(const RingElt& o) { *this = *this * o; return *this; }

    RingElt scaled(const K& c) const {
        RingElt e(*this);
        for (auto& v : e.comp_)
            for (auto& x : v) x = x * c;
        return e;
    }

    RingElt pow(unsigned n) const {
        RingElt r = scalar(ring_, K(1));
        RingElt base(*this);
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const RingElt& a, const RingElt& b) { return (a - b).is_zero(); }
    friend bool operator!=(const RingElt& a, const RingElt& b) { return !(a == b); }

    /// Printed as a sum of basis monomials, greatest first, factors in
    /// declared generator order, e.g. "56/3*psi" or "-f*s + 2*f".
    std::string str() const {
        std::string out;
        for (int d = ring_->cap(); d >= 0; --d) {
            const auto& pc = ring_->piece(d);
            for (size_t i = 0; i < pc.monomials.size(); ++i) {
                const K& c = comp_[static_cast<size_t>(d)][i];
                if (c.is_zero()) continue;
                std::string cs = c.str();
                bool neg = !cs.empty() && cs[0] == '-';
                std::string abs = neg ? cs.substr(1) : cs;
                std::string mono;
                const Mono& m = pc.monomials[i];
                for (size_t v = 0; v < m.size(); ++v) {
                    if (m[v] == 0) continue;
                    if (!mono.empty()) mono += "*";
                    mono += ring_->gen_names()[v];
                    if (m[v] > 1) mono += "^" + std::to_string(m[v]);
                }
                std::string term = mono.empty() ? abs : (abs == "1" ? mono : abs + "*" + mono);
                if (out.empty()) out = (neg ? "-" : "") + term;
                else out += (neg ? " - " : " + ") + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void normalize() {
        for (int d = 0; d <= ring_->cap(); ++d) ring_->reduce(d, comp_[static_cast<size_t>(d)]);
    }
    void check_same_ring(const RingElt& o) const {
        if (ring_ != o.ring_) throw CalcError("ring mismatch", "elements of different rings");
    }

    RingPtr<K> ring_;
    std::vector<std::vector<K>> comp_;
};

/// Normal form: elements are stored reduced, so this re-reduces a copy
/// (idempotent by construction; kept as the public entry point).
template <class K>
RingElt<K> normal_form(const RingElt<K>& x) {
    return x + RingElt<K>(x.ring());
}

template <class K>
size_t graded_dim(const RingPtr<K>& ring, int d) {
    return ring->graded_dim(d);
}

} // namespace trichow
