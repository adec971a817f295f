#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trichow/errors.hpp"
#include "trichow/rational.hpp"

namespace trichow {

using Mono = std::vector<unsigned>;

inline unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

/// Monomial order: total degree first, then the later variable counts more
/// (so with generators declared (f, s), s^2 > f*s > f^2). This is the order
/// used for leading terms, normal forms and canonical printing everywhere.
inline bool mono_greater(const Mono& a, const Mono& b) {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_greater(a, b); }
};

/// Sparse multivariate polynomial over a field K, with a fixed ordered list
/// of variable names. Operations between polynomials require identical
/// variable lists; constants (empty list) are promoted automatically.
template <class K>
class Poly {
public:
    using Terms = std::map<Mono, K, MonoGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(const K& c, std::vector<std::string> vars = {}) {
        Poly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Mono(p.vars_.size(), 0)] = c;
        return p;
    }

    static Poly variable(const std::vector<std::string>& vars, const std::string& name, const K& one = K(1)) {
        Poly p(vars);
        Mono m(vars.size(), 0);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw CalcError("arity", "unknown variable " + name);
        m[static_cast<size_t>(it - vars.begin())] = 1;
        p.terms_[m] = one;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }

    K constant_value() const {
        if (terms_.empty()) return K(0);
        if (!is_constant()) throw CalcError("arity", "polynomial is not constant");
        return terms_.begin()->second;
    }

    void set_term(const Mono& m, const K& c) {
        if (m.size() != vars_.size()) throw CalcError("arity", "exponent tuple does not match variables");
        if (c.is_zero()) terms_.erase(m);
        else terms_[m] = c;
    }

    K coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(mono_degree(m)));
        return d;
    }

    int degree_in(size_t var) const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m[var]));
        return d;
    }

    size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw CalcError("arity", "unknown variable " + name);
        return static_cast<size_t>(it - vars_.begin());
    }

    bool is_univariate() const {
        int used = 0;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (degree_in(i) > 0) ++used;
        return used <= 1;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = mono_degree(terms_.begin()->first);
        for (auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }

    Poly homogeneous_component(unsigned d) const {
        Poly r(vars_);
        for (auto& [m, c] : terms_)
            if (mono_degree(m) == d) r.terms_[m] = c;
        return r;
    }

    /// Embed into a superset variable list (by name).
    Poly promote(const std::vector<std::string>& vars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            if (it == vars.end()) throw CalcError("arity", "variable " + vars_[i] + " missing in target");
            pos[i] = static_cast<size_t>(it - vars.begin());
        }
        Poly r(vars);
        for (auto& [m, c] : terms_) {
            Mono mm(vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) mm[pos[i]] = m[i];
            r.terms_[mm] = c;
        }
        return r;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        auto [x, y] = aligned(a, b);
        Poly r(x);
        for (auto& [m, c] : y.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) r.terms_[m] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        auto [x, y] = aligned(a, b);
        Poly r(x.vars_);
        for (auto& [ma, ca] : x.terms_) {
            for (auto& [mb, cb] : y.terms_) {
                Mono m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                K c = ca * cb;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    if (!c.is_zero()) r.terms_[m] = c;
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
        return r;
    }

    Poly pow(unsigned n) const {
        Poly r = constant(K(1), vars_);
        Poly base(*this);
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::pair<Mono, K> leading_term() const {
        if (terms_.empty()) throw CalcError("zero input", "leading term of zero polynomial");
        return *terms_.begin();
    }

    /// Monic w.r.t. the global monomial order (scale by a field constant).
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(terms_.begin()->second.inv());
    }

    Poly derivative(size_t var) const {
        Poly r(vars_);
        for (auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono mm(m);
            mm[var] -= 1;
            r.terms_[mm] = c * K(static_cast<long>(m[var]));
        }
        return r;
    }

    /// Coefficients with respect to one variable, ascending power; the
    /// coefficient polynomials keep the full variable list.
    std::vector<Poly> coeffs_in(size_t var) const {
        int d = degree_in(var);
        std::vector<Poly> out(static_cast<size_t>(std::max(d, 0)) + 1, Poly(vars_));
        for (auto& [m, c] : terms_) {
            Mono mm(m);
            unsigned e = mm[var];
            mm[var] = 0;
            out[e].terms_[mm] = c;
        }
        return out;
    }

    static Poly from_coeffs_in(const std::vector<std::string>& vars, size_t var, const std::vector<Poly>& coeffs) {
        Poly r(vars);
        for (size_t e = 0; e < coeffs.size(); ++e) {
            for (auto& [m, c] : coeffs[e].terms_) {
                Mono mm(m);
                mm[var] += static_cast<unsigned>(e);
                r.terms_[mm] = c;
            }
        }
        return r;
    }

    Poly substitute(size_t var, const Poly& value) const {
        auto cs = coeffs_in(var);
        Poly v = value.vars().empty() ? value.promote(vars_) : value;
        if (v.vars() != vars_) throw CalcError("arity", "substitute: variable list mismatch");
        Poly r(vars_);
        Poly p = constant(K(1), vars_);
        for (size_t e = 0; e < cs.size(); ++e) {
            r += cs[e] * p;
            if (e + 1 < cs.size()) p = p * v;
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != vars_.size()) throw CalcError("arity", "evaluate: wrong point size");
        K acc(0);
        for (auto& [m, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Exact division; throws if the divisor does not divide.
    friend Poly exact_div(const Poly& a, const Poly& b) {
        auto [f0, d] = aligned(a, b);
        if (d.is_zero()) throw CalcError("division by zero", "exact_div by zero");
        Poly q(f0.vars_);
        Poly f = f0;
        auto [dm, dc] = d.leading_term();
        K dcinv = dc.inv();
        while (!f.is_zero()) {
            auto [fm, fc] = f.leading_term();
            Mono qm(fm);
            for (size_t i = 0; i < qm.size(); ++i) {
                if (qm[i] < dm[i]) throw CalcError("not divisible", "exact_div: not divisible");
                qm[i] -= dm[i];
            }
            K qc = fc * dcinv;
            Poly t(f.vars_);
            t.terms_[qm] = qc;
            q += t;
            f -= t * d;
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string abs = neg ? cs.substr(1) : cs;
            std::string mono;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            std::string term;
            if (mono.empty()) term = abs;
            else if (abs == "1") term = mono;
            else term = abs + "*" + mono;
            if (first) {
                out = (neg ? "-" : "") + term;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
        return out;
    }

private:
    static std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        if (a.vars_.empty() && a.is_constant()) return {a.promote(b.vars_), b};
        if (b.vars_.empty() && b.is_constant()) return {a, b.promote(a.vars_)};
        throw CalcError("arity", "variable list mismatch");
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// gcd / pseudo-division (primitive PRS)
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
int first_used_var(const Poly<K>& f, const Poly<K>& g) {
    size_t n = f.vars().size();
    for (size_t i = 0; i < n; ++i)
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) return static_cast<int>(i);
    return -1;
}

/// Pseudo-remainder of f by g in variable `var`: lc(g)^(df-dg+1) * f = q*g + r.
template <class K>
Poly<K> pseudo_rem(const Poly<K>& f, const Poly<K>& g, size_t var) {
    int dg = g.degree_in(var);
    auto gc = g.coeffs_in(var);
    Poly<K> lc = gc.back();
    Poly<K> r = f;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        auto rc = r.coeffs_in(var);
        Poly<K> rl = rc.back();
        // r <- lc*r - rl * x^(dr-dg) * g
        Poly<K> shift = Poly<K>::from_coeffs_in(f.vars(), var, [&] {
            std::vector<Poly<K>> cs(static_cast<size_t>(dr - dg) + 1, Poly<K>(f.vars()));
            cs.back() = rl;
            return cs;
        }());
        r = lc * r - shift * g;
    }
    return r;
}

} // namespace detail

/// Multivariate gcd over a field, by primitive pseudo-remainder sequences.
/// The result is monic with respect to the global monomial order.
template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    int vi = detail::first_used_var(a, b);
    if (vi < 0) return Poly<K>::constant(K(1), a.vars());
    size_t var = static_cast<size_t>(vi);

    auto content = [&](const Poly<K>& f) {
        auto cs = f.coeffs_in(var);
        Poly<K> c(f.vars());
        for (auto& ci : cs)
            if (!ci.is_zero()) c = poly_gcd(c, ci);
        return c;
    };

    if (a.degree_in(var) == 0) return poly_gcd(a, content(b));
    if (b.degree_in(var) == 0) return poly_gcd(content(a), b);

    Poly<K> ca = content(a), cb = content(b);
    Poly<K> f = exact_div(a, ca), g = exact_div(b, cb);
    Poly<K> cd = poly_gcd(ca, cb);

    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (true) {
        Poly<K> r = detail::pseudo_rem(f, g, var);
        if (r.is_zero()) break;
        r = exact_div(r, content(r));
        f = g;
        g = r;
        if (g.degree_in(var) == 0) return cd.monic();
    }
    return (cd * g).monic();
}

// ---------------------------------------------------------------------------
// Determinant (Bareiss) and resultant
// ---------------------------------------------------------------------------

/// Fraction-free determinant of a square matrix over an integral domain with
/// exact division (Poly or UPoly entries).
template <class D>
D bareiss_determinant(std::vector<std::vector<D>> m, const D& one) {
    size_t n = m.size();
    if (n == 0) return one;
    D prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return D();  // zero column => det 0
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                D num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = D();
        }
        prev = m[k][k];
    }
    D det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Sylvester resultant of f and g with respect to `var` (f-rows first).
/// Throws "arity" when both inputs are constant in `var`.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) throw CalcError("zero input", "resultant of zero polynomial");
    const auto& vars = f.vars().empty() ? g.vars() : f.vars();
    Poly<K> ff = f.vars().empty() ? f.promote(vars) : f;
    Poly<K> gg = g.vars().empty() ? g.promote(vars) : g;
    size_t vi = ff.var_index(var);
    int m = ff.degree_in(vi), n = gg.degree_in(vi);
    if (m <= 0 && n <= 0) throw CalcError("arity", "resultant: both inputs constant in " + var);
    auto fc = ff.coeffs_in(vi), gc = gg.coeffs_in(vi);
    if (m <= 0) {  // Res(c, g) = c^n
        return fc[0].pow(static_cast<unsigned>(n));
    }
    if (n <= 0) {
        return gc[0].pow(static_cast<unsigned>(m));
    }
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly<K>>> mat(size, std::vector<Poly<K>>(size, Poly<K>(vars)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            mat[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = fc[static_cast<size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            mat[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = gc[static_cast<size_t>(n - j)];
    return bareiss_determinant(mat, Poly<K>::constant(K(1), vars));
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (univariate, Yun)
// ---------------------------------------------------------------------------

/// Yun's squarefree decomposition. Input must be a nonzero univariate
/// polynomial; valid in characteristic 0 or p > deg f. Factors come out
/// monic, pairwise coprime and squarefree, with their exact multiplicities;
/// the product of factor^multiplicity equals f up to a nonzero constant.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decompose(const Poly<K>& f) {
    if (f.is_zero()) throw CalcError("zero input", "squarefree_decompose of zero");
    if (!f.is_univariate()) throw CalcError("arity", "squarefree_decompose requires univariate input");
    std::vector<std::pair<Poly<K>, int>> out;
    if (f.total_degree() <= 0) return out;
    size_t var = 0;
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (f.degree_in(i) > 0) { var = i; break; }

    Poly<K> p = f.monic();
    Poly<K> dp = p.derivative(var);
    Poly<K> g = poly_gcd(p, dp);
    Poly<K> c = exact_div(p, g);
    Poly<K> d = exact_div(dp, g) - c.derivative(var);
    int mult = 1;
    while (c.total_degree() > 0) {
        Poly<K> fac = poly_gcd(c, d);
        if (fac.total_degree() > 0) out.emplace_back(fac.monic(), mult);
        c = exact_div(c, fac);
        d = exact_div(d, fac) - c.derivative(var);
        ++mult;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing (canonical text for rational-coefficient polynomials)
// ---------------------------------------------------------------------------

/// Parse the canonical textual form produced by Poly::str(), e.g.
/// "3*x^2*y - 1/2*y^3 + 4". Whitespace-insensitive.
inline Poly<Rational> parse_poly(const std::vector<std::string>& vars, const std::string& text) {
    Poly<Rational> out(vars);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size()) throw CalcError("parse", "empty polynomial text");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size()) break;
            if (text[i] == '+') { ++i; }
            else if (text[i] == '-') { sign = -1; ++i; }
            else if (!first) throw CalcError("parse", "expected + or - in polynomial text");
        }
        first = false;
        skip_ws();
        Rational coeff(1);
        bool saw_coeff = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            coeff = Rational::parse(text.substr(i, j - i));
            i = j;
            saw_coeff = true;
        }
        Mono m(vars.size(), 0);
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (saw_coeff || saw_var) {
                if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
                else break;
            }
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            if (j == i) throw CalcError("parse", "expected variable name");
            std::string name = text.substr(i, j - i);
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw CalcError("parse", "unknown variable " + name);
            i = j;
            unsigned e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                e = static_cast<unsigned>(std::stoul(text.substr(i, k - i)));
                i = k;
            }
            m[static_cast<size_t>(it - vars.begin())] += e;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) throw CalcError("parse", "empty term");
        Poly<Rational> t(vars);
        t.set_term(m, sign < 0 ? -coeff : coeff);
        out += t;
        skip_ws();
    }
    return out;
}

} // namespace trichow
