#pragma once

// Dense univariate polynomials over a runtime ring: truncated products,
// power-series inversion, division, gcd, and resultants via fraction-free
// Bareiss elimination on the Sylvester matrix. The Bareiss engine is
// templated on the entry type so the same code eliminates scalar matrices
// and the bivariate (polynomial-entry) matrices used for root pairing.

#include <string>
#include <utility>
#include <vector>

#include "wittlab/ring.hpp"

namespace wittlab {

class Polynomial {
public:
    explicit Polynomial(RingDescriptor ring) : ring_(std::move(ring)) {}

    Polynomial(RingDescriptor ring, std::vector<RingElement> coeffs)
        : ring_(std::move(ring)), c_(std::move(coeffs)) {
        strip();
    }

    static Polynomial constant(const RingDescriptor& ring, const RingElement& v) {
        return Polynomial(ring, {v});
    }

    static Polynomial from_ints(const RingDescriptor& ring, const std::vector<int64_t>& v) {
        std::vector<RingElement> c;
        c.reserve(v.size());
        for (int64_t x : v) c.push_back(ring.from_int(x));
        return Polynomial(ring, std::move(c));
    }

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<RingElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    RingElement coeff(size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
    RingElement leading() const {
        if (c_.empty()) throw DomainError("zero-polynomial", "zero polynomial has no leading coefficient");
        return c_.back();
    }
    RingElement constant_term() const { return coeff(0); }

    bool is_one() const { return c_.size() == 1 && ring_.is_one(c_[0]); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        std::vector<RingElement> r(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.ring_.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.ring_, std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        std::vector<RingElement> r(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.ring_.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.ring_, std::move(r));
    }

    Polynomial operator-() const {
        std::vector<RingElement> r = c_;
        for (auto& x : r) x = ring_.neg(x);
        return Polynomial(ring_, std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        std::vector<RingElement> r(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.ring_.is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.ring_.add(r[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
        }
        return Polynomial(a.ring_, std::move(r));
    }

    Polynomial scale(const RingElement& s) const {
        std::vector<RingElement> r = c_;
        for (auto& x : r) x = ring_.mul(x, s);
        return Polynomial(ring_, std::move(r));
    }

    bool equals(const Polynomial& b) const {
        if (ring_ != b.ring_ || c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!ring_.eq(c_[i], b.c_[i])) return false;
        return true;
    }

    RingElement eval(const RingElement& x) const {
        RingElement acc = ring_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, x), c_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(ring_);
        std::vector<RingElement> r(c_.size() - 1, ring_.zero());
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = ring_.mul(ring_.from_int(static_cast<int64_t>(i)), c_[i]);
        return Polynomial(ring_, std::move(r));
    }

    // substitution t -> t^m
    Polynomial substitute_power(unsigned m) const {
        if (m == 0) throw DomainError("bad-exponent", "substitution exponent must be positive");
        if (is_zero()) return *this;
        std::vector<RingElement> r(static_cast<size_t>(degree()) * m + 1, ring_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i * m] = c_[i];
        return Polynomial(ring_, std::move(r));
    }

    // y^n * f(1/y) for n >= deg f
    Polynomial reverse(size_t n) const {
        std::vector<RingElement> r(n + 1, ring_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
        return Polynomial(ring_, std::move(r));
    }

    Polynomial truncated(size_t max_degree) const {
        std::vector<RingElement> r(c_.begin(),
                                   c_.begin() + std::min(c_.size(), max_degree + 1));
        return Polynomial(ring_, std::move(r));
    }

private:
    RingDescriptor ring_;
    std::vector<RingElement> c_;  // ascending, trailing zeros stripped

    void strip() {
        while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
    }

    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_) throw DomainError("ring-mismatch", "polynomials over different rings");
    }
};

// f*g with all terms of degree > max_degree removed
inline Polynomial poly_mul_truncated(const Polynomial& f, const Polynomial& g,
                                     size_t max_degree) {
    if (f.ring() != g.ring()) throw DomainError("ring-mismatch", "polynomials over different rings");
    const RingDescriptor& R = f.ring();
    if (f.is_zero() || g.is_zero()) return Polynomial(R);
    std::vector<RingElement> r(std::min(static_cast<size_t>(f.degree() + g.degree()), max_degree) + 1,
                               R.zero());
    for (size_t i = 0; i < f.coeffs().size() && i <= max_degree; ++i) {
        if (R.is_zero(f.coeffs()[i])) continue;
        for (size_t j = 0; j < g.coeffs().size() && i + j <= max_degree; ++j)
            r[i + j] = R.add(r[i + j], R.mul(f.coeffs()[i], g.coeffs()[j]));
    }
    return Polynomial(R, std::move(r));
}

// g with f*g = 1 mod t^(N+1); f(0) must be a unit
inline Polynomial series_inverse(const Polynomial& f, size_t max_degree) {
    const RingDescriptor& R = f.ring();
    RingElement c0 = f.constant_term();
    if (f.is_zero() || !R.is_unit(c0))
        throw DomainError("non-unit-constant-term", "series inverse needs a unit constant term");
    RingElement c0inv = R.inv(c0);
    std::vector<RingElement> g(max_degree + 1, R.zero());
    g[0] = c0inv;
    for (size_t n = 1; n <= max_degree; ++n) {
        RingElement acc = R.zero();
        for (size_t j = 1; j <= n; ++j)
            acc = R.add(acc, R.mul(f.coeff(j), g[n - j]));
        g[n] = R.neg(R.mul(c0inv, acc));
    }
    return Polynomial(R, std::move(g));
}

// division with remainder; the divisor's leading coefficient must be a unit
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("division-by-zero", "polynomial division by zero");
    const RingDescriptor& R = a.ring();
    if (!R.is_unit(b.leading()))
        throw DomainError("non-unit-leading", "divisor leading coefficient is not a unit");
    RingElement linv = R.inv(b.leading());
    std::vector<RingElement> rem = a.coeffs();
    if (a.degree() < b.degree()) return {Polynomial(R), a};
    std::vector<RingElement> q(a.degree() - b.degree() + 1, R.zero());
    for (size_t k = q.size(); k-- > 0;) {
        RingElement c = R.mul(rem[k + b.degree()], linv);
        q[k] = c;
        if (R.is_zero(c)) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] = R.sub(rem[k + j], R.mul(c, b.coeffs()[j]));
    }
    return {Polynomial(R, std::move(q)), Polynomial(R, std::move(rem))};
}

// exact quotient over an integral domain; throws when not exactly divisible
inline Polynomial poly_exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("division-by-zero", "polynomial division by zero");
    const RingDescriptor& R = a.ring();
    if (a.is_zero()) return a;
    if (a.degree() < b.degree())
        throw DomainError("not-divisible", "inexact polynomial division");
    std::vector<RingElement> rem = a.coeffs();
    std::vector<RingElement> q(a.degree() - b.degree() + 1, R.zero());
    for (size_t k = q.size(); k-- > 0;) {
        RingElement c = R.div(rem[k + b.degree()], b.leading());
        q[k] = c;
        if (R.is_zero(c)) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] = R.sub(rem[k + j], R.mul(c, b.coeffs()[j]));
    }
    for (const auto& x : rem)
        if (!R.is_zero(x)) throw DomainError("not-divisible", "inexact polynomial division");
    return Polynomial(R, std::move(q));
}

namespace detail {

inline BigInt int_content(const Polynomial& f) {
    BigInt g(0);
    for (const auto& c : f.coeffs()) g = BigInt::gcd(g, f.ring().to_rational(c).num());
    return g;
}

}  // namespace detail

// gcd over a field or over Z; normalized to constant term 1 when the constant
// term is a unit, otherwise monic (fields) or primitive with positive leading
// coefficient (Z)
inline Polynomial poly_gcd(Polynomial f, Polynomial g) {
    const RingDescriptor R = f.ring();
    if (R != g.ring()) throw DomainError("ring-mismatch", "polynomials over different rings");
    if (!R.is_field() && R.kind() != RingDescriptor::Kind::integers)
        throw DomainError("unsupported-ring", "gcd supported over fields and the integers");
    auto normalize = [&R](Polynomial h) {
        if (h.is_zero()) return h;
        RingElement c0 = h.constant_term();
        if (R.is_unit(c0)) return h.scale(R.inv(c0));
        if (R.is_field()) return h.scale(R.inv(h.leading()));
        // integers: primitive, positive leading coefficient
        BigInt content = detail::int_content(h);
        if (R.to_rational(h.leading()).sign() < 0) content = -content;
        std::vector<RingElement> c;
        c.reserve(h.coeffs().size());
        for (const auto& x : h.coeffs())
            c.push_back(R.from_integer(R.to_rational(x).num().divide_exact(content)));
        return Polynomial(R, std::move(c));
    };
    if (g.is_zero()) return normalize(f);
    if (f.is_zero()) return normalize(g);
    if (R.is_field()) {
        while (!g.is_zero()) {
            Polynomial r = poly_divmod(f, g).second;
            f = g;
            g = r;
        }
        return normalize(f);
    }
    // integers: primitive remainder sequence
    BigInt content = BigInt::gcd(detail::int_content(f), detail::int_content(g));
    auto primitive = [&R](const Polynomial& h) {
        if (h.is_zero()) return h;
        BigInt c = detail::int_content(h);
        if (R.to_rational(h.leading()).sign() < 0) c = -c;
        std::vector<RingElement> out;
        out.reserve(h.coeffs().size());
        for (const auto& x : h.coeffs())
            out.push_back(R.from_integer(R.to_rational(x).num().divide_exact(c)));
        return Polynomial(R, std::move(out));
    };
    f = primitive(f);
    g = primitive(g);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g
        RingElement lc = g.leading();
        Polynomial scaled = f.scale(R.pow(lc, f.degree() - g.degree() + 1));
        Polynomial rem = scaled;
        for (int k = f.degree() - g.degree(); k >= 0; --k) {
            if (rem.degree() != g.degree() + k) continue;
            RingElement c = R.div(rem.leading(), lc);
            std::vector<RingElement> sub(static_cast<size_t>(k), R.zero());
            sub.push_back(c);
            rem = rem - Polynomial(R, std::move(sub)) * g;
        }
        f = g;
        g = rem.is_zero() ? rem : primitive(rem);
    }
    Polynomial result = f.scale(R.from_integer(content));
    return normalize(result);
}

// ---- fraction-free determinant ----

// Ops must provide: zero(), one(), is_zero(e), mul(a,b), sub(a,b),
// exact_div(a,b), neg(e). Exactness of the divisions is the Sylvester
// identity; row pivoting keeps it intact.
template <class E, class Ops>
E bareiss_determinant(std::vector<std::vector<E>> m, const Ops& ops) {
    const size_t s = m.size();
    if (s == 0) return ops.one();
    E prev = ops.one();
    bool negate = false;
    for (size_t k = 0; k + 1 < s; ++k) {
        if (ops.is_zero(m[k][k])) {
            size_t pivot = k + 1;
            while (pivot < s && ops.is_zero(m[pivot][k])) ++pivot;
            if (pivot == s) return ops.zero();
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < s; ++i) {
            for (size_t j = k + 1; j < s; ++j) {
                E t = ops.sub(ops.mul(m[k][k], m[i][j]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.exact_div(t, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    E det = m[s - 1][s - 1];
    return negate ? ops.neg(det) : det;
}

namespace detail {

struct ScalarOps {
    const RingDescriptor& R;
    RingElement zero() const { return R.zero(); }
    RingElement one() const { return R.one(); }
    bool is_zero(const RingElement& e) const { return R.is_zero(e); }
    RingElement mul(const RingElement& a, const RingElement& b) const { return R.mul(a, b); }
    RingElement sub(const RingElement& a, const RingElement& b) const { return R.sub(a, b); }
    RingElement exact_div(const RingElement& a, const RingElement& b) const { return R.div(a, b); }
    RingElement neg(const RingElement& e) const { return R.neg(e); }
};

struct PolyOps {
    const RingDescriptor& R;
    Polynomial zero() const { return Polynomial(R); }
    Polynomial one() const { return Polynomial::constant(R, R.one()); }
    bool is_zero(const Polynomial& e) const { return e.is_zero(); }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
    Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
    Polynomial exact_div(const Polynomial& a, const Polynomial& b) const {
        return poly_exact_divide(a, b);
    }
    Polynomial neg(const Polynomial& e) const { return -e; }
};

// Sylvester matrix rows: deg(g) rows of f-coefficients, then deg(f) rows of
// g-coefficients, both descending; det = lc(f)^deg(g) * prod g(alpha_i) over
// the roots of f.
template <class E>
std::vector<std::vector<E>> sylvester_matrix(const std::vector<E>& f, const std::vector<E>& g,
                                             const E& zero) {
    const size_t n = f.size() - 1, m = g.size() - 1;
    std::vector<std::vector<E>> s(m + n, std::vector<E>(m + n, zero));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[i][i + j] = f[n - j];
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[m + i][i + j] = g[m - j];
    return s;
}

}  // namespace detail

// Res(f,g) = lc(f)^deg(g) * prod over the roots of f of g, computed without
// root extraction; both inputs nonzero over an integral domain.
inline RingElement poly_resultant(const Polynomial& f, const Polynomial& g) {
    const RingDescriptor& R = f.ring();
    if (R != g.ring()) throw DomainError("ring-mismatch", "polynomials over different rings");
    if (!R.is_integral_domain())
        throw DomainError("not-a-domain", "resultant requires an integral domain");
    if (f.is_zero() || g.is_zero())
        throw DomainError("zero-polynomial", "resultant of the zero polynomial");
    if (g.degree() == 0) return R.pow(g.constant_term(), f.degree());
    if (f.degree() == 0) return R.pow(f.constant_term(), g.degree());
    auto m = detail::sylvester_matrix<RingElement>(f.coeffs(), g.coeffs(), R.zero());
    return bareiss_determinant<RingElement>(std::move(m), detail::ScalarOps{R});
}

// Phi_n as a Polynomial over a target ring (Integers by default elsewhere)
inline Polynomial cyclotomic_polynomial(unsigned n, const RingDescriptor& ring) {
    const auto& z = cyclotomic_coeffs(n);
    std::vector<RingElement> c;
    c.reserve(z.size());
    for (const auto& v : z) c.push_back(ring.from_integer(v));
    return Polynomial(ring, std::move(c));
}

inline Polynomial cyclotomic_polynomial(unsigned n) {
    return cyclotomic_polynomial(n, RingDescriptor::integers());
}

}  // namespace wittlab
