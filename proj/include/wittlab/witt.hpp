#pragma once

// Truncated big Witt vectors W_N(A), stored as the tail (a_1..a_N) of the
// series 1 + a_1 t + ... + a_N t^N. Addition is the truncated series product,
// negation the series inverse, and multiplication evaluates cached universal
// integer polynomials obtained by forcing multiplicativity of the ghost map
// on generic coefficients. Ghost convention: sum gh_n t^n = -t f'/f, so the
// Teichmueller lift [a] = 1 - a t has ghost (a, a^2, a^3, ...).

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "wittlab/poly.hpp"

namespace wittlab {

struct TruncatedWittVector {
    RingDescriptor ring;
    unsigned depth = 1;
    std::vector<RingElement> tail;  // size == depth

    TruncatedWittVector(RingDescriptor r, unsigned n)
        : ring(std::move(r)), depth(n), tail(n, ring.zero()) {
        if (n == 0) throw DomainError("bad-depth", "Witt truncation depth must be >= 1");
    }

    TruncatedWittVector(RingDescriptor r, unsigned n, std::vector<RingElement> t)
        : ring(std::move(r)), depth(n), tail(std::move(t)) {
        if (n == 0) throw DomainError("bad-depth", "Witt truncation depth must be >= 1");
        tail.resize(depth, ring.zero());
    }

    // the represented series 1 + a_1 t + ... + a_N t^N
    Polynomial to_series() const {
        std::vector<RingElement> c;
        c.reserve(depth + 1);
        c.push_back(ring.one());
        for (const auto& a : tail) c.push_back(a);
        return Polynomial(ring, std::move(c));
    }

    static TruncatedWittVector from_series(const Polynomial& f, unsigned depth) {
        TruncatedWittVector u(f.ring(), depth);
        for (unsigned i = 1; i <= depth; ++i) u.tail[i - 1] = f.coeff(i);
        return u;
    }

    bool equals(const TruncatedWittVector& o) const {
        if (ring != o.ring || depth != o.depth) return false;
        for (unsigned i = 0; i < depth; ++i)
            if (!ring.eq(tail[i], o.tail[i])) return false;
        return true;
    }
};

struct GhostVector {
    RingDescriptor ring;
    unsigned depth = 1;
    std::vector<RingElement> components;  // gh_1..gh_N

    GhostVector(RingDescriptor r, unsigned n)
        : ring(std::move(r)), depth(n), components(n, ring.zero()) {}

    bool equals(const GhostVector& o) const {
        if (ring != o.ring || depth != o.depth) return false;
        for (unsigned i = 0; i < depth; ++i)
            if (!ring.eq(components[i], o.components[i])) return false;
        return true;
    }
};

inline void check_compatible(const TruncatedWittVector& u, const TruncatedWittVector& v) {
    if (u.ring != v.ring || u.depth != v.depth)
        throw DomainError("witt-mismatch", "Witt vectors need equal ring and depth");
}

inline TruncatedWittVector witt_zero(const RingDescriptor& ring, unsigned depth) {
    return TruncatedWittVector(ring, depth);
}

// [a] = 1 - a t
inline TruncatedWittVector teichmuller(const RingElement& a, const RingDescriptor& ring,
                                       unsigned depth) {
    TruncatedWittVector u(ring, depth);
    u.tail[0] = ring.neg(a);
    return u;
}

inline TruncatedWittVector witt_one(const RingDescriptor& ring, unsigned depth) {
    return teichmuller(ring.one(), ring, depth);
}

inline TruncatedWittVector witt_add(const TruncatedWittVector& u, const TruncatedWittVector& v) {
    check_compatible(u, v);
    return TruncatedWittVector::from_series(poly_mul_truncated(u.to_series(), v.to_series(), u.depth),
                                            u.depth);
}

inline TruncatedWittVector witt_neg(const TruncatedWittVector& u) {
    return TruncatedWittVector::from_series(series_inverse(u.to_series(), u.depth), u.depth);
}

inline TruncatedWittVector witt_sub(const TruncatedWittVector& u, const TruncatedWittVector& v) {
    return witt_add(u, witt_neg(v));
}

// gh_n = -n a_n - sum_{j<n} gh_j a_{n-j}
inline GhostVector ghost(const TruncatedWittVector& u) {
    const RingDescriptor& R = u.ring;
    GhostVector g(R, u.depth);
    for (unsigned n = 1; n <= u.depth; ++n) {
        RingElement acc = R.mul(R.from_int(static_cast<int64_t>(n)), u.tail[n - 1]);
        for (unsigned j = 1; j < n; ++j)
            acc = R.add(acc, R.mul(g.components[j - 1], u.tail[n - j - 1]));
        g.components[n - 1] = R.neg(acc);
    }
    return g;
}

// inverse of the ghost map; needs division by arbitrary integers
inline TruncatedWittVector ghost_inverse(const GhostVector& g) {
    const RingDescriptor& R = g.ring;
    if (!R.contains_rationals())
        throw DomainError("no-rationals", "ghost_inverse needs a ring containing the rationals");
    TruncatedWittVector u(R, g.depth);
    for (unsigned n = 1; n <= g.depth; ++n) {
        RingElement acc = g.components[n - 1];
        for (unsigned j = 1; j < n; ++j)
            acc = R.add(acc, R.mul(g.components[j - 1], u.tail[n - j - 1]));
        u.tail[n - 1] = R.neg(R.div(acc, R.from_int(static_cast<int64_t>(n))));
    }
    return u;
}

// restriction W_N -> W_K along an initial segment, K <= N
inline TruncatedWittVector witt_truncate(const TruncatedWittVector& u, unsigned depth) {
    if (depth > u.depth)
        throw DomainError("bad-depth", "cannot truncate to a deeper vector");
    TruncatedWittVector w(u.ring, depth);
    for (unsigned i = 0; i < depth; ++i) w.tail[i] = u.tail[i];
    return w;
}

// k-fold Witt sum (series power); negative k through the series inverse
inline TruncatedWittVector witt_scalar(int64_t k, const TruncatedWittVector& u) {
    Polynomial base = k < 0 ? series_inverse(u.to_series(), u.depth) : u.to_series();
    uint64_t e = k < 0 ? static_cast<uint64_t>(-(k + 1)) + 1 : static_cast<uint64_t>(k);
    Polynomial acc = Polynomial::constant(u.ring, u.ring.one());
    while (e) {
        if (e & 1) acc = poly_mul_truncated(acc, base, u.depth);
        base = poly_mul_truncated(base, base, u.depth);
        e >>= 1;
    }
    return TruncatedWittVector::from_series(acc, u.depth);
}

// ---- universal polynomials ----

namespace detail {

using Exponents = std::vector<uint8_t>;

// sparse multivariate polynomial over Q; key order gives determinism
struct MultiPolyQ {
    unsigned nvars = 0;
    std::map<Exponents, Rational> terms;

    static MultiPolyQ zero(unsigned nvars) { return MultiPolyQ{nvars, {}}; }

    static MultiPolyQ variable(unsigned nvars, unsigned index) {
        MultiPolyQ p{nvars, {}};
        Exponents e(nvars, 0);
        e[index] = 1;
        p.terms.emplace(std::move(e), Rational(1));
        return p;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    MultiPolyQ plus(const MultiPolyQ& o) const {
        MultiPolyQ r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }

    MultiPolyQ times(const MultiPolyQ& o) const {
        MultiPolyQ r{nvars, {}};
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                Exponents e(nvars);
                for (unsigned i = 0; i < nvars; ++i)
                    e[i] = static_cast<uint8_t>(e1[i] + e2[i]);
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    MultiPolyQ scaled(const Rational& s) const {
        MultiPolyQ r{nvars, {}};
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms) r.terms.emplace(e, c * s);
        return r;
    }
};

}  // namespace detail

// An integer multivariate polynomial in a_1..a_N (indices 0..N-1) and, for
// multiplication polynomials, b_1..b_N (indices N..2N-1).
struct UniversalPolynomial {
    unsigned nvars = 0;
    std::vector<std::pair<detail::Exponents, BigInt>> terms;  // sorted by exponents
    detail::Exponents max_exponent;                           // per variable

    static UniversalPolynomial from_rational(const detail::MultiPolyQ& p) {
        UniversalPolynomial r;
        r.nvars = p.nvars;
        r.max_exponent.assign(p.nvars, 0);
        for (const auto& [e, c] : p.terms) {
            if (!c.is_integer())
                throw std::logic_error("universal Witt polynomial has a non-integer coefficient");
            for (unsigned i = 0; i < p.nvars; ++i)
                r.max_exponent[i] = std::max(r.max_exponent[i], e[i]);
            r.terms.emplace_back(e, c.num());
        }
        return r;
    }

    // evaluate with values[i] substituted for variable i; power tables are
    // built per call and shared across the monomials
    RingElement eval(const std::vector<RingElement>& values, const RingDescriptor& R) const {
        std::vector<std::vector<RingElement>> powers(nvars);
        for (unsigned i = 0; i < nvars; ++i) {
            powers[i].reserve(max_exponent[i] + 1);
            powers[i].push_back(R.one());
            for (unsigned e = 1; e <= max_exponent[i]; ++e)
                powers[i].push_back(R.mul(powers[i].back(), values[i]));
        }
        RingElement acc = R.zero();
        for (const auto& [e, c] : terms) {
            RingElement term = R.from_integer(c);
            for (unsigned i = 0; i < nvars; ++i)
                if (e[i]) term = R.mul(term, powers[i][e[i]]);
            acc = R.add(acc, term);
        }
        return acc;
    }
};

struct UniversalWittPolynomials {
    unsigned depth = 0;
    // c_n(a_1..a_n, b_1..b_n), n = 1..depth
    std::vector<UniversalPolynomial> mul_polys;
    // F_m coefficient polynomials in a_1..a_mn, for the small Frobenius indices
    std::map<unsigned, std::vector<UniversalPolynomial>> frob_polys;
};

namespace detail {

// ghost polynomials gh_1..gh_N in the variables at [offset, offset+N)
inline std::vector<MultiPolyQ> symbolic_ghosts(unsigned nvars, unsigned offset, unsigned depth) {
    std::vector<MultiPolyQ> gh;
    gh.reserve(depth);
    for (unsigned n = 1; n <= depth; ++n) {
        MultiPolyQ acc = MultiPolyQ::variable(nvars, offset + n - 1).scaled(Rational(-static_cast<int64_t>(n)));
        for (unsigned j = 1; j < n; ++j) {
            MultiPolyQ t = gh[j - 1].times(MultiPolyQ::variable(nvars, offset + n - j - 1));
            acc = acc.plus(t.scaled(Rational(-1)));
        }
        gh.push_back(std::move(acc));
    }
    return gh;
}

// tail polynomials of the vector with prescribed ghost components
inline std::vector<MultiPolyQ> symbolic_ghost_inverse(const std::vector<MultiPolyQ>& gh) {
    std::vector<MultiPolyQ> tail;
    tail.reserve(gh.size());
    for (unsigned n = 1; n <= gh.size(); ++n) {
        MultiPolyQ acc = gh[n - 1];
        for (unsigned j = 1; j < n; ++j) acc = acc.plus(gh[j - 1].times(tail[n - j - 1]));
        tail.push_back(acc.scaled(Rational(BigInt(-1), BigInt(n))));
    }
    return tail;
}

inline std::vector<UniversalPolynomial> build_mul_polys(unsigned depth) {
    const unsigned nvars = 2 * depth;
    auto gha = symbolic_ghosts(nvars, 0, depth);
    auto ghb = symbolic_ghosts(nvars, depth, depth);
    std::vector<MultiPolyQ> ghc;
    ghc.reserve(depth);
    for (unsigned n = 0; n < depth; ++n) ghc.push_back(gha[n].times(ghb[n]));
    auto tail = symbolic_ghost_inverse(ghc);
    std::vector<UniversalPolynomial> out;
    out.reserve(depth);
    for (auto& p : tail) out.push_back(UniversalPolynomial::from_rational(p));
    // c_1 = -a_1 b_1
    if (out[0].terms.size() != 1 || out[0].terms[0].second != BigInt(-1))
        throw std::logic_error("universal multiplication polynomial c_1 != -a_1 b_1");
    return out;
}

inline std::vector<UniversalPolynomial> build_frobenius_polys(unsigned m, unsigned out_depth) {
    const unsigned nvars = m * out_depth;
    auto gh = symbolic_ghosts(nvars, 0, nvars);
    std::vector<MultiPolyQ> shifted;
    shifted.reserve(out_depth);
    for (unsigned n = 1; n <= out_depth; ++n) shifted.push_back(gh[m * n - 1]);
    auto tail = symbolic_ghost_inverse(shifted);
    std::vector<UniversalPolynomial> out;
    out.reserve(out_depth);
    for (auto& p : tail) out.push_back(UniversalPolynomial::from_rational(p));
    return out;
}

}  // namespace detail

// Cached universal multiplication polynomials for depth N. First-time builds
// under distinct threads race benignly: every build yields identical values.
inline const std::vector<UniversalPolynomial>& universal_mul_polys(unsigned depth) {
    static std::map<unsigned, std::vector<UniversalPolynomial>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(depth);
    if (it == cache.end()) it = cache.emplace(depth, detail::build_mul_polys(depth)).first;
    return it->second;
}

inline const std::vector<UniversalPolynomial>& universal_frobenius_polys(unsigned m,
                                                                         unsigned out_depth) {
    static std::map<std::pair<unsigned, unsigned>, std::vector<UniversalPolynomial>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(m, out_depth);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, detail::build_frobenius_polys(m, out_depth)).first;
    return it->second;
}

inline UniversalWittPolynomials build_universal_polys(unsigned depth) {
    if (depth == 0) throw DomainError("bad-depth", "universal polynomials need depth >= 1");
    UniversalWittPolynomials u;
    u.depth = depth;
    u.mul_polys = universal_mul_polys(depth);
    for (unsigned m : {2u, 3u, 5u})
        if (depth / m >= 1) u.frob_polys.emplace(m, universal_frobenius_polys(m, depth / m));
    return u;
}

inline GhostVector ghost_pointwise_mul(const GhostVector& a, const GhostVector& b) {
    GhostVector r(a.ring, a.depth);
    for (unsigned i = 0; i < a.depth; ++i)
        r.components[i] = a.ring.mul(a.components[i], b.components[i]);
    return r;
}

inline TruncatedWittVector witt_mul(const TruncatedWittVector& u, const TruncatedWittVector& v) {
    check_compatible(u, v);
    const RingDescriptor& R = u.ring;
    const auto& polys = universal_mul_polys(u.depth);
    std::vector<RingElement> values = u.tail;
    values.insert(values.end(), v.tail.begin(), v.tail.end());
    TruncatedWittVector w(R, u.depth);
    for (unsigned n = 0; n < u.depth; ++n) w.tail[n] = polys[n].eval(values, R);
    if (R.contains_rationals()) {
        // independent route: ghosts multiply componentwise
        TruncatedWittVector check = ghost_inverse(ghost_pointwise_mul(ghost(u), ghost(v)));
        if (!w.equals(check))
            throw std::logic_error("witt_mul: universal polynomials disagree with the ghost route");
    }
    return w;
}

// F_m: ghost(F_m u)_n = ghost(u)_{mn}; lands in depth floor(N/m)
inline TruncatedWittVector frobenius(unsigned m, const TruncatedWittVector& u) {
    if (m == 0) throw DomainError("bad-index", "Frobenius index must be >= 1");
    if (m == 1) return u;
    unsigned out_depth = u.depth / m;
    if (out_depth < 1)
        throw DomainError("truncation-too-shallow", "depth too shallow for this Frobenius index");
    const RingDescriptor& R = u.ring;
    const auto& polys = universal_frobenius_polys(m, out_depth);
    TruncatedWittVector w(R, out_depth);
    for (unsigned n = 0; n < out_depth; ++n) w.tail[n] = polys[n].eval(u.tail, R);
    if (R.contains_rationals()) {
        GhostVector gu = ghost(u);
        GhostVector expect(R, out_depth);
        for (unsigned n = 1; n <= out_depth; ++n)
            expect.components[n - 1] = gu.components[m * n - 1];
        if (!ghost(w).equals(expect))
            throw std::logic_error("frobenius: universal polynomials disagree with the ghost route");
    }
    return w;
}

// V_m: series substitution t -> t^m; ghost(V_m u)_n = m ghost(u)_{n/m} for m|n
inline TruncatedWittVector verschiebung(unsigned m, const TruncatedWittVector& u) {
    if (m == 0) throw DomainError("bad-index", "Verschiebung index must be >= 1");
    if (m == 1) return u;
    return TruncatedWittVector::from_series(u.to_series().substitute_power(m).truncated(u.depth),
                                            u.depth);
}

}  // namespace wittlab
