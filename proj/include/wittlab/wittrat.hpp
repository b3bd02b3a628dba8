#pragma once

// Rational Witt vectors: normalized fractions num/den of constant-term-1
// polynomials, representing num (+) (-)den inside W(A). Multiplication pairs
// root multisets without factoring: for f = prod (1 - alpha_i t) and
// g = prod (1 - gamma_k t), the reversed polynomial f*(y) = y^deg(f) f(1/y)
// is monic with roots alpha_i, and eliminating y from f*(y) against
// G(x,y) = sum_j g_j x^(m-j) y^j = prod_k (x - gamma_k y) yields the monic
// polynomial whose roots are the pairwise products; reversing and forcing
// constant term 1 lands back in Witt coordinates independently of the
// resultant sign convention.

#include <vector>

#include "wittlab/witt.hpp"

namespace wittlab {

struct RationalWittVector {
    RingDescriptor ring;
    Polynomial num;
    Polynomial den;

    explicit RationalWittVector(RingDescriptor r)
        : ring(r), num(Polynomial::constant(r, r.one())), den(Polynomial::constant(r, r.one())) {}

    RationalWittVector(RingDescriptor r, Polynomial n, Polynomial d)
        : ring(std::move(r)), num(std::move(n)), den(std::move(d)) {}

    bool is_zero() const { return num.is_one() && den.is_one(); }
};

inline void wr_check_ring(const RationalWittVector& u, const RationalWittVector& v) {
    if (u.ring != v.ring)
        throw DomainError("ring-mismatch", "rational Witt vectors over different rings");
}

namespace detail {

inline bool gcd_supported(const RingDescriptor& R) {
    return R.is_field() || R.kind() == RingDescriptor::Kind::integers;
}

}  // namespace detail

// rescale so both constant terms are 1, then cancel the gcd where supported
inline RationalWittVector wr_normalize(Polynomial num, Polynomial den) {
    const RingDescriptor R = num.ring();
    if (R != den.ring()) throw DomainError("ring-mismatch", "fraction parts over different rings");
    if (num.is_zero() || den.is_zero() || !R.is_unit(num.constant_term()) ||
        !R.is_unit(den.constant_term()))
        throw DomainError("non-unit-constant-term",
                          "rational Witt vector needs unit constant terms");
    num = num.scale(R.inv(num.constant_term()));
    den = den.scale(R.inv(den.constant_term()));
    if (detail::gcd_supported(R)) {
        Polynomial g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_exact_divide(num, g);
            den = poly_exact_divide(den, g);
            num = num.scale(R.inv(num.constant_term()));
            den = den.scale(R.inv(den.constant_term()));
        }
    }
    return RationalWittVector(R, std::move(num), std::move(den));
}

inline RationalWittVector wr_zero(const RingDescriptor& R) { return RationalWittVector(R); }

inline RationalWittVector wr_teichmuller(const RingElement& a, const RingDescriptor& R) {
    return RationalWittVector(R, Polynomial(R, {R.one(), R.neg(a)}),
                              Polynomial::constant(R, R.one()));
}

inline RationalWittVector wr_one(const RingDescriptor& R) {
    return wr_teichmuller(R.one(), R);
}

inline RationalWittVector wr_add(const RationalWittVector& u, const RationalWittVector& v) {
    wr_check_ring(u, v);
    return wr_normalize(u.num * v.num, u.den * v.den);
}

inline RationalWittVector wr_neg(const RationalWittVector& u) {
    return RationalWittVector(u.ring, u.den, u.num);
}

inline RationalWittVector wr_sub(const RationalWittVector& u, const RationalWittVector& v) {
    return wr_add(u, wr_neg(v));
}

// equality as Witt elements: cross-multiplied polynomial identity
inline bool wr_equal(const RationalWittVector& u, const RationalWittVector& v) {
    wr_check_ring(u, v);
    return (u.num * v.den).equals(v.num * u.den);
}

inline TruncatedWittVector wr_embed_truncated(const RationalWittVector& u, unsigned depth) {
    Polynomial series =
        poly_mul_truncated(u.num, series_inverse(u.den, depth), depth);
    return TruncatedWittVector::from_series(series, depth);
}

inline GhostVector wr_ghost(const RationalWittVector& u, unsigned depth) {
    return ghost(wr_embed_truncated(u, depth));
}

namespace detail {

inline void require_exact_wr_ring(const RingDescriptor& R, const char* what) {
    if (!(R.is_integral_domain() && R.is_integrally_closed()))
        throw DomainError("unsupported-ring",
                          std::string(what) +
                              " needs an integrally closed integral domain; embed truncated instead");
}

// roots of the result are the pairwise products of the roots of f and g
// (all in the 1 - alpha t sense); constant terms 1 throughout
inline Polynomial witt_product_poly(const Polynomial& f, const Polynomial& g) {
    const RingDescriptor& R = f.ring();
    if (f.degree() <= 0) return Polynomial::constant(R, R.one());
    if (g.degree() <= 0) return Polynomial::constant(R, R.one());
    const size_t n = static_cast<size_t>(f.degree());
    const size_t m = static_cast<size_t>(g.degree());
    // f*(y): monic in y with the alpha_i as roots; coefficients constant in x
    std::vector<Polynomial> fstar;
    fstar.reserve(n + 1);
    for (size_t i = 0; i <= n; ++i)
        fstar.push_back(Polynomial::constant(R, f.coeff(n - i)));
    // G(x,y) = sum_j g_j x^(m-j) y^j
    std::vector<Polynomial> G;
    G.reserve(m + 1);
    for (size_t j = 0; j <= m; ++j) {
        std::vector<RingElement> mono(m - j, R.zero());
        mono.push_back(g.coeff(j));
        G.push_back(Polynomial(R, std::move(mono)));
    }
    auto matrix = sylvester_matrix<Polynomial>(fstar, G, Polynomial(R));
    Polynomial res = bareiss_determinant<Polynomial>(std::move(matrix), PolyOps{R});
    // reverse x -> t over degree nm, then force constant term 1
    Polynomial h = res.reverse(n * m);
    RingElement c0 = h.constant_term();
    if (!R.is_unit(c0))
        throw std::logic_error("witt product: non-unit constant term after reversal");
    h = h.scale(R.inv(c0));
    return h;
}

// roots alpha |-> alpha^m, by eliminating y from f*(y) against x - y^m
inline Polynomial power_roots_poly(const Polynomial& f, unsigned m) {
    const RingDescriptor& R = f.ring();
    if (f.degree() <= 0 || m == 1) return f;
    const size_t n = static_cast<size_t>(f.degree());
    std::vector<Polynomial> fstar;
    fstar.reserve(n + 1);
    for (size_t i = 0; i <= n; ++i)
        fstar.push_back(Polynomial::constant(R, f.coeff(n - i)));
    std::vector<Polynomial> G;
    G.reserve(m + 1);
    G.push_back(Polynomial(R, {R.zero(), R.one()}));  // x
    for (unsigned j = 1; j < m; ++j) G.push_back(Polynomial(R));
    G.push_back(Polynomial::constant(R, R.neg(R.one())));  // -y^m
    auto matrix = sylvester_matrix<Polynomial>(fstar, G, Polynomial(R));
    Polynomial res = bareiss_determinant<Polynomial>(std::move(matrix), PolyOps{R});
    Polynomial h = res.reverse(n);
    RingElement c0 = h.constant_term();
    if (!R.is_unit(c0))
        throw std::logic_error("power roots: non-unit constant term after reversal");
    return h.scale(R.inv(c0));
}

}  // namespace detail

// (1-at)(1-bt) |-> 1-abt extended multiplicatively over root factorizations,
// computed without factoring
inline Polynomial poly_witt_mul(const Polynomial& f, const Polynomial& g) {
    if (f.ring() != g.ring())
        throw DomainError("ring-mismatch", "polynomials over different rings");
    const RingDescriptor& R = f.ring();
    detail::require_exact_wr_ring(R, "poly_witt_mul");
    if (f.is_zero() || !R.is_one(f.constant_term()) || g.is_zero() ||
        !R.is_one(g.constant_term()))
        throw DomainError("bad-constant-term", "poly_witt_mul needs constant terms equal to 1");
    return detail::witt_product_poly(f, g);
}

// Subring multiplication: distribute the root pairing over num (+) (-)den,
// then cross-check the truncated embedding at depth 12 against the universal
// Witt multiplication.
inline RationalWittVector wr_mul(const RationalWittVector& u, const RationalWittVector& v) {
    wr_check_ring(u, v);
    detail::require_exact_wr_ring(u.ring, "wr_mul");
    Polynomial nn = detail::witt_product_poly(u.num, v.num);
    Polynomial dd = detail::witt_product_poly(u.den, v.den);
    Polynomial nd = detail::witt_product_poly(u.num, v.den);
    Polynomial dn = detail::witt_product_poly(u.den, v.num);
    RationalWittVector w = wr_normalize(nn * dd, nd * dn);
    constexpr unsigned kCheckDepth = 12;
    TruncatedWittVector expect = witt_mul(wr_embed_truncated(u, kCheckDepth),
                                          wr_embed_truncated(v, kCheckDepth));
    if (!wr_embed_truncated(w, kCheckDepth).equals(expect))
        throw std::logic_error("wr_mul: resultant route disagrees with the universal route");
    return w;
}

// F_m maps each root alpha to alpha^m; exact over integrally closed domains
inline RationalWittVector wr_frobenius(unsigned m, const RationalWittVector& u) {
    if (m == 0) throw DomainError("bad-index", "Frobenius index must be >= 1");
    detail::require_exact_wr_ring(u.ring, "wr_frobenius");
    return wr_normalize(detail::power_roots_poly(u.num, m), detail::power_roots_poly(u.den, m));
}

// V_m substitutes t -> t^m; works over any ring
inline RationalWittVector wr_verschiebung(unsigned m, const RationalWittVector& u) {
    if (m == 0) throw DomainError("bad-index", "Verschiebung index must be >= 1");
    return RationalWittVector(u.ring, u.num.substitute_power(m), u.den.substitute_power(m));
}

// k-fold Witt sum
inline RationalWittVector wr_scalar(int64_t k, const RationalWittVector& u) {
    const RingDescriptor& R = u.ring;
    Polynomial n = Polynomial::constant(R, R.one());
    Polynomial d = n;
    Polynomial bn = u.num, bd = u.den;
    if (k < 0) std::swap(bn, bd);
    uint64_t e = k < 0 ? static_cast<uint64_t>(-(k + 1)) + 1 : static_cast<uint64_t>(k);
    while (e) {
        if (e & 1) {
            n = n * bn;
            d = d * bd;
        }
        bn = bn * bn;
        bd = bd * bd;
        e >>= 1;
    }
    return wr_normalize(std::move(n), std::move(d));
}

// Phi_p = prod_{i=1}^{p-1} (1 - zeta_p^i t) = 1 + t + ... + t^(p-1) over Z
inline RationalWittVector phi_p(const BigInt& p) {
    if (!is_prime(p)) throw DomainError("not-prime", "phi_p needs a prime index");
    auto R = RingDescriptor::integers();
    auto small = p.to_int64();
    std::vector<RingElement> c(static_cast<size_t>(*small), R.one());
    return RationalWittVector(R, Polynomial(R, std::move(c)), Polynomial::constant(R, R.one()));
}

// ghost of Phi_p (-) (p-1)[1]; every component is -p when p does not divide
// the index and 0 when it does
inline GhostVector phi_p_minus_scalar_check(const BigInt& p, unsigned depth) {
    RationalWittVector u = wr_sub(phi_p(p), wr_scalar(*(p.to_int64()) - 1,
                                                      wr_one(RingDescriptor::integers())));
    GhostVector g = wr_ghost(u, depth);
    const RingDescriptor& R = g.ring;
    for (unsigned n = 1; n <= depth; ++n) {
        BigInt expect = BigInt(n).divisible_by(p) ? BigInt(0) : -p;
        if (!R.eq(g.components[n - 1], R.from_integer(expect)))
            throw std::logic_error("phi_p ghost pattern violated");
    }
    return g;
}

// coefficientwise transport into a ring that can absorb the values exactly
inline Polynomial poly_map_ring(const Polynomial& f, const RingDescriptor& target) {
    std::vector<RingElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) {
        Rational v = f.ring().to_rational(x);
        c.push_back(v.is_integer() ? target.from_integer(v.num()) : target.from_rational(v));
    }
    return Polynomial(target, std::move(c));
}

inline RationalWittVector wr_map_ring(const RationalWittVector& u, const RingDescriptor& target) {
    return RationalWittVector(target, poly_map_ring(u.num, target), poly_map_ring(u.den, target));
}

}  // namespace wittlab
