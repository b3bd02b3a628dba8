#pragma once

// Exact arithmetic in Kummer extensions of cyclotomic fields, the explicit
// Galois action y_i |-> zeta^{k_i} y_i, the Kummer pairing <sigma, alpha> =
// sigma(alpha)/alpha valued in mu_n, pairing matrices with exact dependence
// detection for rational radicands at prime exponent, Lagrange-resolvent
// witnesses for Hilbert 90, and Galois symbols as degree-1 cocycles.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wittlab/cohomology.hpp"
#include "wittlab/ring.hpp"

namespace wittlab {

struct KummerRadical {
    RingElement radicand;  // a_i in the base field
    unsigned exponent;     // m_i with y_i^{m_i} = a_i
};

// sigma with y_i |-> zeta_{m_i}^{k_i} y_i, identity on the base field
struct GaloisElement {
    std::vector<int64_t> exponents;
};

class KummerExtension {
public:
    using Element = std::vector<RingElement>;  // dense over radical monomials

    KummerExtension(unsigned conductor, std::vector<KummerRadical> radicals,
                    size_t dimension_cap = 128)
        : conductor_(conductor),
          base_(RingDescriptor::cyclotomic_field(conductor)),
          radicals_(std::move(radicals)) {
        total_ = 1;
        for (const auto& r : radicals_) {
            if (r.exponent == 0 || conductor_ % r.exponent != 0)
                throw DomainError("bad-radical", "radical exponent must divide the conductor");
            if (base_.is_zero(r.radicand))
                throw DomainError("bad-radical", "radicand must be nonzero");
            total_ *= r.exponent;
            if (total_ > dimension_cap)
                throw DomainError("too-large", "Kummer extension dimension exceeds cap");
        }
    }

    const RingDescriptor& base() const { return base_; }
    unsigned conductor() const { return conductor_; }
    const std::vector<KummerRadical>& radicals() const { return radicals_; }
    size_t dimension() const { return total_; }

    // mu_n generator in the base; requires mu_n <= mu_W with W the number of
    // roots of unity of the base (W = N for even N, 2N for odd N)
    RingElement root_of_unity(unsigned n) const {
        if (n == 0) throw DomainError("bad-order", "root of unity order must be positive");
        if (conductor_ % n == 0) return base_.pow(base_.zeta(), conductor_ / n);
        unsigned w = roots_of_unity_count();
        if (conductor_ % 2 == 1 && w % n == 0) {
            // -zeta^((N+1)/2) has order 2N
            RingElement zeta2n =
                base_.neg(base_.pow(base_.zeta(), (conductor_ + 1) / 2));
            return base_.pow(zeta2n, w / n);
        }
        throw DomainError("missing-roots-of-unity", "base field lacks mu_n");
    }

    unsigned roots_of_unity_count() const {
        return conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
    }

    Element zero() const { return Element(total_, base_.zero()); }

    Element from_base(const RingElement& v) const {
        Element e = zero();
        e[0] = v;
        return e;
    }

    Element one() const { return from_base(base_.one()); }

    Element monomial(const std::vector<unsigned>& exps, const RingElement& coeff) const {
        if (exps.size() != radicals_.size())
            throw DomainError("bad-element", "one exponent per radical required");
        std::vector<unsigned> reduced = exps;
        RingElement c = coeff;
        for (size_t i = 0; i < reduced.size(); ++i) {
            unsigned q = reduced[i] / radicals_[i].exponent;
            reduced[i] %= radicals_[i].exponent;
            if (q) c = base_.mul(c, base_.pow(radicals_[i].radicand, q));
        }
        Element e = zero();
        e[index_of(reduced)] = c;
        return e;
    }

    // y_i
    Element radical_generator(size_t i) const {
        std::vector<unsigned> exps(radicals_.size(), 0);
        exps[i] = 1;
        return monomial(exps, base_.one());
    }

    bool is_zero(const Element& x) const {
        for (const auto& c : x)
            if (!base_.is_zero(c)) return false;
        return true;
    }

    bool eq(const Element& x, const Element& y) const {
        for (size_t i = 0; i < total_; ++i)
            if (!base_.eq(x[i], y[i])) return false;
        return true;
    }

    std::optional<RingElement> base_value(const Element& x) const {
        for (size_t i = 1; i < total_; ++i)
            if (!base_.is_zero(x[i])) return std::nullopt;
        return x[0];
    }

    Element add(const Element& x, const Element& y) const {
        Element r = x;
        for (size_t i = 0; i < total_; ++i) r[i] = base_.add(r[i], y[i]);
        return r;
    }

    Element neg(const Element& x) const {
        Element r = x;
        for (auto& c : r) c = base_.neg(c);
        return r;
    }

    Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

    Element scale(const RingElement& s, const Element& x) const {
        Element r = x;
        for (auto& c : r) c = base_.mul(c, s);
        return r;
    }

    Element mul(const Element& x, const Element& y) const {
        Element r = zero();
        for (size_t i = 0; i < total_; ++i) {
            if (base_.is_zero(x[i])) continue;
            auto ei = exps_of(i);
            for (size_t j = 0; j < total_; ++j) {
                if (base_.is_zero(y[j])) continue;
                auto ej = exps_of(j);
                RingElement c = base_.mul(x[i], y[j]);
                std::vector<unsigned> e(radicals_.size());
                for (size_t k = 0; k < radicals_.size(); ++k) {
                    unsigned sum = ei[k] + ej[k];
                    if (sum >= radicals_[k].exponent) {
                        sum -= radicals_[k].exponent;
                        c = base_.mul(c, radicals_[k].radicand);
                    }
                    e[k] = sum;
                }
                size_t idx = index_of(e);
                r[idx] = base_.add(r[idx], c);
            }
        }
        return r;
    }

    Element pow(const Element& x, uint64_t e) const {
        Element acc = one(), b = x;
        while (e) {
            if (e & 1) acc = mul(acc, b);
            b = mul(b, b);
            e >>= 1;
        }
        return acc;
    }

    // multiplicative inverse by solving the multiplication matrix; throws on
    // zero divisors (possible when the radicals are dependent)
    Element inverse(const Element& x) const {
        if (is_zero(x)) throw DomainError("not-a-unit", "zero is not invertible");
        // columns: x * monomial_j
        std::vector<Element> cols(total_);
        for (size_t j = 0; j < total_; ++j) {
            Element mj = zero();
            mj[j] = base_.one();
            cols[j] = mul(x, mj);
        }
        // solve sum_j c_j (x * m_j) = 1 by Gaussian elimination over the base
        std::vector<std::vector<RingElement>> a(total_,
                                                std::vector<RingElement>(total_ + 1, base_.zero()));
        for (size_t i = 0; i < total_; ++i)
            for (size_t j = 0; j < total_; ++j) a[i][j] = cols[j][i];
        a[0][total_] = base_.one();
        for (size_t k = 0; k < total_; ++k) {
            size_t p = k;
            while (p < total_ && base_.is_zero(a[p][k])) ++p;
            if (p == total_)
                throw DomainError("not-a-unit", "element is a zero divisor in this extension");
            std::swap(a[k], a[p]);
            RingElement inv = base_.inv(a[k][k]);
            for (size_t j = k; j <= total_; ++j) a[k][j] = base_.mul(a[k][j], inv);
            for (size_t i = 0; i < total_; ++i) {
                if (i == k || base_.is_zero(a[i][k])) continue;
                RingElement f = a[i][k];
                for (size_t j = k; j <= total_; ++j)
                    a[i][j] = base_.sub(a[i][j], base_.mul(f, a[k][j]));
            }
        }
        Element r(total_, base_.zero());
        for (size_t j = 0; j < total_; ++j) r[j] = a[j][total_];
        return r;
    }

    Element div(const Element& x, const Element& y) const { return mul(x, inverse(y)); }

    // the Galois action: ring automorphism fixing the base pointwise
    Element apply(const GaloisElement& sigma, const Element& x) const {
        if (sigma.exponents.size() != radicals_.size())
            throw DomainError("bad-galois-element", "one exponent per radical required");
        Element r = x;
        for (size_t idx = 0; idx < total_; ++idx) {
            if (base_.is_zero(r[idx])) continue;
            auto e = exps_of(idx);
            // multiply by zeta_N^(sum (N/m_i) k_i e_i)
            uint64_t rot = 0;
            for (size_t i = 0; i < radicals_.size(); ++i) {
                int64_t k = sigma.exponents[i] % static_cast<int64_t>(radicals_[i].exponent);
                if (k < 0) k += radicals_[i].exponent;
                rot += static_cast<uint64_t>(conductor_ / radicals_[i].exponent) *
                       static_cast<uint64_t>(k) * e[i];
            }
            rot %= conductor_;
            if (rot) r[idx] = base_.mul(r[idx], base_.pow(base_.zeta(), rot));
        }
        return r;
    }

    GaloisElement compose(const GaloisElement& s, const GaloisElement& t) const {
        GaloisElement r;
        for (size_t i = 0; i < radicals_.size(); ++i) {
            int64_t m = radicals_[i].exponent;
            r.exponents.push_back(((s.exponents[i] + t.exponents[i]) % m + m) % m);
        }
        return r;
    }

    size_t index_of(const std::vector<unsigned>& exps) const {
        size_t idx = 0;
        for (size_t i = radicals_.size(); i-- > 0;) idx = idx * radicals_[i].exponent + exps[i];
        return idx;
    }

    std::vector<unsigned> exps_of(size_t idx) const {
        std::vector<unsigned> e(radicals_.size());
        for (size_t i = 0; i < radicals_.size(); ++i) {
            e[i] = static_cast<unsigned>(idx % radicals_[i].exponent);
            idx /= radicals_[i].exponent;
        }
        return e;
    }

private:
    unsigned conductor_;
    RingDescriptor base_;
    std::vector<KummerRadical> radicals_;
    size_t total_ = 1;
};

// <sigma, alpha> = sigma(alpha)/alpha as an exponent of zeta_n; alpha^n must
// lie in the base field
inline int64_t kummer_pairing(const KummerExtension& ext, const GaloisElement& sigma,
                              const KummerExtension::Element& alpha, unsigned n) {
    if (ext.is_zero(alpha)) throw DomainError("bad-element", "pairing needs alpha != 0");
    if (!ext.base_value(ext.pow(alpha, n)))
        throw DomainError("not-a-radical", "alpha^n does not lie in the base field");
    KummerExtension::Element q = ext.div(ext.apply(sigma, alpha), alpha);
    auto qb = ext.base_value(q);
    if (!qb) throw DomainError("not-a-root-of-unity", "sigma(alpha)/alpha is not in the base");
    RingElement zeta_n = ext.root_of_unity(n);
    RingElement acc = ext.base().one();
    for (unsigned k = 0; k < n; ++k) {
        if (ext.base().eq(*qb, acc)) return static_cast<int64_t>(k);
        acc = ext.base().mul(acc, zeta_n);
    }
    throw DomainError("not-a-root-of-unity", "sigma(alpha)/alpha is not a power of zeta_n");
}

namespace detail {

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;
};

inline Factorization factor_desk_scale(BigInt v) {
    Factorization f;
    if (v.sign() < 0) v = -v;
    BigInt d(2);
    const BigInt cap(1000000);
    while (d * d <= v) {
        if (v.divisible_by(d)) {
            unsigned e = 0;
            while (v.divisible_by(d)) {
                v = v.divide_exact(d);
                ++e;
            }
            f.primes.emplace_back(d, e);
        }
        d += BigInt(1);
        if (d > cap)
            throw DomainError("too-large", "radicand too large to factor at desk scale");
    }
    if (!v.is_one()) f.primes.emplace_back(v, 1);
    return f;
}

}  // namespace detail

// Is the rational v an n-th power in Q(zeta_N), n prime? Complete at desk
// scale: odd n reduces to the rational n-th power test (a pure n-th root of a
// non-n-th-power rational generates a non-abelian closure), and n = 2 is the
// conductor criterion for the quadratic subfields of cyclotomic fields.
inline bool is_nth_power_in_cyclotomic(const Rational& v, unsigned n, unsigned conductor) {
    if (v.is_zero()) throw DomainError("bad-element", "power test needs v != 0");
    if (!is_prime_u64(n)) throw DomainError("not-prime", "power test implemented for prime n");
    if (n != 2) {
        auto rn = v.num().nth_root_exact(n);
        auto rd = v.den().nth_root_exact(n);
        return rn.has_value() && rd.has_value();
    }
    // squarefree signed part of v
    auto fn = detail::factor_desk_scale(v.num());
    auto fd = detail::factor_desk_scale(v.den());
    BigInt s(v.sign());
    for (const auto& [p, e] : fn.primes)
        if (e % 2) s *= p;
    for (const auto& [p, e] : fd.primes)
        if (e % 2) s *= p;
    if (s.is_one()) return true;
    BigInt cond = s.mod_euclid(BigInt(4)).is_one() ? s.abs() : s.abs() * BigInt(4);
    unsigned w = conductor % 2 == 0 ? conductor : 2 * conductor;
    return BigInt(w).divisible_by(cond);
}

// Pairing matrix between the honest Galois characters and the radical
// classes, for radicals of a common prime exponent n with rational
// radicands. Rows: a reduced echelon basis of the annihilator of the
// dependence lattice { c : prod a_i^{c_i} is an n-th power in the base },
// padded with zero rows; the matrix is invertible mod n exactly when the
// radicands are independent in F^x / (F^x)^n.
inline IntegerMatrix kummer_pairing_matrix(const KummerExtension& ext, unsigned n) {
    if (!is_prime_u64(n)) throw DomainError("not-prime", "pairing matrix needs prime n");
    const auto& rads = ext.radicals();
    const size_t s = rads.size();
    for (const auto& r : rads)
        if (r.exponent != n)
            throw DomainError("bad-radical", "pairing matrix needs all exponents equal to n");
    std::vector<Rational> a;
    for (const auto& r : rads) a.push_back(ext.base().to_rational(r.radicand));
    // dependence lattice in F_n^s
    std::vector<std::vector<int64_t>> lattice;
    std::vector<int64_t> c(s, 0);
    while (true) {
        size_t k = 0;
        while (k < s) {
            if (++c[k] < static_cast<int64_t>(n)) break;
            c[k] = 0;
            ++k;
        }
        if (k == s) break;
        Rational v(1);
        for (size_t i = 0; i < s; ++i) v *= a[i].pow(c[i]);
        if (is_nth_power_in_cyclotomic(v, n, ext.conductor())) lattice.push_back(c);
    }
    // Gaussian elimination mod n for a basis of the annihilator
    auto rref = [n](std::vector<std::vector<int64_t>> rows) {
        size_t cols = rows.empty() ? 0 : rows[0].size();
        size_t r = 0;
        for (size_t col = 0; col < cols && r < rows.size(); ++col) {
            size_t p = r;
            while (p < rows.size() && rows[p][col] % n == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[r], rows[p]);
            // scale to make pivot 1
            int64_t inv = 1;
            for (int64_t t = 1; t < static_cast<int64_t>(n); ++t)
                if ((rows[r][col] * t) % n == 1) inv = t;
            for (auto& x : rows[r]) x = (x * inv) % n;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][col] % n == 0) continue;
                int64_t f = rows[i][col] % n;
                for (size_t j = 0; j < cols; ++j)
                    rows[i][j] = ((rows[i][j] - f * rows[r][j]) % n + n) % n;
            }
            ++r;
        }
        rows.resize(r);
        return rows;
    };
    auto lat_basis = rref(std::move(lattice));
    // annihilator: kernel of the lattice rows
    std::vector<std::vector<int64_t>> ann;
    {
        // free columns of the echelon form parametrize the kernel
        std::vector<int64_t> pivot_col(lat_basis.size());
        std::vector<bool> is_pivot(s, false);
        for (size_t i = 0; i < lat_basis.size(); ++i) {
            size_t j = 0;
            while (j < s && lat_basis[i][j] % n == 0) ++j;
            pivot_col[i] = static_cast<int64_t>(j);
            is_pivot[j] = true;
        }
        for (size_t free = 0; free < s; ++free) {
            if (is_pivot[free]) continue;
            std::vector<int64_t> v(s, 0);
            v[free] = 1;
            for (size_t i = 0; i < lat_basis.size(); ++i)
                v[pivot_col[i]] =
                    ((-lat_basis[i][free]) % static_cast<int64_t>(n) + n) % n;
            ann.push_back(std::move(v));
        }
    }
    ann = rref(std::move(ann));
    IntegerMatrix out(s, s);
    for (size_t i = 0; i < ann.size(); ++i)
        for (size_t j = 0; j < s; ++j) out.at(i, j) = BigInt(ann[i][j]);
    return out;
}

// Lagrange-resolvent witness for Hilbert 90: alpha != 0 with
// sigma(alpha) = zeta alpha over a cyclic extension with one radical of
// exponent n. The trial schedule is the radical monomials, then 1 + y, then
// seeded random small-height elements.
inline KummerExtension::Element hilbert90_resolvent(const KummerExtension& ext,
                                                    const RingElement& zeta,
                                                    unsigned trial_budget = 64,
                                                    uint64_t seed = 0) {
    if (ext.radicals().size() != 1)
        throw DomainError("not-cyclic", "resolvent needs a cyclic extension with one radical");
    const unsigned n = ext.radicals()[0].exponent;
    const RingDescriptor& B = ext.base();
    if (!B.is_one(B.pow(zeta, n)))
        throw DomainError("bad-root-of-unity", "zeta^n must equal 1");
    GaloisElement sigma{{1}};
    RingElement zeta_inv = B.pow(zeta, n - 1);  // zeta^(n-1) = zeta^(-1), or 1 when zeta = 1
    if (B.is_one(zeta)) zeta_inv = B.one();
    std::mt19937_64 rng(seed);
    auto resolvent = [&](const KummerExtension::Element& theta) {
        KummerExtension::Element acc = ext.zero();
        KummerExtension::Element term = theta;  // sigma^i(theta)
        RingElement zpow = B.one();             // zeta^(-i)
        for (unsigned i = 0; i < n; ++i) {
            acc = ext.add(acc, ext.scale(zpow, term));
            term = ext.apply(sigma, term);
            zpow = B.mul(zpow, zeta_inv);
        }
        return acc;
    };
    for (unsigned t = 0; t < trial_budget; ++t) {
        KummerExtension::Element theta = ext.zero();
        if (t < n) {
            theta = ext.monomial({t}, B.one());
        } else if (t == n) {
            theta = ext.add(ext.one(), ext.radical_generator(0));
        } else {
            for (size_t j = 0; j < ext.dimension(); ++j)
                theta[j] = B.from_int(static_cast<int64_t>(rng() % 7) - 3);
            if (ext.is_zero(theta)) continue;
        }
        KummerExtension::Element alpha = resolvent(theta);
        if (ext.is_zero(alpha)) continue;
        if (!ext.eq(ext.apply(sigma, alpha), ext.scale(zeta, alpha)))
            throw std::logic_error("resolvent verification failed");
        return alpha;
    }
    throw DomainError("trial-budget-exhausted", "no nonzero resolvent found within the budget");
}

// degree-1 cocycle sigma |-> <sigma, nth root of alpha> for alpha a rational
// product of the radicands times an n-th power in the base
inline Cocycle galois_symbol(const Rational& alpha, const KummerExtension& ext, unsigned n) {
    if (!is_prime_u64(n)) throw DomainError("not-prime", "Galois symbol implemented for prime n");
    const auto& rads = ext.radicals();
    const size_t s = rads.size();
    for (const auto& r : rads)
        if (r.exponent != n)
            throw DomainError("bad-radical", "symbol needs all radical exponents equal to n");
    std::vector<Rational> a;
    for (const auto& r : rads) a.push_back(ext.base().to_rational(r.radicand));
    std::optional<std::vector<unsigned>> rep;
    std::vector<int64_t> c(s, 0);
    while (true) {
        Rational v = alpha;
        for (size_t i = 0; i < s; ++i) v /= a[i].pow(c[i]);
        if (is_nth_power_in_cyclotomic(v, n, ext.conductor())) {
            rep.emplace(c.begin(), c.end());
            break;
        }
        size_t k = 0;
        while (k < s) {
            if (++c[k] < static_cast<int64_t>(n)) break;
            c[k] = 0;
            ++k;
        }
        if (k == s) break;
    }
    if (!rep)
        throw DomainError("not-representable",
                          "no n-th root of alpha inside this Kummer extension");
    // the root u * prod y_i^{c_i}: u is Galois-fixed, so the pairing sees
    // only the monomial part
    KummerExtension::Element root = ext.monomial(*rep, ext.base().one());
    std::vector<int64_t> torsion(s, static_cast<int64_t>(n));
    Cocycle cocycle;
    cocycle.degree = 1;
    cocycle.group = FgAbelianGroup(0, torsion);
    cocycle.module = FgAbelianGroup(0, {static_cast<int64_t>(n)});
    cocycle.action = {IntegerMatrix::identity(1)};
    GModule mod = GModule::trivial(cocycle.group, cocycle.module);
    cocycle.values.resize(static_cast<size_t>(mod.group_order()));
    for (size_t gi = 0; gi < cocycle.values.size(); ++gi) {
        GaloisElement sigma{mod.group_element(gi)};
        cocycle.values[gi] = {kummer_pairing(ext, sigma, root, n)};
    }
    cocycle.is_cocycle = is_cocycle_table(mod, cocycle);
    return cocycle;
}

}  // namespace wittlab
