#pragma once

// Cyclotomic polynomial machinery on raw coefficient vectors, plus the small
// number-theoretic helpers (Euler phi, trial-division primality) shared by the
// ring layer.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/rational.hpp"

namespace wittlab {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime(const BigInt& n) {
    if (n.sign() <= 0) return false;
    auto small = n.to_int64();
    if (small) return is_prime_u64(static_cast<uint64_t>(*small));
    // trial division; adequate for the desk-scale moduli this library meets
    BigInt d(2);
    while (d * d <= n) {
        if (n.divisible_by(d)) return false;
        d += BigInt(1);
    }
    return true;
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// ascending-degree integer polynomials, trailing zeros stripped
using ZPoly = std::vector<BigInt>;

inline void zpoly_strip(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zpoly_strip(r);
    return r;
}

// exact division, divisor monic; throws if a remainder appears
inline ZPoly zpoly_div_exact_monic(ZPoly num, const ZPoly& den) {
    if (den.empty() || !den.back().is_one())
        throw std::invalid_argument("zpoly division requires monic divisor");
    if (num.size() < den.size()) {
        zpoly_strip(num);
        if (!num.empty()) throw std::domain_error("zpoly: inexact division");
        return {};
    }
    ZPoly q(num.size() - den.size() + 1, BigInt(0));
    for (size_t k = q.size(); k-- > 0;) {
        BigInt c = num[k + den.size() - 1];
        q[k] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    zpoly_strip(num);
    if (!num.empty()) throw std::domain_error("zpoly: inexact division");
    return q;
}

}  // namespace detail

// N-th cyclotomic polynomial over the integers, ascending coefficients,
// computed by dividing x^n - 1 by the proper cyclotomic divisors. Cached;
// concurrent first calls may race but produce identical values.
inline const detail::ZPoly& cyclotomic_coeffs(unsigned n) {
    static std::map<unsigned, detail::ZPoly> cache;
    static std::mutex mutex;
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // compute iteratively so recursion depth is not an issue
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        detail::ZPoly xm1(m + 1, BigInt(0));
        xm1[0] = BigInt(-1);
        xm1[m] = BigInt(1);
        detail::ZPoly acc = xm1;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) acc = detail::zpoly_div_exact_monic(std::move(acc), cache.at(d));
        cache.emplace(m, std::move(acc));
    }
    return cache.at(n);
}

namespace detail {

// reduce a rational-coefficient polynomial in zeta_N modulo Phi_N; result has
// exactly phi(N) coordinates
inline std::vector<Rational> cyclo_reduce(std::vector<Rational> c, unsigned conductor) {
    const ZPoly& phi = cyclotomic_coeffs(conductor);
    const size_t deg = phi.size() - 1;  // = euler_phi(conductor)
    for (size_t k = c.size(); k-- > deg;) {
        Rational lead = c[k];
        if (lead.is_zero()) continue;
        c[k] = Rational(0);
        // x^k = x^(k-deg) * (x^deg - Phi) since Phi is monic
        for (size_t j = 0; j < deg; ++j) c[k - deg + j] -= lead * Rational(phi[j]);
    }
    c.resize(deg, Rational(0));
    return c;
}

}  // namespace detail

}  // namespace wittlab
