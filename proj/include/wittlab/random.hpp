#pragma once

// Seeded deterministic generators for the property batteries. Draws go
// through explicit modulo arithmetic rather than std distributions so a
// given seed produces identical values on every platform.

#include <cstdint>
#include <random>

#include "wittlab/fgabelian.hpp"
#include "wittlab/grouplambda.hpp"
#include "wittlab/witt.hpp"
#include "wittlab/wittrat.hpp"

namespace wittlab {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    uint64_t next() { return gen(); }

    int64_t int_in(int64_t lo, int64_t hi) {  // inclusive bounds
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline RingElement random_element(const RingDescriptor& ring, Rng& rng, int64_t height = 9) {
    switch (ring.kind()) {
        case RingDescriptor::Kind::integers:
            return ring.from_int(rng.int_in(-height, height));
        case RingDescriptor::Kind::rationals:
            return ring.from_rational(
                Rational(BigInt(rng.int_in(-height, height)), BigInt(rng.int_in(1, height))));
        case RingDescriptor::Kind::integers_mod:
        case RingDescriptor::Kind::prime_field: {
            int64_t n = *ring.modulus().to_int64();
            return ring.from_int(rng.int_in(0, n - 1));
        }
        case RingDescriptor::Kind::cyclotomic_field: {
            RingElement acc = ring.zero();
            RingElement z = ring.zeta();
            unsigned deg = euler_phi(ring.conductor());
            for (unsigned i = 0; i < deg; ++i)
                acc = ring.add(acc, ring.mul(ring.from_int(rng.int_in(-height, height)),
                                             ring.pow(z, i)));
            return acc;
        }
        case RingDescriptor::Kind::fraction_field: {
            RingElement num = random_element(ring.base(), rng, height);
            RingElement den = ring.base().zero();
            while (ring.base().is_zero(den)) den = random_element(ring.base(), rng, height);
            return ring.make_fraction(num, den);
        }
    }
    throw std::logic_error("unreachable");
}

inline RingElement random_nonzero(const RingDescriptor& ring, Rng& rng, int64_t height = 9) {
    RingElement v = ring.zero();
    while (ring.is_zero(v)) v = random_element(ring, rng, height);
    return v;
}

inline TruncatedWittVector random_witt(const RingDescriptor& ring, unsigned depth, Rng& rng,
                                       int64_t height = 9) {
    TruncatedWittVector u(ring, depth);
    for (auto& a : u.tail) a = random_element(ring, rng, height);
    return u;
}

// random polynomial with constant term 1
inline Polynomial random_monic_at_zero(const RingDescriptor& ring, unsigned max_degree, Rng& rng,
                                       int64_t height = 5) {
    std::vector<RingElement> c{ring.one()};
    unsigned deg = static_cast<unsigned>(rng.int_in(0, max_degree));
    for (unsigned i = 0; i < deg; ++i) c.push_back(ring.from_int(rng.int_in(-height, height)));
    return Polynomial(ring, std::move(c));
}

inline RationalWittVector random_wrat(const RingDescriptor& ring, unsigned max_degree, Rng& rng,
                                      int64_t height = 4) {
    return wr_normalize(random_monic_at_zero(ring, max_degree, rng, height),
                        random_monic_at_zero(ring, max_degree, rng, height));
}

inline GroupRingElement random_group_ring(const FgAbelianGroup& g, Rng& rng,
                                          unsigned max_terms = 5, int64_t exp_range = 4,
                                          int64_t coeff_height = 9) {
    GroupRingElement x(g);
    unsigned terms = static_cast<unsigned>(rng.int_in(0, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        FgAbelianGroup::Element m(g.coords());
        for (auto& e : m) e = rng.int_in(-exp_range, exp_range);
        int64_t c = rng.int_in(-coeff_height, coeff_height);
        x.add_term(m, BigInt(c));
    }
    return x;
}

}  // namespace wittlab
