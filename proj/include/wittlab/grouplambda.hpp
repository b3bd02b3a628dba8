#pragma once

// Integer group rings of finitely generated abelian groups, the commuting
// Frobenius lifts [m] |-> [p m] (additive notation), the mod-p Frobenius
// congruence, and the multiplicative bridge into rational Witt vectors that
// sends sum c_m [m] to prod (1 - eval(m) t)^(c_m).

#include <cstdint>
#include <map>
#include <vector>

#include "wittlab/fgabelian.hpp"
#include "wittlab/wittrat.hpp"

namespace wittlab {

struct GroupRingElement {
    FgAbelianGroup group;
    std::map<FgAbelianGroup::Element, BigInt> terms;  // no zero coefficients

    explicit GroupRingElement(FgAbelianGroup g) : group(std::move(g)) {}

    static GroupRingElement zero(const FgAbelianGroup& g) { return GroupRingElement(g); }

    static GroupRingElement basis(const FgAbelianGroup& g, const FgAbelianGroup::Element& m,
                                  BigInt coeff = BigInt(1)) {
        GroupRingElement x(g);
        x.add_term(m, coeff);
        return x;
    }

    static GroupRingElement one(const FgAbelianGroup& g) {
        return basis(g, g.zero_element());
    }

    void add_term(const FgAbelianGroup::Element& m, const BigInt& c) {
        if (c.is_zero()) return;
        auto key = group.normalize(m);
        auto [it, inserted] = terms.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.group == b.group && a.terms == b.terms;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
        return !(a == b);
    }
};

inline void gr_check(const GroupRingElement& x, const GroupRingElement& y) {
    if (x.group != y.group)
        throw DomainError("group-mismatch", "group ring elements over different groups");
}

inline GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
    gr_check(x, y);
    GroupRingElement r = x;
    for (const auto& [m, c] : y.terms) r.add_term(m, c);
    return r;
}

inline GroupRingElement gr_neg(const GroupRingElement& x) {
    GroupRingElement r(x.group);
    for (const auto& [m, c] : x.terms) r.terms.emplace(m, -c);
    return r;
}

inline GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y) {
    return gr_add(x, gr_neg(y));
}

// convolution: [m][m'] = [m+m']
inline GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
    gr_check(x, y);
    GroupRingElement r(x.group);
    for (const auto& [m1, c1] : x.terms)
        for (const auto& [m2, c2] : y.terms) r.add_term(x.group.add(m1, m2), c1 * c2);
    return r;
}

inline GroupRingElement gr_pow(const GroupRingElement& x, uint64_t e) {
    GroupRingElement acc = GroupRingElement::one(x.group);
    GroupRingElement base = x;
    while (e) {
        if (e & 1) acc = gr_mul(acc, base);
        base = gr_mul(base, base);
        e >>= 1;
    }
    return acc;
}

// Frobenius lift phi_p: [m] |-> [p m], extended linearly; a ring endomorphism
inline GroupRingElement gr_frobenius_lift(int64_t p, const GroupRingElement& x) {
    if (!is_prime(BigInt(p))) throw DomainError("not-prime", "Frobenius lift needs a prime");
    GroupRingElement r(x.group);
    for (const auto& [m, c] : x.terms) r.add_term(x.group.scale(p, m), c);
    return r;
}

// x^p - phi_p(x); every coefficient is divisible by p (the Lambda-structure
// Frobenius congruence), which is verified before returning
inline GroupRingElement frobenius_congruence_check(int64_t p, const GroupRingElement& x) {
    GroupRingElement d = gr_sub(gr_pow(x, static_cast<uint64_t>(p)), gr_frobenius_lift(p, x));
    for (const auto& [m, c] : d.terms)
        if (!c.divisible_by(BigInt(p)))
            throw std::logic_error("Frobenius congruence violated in group ring");
    return d;
}

inline bool lambda_commute_check(int64_t p, int64_t q, const GroupRingElement& x) {
    return gr_frobenius_lift(p, gr_frobenius_lift(q, x)) ==
           gr_frobenius_lift(q, gr_frobenius_lift(p, x));
}

// Evaluation data for the Witt bridge: one unit of the target ring per free
// generator, and per torsion generator of order d an element whose d-th power
// is 1 (verified eagerly).
struct WittAssignment {
    FgAbelianGroup group;
    RingDescriptor ring;
    std::vector<RingElement> images;  // one per generator

    WittAssignment(FgAbelianGroup g, RingDescriptor r, std::vector<RingElement> imgs)
        : group(std::move(g)), ring(std::move(r)), images(std::move(imgs)) {
        if (images.size() != group.coords())
            throw DomainError("bad-assignment", "one image per generator required");
        for (size_t i = 0; i < images.size(); ++i) {
            if (!ring.is_unit(images[i]))
                throw DomainError("not-a-unit", "assignment images must be units");
            if (i >= group.rank) {
                int64_t d = group.torsion[i - group.rank];
                if (!ring.is_one(ring.pow(images[i], d)))
                    throw DomainError("torsion-incompatible",
                                      "torsion image order does not divide the invariant factor");
            }
        }
    }

    RingElement eval(const FgAbelianGroup::Element& m) const {
        RingElement acc = ring.one();
        for (size_t i = 0; i < images.size(); ++i)
            if (m[i] != 0) acc = ring.mul(acc, ring.pow(images[i], m[i]));
        return acc;
    }
};

// ring homomorphism (Z[M], +, .) -> (W_rat, (+), (.)):
// sum c_m [m] |-> prod (1 - eval(m) t)^(c_m)
inline RationalWittVector to_witt(const GroupRingElement& x, const WittAssignment& asg) {
    if (x.group != asg.group)
        throw DomainError("group-mismatch", "assignment built for a different group");
    const RingDescriptor& R = asg.ring;
    detail::require_exact_wr_ring(R, "to_witt");
    Polynomial num = Polynomial::constant(R, R.one());
    Polynomial den = num;
    for (const auto& [m, c] : x.terms) {
        auto k = c.to_int64();
        if (!k) throw DomainError("coefficient-too-large", "group ring coefficient exceeds 64 bits");
        Polynomial factor(R, {R.one(), R.neg(asg.eval(m))});
        Polynomial& target = *k > 0 ? num : den;
        uint64_t e = *k > 0 ? static_cast<uint64_t>(*k) : static_cast<uint64_t>(-(*k + 1)) + 1;
        Polynomial base = factor;
        while (e) {
            if (e & 1) target = target * base;
            base = base * base;
            e >>= 1;
        }
    }
    return wr_normalize(std::move(num), std::move(den));
}

// to_witt intertwines phi_p with the Witt Frobenius F_p
inline bool frobenius_compat_check(int64_t p, const GroupRingElement& x,
                                   const WittAssignment& asg) {
    return wr_equal(to_witt(gr_frobenius_lift(p, x), asg),
                    wr_frobenius(static_cast<unsigned>(p), to_witt(x, asg)));
}

}  // namespace wittlab
