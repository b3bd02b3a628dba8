#pragma once

// Finitely generated abelian groups in invariant-factor presentation, with
// element arithmetic on integer coordinate vectors (free coordinates first,
// then one coordinate per torsion factor, reduced mod its invariant factor).

#include <cstdint>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/ring.hpp"

namespace wittlab {

struct FgAbelianGroup {
    unsigned rank = 0;
    std::vector<int64_t> torsion;  // invariant factors d_1 | d_2 | ..., each >= 2

    FgAbelianGroup() = default;
    FgAbelianGroup(unsigned r, std::vector<int64_t> t) : rank(r), torsion(std::move(t)) {
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2)
                throw DomainError("bad-invariant-factor", "invariant factors must be >= 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw DomainError("bad-divisibility-chain",
                                  "invariant factors must form a divisibility chain");
        }
    }

    size_t coords() const { return rank + torsion.size(); }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }

    BigInt order() const {
        if (rank > 0) throw DomainError("infinite-group", "group has free rank");
        BigInt n(1);
        for (int64_t d : torsion) n *= BigInt(d);
        return n;
    }

    friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const FgAbelianGroup& a, const FgAbelianGroup& b) { return !(a == b); }

    using Element = std::vector<int64_t>;

    Element zero_element() const { return Element(coords(), 0); }

    Element normalize(Element e) const {
        if (e.size() != coords())
            throw DomainError("bad-element", "element coordinate count mismatch");
        for (size_t i = 0; i < torsion.size(); ++i) {
            int64_t d = torsion[i];
            int64_t& x = e[rank + i];
            x %= d;
            if (x < 0) x += d;
        }
        return e;
    }

    Element add(const Element& a, const Element& b) const {
        Element r(coords());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return normalize(std::move(r));
    }

    Element scale(int64_t k, const Element& a) const {
        Element r(coords());
        for (size_t i = 0; i < r.size(); ++i) r[i] = k * a[i];
        return normalize(std::move(r));
    }

    Element negate(const Element& a) const { return scale(-1, a); }
};

}  // namespace wittlab
