#pragma once

// Group cohomology of finite abelian groups with finitely generated
// coefficient modules, computed from the inhomogeneous bar resolution by
// integer linear algebra: cocycle lattices, coboundary sublattices, and the
// quotient's invariant factors via Smith normal form, together with explicit
// representative cocycles, cup products of degree-1 classes, and coboundary
// membership tests.

#include <cstdint>
#include <vector>

#include "wittlab/dualtop.hpp"
#include "wittlab/fgabelian.hpp"
#include "wittlab/intmat.hpp"

namespace wittlab {

// coefficient module: A with one integer action matrix per generator of G
struct GModule {
    FgAbelianGroup group;   // finite G, invariant factors k_1 | ... | k_t
    FgAbelianGroup module;  // A
    std::vector<IntegerMatrix> action;

    static constexpr int64_t kGroupOrderCap = 64;

    GModule(FgAbelianGroup g, FgAbelianGroup a, std::vector<IntegerMatrix> act)
        : group(std::move(g)), module(std::move(a)), action(std::move(act)) {
        if (!group.is_finite())
            throw DomainError("infinite-group", "cohomology group must be finite");
        if (group.order() > BigInt(kGroupOrderCap))
            throw DomainError("too-large", "cohomology group order capped at 64");
        if (action.size() != group.torsion.size())
            throw DomainError("bad-action", "one action matrix per group generator required");
        const size_t m = module.coords();
        for (const auto& M : action) {
            if (M.rows != m || M.cols != m)
                throw DomainError("bad-action", "action matrix has wrong shape");
            if (!is_endomorphism(M))
                throw DomainError("bad-action", "action matrix does not respect torsion");
        }
        for (size_t i = 0; i < action.size(); ++i)
            for (size_t j = i + 1; j < action.size(); ++j)
                if (!congruent(mat_mul(action[i], action[j]), mat_mul(action[j], action[i])))
                    throw DomainError("bad-action", "action matrices do not commute");
        for (size_t i = 0; i < action.size(); ++i) {
            IntegerMatrix p = IntegerMatrix::identity(m);
            for (int64_t e = 0; e < group.torsion[i]; ++e) p = mat_mul(p, action[i]);
            if (!congruent(p, IntegerMatrix::identity(m)))
                throw DomainError("bad-action", "action matrix order does not divide the factor");
        }
    }

    static GModule trivial(FgAbelianGroup g, FgAbelianGroup a) {
        std::vector<IntegerMatrix> act(g.torsion.size(),
                                       IntegerMatrix::identity(a.coords()));
        return GModule(std::move(g), std::move(a), std::move(act));
    }

    // annihilator of module coordinate c: invariant factor, or 0 when free
    int64_t coordinate_order(size_t c) const {
        return c < module.rank ? 0 : module.torsion[c - module.rank];
    }

    bool is_endomorphism(const IntegerMatrix& M) const {
        for (size_t j = 0; j < module.coords(); ++j) {
            int64_t dj = coordinate_order(j);
            if (dj == 0) continue;
            for (size_t i = 0; i < module.coords(); ++i) {
                BigInt v = BigInt(dj) * M.at(i, j);
                int64_t di = coordinate_order(i);
                if (di == 0 ? !v.is_zero() : !v.divisible_by(BigInt(di))) return false;
            }
        }
        return true;
    }

    // equality as endomorphisms of A (entries congruent mod the row's order)
    bool congruent(const IntegerMatrix& X, const IntegerMatrix& Y) const {
        for (size_t i = 0; i < X.rows; ++i) {
            int64_t di = coordinate_order(i);
            for (size_t j = 0; j < X.cols; ++j) {
                BigInt v = X.at(i, j) - Y.at(i, j);
                if (di == 0 ? !v.is_zero() : !v.divisible_by(BigInt(di))) return false;
            }
        }
        return true;
    }

    size_t group_order() const {
        auto n = group.order().to_int64();
        if (!n) throw DomainError("too-large", "group order exceeds 64 bits");
        return static_cast<size_t>(*n);
    }

    // group elements in mixed-radix order; element of index i
    FgAbelianGroup::Element group_element(size_t index) const {
        FgAbelianGroup::Element e(group.torsion.size(), 0);
        for (size_t t = 0; t < group.torsion.size(); ++t) {
            e[t] = static_cast<int64_t>(index % group.torsion[t]);
            index /= group.torsion[t];
        }
        return e;
    }

    size_t element_index(const FgAbelianGroup::Element& e) const {
        size_t idx = 0;
        for (size_t t = group.torsion.size(); t-- > 0;)
            idx = idx * group.torsion[t] + static_cast<size_t>(e[t]);
        return idx;
    }

    // reduced action matrix of an arbitrary group element
    IntegerMatrix element_action(const FgAbelianGroup::Element& e) const {
        IntegerMatrix p = IntegerMatrix::identity(module.coords());
        for (size_t t = 0; t < action.size(); ++t)
            for (int64_t i = 0; i < e[t]; ++i) p = mat_mul(p, action[t]);
        for (size_t i = 0; i < p.rows; ++i) {
            int64_t di = coordinate_order(i);
            if (di == 0) continue;
            for (size_t j = 0; j < p.cols; ++j) p.at(i, j) = p.at(i, j).mod_euclid(BigInt(di));
        }
        return p;
    }
};

// explicit cochain data: a full value table indexed by p-tuples of group
// elements (mixed-radix tuple index)
struct Cocycle {
    unsigned degree = 1;
    FgAbelianGroup group;
    FgAbelianGroup module;
    std::vector<IntegerMatrix> action;
    std::vector<FgAbelianGroup::Element> values;  // |G|^degree entries
    bool is_cocycle = false;
};

namespace detail {

constexpr size_t kCohomologyEntryGuard = 3u << 21;  // ~6M matrix entries

struct BarComplex {
    const GModule& mod;
    size_t order;                             // |G|
    std::vector<IntegerMatrix> actions;       // per group element
    std::vector<FgAbelianGroup::Element> elems;

    explicit BarComplex(const GModule& m) : mod(m), order(m.group_order()) {
        for (size_t i = 0; i < order; ++i) {
            elems.push_back(mod.group_element(i));
            actions.push_back(mod.element_action(elems.back()));
        }
    }

    size_t tuples(unsigned p) const {
        size_t n = 1;
        for (unsigned i = 0; i < p; ++i) n *= order;
        return n;
    }

    size_t dim(unsigned p) const { return tuples(p) * mod.module.coords(); }

    // inhomogeneous bar differential C^p -> C^(p+1)
    IntegerMatrix differential(unsigned p) const {
        const size_t m = mod.module.coords();
        const size_t rows = dim(p + 1), cols = dim(p);
        if (rows * cols > kCohomologyEntryGuard)
            throw DomainError("too-large", "cohomology instance exceeds configured size cap");
        IntegerMatrix D(rows, cols);
        std::vector<size_t> g(p + 1);
        for (size_t tau = 0; tau < tuples(p + 1); ++tau) {
            size_t rest = tau;
            for (unsigned i = 0; i <= p; ++i) {
                g[i] = rest % order;
                rest /= order;
            }
            // f(g_2..g_(p+1)) acted on by g_1
            {
                size_t src = 0;
                for (unsigned i = p; i >= 1; --i) src = src * order + g[i];
                const IntegerMatrix& act = actions[g[0]];
                for (size_t r = 0; r < m; ++r)
                    for (size_t c = 0; c < m; ++c)
                        if (!act.at(r, c).is_zero())
                            D.at(tau * m + r, src * m + c) += act.at(r, c);
            }
            // alternating face maps merging g_i g_(i+1)
            int sign = -1;
            for (unsigned i = 0; i < p; ++i) {
                size_t merged = mod.element_index(
                    mod.group.add(elems[g[i]], elems[g[i + 1]]));
                size_t src = 0;
                for (unsigned k = p + 1; k-- > 0;) {
                    if (k == i + 1) continue;
                    size_t gk = k == i ? merged : g[k];
                    src = src * order + gk;
                }
                for (size_t r = 0; r < m; ++r)
                    D.at(tau * m + r, src * m + r) += BigInt(sign);
                sign = -sign;
            }
            // last face drops g_(p+1)
            {
                size_t src = 0;
                for (unsigned k = p; k-- > 0;) src = src * order + g[k];
                for (size_t r = 0; r < m; ++r)
                    D.at(tau * m + r, src * m + r) += BigInt(sign);
            }
        }
        return D;
    }

    // torsion order of each cochain coordinate
    std::vector<int64_t> coordinate_orders(unsigned p) const {
        const size_t m = mod.module.coords();
        std::vector<int64_t> r(dim(p));
        for (size_t t = 0; t < tuples(p); ++t)
            for (size_t c = 0; c < m; ++c) r[t * m + c] = mod.coordinate_order(c);
        return r;
    }
};

// basis of the lattice generated by the columns of G
inline IntegerMatrix lattice_basis_from_generators(const IntegerMatrix& G) {
    if (G.cols == 0) return IntegerMatrix(G.rows, 0);
    SmithDecomposition s = smith_normal_form(G);
    IntegerMatrix uinv = mat_inverse_unimodular(s.U);
    size_t rank = s.rank();
    IntegerMatrix B(G.rows, rank);
    for (size_t j = 0; j < rank; ++j)
        for (size_t i = 0; i < G.rows; ++i) B.at(i, j) = uinv.at(i, j) * s.D.at(j, j);
    return B;
}

// lattice of x with D x congruent to 0 modulo the coordinate orders r
inline IntegerMatrix cocycle_lattice(const IntegerMatrix& D, const std::vector<int64_t>& r) {
    bool all_free = true, uniform = true;
    int64_t n = 0;
    for (int64_t v : r) {
        if (v != 0) all_free = false;
        if (n == 0)
            n = v;
        else if (v != 0 && v != n)
            uniform = false;
    }
    if (all_free) return kernel_basis(D);
    if (uniform && n > 0) {
        bool mixed = false;
        for (int64_t v : r)
            if (v == 0) mixed = true;
        if (!mixed) {
            // D x = 0 mod n: with U D V = S diagonal, x = V diag(n/gcd(s_j,n)) y
            SmithDecomposition s = smith_normal_form(D);
            IntegerMatrix B(D.cols, D.cols);
            for (size_t j = 0; j < D.cols; ++j) {
                BigInt sj = j < std::min(D.rows, D.cols) ? s.D.at(j, j) : BigInt(0);
                BigInt mj = BigInt(n).divide_exact(BigInt::gcd(sj, BigInt(n)));
                for (size_t i = 0; i < D.cols; ++i) B.at(i, j) = s.V.at(i, j) * mj;
            }
            return B;
        }
    }
    // general case: kernel of [D | relation columns], projected to the x block
    std::vector<size_t> rel_cols;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) rel_cols.push_back(i);
    IntegerMatrix stacked(D.rows, D.cols + rel_cols.size());
    for (size_t i = 0; i < D.rows; ++i)
        for (size_t j = 0; j < D.cols; ++j) stacked.at(i, j) = D.at(i, j);
    for (size_t k = 0; k < rel_cols.size(); ++k)
        stacked.at(rel_cols[k], D.cols + k) = BigInt(r[rel_cols[k]]);
    IntegerMatrix K = kernel_basis(stacked);
    IntegerMatrix proj(D.cols, K.cols);
    for (size_t i = 0; i < D.cols; ++i)
        for (size_t j = 0; j < K.cols; ++j) proj.at(i, j) = K.at(i, j);
    return lattice_basis_from_generators(proj);
}

}  // namespace detail

struct CohomologyResult {
    FgAbelianGroup invariants;            // H^p as an abstract group
    std::vector<Cocycle> representatives;  // one per nontrivial generator
};

// exact d(d(.)) = 0 check for the bar complex at degree p, modulo the
// coordinate torsion of C^(p+2)
inline bool bar_dd_is_zero(const GModule& mod, unsigned p) {
    detail::BarComplex bar(mod);
    IntegerMatrix dd = mat_mul(bar.differential(p + 1), bar.differential(p));
    auto orders = bar.coordinate_orders(p + 2);
    for (size_t i = 0; i < dd.rows; ++i)
        for (size_t j = 0; j < dd.cols; ++j) {
            if (orders[i] == 0 ? !dd.at(i, j).is_zero()
                               : !dd.at(i, j).divisible_by(BigInt(orders[i])))
                return false;
        }
    return true;
}

// H^p(G, A) with explicit representative cocycles for each generator
inline CohomologyResult group_cohomology(const GModule& mod, unsigned degree) {
    if (degree > 3) throw DomainError("bad-degree", "cohomology supported in degrees 0..3");
    detail::BarComplex bar(mod);
    const size_t dim_p = bar.dim(degree);
    IntegerMatrix D = bar.differential(degree);
    IntegerMatrix Zb = detail::cocycle_lattice(D, bar.coordinate_orders(degree + 1));
    // boundary generators: d(C^(p-1)) columns plus the torsion relations of C^p
    std::vector<std::vector<BigInt>> boundary_cols;
    if (degree > 0) {
        IntegerMatrix Dprev = bar.differential(degree - 1);
        for (size_t j = 0; j < Dprev.cols; ++j) {
            std::vector<BigInt> col(dim_p);
            for (size_t i = 0; i < dim_p; ++i) col[i] = Dprev.at(i, j);
            boundary_cols.push_back(std::move(col));
        }
    }
    auto orders = bar.coordinate_orders(degree);
    for (size_t i = 0; i < dim_p; ++i) {
        if (orders[i] == 0) continue;
        std::vector<BigInt> col(dim_p);
        col[i] = BigInt(orders[i]);
        boundary_cols.push_back(std::move(col));
    }
    // express every boundary generator in the cocycle basis
    IntegerMatrix rel(Zb.cols, boundary_cols.size());
    for (size_t j = 0; j < boundary_cols.size(); ++j) {
        auto c = solve_integer(Zb, boundary_cols[j]);
        if (!c) throw std::logic_error("boundary is not a cocycle");
        for (size_t i = 0; i < Zb.cols; ++i) rel.at(i, j) = (*c)[i];
    }
    SmithDecomposition s = smith_normal_form(rel);
    auto diag = s.diagonal();
    diag.resize(Zb.cols, BigInt(0));
    std::vector<int64_t> factors;
    unsigned free_rank = 0;
    std::vector<size_t> generator_indices;
    for (size_t i = 0; i < Zb.cols; ++i) {
        if (diag[i].is_one()) continue;
        if (diag[i].is_zero()) {
            ++free_rank;
            generator_indices.push_back(i);
        } else {
            auto v = diag[i].to_int64();
            if (!v) throw DomainError("overflow", "invariant factor exceeds 64 bits");
            factors.push_back(*v);
            generator_indices.push_back(i);
        }
    }
    std::sort(factors.begin(), factors.end());
    CohomologyResult result;
    result.invariants = FgAbelianGroup(free_rank, factors);
    const size_t m = mod.module.coords();
    for (size_t gi : generator_indices) {
        // generator in cocycle coordinates: the c with U c = e_gi
        std::vector<BigInt> unit(Zb.cols, BigInt(0));
        unit[gi] = BigInt(1);
        auto coeffs = solve_integer(s.U, unit);
        if (!coeffs) throw std::logic_error("unimodular solve failed");
        std::vector<BigInt> flat(dim_p, BigInt(0));
        for (size_t i = 0; i < dim_p; ++i)
            for (size_t k = 0; k < Zb.cols; ++k)
                if (!Zb.at(i, k).is_zero() && !(*coeffs)[k].is_zero())
                    flat[i] += Zb.at(i, k) * (*coeffs)[k];
        Cocycle c;
        c.degree = degree;
        c.group = mod.group;
        c.module = mod.module;
        c.action = mod.action;
        c.values.resize(bar.tuples(degree));
        for (size_t t = 0; t < c.values.size(); ++t) {
            FgAbelianGroup::Element e(m, 0);
            for (size_t k = 0; k < m; ++k) {
                auto v = flat[t * m + k].to_int64();
                if (!v) throw DomainError("overflow", "cocycle value exceeds 64 bits");
                e[k] = *v;
            }
            c.values[t] = mod.module.normalize(std::move(e));
        }
        c.is_cocycle = true;
        result.representatives.push_back(std::move(c));
    }
    return result;
}

// evaluate the bar differential on an explicit cochain table
inline std::vector<FgAbelianGroup::Element> bar_differential_values(const GModule& mod,
                                                                    const Cocycle& f) {
    detail::BarComplex bar(mod);
    const unsigned p = f.degree;
    std::vector<FgAbelianGroup::Element> out(bar.tuples(p + 1));
    std::vector<size_t> g(p + 1);
    for (size_t tau = 0; tau < out.size(); ++tau) {
        size_t rest = tau;
        for (unsigned i = 0; i <= p; ++i) {
            g[i] = rest % bar.order;
            rest /= bar.order;
        }
        auto index_without = [&](unsigned skip, size_t merged, unsigned merge_pos) {
            size_t src = 0;
            for (unsigned k = p + 1; k-- > 0;) {
                if (k == skip) continue;
                src = src * bar.order + (k == merge_pos ? merged : g[k]);
            }
            return src;
        };
        FgAbelianGroup::Element acc(mod.module.coords(), 0);
        // g_1 . f(g_2..)
        {
            size_t src = index_without(0, 0, p + 2);
            const IntegerMatrix& act = bar.actions[g[0]];
            const auto& v = f.values[src];
            for (size_t r = 0; r < acc.size(); ++r)
                for (size_t c = 0; c < acc.size(); ++c)
                    acc[r] += (act.at(r, c) * BigInt(v[c])).to_int64().value();
        }
        int sign = -1;
        for (unsigned i = 0; i < p; ++i) {
            size_t merged = mod.element_index(mod.group.add(bar.elems[g[i]], bar.elems[g[i + 1]]));
            const auto& v = f.values[index_without(i + 1, merged, i)];
            for (size_t r = 0; r < acc.size(); ++r) acc[r] += sign * v[r];
            sign = -sign;
        }
        {
            size_t src = 0;
            for (unsigned k = p; k-- > 0;) src = src * bar.order + g[k];
            const auto& v = f.values[src];
            for (size_t r = 0; r < acc.size(); ++r) acc[r] += sign * v[r];
        }
        out[tau] = mod.module.normalize(std::move(acc));
    }
    return out;
}

inline bool is_cocycle_table(const GModule& mod, const Cocycle& f) {
    for (const auto& v : bar_differential_values(mod, f))
        for (int64_t x : v)
            if (x != 0) return false;
    return true;
}

// does the cochain bound, i.e. lie in d(C^(p-1)) + torsion relations?
inline bool is_coboundary(const GModule& mod, const Cocycle& f) {
    detail::BarComplex bar(mod);
    const unsigned p = f.degree;
    if (p == 0) throw DomainError("bad-degree", "no coboundaries in degree 0");
    IntegerMatrix Dprev = bar.differential(p - 1);
    auto orders = bar.coordinate_orders(p);
    std::vector<size_t> rel;
    for (size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0) rel.push_back(i);
    IntegerMatrix M(bar.dim(p), Dprev.cols + rel.size());
    for (size_t i = 0; i < Dprev.rows; ++i)
        for (size_t j = 0; j < Dprev.cols; ++j) M.at(i, j) = Dprev.at(i, j);
    for (size_t k = 0; k < rel.size(); ++k) M.at(rel[k], Dprev.cols + k) = BigInt(orders[rel[k]]);
    const size_t m = mod.module.coords();
    std::vector<BigInt> b(bar.dim(p));
    for (size_t t = 0; t < f.values.size(); ++t)
        for (size_t c = 0; c < m; ++c) b[t * m + c] = BigInt(f.values[t][c]);
    return solve_integer(M, b).has_value();
}

// bilinear pairing A x B -> C on coordinates, as one matrix per target coord
struct BilinearPairing {
    FgAbelianGroup left, right, target;
    std::vector<IntegerMatrix> tensor;

    FgAbelianGroup::Element apply(const FgAbelianGroup::Element& a,
                                  const FgAbelianGroup::Element& b) const {
        FgAbelianGroup::Element out(target.coords(), 0);
        for (size_t c = 0; c < out.size(); ++c)
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j)
                    out[c] +=
                        (tensor[c].at(i, j) * BigInt(a[i]) * BigInt(b[j])).to_int64().value();
        return target.normalize(std::move(out));
    }

    static BilinearPairing multiplication_mod(int64_t n) {
        FgAbelianGroup zn(0, {n});
        IntegerMatrix t(1, 1);
        t.at(0, 0) = BigInt(1);
        return BilinearPairing{zn, zn, zn, {t}};
    }
};

// cochain-level cup product of two degree-1 cochains:
// (u cup v)(g, h) = pairing(u(g), g . v(h))
inline Cocycle cup_product(const GModule& left_mod, const Cocycle& u, const GModule& right_mod,
                           const Cocycle& v, const BilinearPairing& pairing,
                           const GModule& target_mod) {
    if (u.degree != 1 || v.degree != 1)
        throw DomainError("bad-degree", "cup product implemented for degree-1 cochains");
    if (u.group != v.group || left_mod.group != u.group || right_mod.group != v.group)
        throw DomainError("group-mismatch", "cup product over one group");
    if (pairing.left != u.module || pairing.right != v.module)
        throw DomainError("module-mismatch", "pairing does not match the cochain modules");
    detail::BarComplex bar(right_mod);
    const size_t n = bar.order;
    Cocycle w;
    w.degree = 2;
    w.group = u.group;
    w.module = pairing.target;
    w.action = target_mod.action;
    w.values.resize(n * n);
    for (size_t gi = 0; gi < n; ++gi)
        for (size_t hi = 0; hi < n; ++hi) {
            const IntegerMatrix& act = bar.actions[gi];
            const auto& vh = v.values[hi];
            FgAbelianGroup::Element moved(vh.size(), 0);
            for (size_t r = 0; r < vh.size(); ++r)
                for (size_t c = 0; c < vh.size(); ++c)
                    moved[r] += (act.at(r, c) * BigInt(vh[c])).to_int64().value();
            moved = right_mod.module.normalize(std::move(moved));
            w.values[hi * n + gi] = pairing.apply(u.values[gi], moved);
        }
    w.is_cocycle = is_cocycle_table(target_mod, w);
    return w;
}

}  // namespace wittlab
