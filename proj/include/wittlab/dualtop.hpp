#pragma once

// The finitely generated abelian side of Pontryagin duality: Hom and Ext into
// Z from a presentation, path-component and component groups of duals and
// group-algebra spectra, connected finite covers as overlattices
// Z^r <= N <= (1/n) Z^r in canonical Hermite form, deck groups with explicit
// transition surjections, and finite solenoid stages.

#include <cstdint>
#include <optional>
#include <vector>

#include "wittlab/fgabelian.hpp"
#include "wittlab/intmat.hpp"

namespace wittlab {

// M as the cokernel of an integer matrix: Z^rows / im(A)
inline FgAbelianGroup group_from_cokernel(const IntegerMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    std::vector<int64_t> factors = s.invariant_factors();
    unsigned free_rank = static_cast<unsigned>(A.rows - s.rank());
    return FgAbelianGroup(free_rank, std::move(factors));
}

// relations matrix of M: columns d_j e_(rank+j) inside Z^(rank+k)
inline IntegerMatrix presentation_matrix(const FgAbelianGroup& M) {
    IntegerMatrix R(M.coords(), M.torsion.size());
    for (size_t j = 0; j < M.torsion.size(); ++j) R.at(M.rank + j, j) = BigInt(M.torsion[j]);
    return R;
}

// Ext(M, Z): cokernel of the transposed presentation; isomorphic to the
// torsion part of M
inline FgAbelianGroup ext_to_Z(const FgAbelianGroup& M) {
    if (M.torsion.empty()) return FgAbelianGroup();
    return group_from_cokernel(presentation_matrix(M).transpose());
}

// Hom(M, Z): free of the same rank as M
inline FgAbelianGroup hom_to_Z(const FgAbelianGroup& M) {
    IntegerMatrix K = kernel_basis(presentation_matrix(M).transpose());
    return FgAbelianGroup(static_cast<unsigned>(K.cols), {});
}

// path components of the Pontryagin dual M^v, via the connecting isomorphism
// onto Ext(M, Z)
inline FgAbelianGroup pi0_path_dual(const FgAbelianGroup& M) { return ext_to_Z(M); }

// component group of Spec C[M]: the dual of the torsion part, reported by its
// invariant factors (finite abelian groups are self-dual)
inline FgAbelianGroup pi0_spec_group_algebra(const FgAbelianGroup& M) {
    FgAbelianGroup whole = group_from_cokernel(presentation_matrix(M));
    return FgAbelianGroup(0, whole.torsion);
}

// Overlattice Z^r <= N <= (1/n) Z^r of index n, stored through the integer
// matrix H = n * basis in column Hermite form (upper triangular, positive
// diagonal, rows reduced to the right of the diagonal); det H = n^(r-1).
struct Overlattice {
    unsigned rank = 1;
    int64_t index = 1;
    IntegerMatrix scaled_basis;  // H = index * basis

    bool operator==(const Overlattice& o) const {
        return rank == o.rank && index == o.index && scaled_basis == o.scaled_basis;
    }
};

namespace detail {

inline void enumerate_hnf(unsigned r, int64_t det, std::vector<IntegerMatrix>& out) {
    // upper-triangular H with prod diag = det and 0 <= h_ij < h_ii for j > i:
    // recursive diagonal factorization, then mixed-radix off-diagonal digits
    struct Rec {
        unsigned r;
        std::vector<IntegerMatrix>& out;
        std::vector<int64_t> diag;
        Rec(unsigned r, std::vector<IntegerMatrix>& out) : r(r), out(out), diag(r, 1) {}
        void diag_at(unsigned pos, int64_t remaining) {
            if (pos == r) {
                if (remaining == 1) fill_offdiag();
                return;
            }
            for (int64_t d = 1; d <= remaining; ++d) {
                if (remaining % d) continue;
                diag[pos] = d;
                diag_at(pos + 1, remaining / d);
            }
        }
        void fill_offdiag() {
            // mixed-radix enumeration of entries h_ij in [0, h_ii), i < j
            std::vector<std::pair<unsigned, unsigned>> slots;
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = i + 1; j < r; ++j)
                    if (diag[i] > 1) slots.emplace_back(i, j);
            std::vector<int64_t> digits(slots.size(), 0);
            while (true) {
                IntegerMatrix H(r, r);
                for (unsigned i = 0; i < r; ++i) H.at(i, i) = BigInt(diag[i]);
                for (size_t s = 0; s < slots.size(); ++s)
                    H.at(slots[s].first, slots[s].second) = BigInt(digits[s]);
                out.push_back(std::move(H));
                size_t s = 0;
                while (s < slots.size()) {
                    if (++digits[s] < diag[slots[s].first]) break;
                    digits[s] = 0;
                    ++s;
                }
                if (s == slots.size()) break;
            }
        }
    } rec(r, out);
    rec.diag_at(0, det);
}

inline int64_t ipow(int64_t base, unsigned e) {
    int64_t acc = 1;
    while (e--) acc *= base;
    return acc;
}

}  // namespace detail

// every N with Z^r <= N <= (1/n) Z^r and [N : Z^r] = n, each once, in
// deterministic order of canonical forms
inline std::vector<Overlattice> enumerate_overlattices(unsigned r, int64_t n) {
    if (r < 1 || n < 1) throw DomainError("bad-arguments", "need rank >= 1 and index >= 1");
    std::vector<IntegerMatrix> hnfs;
    detail::enumerate_hnf(r, detail::ipow(n, r - 1), hnfs);
    std::vector<Overlattice> out;
    for (auto& H : hnfs) {
        // N = (1/n) L contains Z^r iff every invariant factor of H divides n
        SmithDecomposition s = smith_normal_form(H);
        bool ok = true;
        for (const auto& d : s.diagonal())
            if (!BigInt(n).divisible_by(d)) ok = false;
        if (!ok) continue;
        out.push_back(Overlattice{r, n, std::move(H)});
    }
    return out;
}

// relation matrix of N/Z^r in the basis of N: C = n * H^(-1)
inline IntegerMatrix overlattice_quotient_relations(const Overlattice& N) {
    auto inv = mat_inverse_rational(N.scaled_basis);
    if (!inv) throw std::logic_error("overlattice basis is singular");
    IntegerMatrix C(N.rank, N.rank);
    for (unsigned i = 0; i < N.rank; ++i)
        for (unsigned j = 0; j < N.rank; ++j) {
            Rational v = (*inv)[i][j] * Rational(N.index);
            if (!v.is_integer())
                throw DomainError("not-an-overlattice", "lattice does not contain Z^r");
            C.at(i, j) = v.num();
        }
    return C;
}

// deck transformation group of the cover N^v -> (Z^r)^v, dual to N/Z^r;
// reported by invariant factors, whose product is the covering index
inline FgAbelianGroup covering_deck_group(const Overlattice& N) {
    FgAbelianGroup q = group_from_cokernel(overlattice_quotient_relations(N));
    if (q.rank != 0 || q.order() != BigInt(N.index))
        throw std::logic_error("deck group order differs from the covering index");
    return q;
}

// homomorphism between finite abelian groups in invariant-factor coordinates
struct GroupHom {
    FgAbelianGroup domain;    // sum Z/e_i
    FgAbelianGroup codomain;  // sum Z/f_j
    IntegerMatrix matrix;     // f-coords = matrix * e-coords, entry (j,i) mod f_j

    FgAbelianGroup::Element apply(const FgAbelianGroup::Element& x) const {
        FgAbelianGroup::Element y(codomain.coords(), 0);
        for (size_t j = 0; j < codomain.coords(); ++j)
            for (size_t i = 0; i < domain.coords(); ++i) {
                auto t = (matrix.at(j, i) * BigInt(x[i])).to_int64();
                if (!t) throw DomainError("overflow", "hom application overflow");
                y[j] += *t;
            }
        return codomain.normalize(std::move(y));
    }

    bool is_surjective() const {
        if (codomain.is_trivial()) return true;
        // cokernel of [matrix | diag(f)] must vanish
        size_t rows = codomain.coords(), cols = domain.coords();
        IntegerMatrix m(rows, cols + rows);
        for (size_t j = 0; j < rows; ++j) {
            for (size_t i = 0; i < cols; ++i) m.at(j, i) = matrix.at(j, i);
            m.at(j, cols + j) = BigInt(codomain.torsion[j]);
        }
        return group_from_cokernel(m).is_trivial();
    }
};

// The deck surjection induced by an inclusion of overlattices N_small inside
// N_big: restriction of characters of N_big/Z^r to N_small/Z^r, expressed on
// the invariant-factor coordinates of both deck groups.
inline GroupHom deck_transition(const Overlattice& small, const Overlattice& big) {
    if (small.rank != big.rank) throw DomainError("bad-arguments", "rank mismatch");
    const unsigned r = small.rank;
    if (big.index % small.index != 0)
        throw DomainError("not-contained", "index does not divide; no inclusion");
    // A = (n_b / n_s) * H_b^(-1) * H_s must be integral for N_s <= N_b
    auto hbinv = mat_inverse_rational(big.scaled_basis);
    if (!hbinv) throw std::logic_error("overlattice basis is singular");
    IntegerMatrix A(r, r);
    Rational factor(BigInt(big.index), BigInt(small.index));
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) {
            Rational v(0);
            for (unsigned k = 0; k < r; ++k)
                v += (*hbinv)[i][k] * Rational(small.scaled_basis.at(k, j));
            v *= factor;
            if (!v.is_integer())
                throw DomainError("not-contained", "smaller lattice not inside the bigger one");
            A.at(i, j) = v.num();
        }
    SmithDecomposition ss = smith_normal_form(overlattice_quotient_relations(small));
    SmithDecomposition sb = smith_normal_form(overlattice_quotient_relations(big));
    // characters transform through M = (U_b A U_s^(-1))^T
    IntegerMatrix M =
        mat_mul(mat_mul(sb.U, A), mat_inverse_unimodular(ss.U)).transpose();
    std::vector<BigInt> f = ss.diagonal(), e = sb.diagonal();
    // keep only nontrivial coordinates
    std::vector<size_t> fi, ei;
    for (size_t j = 0; j < f.size(); ++j)
        if (!f[j].is_one()) fi.push_back(j);
    for (size_t i = 0; i < e.size(); ++i)
        if (!e[i].is_one()) ei.push_back(i);
    GroupHom hom{covering_deck_group(big), covering_deck_group(small),
                 IntegerMatrix(fi.size(), ei.size())};
    for (size_t j = 0; j < fi.size(); ++j)
        for (size_t i = 0; i < ei.size(); ++i) {
            BigInt t = f[fi[j]] * M.at(fi[j], ei[i]);
            if (!t.divisible_by(e[ei[i]]))
                throw std::logic_error("character restriction is not integral");
            hom.matrix.at(j, i) = t.divide_exact(e[ei[i]]).mod_euclid(f[fi[j]]);
        }
    return hom;
}

struct SolenoidStages {
    std::vector<FgAbelianGroup> stages;    // Ext((1/n_j)Z / Z, Z) = Z/n_j
    std::vector<GroupHom> transitions;     // stage j+1 ->> stage j reductions
};

// finite stages of the solenoid limit along a divisibility chain; every
// transition is certified surjective
inline SolenoidStages solenoid_stage_chain(const std::vector<int64_t>& chain) {
    SolenoidStages out;
    for (size_t j = 0; j < chain.size(); ++j) {
        if (chain[j] < 1) throw DomainError("bad-chain", "chain entries must be >= 1");
        if (j > 0 && chain[j] % chain[j - 1] != 0)
            throw DomainError("bad-chain", "chain must respect divisibility");
        FgAbelianGroup mj_mod_z =
            chain[j] == 1 ? FgAbelianGroup() : FgAbelianGroup(0, {chain[j]});
        out.stages.push_back(ext_to_Z(mj_mod_z));
    }
    auto stage_lattice = [](int64_t n) {
        Overlattice N;
        N.rank = 1;
        N.index = n;
        N.scaled_basis = IntegerMatrix::identity(1);
        return N;
    };
    for (size_t j = 0; j + 1 < chain.size(); ++j) {
        GroupHom t = deck_transition(stage_lattice(chain[j]), stage_lattice(chain[j + 1]));
        if (!t.is_surjective())
            throw std::logic_error("solenoid transition failed surjectivity");
        out.transitions.push_back(std::move(t));
    }
    return out;
}

// size of the inverse limit over the finite chain: threads are determined by
// the top stage once every transition is a (surjective) function
inline BigInt solenoid_partial_limit_count(const SolenoidStages& s) {
    if (s.stages.empty()) return BigInt(1);
    return s.stages.back().is_trivial() ? BigInt(1) : s.stages.back().order();
}

}  // namespace wittlab
