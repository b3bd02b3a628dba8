#pragma once

// Exact integer matrices: Smith normal form with tracked unimodular
// transforms, kernels, linear solving, determinants, and rational inversion.
// The engine behind the abelian-group calculus.

#include <optional>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/rational.hpp"
#include "wittlab/ring.hpp"

namespace wittlab {

struct IntegerMatrix {
    size_t rows = 0, cols = 0;
    std::vector<BigInt> a;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, BigInt(0)) {}

    static IntegerMatrix identity(size_t n) {
        IntegerMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<int64_t>>& rows_in) {
        if (rows_in.empty()) return IntegerMatrix();
        IntegerMatrix m(rows_in.size(), rows_in[0].size());
        for (size_t i = 0; i < m.rows; ++i) {
            if (rows_in[i].size() != m.cols)
                throw DomainError("bad-matrix", "ragged matrix rows");
            for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = BigInt(rows_in[i][j]);
        }
        return m;
    }

    BigInt& at(size_t i, size_t j) { return a[i * cols + j]; }
    const BigInt& at(size_t i, size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const IntegerMatrix& x, const IntegerMatrix& y) { return !(x == y); }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
};

inline IntegerMatrix mat_mul(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols != y.rows) throw DomainError("bad-shape", "matrix product shape mismatch");
    IntegerMatrix r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < y.cols; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

inline IntegerMatrix mat_scale(const BigInt& s, const IntegerMatrix& x) {
    IntegerMatrix r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

// fraction-free determinant (square matrices)
inline BigInt mat_det(IntegerMatrix m) {
    if (m.rows != m.cols) throw DomainError("bad-shape", "determinant of non-square matrix");
    const size_t n = m.rows;
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t p = k + 1;
            while (p < n && m.at(p, k).is_zero()) ++p;
            if (p == n) return BigInt(0);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)).divide_exact(prev);
            m.at(i, k) = BigInt(0);
        }
        prev = m.at(k, k);
    }
    BigInt det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

struct SmithDecomposition {
    IntegerMatrix U, D, V;  // U*A*V = D, U and V unimodular

    std::vector<BigInt> diagonal() const {
        std::vector<BigInt> d;
        for (size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
        return d;
    }

    // nonzero invariant factors greater than 1
    std::vector<int64_t> invariant_factors() const {
        std::vector<int64_t> out;
        for (const auto& d : diagonal()) {
            if (d.is_zero() || d.is_one()) continue;
            auto v = d.to_int64();
            if (!v) throw DomainError("overflow", "invariant factor exceeds 64 bits");
            out.push_back(*v);
        }
        return out;
    }

    size_t rank() const {
        size_t r = 0;
        for (const auto& d : diagonal())
            if (!d.is_zero()) ++r;
        return r;
    }
};

namespace detail {

struct SnfWorkspace {
    IntegerMatrix D, U, V;

    void row_swap(size_t i, size_t j) {
        for (size_t k = 0; k < D.cols; ++k) std::swap(D.at(i, k), D.at(j, k));
        for (size_t k = 0; k < U.cols; ++k) std::swap(U.at(i, k), U.at(j, k));
    }
    void col_swap(size_t i, size_t j) {
        for (size_t k = 0; k < D.rows; ++k) std::swap(D.at(k, i), D.at(k, j));
        for (size_t k = 0; k < V.rows; ++k) std::swap(V.at(k, i), V.at(k, j));
    }
    void row_addmul(size_t dst, size_t src, const BigInt& q) {
        for (size_t k = 0; k < D.cols; ++k) D.at(dst, k) += q * D.at(src, k);
        for (size_t k = 0; k < U.cols; ++k) U.at(dst, k) += q * U.at(src, k);
    }
    void col_addmul(size_t dst, size_t src, const BigInt& q) {
        for (size_t k = 0; k < D.rows; ++k) D.at(k, dst) += q * D.at(k, src);
        for (size_t k = 0; k < V.rows; ++k) V.at(k, dst) += q * V.at(k, src);
    }
    void row_negate(size_t i) {
        for (size_t k = 0; k < D.cols; ++k) D.at(i, k) = -D.at(i, k);
        for (size_t k = 0; k < U.cols; ++k) U.at(i, k) = -U.at(i, k);
    }

    // eliminate everything in row/column t beyond the pivot at (t,t)
    void reduce_at(size_t t) {
        while (true) {
            // pick the minimal-magnitude nonzero entry in the block as pivot
            size_t bi = t, bj = t;
            bool found = false;
            for (size_t i = t; i < D.rows; ++i)
                for (size_t j = t; j < D.cols; ++j) {
                    if (D.at(i, j).is_zero()) continue;
                    if (!found || BigInt::cmp(D.at(i, j).abs(), D.at(bi, bj).abs()) < 0) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
                }
            if (!found) return;
            if (bi != t) row_swap(t, bi);
            if (bj != t) col_swap(t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t).is_zero()) continue;
                BigInt q = D.at(i, t) / D.at(t, t);
                if (!q.is_zero()) row_addmul(i, t, -q);
                if (!D.at(i, t).is_zero()) clean = false;
            }
            for (size_t j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j).is_zero()) continue;
                BigInt q = D.at(t, j) / D.at(t, t);
                if (!q.is_zero()) col_addmul(j, t, -q);
                if (!D.at(t, j).is_zero()) clean = false;
            }
            if (clean) {
                bool column_clear = true, row_clear = true;
                for (size_t i = t + 1; i < D.rows; ++i)
                    if (!D.at(i, t).is_zero()) column_clear = false;
                for (size_t j = t + 1; j < D.cols; ++j)
                    if (!D.at(t, j).is_zero()) row_clear = false;
                if (column_clear && row_clear) return;
            }
        }
    }
};

}  // namespace detail

// Exact Smith normal form with unimodular transforms; the decomposition is
// re-verified (U*A*V == D) before returning.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
    detail::SnfWorkspace w;
    w.D = A;
    w.U = IntegerMatrix::identity(A.rows);
    w.V = IntegerMatrix::identity(A.cols);
    const size_t n = std::min(A.rows, A.cols);
    for (size_t t = 0; t < n; ++t) {
        bool any = false;
        for (size_t i = t; i < A.rows && !any; ++i)
            for (size_t j = t; j < A.cols && !any; ++j)
                if (!w.D.at(i, j).is_zero()) any = true;
        if (!any) break;
        w.reduce_at(t);
    }
    for (size_t t = 0; t < n; ++t)
        if (w.D.at(t, t).sign() < 0) w.row_negate(t);
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < n; ++i) {
            const BigInt& di = w.D.at(i, i);
            const BigInt& dj = w.D.at(i + 1, i + 1);
            if (di.is_zero() && !dj.is_zero()) {
                w.col_swap(i, i + 1);
                w.row_swap(i, i + 1);
                changed = true;
                continue;
            }
            if (di.is_zero() || dj.is_zero()) continue;
            if (dj.divisible_by(di)) continue;
            w.col_addmul(i, i + 1, BigInt(1));
            w.reduce_at(i);
            if (w.D.at(i, i).sign() < 0) w.row_negate(i);
            if (w.D.at(i + 1, i + 1).sign() < 0) w.row_negate(i + 1);
            changed = true;
        }
    }
    SmithDecomposition s{std::move(w.U), std::move(w.D), std::move(w.V)};
    if (mat_mul(mat_mul(s.U, A), s.V) != s.D)
        throw std::logic_error("Smith normal form verification failed");
    return s;
}

// basis of the integer kernel, one column per basis vector
inline IntegerMatrix kernel_basis(const IntegerMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < A.cols; ++j) {
        bool is_free = j >= std::min(A.rows, A.cols) || s.D.at(j, j).is_zero();
        if (is_free) free_cols.push_back(j);
    }
    IntegerMatrix K(A.cols, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k)
        for (size_t i = 0; i < A.cols; ++i) K.at(i, k) = s.V.at(i, free_cols[k]);
    return K;
}

// one integer solution of A x = b, if any
inline std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& A,
                                                        const std::vector<BigInt>& b) {
    if (b.size() != A.rows) throw DomainError("bad-shape", "solve: length mismatch");
    SmithDecomposition s = smith_normal_form(A);
    // D y = U b, x = V y
    std::vector<BigInt> ub(A.rows, BigInt(0));
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.rows; ++k)
            if (!s.U.at(i, k).is_zero()) ub[i] += s.U.at(i, k) * b[k];
    std::vector<BigInt> y(A.cols, BigInt(0));
    for (size_t i = 0; i < A.rows; ++i) {
        BigInt d = i < std::min(A.rows, A.cols) ? s.D.at(i, i) : BigInt(0);
        if (d.is_zero()) {
            if (!ub[i].is_zero()) return std::nullopt;
        } else {
            if (!ub[i].divisible_by(d)) return std::nullopt;
            y[i] = ub[i].divide_exact(d);
        }
    }
    std::vector<BigInt> x(A.cols, BigInt(0));
    for (size_t i = 0; i < A.cols; ++i)
        for (size_t k = 0; k < A.cols; ++k)
            if (!s.V.at(i, k).is_zero()) x[i] += s.V.at(i, k) * y[k];
    return x;
}

// exact inverse over Q; nullopt when singular
inline std::optional<std::vector<std::vector<Rational>>> mat_inverse_rational(
    const IntegerMatrix& m) {
    if (m.rows != m.cols) throw DomainError("bad-shape", "inverse of non-square matrix");
    const size_t n = m.rows;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][n + i] = Rational(1);
    }
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[k], a[p]);
        Rational inv = a[k][k].inverse();
        for (size_t j = 0; j < 2 * n; ++j) a[k][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            Rational f = a[i][k];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// inverse of a unimodular integer matrix, exactly
inline IntegerMatrix mat_inverse_unimodular(const IntegerMatrix& m) {
    auto inv = mat_inverse_rational(m);
    if (!inv) throw DomainError("singular", "matrix is singular");
    IntegerMatrix r(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) {
            if (!(*inv)[i][j].is_integer())
                throw DomainError("not-unimodular", "inverse is not integral");
            r.at(i, j) = (*inv)[i][j].num();
        }
    return r;
}

}  // namespace wittlab
