#pragma once

#include <cstdlib>
#include <vector>

#include "hyperq/matrix.hpp"

namespace hyperq {

// U * M * V = D with U, V unimodular and d1 | d2 | ... on the diagonal.
struct SnfDecomposition {
    IntMatrix u, d, v;

    bool valid(const IntMatrix& m) const {
        if (u * m * v != d) return false;
        Int du = det(u), dv = det(v);
        if (du != 1 && du != -1) return false;
        if (dv != 1 && dv != -1) return false;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (i != j && d(i, j) != 0) return false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d(i + 1, i + 1) != 0 && d(i, i) == 0) return false;
            if (d(i, i) != 0 && d(i + 1, i + 1) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
        }
        return true;
    }
};

// Smith normal form with deterministic pivoting: smallest-magnitude nonzero
// entry of the trailing block, ties broken by lowest (row, col).
inline SnfDecomposition snf(const IntMatrix& m0) {
    const std::size_t r = m0.rows(), c = m0.cols();
    IntMatrix m = m0;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < c; ++k) m(i, k) -= q * m(j, k);
        for (std::size_t k = 0; k < r; ++k) u(i, k) -= q * u(j, k);
    };
    auto col_sub = [&](std::size_t j, std::size_t i, const Int& q) {
        for (std::size_t k = 0; k < r; ++k) m(k, j) -= q * m(k, i);
        for (std::size_t k = 0; k < c; ++k) v(k, j) -= q * v(k, i);
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        m.swap_rows(i, j);
        u.swap_rows(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        m.swap_cols(i, j);
        v.swap_cols(i, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < c; ++k) m(i, k) = -m(i, k);
        for (std::size_t k = 0; k < r; ++k) u(i, k) = -u(i, k);
    };

    const std::size_t lim = std::min(r, c);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < lim;) {
        std::size_t pi = r, pj = c;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (m(i, j) == 0) continue;
                Int a = abs(m(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (m(i, t) == 0) continue;
            row_sub(i, t, m(i, t) / m(t, t));
            if (m(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
            if (m(t, j) == 0) continue;
            col_sub(j, t, m(t, j) / m(t, t));
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // a smaller remainder appeared; reselect pivot
        if (m(t, t) < 0) negate_row(t);
        rank = ++t;
    }

    // Divisibility chain: local 2x2 fixups, each replaces (d_i, d_{i+1}) by
    // (gcd, lcm) without touching the rest of the matrix.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rank; ++i) {
            if (m(i + 1, i + 1) % m(i, i) == 0) continue;
            changed = true;
            // col_i += col_{i+1}: block becomes [[a, 0], [b, b]]
            for (std::size_t k = 0; k < r; ++k) m(k, i) += m(k, i + 1);
            for (std::size_t k = 0; k < c; ++k) v(k, i) += v(k, i + 1);
            // Euclid within rows/cols {i, i+1}.
            while (true) {
                if (m(i + 1, i) != 0) {
                    row_sub(i + 1, i, m(i + 1, i) / m(i, i));
                    if (m(i + 1, i) != 0) {
                        swap_rows(i, i + 1);
                        continue;
                    }
                }
                if (m(i, i + 1) != 0) {
                    col_sub(i + 1, i, m(i, i + 1) / m(i, i));
                    if (m(i, i + 1) != 0) {
                        swap_cols(i, i + 1);
                        continue;
                    }
                }
                break;
            }
            if (m(i, i) < 0) negate_row(i);
            if (m(i + 1, i + 1) < 0) negate_row(i + 1);
        }
    }

    SnfDecomposition out;
    out.u = u;
    out.d = m;
    out.v = v;
    return out;
}

inline std::size_t snf_rank(const IntMatrix& m) {
    auto s = snf(m);
    std::size_t n = std::min(m.rows(), m.cols());
    std::size_t r = 0;
    while (r < n && s.d(r, r) != 0) ++r;
    return r;
}

inline std::vector<Int> snf_divisors(const IntMatrix& m) {
    auto s = snf(m);
    std::vector<Int> out;
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n && s.d(i, i) != 0; ++i) out.push_back(s.d(i, i));
    return out;
}

// Exact inverse of an integer matrix invertible over Z; throws otherwise.
inline IntMatrix int_inverse(const IntMatrix& m) { return to_int(inverse(to_rat(m))); }

// Columns form an integral basis of ker(M) ∩ Z^n, saturated by construction:
// with U M V = D the kernel is spanned by the columns of V past the rank.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    auto s = snf(m);
    std::size_t n = m.cols();
    std::size_t lim = std::min(m.rows(), n);
    std::size_t r = 0;
    while (r < lim && s.d(r, r) != 0) ++r;
    IntMatrix k(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - r) = s.v(i, j);
    return k;
}

// Basis (rows) of the saturation {x in Z^c : x in span_Q(rows of m)}.
inline IntMatrix saturation_rows(const IntMatrix& m) {
    IntMatrix k = kernel_basis(m);      // c x (c - r) columns with m . k = 0
    IntMatrix kt = k.transpose();       // (c - r) x c
    IntMatrix sat = kernel_basis(kt);   // c x r columns
    return sat.transpose();             // r x c rows
}

// Rows of `sub` must span a finite-index sublattice of the row span of
// `full` (same rank). Returns the index.
inline Int lattice_index(const IntMatrix& sub, const IntMatrix& full) {
    RatMatrix ft = to_rat(full.transpose());
    std::size_t r = sub.rows();
    IntMatrix x(r, full.rows());
    for (std::size_t i = 0; i < r; ++i) {
        auto ri = to_rat(sub).row(i);
        auto xi = solve(ft, ri);
        for (std::size_t j = 0; j < full.rows(); ++j) {
            if (den(xi[j]) != 1) throw Error("lattice_index: sub not contained in full");
            x(i, j) = num(xi[j]);
        }
    }
    if (x.rows() != x.cols()) throw Error("lattice_index: rank mismatch");
    return abs(det(x));
}

// Given rows spanning a saturated rank-r sublattice of Z^n, return n - r rows
// completing them to a basis of Z^n.
inline IntMatrix complete_saturated_basis(const IntMatrix& rows) {
    auto s = snf(rows);
    std::size_t r = rows.rows(), n = rows.cols();
    for (std::size_t i = 0; i < r; ++i)
        if (s.d(i, i) != 1) throw Error("complete_saturated_basis: input not saturated");
    // rows = U^{-1} [I 0] V^{-1}; the trailing rows of V^{-1} complete the basis.
    IntMatrix vinv = int_inverse(s.v);
    IntMatrix out(n - r, n);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i - r, j) = vinv(i, j);
    return out;
}

// Membership of an integer vector in the rational row span.
inline bool in_rational_rowspan(const IntMatrix& rows, const std::vector<Int>& vec) {
    std::size_t r = rows.rows(), n = rows.cols();
    RatMatrix aug(r + 1, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rat(rows(i, j));
    for (std::size_t j = 0; j < n; ++j) aug(r, j) = Rat(vec[j]);
    return rank(aug) == rank_int(rows);
}

}  // namespace hyperq
