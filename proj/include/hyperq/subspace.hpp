#pragma once

#include <vector>

#include "hyperq/matrix.hpp"

namespace hyperq {

// Point of a Grassmannian: a linear subspace represented by the unique RREF
// basis of its row span. Two spanning sets of the same subspace produce
// identical objects.
template <class F>
struct SubspacePoint {
    std::size_t ambient = 0;
    Matrix<F> basis;                  // RREF rows, no zero rows
    std::vector<std::size_t> pivots;  // pivot columns

    std::size_t dim() const { return basis.rows(); }

    bool operator==(const SubspacePoint& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool operator!=(const SubspacePoint& o) const { return !(*this == o); }

    bool contains(const std::vector<F>& v) const {
        std::vector<F> w = v;
        w.resize(ambient, F(0));
        // Reduce against the RREF rows.
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            const F& c = w[pivots[r]];
            if (c == F(0)) continue;
            for (std::size_t j = 0; j < ambient; ++j) w[j] = w[j] - c * basis(r, j);
        }
        for (auto& x : w)
            if (!(x == F(0))) return false;
        return true;
    }
};

template <class F>
SubspacePoint<F> canonical_subspace(const std::vector<std::vector<F>>& vectors,
                                    std::size_t ambient_dim) {
    for (auto& v : vectors)
        if (v.size() > ambient_dim) throw Error("canonical_subspace: vector exceeds ambient");
    Matrix<F> m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = vectors[i][j];
    auto piv = rref_in_place(m);
    SubspacePoint<F> s;
    s.ambient = ambient_dim;
    s.pivots = std::vector<std::size_t>(piv.begin(), piv.end());
    s.basis = Matrix<F>(piv.size(), ambient_dim);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) s.basis(i, j) = m(i, j);
    return s;
}

// Span of the union; used for "equal modulo a line" comparisons.
template <class F>
SubspacePoint<F> subspace_sum(const SubspacePoint<F>& a, const SubspacePoint<F>& b) {
    if (a.ambient != b.ambient) throw Error("subspace_sum: ambient mismatch");
    std::vector<std::vector<F>> rows;
    for (std::size_t i = 0; i < a.basis.rows(); ++i) rows.push_back(a.basis.row(i));
    for (std::size_t i = 0; i < b.basis.rows(); ++i) rows.push_back(b.basis.row(i));
    return canonical_subspace(rows, a.ambient);
}

}  // namespace hyperq
