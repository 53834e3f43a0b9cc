#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "hyperq/numeric.hpp"

namespace hyperq {

// Dense matrix over an exact scalar type (Int, Rat, CycScalar, LaurentPoly, ...).
// Value semantics throughout; dimensions fixed after construction.
template <class T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}
    Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (auto& row : rows) {
            if (row.size() != c_) throw Error("Matrix: ragged initializer");
            for (auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Matrix m(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) m(i, j) = (*this)(ri[i], ci[j]);
        return m;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }
    Matrix operator-() const {
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw Error("Matrix: dimension mismatch in product");
        Matrix m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) = m(i, j) + x * o(k, j);
            }
        return m;
    }
    Matrix operator*(const T& s) const {
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != c_) throw Error("Matrix: dimension mismatch in apply");
        std::vector<T> w(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) w[i] = w[i] + (*this)(i, j) * v[j];
        return w;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw Error("Matrix: dimension mismatch");
    }

    std::size_t r_, c_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
    return m * s;
}

// Commutator AB - BA.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

// In-place reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> w = m;
    return rref_in_place(w).size();
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw Error("inverse: not square");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref_in_place(aug);
    if (piv.size() != n) throw Error("inverse: singular matrix");
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

// Solve M x = b over a field; throws if inconsistent. Returns one solution
// (free variables set to 0).
template <class F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
    std::size_t n = m.cols();
    Matrix<F> aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref_in_place(aug);
    std::vector<F> x(n, F(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) throw Error("solve: inconsistent system");
        x[piv[r]] = aug(r, n);
    }
    return x;
}

// Fraction-free determinant (Bareiss) for integral domains.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw Error("det: not square");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    T denom(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = v / denom;  // exact by Bareiss
            }
        denom = m(k, k);
    }
    return sgn > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline Int det(const IntMatrix& m) { return det_bareiss(m); }

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Conversion back when every entry is integral.
inline IntMatrix to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (den(m(i, j)) != 1) throw Error("to_int: non-integral entry");
            r(i, j) = num(m(i, j));
        }
    return r;
}

inline std::size_t rank_int(const IntMatrix& m) { return rank(to_rat(m)); }

}  // namespace hyperq
