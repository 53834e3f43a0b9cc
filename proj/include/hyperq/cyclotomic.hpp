#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <vector>

#include "hyperq/numeric.hpp"

namespace hyperq {

namespace detail {

// Dense univariate polynomial helpers over Q, coefficients low-to-high.
inline std::vector<Rat> poly_trim(std::vector<Rat> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}

// Returns {quotient, remainder}.
inline std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> a,
                                                                 const std::vector<Rat>& b) {
    a = poly_trim(a);
    std::vector<Rat> q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rat f = a.back() / lead;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a = poly_trim(a);
        if (a.empty()) break;
    }
    return {poly_trim(q), a};
}

}  // namespace detail

// Coefficients of the m-th cyclotomic polynomial (monic, over Q), computed by
// dividing x^m - 1 by the product of lower cyclotomic polynomials.
inline const std::vector<Rat>& cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, std::vector<Rat>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Rat> xm(m + 1, Rat(0));
    xm[0] = -1;
    xm[m] = 1;
    std::vector<Rat> denom = {Rat(1)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) denom = detail::poly_mul(denom, cyclotomic_polynomial(d));
    auto [q, r] = detail::poly_divmod(xm, denom);
    if (!r.empty()) throw Error("cyclotomic_polynomial: internal division failure");
    return cache.emplace(m, q).first->second;
}

// Element of the m-th cyclotomic field Q(zeta_m), stored as a dense rational
// coefficient vector modulo Phi_m. Binary operations promote both sides to
// the lcm conductor via zeta_m -> zeta_M^(M/m).
class CycScalar {
public:
    CycScalar() : m_(1), c_(1, Rat(0)) {}
    CycScalar(int v) : m_(1), c_(1, Rat(v)) {}
    explicit CycScalar(const Rat& v) : m_(1), c_(1, v) {}
    CycScalar(unsigned conductor, std::vector<Rat> coeffs) : m_(conductor) {
        c_ = reduce(m_, std::move(coeffs));
    }

    static CycScalar root_of_unity(unsigned m, long j) {
        j %= (long)m;
        if (j < 0) j += m;
        std::vector<Rat> x((std::size_t)j + 1, Rat(0));
        x[(std::size_t)j] = 1;
        return CycScalar(m, std::move(x));
    }

    // exp(2*pi*i*r) for rational r: a root of unity of order den(r).
    static CycScalar from_rotation(const Rat& r) {
        Int d = den(r), n = num(r) % d;
        if (n < 0) n += d;
        return root_of_unity((unsigned)d, (long)n);
    }

    unsigned conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

    bool operator==(const CycScalar& o) const {
        unsigned m = (unsigned)((unsigned long)std::lcm((unsigned long)m_, (unsigned long)o.m_));
        return promote(m).c_ == o.promote(m).c_;
    }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    CycScalar operator+(const CycScalar& o) const {
        return binop(o, [](std::vector<Rat>& a, const std::vector<Rat>& b) {
            for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        });
    }
    CycScalar operator-(const CycScalar& o) const {
        return binop(o, [](std::vector<Rat>& a, const std::vector<Rat>& b) {
            for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        });
    }
    CycScalar operator-() const {
        CycScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    CycScalar operator*(const CycScalar& o) const {
        unsigned m = (unsigned)((unsigned long)std::lcm((unsigned long)m_, (unsigned long)o.m_));
        CycScalar a = promote(m), b = o.promote(m);
        std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return CycScalar(m, reduce(m, prod));
    }
    CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }

    // Inverse via the extended Euclidean algorithm in Q[x] mod Phi_m.
    CycScalar inverse() const {
        if (is_zero()) throw Error("CycScalar: division by zero");
        const auto& phi = cyclotomic_polynomial(m_);
        std::vector<Rat> r0 = phi, r1 = detail::poly_trim(c_);
        std::vector<Rat> t0 = {}, t1 = {Rat(1)};
        while (!r1.empty() && r1.size() > 1) {
            auto [q, r2] = detail::poly_divmod(r0, r1);
            auto qt = detail::poly_mul(q, t1);
            std::vector<Rat> t2 = t0;
            t2.resize(std::max(t0.size(), qt.size()), Rat(0));
            for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
            t2 = detail::poly_trim(t2);
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
        if (r1.empty()) throw Error("CycScalar: not invertible (zero divisor?)");
        Rat scale = Rat(1) / r1[0];
        std::vector<Rat> inv(t1.size());
        for (std::size_t i = 0; i < t1.size(); ++i) inv[i] = t1[i] * scale;
        return CycScalar(m_, reduce(m_, inv));
    }

    CycScalar promote(unsigned big) const {
        if (big == m_) return *this;
        if (big % m_ != 0) throw Error("CycScalar: invalid promotion");
        unsigned step = big / m_;
        std::vector<Rat> out;
        out.assign((c_.size() - 1) * step + 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * step] = c_[i];
        return CycScalar(big, reduce(big, out));
    }

    friend std::ostream& operator<<(std::ostream& os, const CycScalar& z) {
        os << "cyc" << z.m_ << "(";
        for (std::size_t i = 0; i < z.c_.size(); ++i) {
            if (i) os << ",";
            os << z.c_[i];
        }
        return os << ")";
    }

private:
    static std::size_t degree(unsigned m) { return cyclotomic_polynomial(m).size() - 1; }

    static std::vector<Rat> reduce(unsigned m, std::vector<Rat> p) {
        const auto& phi = cyclotomic_polynomial(m);
        auto [q, r] = detail::poly_divmod(std::move(p), phi);
        r.resize(phi.size() - 1, Rat(0));
        return r;
    }

    template <class Op>
    CycScalar binop(const CycScalar& o, Op op) const {
        unsigned m = (unsigned)((unsigned long)std::lcm((unsigned long)m_, (unsigned long)o.m_));
        CycScalar a = promote(m), b = o.promote(m);
        op(a.c_, b.c_);
        return a;
    }

    unsigned m_;
    std::vector<Rat> c_;
};

}  // namespace hyperq
