#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperq/numeric.hpp"

namespace hyperq {

// Sparse multivariate Laurent polynomial over a field C (Rat, CycScalar, ...).
// Terms are keyed by exponent vectors in lexicographic order; zero
// coefficients are never stored.
template <class C>
class LaurentPoly {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, C>;

    LaurentPoly() : n_(0) {}
    explicit LaurentPoly(int nvars) : n_(nvars) {}

    // Variable-free constants broadcast across variable counts in binary ops.
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp(n_, 0));
    }
    LaurentPoly with_nvars(int n) const {
        if (n == n_) return *this;
        if (!is_constant()) throw Error("LaurentPoly: variable count mismatch");
        return constant(n, constant_term());
    }

    static LaurentPoly constant(int nvars, const C& c) {
        LaurentPoly p(nvars);
        if (!(c == C(0))) p.t_[Exp(nvars, 0)] = c;
        return p;
    }
    static LaurentPoly variable(int nvars, int i, int power = 1) {
        LaurentPoly p(nvars);
        Exp e(nvars, 0);
        e[i] = power;
        p.t_[e] = C(1);
        return p;
    }
    static LaurentPoly monomial(const Exp& e, const C& c) {
        LaurentPoly p((int)e.size());
        if (!(c == C(0))) p.t_[e] = c;
        return p;
    }

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool operator==(const LaurentPoly& o) const {
        if (n_ != o.n_) {
            if (n_ == 0 || o.n_ == 0) {
                int n = std::max(n_, o.n_);
                return with_nvars(n) == o.with_nvars(n);
            }
            return false;
        }
        return t_ == o.t_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    C constant_term() const {
        auto it = t_.find(Exp(n_, 0));
        return it == t_.end() ? C(0) : it->second;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        if (n_ != o.n_) return aligned(o, [](const auto& a, const auto& b) { return a + b; });
        LaurentPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        if (n_ != o.n_) return aligned(o, [](const auto& a, const auto& b) { return a - b; });
        LaurentPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, C(0) - c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(n_);
        for (auto& [e, c] : t_) r.t_[e] = C(0) - c;
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        if (n_ != o.n_) return aligned(o, [](const auto& a, const auto& b) { return a * b; });
        LaurentPoly r(n_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) {
                Exp e(n_);
                for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    LaurentPoly operator*(const C& s) const {
        LaurentPoly r(n_);
        if (s == C(0)) return r;
        for (auto& [e, c] : t_) r.t_[e] = c * s;
        return r;
    }

    LaurentPoly pow(long k) const {
        if (k < 0) {
            if (t_.size() != 1) throw Error("LaurentPoly::pow: negative power of non-monomial");
            auto& [e, c] = *t_.begin();
            Exp ne(n_);
            for (int i = 0; i < n_; ++i) ne[i] = (int)(e[i] * k);
            return monomial(ne, pow_coeff(c, k));
        }
        LaurentPoly r = constant(n_, C(1));
        LaurentPoly b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    // Evaluation; variables with negative exponents require nonzero values.
    C evaluate(const std::vector<C>& x) const {
        C acc(0);
        for (auto& [e, c] : t_) {
            C term = c;
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                term = term * pow_coeff(x[i], e[i]);
            }
            acc = acc + term;
        }
        return acc;
    }

    // Minimum exponent per variable over all terms (0 for the zero poly).
    Exp min_exponents() const {
        Exp m(n_, 0);
        bool first = true;
        for (auto& [e, c] : t_) {
            for (int i = 0; i < n_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    LaurentPoly shift(const Exp& by) const {
        LaurentPoly r(n_);
        for (auto& [e, c] : t_) {
            Exp ne(n_);
            for (int i = 0; i < n_; ++i) ne[i] = e[i] + by[i];
            r.t_[ne] = c;
        }
        return r;
    }

    // Total degree span, used to size Schwartz-Zippel sample ranges.
    int degree_span() const {
        int lo = 0, hi = 0;
        for (auto& [e, c] : t_) {
            int d = 0;
            for (int x : e) d += x;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return hi - lo;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(c);
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << names[i];
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    void add_term(const Exp& e, const C& c) {
        if (c == C(0)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second == C(0)) t_.erase(it);
        }
    }

private:
    template <class Op>
    LaurentPoly aligned(const LaurentPoly& o, Op op) const {
        int n = std::max(n_, o.n_);
        return op(with_nvars(n), o.with_nvars(n));
    }
    static C pow_coeff(const C& c, long k) {
        if (k >= 0) {
            C r(1), b = c;
            long n = k;
            while (n > 0) {
                if (n & 1) r = r * b;
                b = b * b;
                n >>= 1;
            }
            return r;
        }
        return C(1) / pow_coeff(c, -k);
    }
    static std::string coeff_str(const C& c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    int n_;
    Terms t_;
};

// Exact division p / q. The quotient must be a genuine (non-Laurent)
// cofactor: any remainder or negative exponent in the result raises
// NotDivisible, which is how a Lemma 3.2.5 regularity failure surfaces.
template <class C>
LaurentPoly<C> exact_divide(const LaurentPoly<C>& p, const LaurentPoly<C>& q) {
    if (q.is_zero()) throw Error("exact_divide: division by zero");
    int n = p.nvars();
    if (p.is_zero()) return LaurentPoly<C>(n);
    auto mp = p.min_exponents(), mq = q.min_exponents();
    std::vector<int> neg_p(n), neg_q(n);
    for (int i = 0; i < n; ++i) {
        neg_p[i] = -std::min(mp[i], 0);
        neg_q[i] = -std::min(mq[i], 0);
    }
    LaurentPoly<C> a = p.shift(neg_p), b = q.shift(neg_q);

    // Multivariate division by the lex-leading term; exactness means the
    // remainder stays divisible at every step.
    LaurentPoly<C> quot(n);
    auto lead = [](const LaurentPoly<C>& f) { return std::prev(f.terms().end()); };
    auto lb = lead(b);
    while (!a.is_zero()) {
        auto la = lead(a);
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = la->first[i] - lb->first[i];
            if (e[i] < 0) throw Error("NotDivisible: exact_divide has remainder");
        }
        C c = la->second / lb->second;
        auto m = LaurentPoly<C>::monomial(e, c);
        quot = quot + m;
        a = a - m * b;
    }
    // Undo the normalization shifts; the result must be polynomial.
    std::vector<int> back(n);
    for (int i = 0; i < n; ++i) back[i] = neg_q[i] - neg_p[i];
    LaurentPoly<C> r = quot.shift(back);
    auto mr = r.min_exponents();
    for (int i = 0; i < n; ++i)
        if (mr[i] < 0) throw Error("NotDivisible: quotient is not regular");
    return r;
}

// Quotient of Laurent polynomials; equality by cross-multiplication.
template <class C>
class RationalFunc {
public:
    RationalFunc() : num_(0), den_(LaurentPoly<C>::constant(0, C(1))) {}
    RationalFunc(int v)
        : num_(LaurentPoly<C>::constant(0, C(v))), den_(LaurentPoly<C>::constant(0, C(1))) {}
    explicit RationalFunc(const LaurentPoly<C>& n)
        : num_(n), den_(LaurentPoly<C>::constant(n.nvars(), C(1))) {}
    RationalFunc(const LaurentPoly<C>& n, const LaurentPoly<C>& d) : num_(n), den_(d) {
        if (d.is_zero()) throw Error("RationalFunc: zero denominator");
        reduce();
    }

    const LaurentPoly<C>& num() const { return num_; }
    const LaurentPoly<C>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunc& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    RationalFunc operator+(const RationalFunc& o) const {
        return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunc operator-(const RationalFunc& o) const {
        return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunc operator*(const RationalFunc& o) const {
        return RationalFunc(num_ * o.num_, den_ * o.den_);
    }
    RationalFunc operator/(const RationalFunc& o) const {
        if (o.num_.is_zero()) throw Error("RationalFunc: division by zero");
        return RationalFunc(num_ * o.den_, den_ * o.num_);
    }
    RationalFunc operator-() const { return RationalFunc(-num_, den_); }

    C evaluate(const std::vector<C>& x) const {
        C d = den_.evaluate(x);
        if (d == C(0)) throw Error("RationalFunc: pole at evaluation point");
        return num_.evaluate(x) / d;
    }

private:
    // Light normalization: cancel the shared monomial content and try a full
    // exact cancellation (cheap at the sizes we handle; fall through if the
    // denominator does not divide the numerator).
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly<C>::constant(num_.nvars(), C(1));
            return;
        }
        int n = num_.nvars();
        auto mn = num_.min_exponents(), md = den_.min_exponents();
        std::vector<int> sh(n);
        for (int i = 0; i < n; ++i) sh[i] = -std::min(mn[i], md[i]);
        num_ = num_.shift(sh);
        den_ = den_.shift(sh);
        if (den_.terms().size() == 1) {
            auto& [e, c] = *den_.terms().begin();
            bool monom_one = true;
            for (int i = 0; i < n; ++i) monom_one &= (e[i] == 0);
            if (monom_one) {
                num_ = num_ * (C(1) / c);
                den_ = LaurentPoly<C>::constant(n, C(1));
                return;
            }
        }
        try {
            LaurentPoly<C> q = exact_divide(num_, den_);
            num_ = q;
            den_ = LaurentPoly<C>::constant(n, C(1));
        } catch (const Error&) {
        }
    }

    LaurentPoly<C> num_, den_;
};

using Poly = LaurentPoly<Rat>;
using RatFunc = RationalFunc<Rat>;

}  // namespace hyperq
