#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperq/snf.hpp"

namespace hyperq {

inline std::vector<std::size_t> identity_rows(std::size_t r) {
    std::vector<std::size_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = i;
    return v;
}

// Circuit S with its normalized sign vector beta in {0,±1}^n: first nonzero
// entry +1, support minimally dependent, a·beta = 0.
struct CircuitVector {
    std::vector<std::size_t> support;
    std::vector<Int> beta;  // length n
    std::vector<std::size_t> positive_part, negative_part;

    // Coordinates of beta in the fixed kernel basis of [a]: the circuit as a
    // character on T^k. Filled by circuits().
    std::vector<Int> character;
};

struct SmoothReport {
    bool simple = false;
    bool unimodular = false;
    std::string witness;
    bool ok() const { return simple && unimodular; }
};

// Minimal dependent subsets of the columns of m, enumerated by increasing
// size with superset pruning. Circuit sizes are bounded by rank+1.
inline std::vector<std::vector<std::size_t>> minimal_dependent_sets(const IntMatrix& m) {
    std::size_t n = m.cols();
    std::size_t r = rank_int(m);
    std::vector<std::vector<std::size_t>> found;
    auto contains_found = [&](const std::vector<std::size_t>& s) {
        for (auto& f : found)
            if (std::includes(s.begin(), s.end(), f.begin(), f.end())) return true;
        return false;
    };
    for (std::size_t sz = 1; sz <= std::min(n, r + 1); ++sz) {
        std::vector<std::size_t> comb(sz);
        for (std::size_t i = 0; i < sz; ++i) comb[i] = i;
        while (true) {
            if (!contains_found(comb)) {
                IntMatrix sub = m.submatrix(identity_rows(m.rows()), comb);
                if (rank_int(sub) < sz) found.push_back(comb);
            }
            std::size_t i = sz;
            while (i > 0 && comb[i - 1] == n - sz + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < sz; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return found;
}

// Root object: the d x n matrix [a] plus optional character lift chi and
// cocharacter tau.
struct HypertoricData {
    IntMatrix a;  // d x n, full rank d
    std::optional<std::vector<Int>> chi;  // length n
    std::optional<std::vector<Int>> tau;  // length d

    std::size_t d() const { return a.rows(); }
    std::size_t n() const { return a.cols(); }
    std::size_t k() const { return n() - d(); }
};

// Unique vertex of the affinized arrangement at a basis Q: solves
// <a_i, v> + chi_i = 0 for i in Q.
inline std::vector<Rat> vertex(const HypertoricData& data, const std::vector<std::size_t>& q) {
    if (!data.chi) throw Error("ChiMissing: vertex requires a character lift");
    RatMatrix sys(q.size(), data.d());
    std::vector<Rat> rhs(q.size());
    for (std::size_t r = 0; r < q.size(); ++r) {
        for (std::size_t j = 0; j < data.d(); ++j) sys(r, j) = Rat(data.a(j, q[r]));
        rhs[r] = Rat(-(*data.chi)[q[r]]);
    }
    return solve(sys, rhs);
}

// <a_j, v> + chi_j; sign tells which side of hyperplane j the point v is on.
inline Rat side_value(const HypertoricData& data, const std::vector<Rat>& v, std::size_t j) {
    Rat s = Rat((*data.chi)[j]);
    for (std::size_t r = 0; r < data.d(); ++r) s += Rat(data.a(r, j)) * v[r];
    return s;
}

// All size-d column subsets with det ±1, in lexicographic order. No
// smoothness gate; validate_smooth itself relies on this.
inline std::vector<std::vector<std::size_t>> fixed_points_unchecked(const HypertoricData& data) {
    std::size_t d = data.d(), n = data.n();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    while (true) {
        IntMatrix sub = data.a.submatrix(identity_rows(d), comb);
        Int dv = det(sub);
        if (dv == 1 || dv == -1) out.push_back(comb);
        std::size_t i = d;
        while (i > 0 && comb[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// Smoothness: unimodular (all nonsingular d x d minors have det ±1) and
// simple (with chi: no vertex lies on a hyperplane outside its defining set;
// central data without chi is accepted as vacuously simple).
inline SmoothReport validate_smooth(const HypertoricData& data) {
    SmoothReport rep;
    if (rank_int(data.a) != data.d()) throw Error("NotFullRank: matrix a is rank-deficient");
    for (std::size_t j = 0; j < data.n(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < data.d(); ++i) zero &= (data.a(i, j) == 0);
        if (zero) {
            rep.simple = false;
            rep.unimodular = true;
            rep.witness = "column " + std::to_string(j + 1) + " is zero (no hyperplane)";
            return rep;
        }
    }
    rep.unimodular = true;
    std::size_t d = data.d(), n = data.n();
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    while (true) {
        IntMatrix sub = data.a.submatrix(identity_rows(d), comb);
        Int dv = det(sub);
        if (dv != 0 && dv != 1 && dv != -1) {
            rep.unimodular = false;
            rep.witness = "minor determinant " + dv.str();
            break;
        }
        std::size_t i = d;
        while (i > 0 && comb[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    rep.simple = true;
    if (data.chi && rep.unimodular) {
        for (auto& q : fixed_points_unchecked(data)) {
            auto v = vertex(data, q);
            for (std::size_t j = 0; j < n; ++j) {
                if (std::find(q.begin(), q.end(), j) != q.end()) continue;
                if (side_value(data, v, j) == 0) {
                    rep.simple = false;
                    rep.witness = "chi not generic: vertex on hyperplane " + std::to_string(j + 1);
                    return rep;
                }
            }
        }
    }
    return rep;
}

inline std::vector<std::vector<std::size_t>> fixed_points(const HypertoricData& data) {
    if (!validate_smooth(data).ok()) throw Error("NotSmooth: fixed_points requires smooth data");
    return fixed_points_unchecked(data);
}

// Sign vector of a circuit support: the normalized kernel generator
// (first nonzero entry +1).
inline CircuitVector circuit_from_support(const HypertoricData& data,
                                          const std::vector<std::size_t>& s) {
    IntMatrix sub = data.a.submatrix(identity_rows(data.d()), s);
    IntMatrix ker = kernel_basis(sub);
    if (ker.cols() != 1) throw Error("circuit_from_support: support is not a circuit");
    CircuitVector cv;
    cv.support = s;
    cv.beta.assign(data.n(), Int(0));
    int flip = ker(0, 0) < 0 ? -1 : 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Int b = ker(i, 0) * flip;
        if (b != 1 && b != -1)
            throw Error("circuit_from_support: sign entry not ±1 (non-unimodular data?)");
        cv.beta[s[i]] = b;
        (b > 0 ? cv.positive_part : cv.negative_part).push_back(s[i]);
    }
    return cv;
}

// All circuits with sign vectors (Phi^+), supports in lexicographic order.
inline std::vector<CircuitVector> circuits(const HypertoricData& data) {
    if (!validate_smooth(data).ok()) throw Error("NotSmooth: circuits requires smooth data");
    std::vector<CircuitVector> out;
    IntMatrix kb = kernel_basis(data.a);  // n x k; fixes the identification of t^k
    RatMatrix kbr = to_rat(kb);
    for (auto& s : minimal_dependent_sets(data.a)) {
        CircuitVector cv = circuit_from_support(data, s);
        std::vector<Rat> b(data.n());
        for (std::size_t i = 0; i < data.n(); ++i) b[i] = Rat(cv.beta[i]);
        auto x = solve(kbr, b);
        cv.character.resize(data.k());
        for (std::size_t j = 0; j < data.k(); ++j) {
            if (den(x[j]) != 1) throw Error("circuits: non-integral character coordinates");
            cv.character[j] = num(x[j]);
        }
        out.push_back(std::move(cv));
    }
    return out;
}

inline CircuitVector flip_circuit(const CircuitVector& c) {
    CircuitVector f = c;
    for (auto& b : f.beta) b = -b;
    for (auto& b : f.character) b = -b;
    std::swap(f.positive_part, f.negative_part);
    return f;
}

// Circuits oriented by the character: beta is flipped so that
// sum_i beta_i chi_i > 0 (the Kahler-positive direction). This is the
// splitting for which the cohomology relation's failure region is empty, and
// the positivity convention the quantum formula's Phi^+ refers to. For a
// simple arrangement the pairing never vanishes (a zero pairing would mean
// the circuit's hyperplanes intersect).
inline std::vector<CircuitVector> oriented_circuits(const HypertoricData& data) {
    auto phi = circuits(data);
    if (!data.chi) return phi;
    for (auto& c : phi) {
        Int pairing = 0;
        for (std::size_t i = 0; i < data.n(); ++i) pairing += c.beta[i] * (*data.chi)[i];
        if (pairing == 0)
            throw Error("NotSmooth: circuit hyperplanes intersect (chi pairing vanishes)");
        if (pairing < 0) c = flip_circuit(c);
    }
    return phi;
}

// Rank-2 flat: maximal subset of Phi^+ spanning a 2-dimensional space.
// Size 2 or 3; triples are ordered so the last member is the sum.
struct RankTwoFlat {
    std::vector<std::size_t> members;  // indices into the circuit list
    bool is_triple = false;
};

inline std::vector<RankTwoFlat> rank2_flats(const std::vector<CircuitVector>& phi) {
    std::size_t m = phi.size();
    if (m == 0) return {};
    std::size_t n = phi[0].beta.size();
    auto pair_rank = [&](std::size_t i, std::size_t j) {
        RatMatrix two(2, n);
        for (std::size_t c = 0; c < n; ++c) {
            two(0, c) = Rat(phi[i].beta[c]);
            two(1, c) = Rat(phi[j].beta[c]);
        }
        return rank(two);
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pair_rank(i, j) < 2) throw Error("CollinearInput: collinear circuit vectors");

    std::set<std::vector<std::size_t>> seen;
    std::vector<RankTwoFlat> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<std::size_t> flat;
            for (std::size_t l = 0; l < m; ++l) {
                RatMatrix three(3, n);
                for (std::size_t c = 0; c < n; ++c) {
                    three(0, c) = Rat(phi[i].beta[c]);
                    three(1, c) = Rat(phi[j].beta[c]);
                    three(2, c) = Rat(phi[l].beta[c]);
                }
                if (rank(three) == 2) flat.push_back(l);
            }
            std::sort(flat.begin(), flat.end());
            if (!seen.insert(flat).second) continue;
            RankTwoFlat f;
            f.members = flat;
            if (flat.size() == 3) {
                f.is_triple = true;
                bool arranged = false;
                for (int perm = 0; perm < 3 && !arranged; ++perm) {
                    std::size_t a = flat[perm % 3], b = flat[(perm + 1) % 3],
                                c = flat[(perm + 2) % 3];
                    bool sum = true;
                    for (std::size_t t = 0; t < n; ++t)
                        sum &= (phi[a].beta[t] + phi[b].beta[t] == phi[c].beta[t]);
                    if (sum) {
                        f.members = {a, b, c};
                        arranged = true;
                    }
                }
                if (!arranged) throw Error("rank2_flats: triple without sum relation");
            } else if (flat.size() != 2) {
                throw Error("rank2_flats: flat of unexpected size " + std::to_string(flat.size()));
            }
            out.push_back(std::move(f));
        }
    return out;
}

// The unique circuit S_j with S_j \ Q = {j} for a basis Q and j outside Q.
inline CircuitVector circuit_through(const HypertoricData& data,
                                     const std::vector<std::size_t>& q, std::size_t j) {
    RatMatrix aq(data.d(), q.size());
    for (std::size_t r = 0; r < data.d(); ++r)
        for (std::size_t c = 0; c < q.size(); ++c) aq(r, c) = Rat(data.a(r, q[c]));
    std::vector<Rat> rhs(data.d());
    for (std::size_t r = 0; r < data.d(); ++r) rhs[r] = Rat(data.a(r, j));
    auto x = solve(aq, rhs);
    std::vector<std::size_t> supp;
    for (std::size_t c = 0; c < q.size(); ++c)
        if (x[c] != 0) supp.push_back(q[c]);
    supp.push_back(j);
    std::sort(supp.begin(), supp.end());
    return circuit_from_support(data, supp);
}

// Matroid circuit axioms (Def: no containment; elimination), checked
// literally on a computed circuit list.
inline bool circuit_axioms_hold(const std::vector<CircuitVector>& phi) {
    for (auto& s : phi)
        if (s.support.empty()) return false;
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) {
            if (i == j) continue;
            auto &s = phi[i].support, &t = phi[j].support;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end()) && s != t) return false;
        }
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = i + 1; j < phi.size(); ++j) {
            auto &s = phi[i].support, &t = phi[j].support;
            std::vector<std::size_t> common;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(common));
            for (auto e : common) {
                std::vector<std::size_t> u;
                std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
                u.erase(std::remove(u.begin(), u.end(), e), u.end());
                bool has = false;
                for (auto& c : phi)
                    if (std::includes(u.begin(), u.end(), c.support.begin(), c.support.end()))
                        has = true;
                if (!has) return false;
            }
        }
    return true;
}

}  // namespace hyperq
