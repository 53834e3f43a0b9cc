#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hyperq/hypertoric.hpp"
#include "hyperq/snf.hpp"

namespace hyperq {

// Point of T^k in log coordinates: x in Q^k taken mod Z^k, representing
// q = exp(2*pi*i*x). All membership tests are exact rational arithmetic.
struct TorusPoint {
    std::vector<Rat> x;

    static TorusPoint zero(std::size_t k) {
        TorusPoint p;
        p.x.assign(k, Rat(0));
        return p;
    }

    void normalize() {
        for (auto& c : x) {
            Int n = num(c), d = den(c);
            Int r = n % d;
            if (r < 0) r += d;
            c = Rat(r, d);
        }
    }

    bool operator==(const TorusPoint& o) const { return x == o.x; }
    bool operator<(const TorusPoint& o) const { return x < o.x; }

    // <alpha, x> in Z  <=>  the point lies on H_alpha.
    bool on_hypersurface(const std::vector<Int>& alpha) const {
        Rat s(0);
        for (std::size_t i = 0; i < x.size(); ++i) s += Rat(alpha[i]) * x[i];
        return den(s) == 1;
    }

    // Order of alpha(p) as a root of unity: den(<alpha, x>).
    Rat pairing(const std::vector<Int>& alpha) const {
        Rat s(0);
        for (std::size_t i = 0; i < x.size(); ++i) s += Rat(alpha[i]) * x[i];
        return s;
    }
};

// Connected component of an intersection of the subtori H_alpha, recorded by
// a base point, the defining complete subset, and its lattice data.
struct Layer {
    TorusPoint base_point;
    std::vector<std::size_t> complete_set;  // indices into phi, closed under completion
    IntMatrix lattice;                       // rows spanning <A>_Z
    IntMatrix saturation;                    // rows spanning the completed sublattice
    std::size_t dim = 0;                     // k - rank
};

// The character matrix of a subset (rows = characters).
inline IntMatrix character_rows(const std::vector<std::vector<Int>>& phi,
                                const std::vector<std::size_t>& a, std::size_t k) {
    IntMatrix m(a.size(), k);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = phi[a[i]][j];
    return m;
}

inline std::size_t subset_rank(const std::vector<std::vector<Int>>& phi,
                               const std::vector<std::size_t>& a, std::size_t k) {
    if (a.empty()) return 0;
    return rank_int(character_rows(phi, a, k));
}

// {alpha in phi : p in H_alpha}.
inline std::vector<std::size_t> phi_p(const std::vector<std::vector<Int>>& phi,
                                      const TorusPoint& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (p.on_hypersurface(phi[i])) out.push_back(i);
    return out;
}

// Completion of A at p: the rational span of A intersected with phi_p
// (matroid closure within the localized set).
inline std::vector<std::size_t> completion(const std::vector<std::vector<Int>>& phi,
                                           std::size_t k, const std::vector<std::size_t>& a,
                                           const TorusPoint& p) {
    auto local = phi_p(phi, p);
    for (auto i : a)
        if (std::find(local.begin(), local.end(), i) == local.end())
            throw Error("completion: subset not contained in phi_p");
    if (a.empty()) return {};
    IntMatrix rows = character_rows(phi, a, k);
    std::size_t r = rank_int(rows);
    std::vector<std::size_t> out;
    for (auto i : local) {
        std::vector<std::size_t> test = a;
        test.push_back(i);
        if (subset_rank(phi, test, k) == r) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Connected components of the intersection over A: count = product of the
// SNF elementary divisors of the character matrix; base points come from the
// torsion classes.
inline std::vector<Layer> components(const std::vector<std::vector<Int>>& phi, std::size_t k,
                                     const std::vector<std::size_t>& a) {
    std::vector<Layer> out;
    if (a.empty()) {
        Layer l;
        l.base_point = TorusPoint::zero(k);
        l.complete_set = {};
        l.lattice = IntMatrix(0, k);
        l.saturation = IntMatrix(0, k);
        l.dim = k;
        out.push_back(l);
        return out;
    }
    IntMatrix m = character_rows(phi, a, k);  // |A| x k
    auto s = snf(m);
    std::size_t lim = std::min(m.rows(), m.cols());
    std::size_t r = 0;
    std::vector<Int> divisors;
    while (r < lim && s.d(r, r) != 0) {
        divisors.push_back(s.d(r, r));
        ++r;
    }
    // Solutions of m x in Z^{|A|}: x = V y with d_i y_i in Z; torsion classes
    // enumerate y_i in {0, 1/d_i, ..., (d_i-1)/d_i}.
    IntMatrix sat = saturation_rows(m);
    std::vector<std::size_t> counters(r, 0);
    while (true) {
        std::vector<Rat> y(k, Rat(0));
        for (std::size_t i = 0; i < r; ++i) y[i] = Rat(Int(counters[i]), divisors[i]);
        TorusPoint p;
        p.x.assign(k, Rat(0));
        for (std::size_t row = 0; row < k; ++row)
            for (std::size_t col = 0; col < k; ++col) p.x[row] += Rat(s.v(row, col)) * y[col];
        p.normalize();
        Layer l;
        l.base_point = p;
        l.complete_set = completion(phi, k, a, p);
        l.lattice = m;
        l.saturation = sat;
        l.dim = k - r;
        out.push_back(l);
        // odometer over the torsion classes
        std::size_t i = 0;
        while (i < r) {
            ++counters[i];
            if (Int(counters[i]) < divisors[i]) break;
            counters[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Layer& a2, const Layer& b2) { return a2.base_point < b2.base_point; });
    return out;
}

// All zero-dimensional layers, enumerated over rank-k independent subsets and
// deduplicated. Requires phi to span rank k.
inline std::vector<TorusPoint> zero_dim_layers(const std::vector<std::vector<Int>>& phi,
                                               std::size_t k) {
    std::vector<std::size_t> all(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) all[i] = i;
    if (subset_rank(phi, all, k) != k) throw Error("RankDeficient: phi does not span", 2);
    std::set<TorusPoint> pts;
    // Iterate k-subsets; keep the independent ones.
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    if (phi.size() < k) throw Error("RankDeficient: too few characters", 2);
    while (true) {
        if (subset_rank(phi, comb, k) == k)
            for (auto& l : components(phi, k, comb)) pts.insert(l.base_point);
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == phi.size() - k + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::vector<TorusPoint>(pts.begin(), pts.end());
}

// Saturated-lattice direct sum test: rank additivity and index-1 sum
// (sat<A> = sat<A1> + sat<A2> as an internal direct sum).
inline bool is_saturated_direct_sum(const std::vector<std::vector<Int>>& phi, std::size_t k,
                                    const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<std::size_t> all;
    std::size_t rank_sum = 0;
    for (auto& p : parts) {
        all.insert(all.end(), p.begin(), p.end());
        rank_sum += subset_rank(phi, p, k);
    }
    std::size_t r = subset_rank(phi, all, k);
    if (r != rank_sum) return false;
    // Stack the saturation bases of the parts and compare with sat<all>.
    std::vector<IntMatrix> sats;
    std::size_t rows = 0;
    for (auto& p : parts) {
        IntMatrix s = saturation_rows(character_rows(phi, p, k));
        rows += s.rows();
        sats.push_back(s);
    }
    IntMatrix stacked(rows, k);
    std::size_t at = 0;
    for (auto& s : sats)
        for (std::size_t i = 0; i < s.rows(); ++i, ++at)
            for (std::size_t j = 0; j < k; ++j) stacked(at, j) = s(i, j);
    IntMatrix full = saturation_rows(character_rows(phi, all, k));
    return lattice_index(stacked, full) == 1;
}

// Connected components of the linear matroid on the subset A (union-find over
// minimal dependent sets).
inline std::vector<std::vector<std::size_t>> matroid_components(
    const std::vector<std::vector<Int>>& phi, std::size_t k, const std::vector<std::size_t>& a) {
    IntMatrix cols(k, a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) cols(i, j) = phi[a[j]][i];
    auto deps = minimal_dependent_sets(cols);
    std::vector<std::size_t> parent(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& dep : deps)
        for (std::size_t i = 1; i < dep.size(); ++i) parent[find(dep[i])] = find(dep[0]);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < a.size(); ++i) groups[find(i)].push_back(a[i]);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

// Unique finest partition A = A_1 ⊔ ... ⊔ A_r with sat<A> = ⊕ sat<A_i> and
// each part irreducible. Parts are unions of matroid components; the finest
// grouping is found by recursive bipartition over the components.
inline std::vector<std::vector<std::size_t>> irreducible_factors(
    const std::vector<std::vector<Int>>& phi, std::size_t k, const std::vector<std::size_t>& a,
    const TorusPoint& p) {
    if (completion(phi, k, a, p) != a) throw Error("NotComplete: set is not complete in phi_p");
    if (a.empty()) return {};

    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::vector<std::size_t>>&)>
        split = [&](const std::vector<std::vector<std::size_t>>& comps)
        -> std::vector<std::vector<std::size_t>> {
        std::vector<std::size_t> whole;
        for (auto& c : comps) whole.insert(whole.end(), c.begin(), c.end());
        std::sort(whole.begin(), whole.end());
        if (comps.size() <= 1) return {whole};
        std::size_t s = comps.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << (s - 1)); ++mask) {
            std::vector<std::vector<std::size_t>> side(2);
            std::vector<std::vector<std::size_t>> half[2];
            for (std::size_t i = 0; i < s; ++i) {
                int which = (mask >> i) & 1;
                side[which].insert(side[which].end(), comps[i].begin(), comps[i].end());
                half[which].push_back(comps[i]);
            }
            if (side[0].empty() || side[1].empty()) continue;
            std::sort(side[0].begin(), side[0].end());
            std::sort(side[1].begin(), side[1].end());
            if (is_saturated_direct_sum(phi, k, {side[0], side[1]})) {
                auto left = split(half[0]);
                auto right = split(half[1]);
                left.insert(left.end(), right.begin(), right.end());
                return left;
            }
        }
        return {whole};
    };
    auto factors = split(matroid_components(phi, k, a));
    std::sort(factors.begin(), factors.end());
    return factors;
}

// All complete subsets of phi_p (flats of the localized configuration),
// enumerated by breadth-first closure.
inline std::vector<std::vector<std::size_t>> complete_subsets(
    const std::vector<std::vector<Int>>& phi, std::size_t k, const TorusPoint& p) {
    auto local = phi_p(phi, p);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> empty;
    seen.insert(empty);
    queue.push_back(empty);
    for (std::size_t at = 0; at < queue.size(); ++at) {
        auto cur = queue[at];
        for (auto i : local) {
            if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
            auto ext = cur;
            ext.push_back(i);
            std::sort(ext.begin(), ext.end());
            auto closed = completion(phi, k, ext, p);
            if (seen.insert(closed).second) queue.push_back(closed);
        }
    }
    std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return queue;
}

// Poset of layers through a zero-dimensional base point: the order-reversed
// lattice of complete subsets of phi_p.
struct LayerPoset {
    TorusPoint base_point;
    std::vector<std::vector<std::size_t>> nodes;   // complete sets, by size then lex
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller set, larger set)
    std::vector<std::size_t> ranks;                // rank of each node's span
};

inline LayerPoset layer_poset(const std::vector<std::vector<Int>>& phi, std::size_t k,
                              const TorusPoint& p) {
    LayerPoset poset;
    poset.base_point = p;
    poset.nodes = complete_subsets(phi, k, p);
    for (auto& n : poset.nodes) poset.ranks.push_back(subset_rank(phi, n, k));
    auto leq = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        for (std::size_t j = 0; j < poset.nodes.size(); ++j) {
            if (i == j || !leq(poset.nodes[i], poset.nodes[j])) continue;
            bool cover = true;
            for (std::size_t l = 0; l < poset.nodes.size() && cover; ++l) {
                if (l == i || l == j) continue;
                if (leq(poset.nodes[i], poset.nodes[l]) && leq(poset.nodes[l], poset.nodes[j]))
                    cover = false;
            }
            if (cover) poset.covers.push_back({i, j});
        }
    return poset;
}

}  // namespace hyperq
