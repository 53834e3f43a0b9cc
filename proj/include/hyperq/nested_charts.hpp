#pragma once

#include <complex>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hyperq/cyclotomic.hpp"
#include "hyperq/laurent.hpp"
#include "hyperq/subspace.hpp"
#include "hyperq/toric_layers.hpp"

namespace hyperq {

// Materialization of the layer base-point values a_i = alpha(p) (roots of
// unity, stored as rotation numbers) in a concrete field.
template <class F>
struct ChartField;

template <>
struct ChartField<Rat> {
    static Rat root(const Rat& rot) {
        if (rot == 0) return Rat(1);
        if (rot == Rat(1, 2)) return Rat(-1);
        throw Error("chart constant is not rational; use the cyclotomic field");
    }
};

template <>
struct ChartField<CycScalar> {
    static CycScalar root(const Rat& rot) { return CycScalar::from_rotation(rot); }
};

template <>
struct ChartField<std::complex<double>> {
    static std::complex<double> root(const Rat& rot) {
        double angle = 2.0 * 3.14159265358979323846 *
                       (double)num(rot).convert_to<long long>() /
                       (double)den(rot).convert_to<long long>();
        return {std::cos(angle), std::sin(angle)};
    }
};

// One layer of a nested set: an irreducible complete subset with its
// saturated lattice.
struct NestedLayer {
    std::vector<std::size_t> complete_set;
    IntMatrix sat;
    std::size_t rank = 0;
};

// Maximal nested set with chart data: the irreducible factors C_1..C_k of a
// maximal flag in phi_p, the inclusion forest, an adapted basis (rows of
// `adapted`), and the base-point rotations a_i = alpha_{C_i}(p).
struct NestedSet {
    TorusPoint p;
    std::size_t k = 0;
    std::vector<NestedLayer> layers;             // canonical (size, lex) order
    std::vector<std::vector<std::size_t>> up;    // up[i] = {j : A_j >= A_i}, a chain
    std::vector<int> successor;                  // minimal strict superset, -1 if none
    IntMatrix adapted;                           // k x k, row i = alpha_{C_i}
    IntMatrix adapted_inv;                       // exact integer inverse
    std::vector<Rat> rot;                        // <alpha_{C_i}, x_p> mod 1

    bool layer_leq(std::size_t i, std::size_t j) const {
        // A_i <= A_j as complete sets ( <=> layer C_i >= C_j ).
        auto &a = layers[i].complete_set, &b = layers[j].complete_set;
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Canonical key for deduplication.
inline std::vector<std::vector<std::size_t>> nested_key(
    const std::vector<std::vector<std::size_t>>& factors) {
    auto key = factors;
    std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return key;
}

// p_S: the minimal nested-set element whose span contains alpha (the largest
// layer on which alpha is constant). Total on phi_p and on the adapted basis.
inline std::size_t p_s_map(const NestedSet& ns, const std::vector<Int>& alpha) {
    int best = -1;
    for (std::size_t i = 0; i < ns.layers.size(); ++i) {
        if (!in_rational_rowspan(ns.layers[i].sat, alpha)) continue;
        if (best < 0 || ns.layer_leq(i, (std::size_t)best)) best = (int)i;
    }
    if (best < 0) throw Error("NotThroughP: character is constant on no nested layer");
    return (std::size_t)best;
}

inline std::vector<Rat> to_rat_vec(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline void refresh_rotations(NestedSet& ns);

// Adapted basis: one vector per layer, chosen so the vectors of the layers
// below C (complete-set inclusion) form a basis of the saturated lattice of
// C. Construction extends the direct sum of the children's lattices by one
// vector, leaves-to-root.
inline void build_adapted_basis(NestedSet& ns) {
    std::size_t k = ns.k;
    std::vector<int> order(ns.layers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ns.layers[a].rank < ns.layers[b].rank; });
    ns.adapted = IntMatrix(k, k);
    for (int io : order) {
        std::size_t i = (std::size_t)io;
        // Children: maximal strict subsets among nested elements.
        std::vector<std::size_t> children;
        for (std::size_t j = 0; j < ns.layers.size(); ++j) {
            if (j == i || !ns.layer_leq(j, i)) continue;
            bool maximal = true;
            for (std::size_t l = 0; l < ns.layers.size(); ++l) {
                if (l == i || l == j) continue;
                if (ns.layer_leq(j, l) && ns.layer_leq(l, i) && l != j) maximal = false;
            }
            if (maximal) children.push_back(j);
        }
        std::size_t r = ns.layers[i].rank;
        std::size_t child_rank = 0;
        for (auto c : children) child_rank += ns.layers[c].rank;
        if (child_rank + 1 != r)
            throw Error("AdaptedBasisFailure: child ranks do not step by one");
        const IntMatrix& b = ns.layers[i].sat;  // r x k
        if (r == 1) {
            for (std::size_t c = 0; c < k; ++c) ns.adapted(i, c) = b(0, c);
            continue;
        }
        // Express the children's adapted vectors in the coordinates of b.
        IntMatrix x(r - 1, r);
        RatMatrix bt = to_rat(b.transpose());
        std::size_t at = 0;
        for (auto c : children) {
            // All adapted vectors below the child (including it) lie in its
            // lattice; collect the ones attached to layers <= child.
            for (std::size_t j = 0; j < ns.layers.size(); ++j) {
                if (!ns.layer_leq(j, c)) continue;
                auto sol = solve(bt, to_rat_vec(ns.adapted.row(j)));
                for (std::size_t col = 0; col < r; ++col) {
                    if (den(sol[col]) != 1)
                        throw Error("AdaptedBasisFailure: child vector outside lattice");
                    x(at, col) = num(sol[col]);
                }
                ++at;
            }
        }
        if (at != r - 1) throw Error("AdaptedBasisFailure: wrong number of child vectors");
        IntMatrix ext = complete_saturated_basis(x);  // 1 x r
        for (std::size_t c = 0; c < k; ++c) {
            Int acc = 0;
            for (std::size_t col = 0; col < r; ++col) acc += ext(0, col) * b(col, c);
            ns.adapted(i, c) = acc;
        }
    }
    ns.adapted_inv = int_inverse(ns.adapted);
    refresh_rotations(ns);
}

inline void refresh_rotations(NestedSet& ns) {
    ns.rot.clear();
    for (std::size_t i = 0; i < ns.k; ++i) {
        Rat s(0);
        for (std::size_t c = 0; c < ns.k; ++c) s += Rat(ns.adapted(i, c)) * ns.p.x[c];
        Int n = num(s), d = den(s);
        Int rmd = n % d;
        if (rmd < 0) rmd += d;
        ns.rot.push_back(Rat(rmd, d));
    }
}

// Install an externally chosen adapted basis (rows aligned with the layer
// order); validity is checked by adapted_basis_valid.
inline void set_adapted_basis(NestedSet& ns, const IntMatrix& rows) {
    ns.adapted = rows;
    ns.adapted_inv = int_inverse(rows);
    refresh_rotations(ns);
}

// Validity of an adapted basis: for every layer, the vectors attached to the
// elements below it form a basis of its saturated lattice (index one).
inline bool adapted_basis_valid(const NestedSet& ns) {
    for (std::size_t i = 0; i < ns.layers.size(); ++i) {
        std::vector<std::size_t> below;
        for (std::size_t j = 0; j < ns.layers.size(); ++j)
            if (ns.layer_leq(j, i)) below.push_back(j);
        if (below.size() != ns.layers[i].rank) return false;
        IntMatrix sub(below.size(), ns.k);
        for (std::size_t r = 0; r < below.size(); ++r)
            for (std::size_t c = 0; c < ns.k; ++c) sub(r, c) = ns.adapted(below[r], c);
        try {
            if (lattice_index(sub, ns.layers[i].sat) != 1) return false;
        } catch (const Error&) {
            return false;
        }
    }
    Int dv = det(ns.adapted);
    return dv == 1 || dv == -1;
}

// All maximal nested sets at a zero-dimensional base point: irreducible
// factors of maximal flags of complete subsets of phi_p, deduplicated.
inline std::vector<NestedSet> maximal_nested_sets(const std::vector<std::vector<Int>>& phi,
                                                  std::size_t k, const TorusPoint& p,
                                                  std::size_t cap = 10000) {
    auto all_complete = complete_subsets(phi, k, p);
    auto local = phi_p(phi, p);
    if (subset_rank(phi, local, k) != k)
        throw Error("RankDeficient: phi_p does not span at the base point", 2);
    std::map<std::vector<std::size_t>, std::size_t> rank_of;
    for (auto& a : all_complete) rank_of[a] = subset_rank(phi, a, k);

    std::set<std::vector<std::vector<std::size_t>>> seen;
    std::vector<NestedSet> out;

    std::function<void(const std::vector<std::vector<std::size_t>>&, std::set<std::vector<std::size_t>>&)>
        dfs = [&](const std::vector<std::vector<std::size_t>>& flag,
                  std::set<std::vector<std::size_t>>& factors) {
            if (out.size() >= cap) return;
            const auto& top = flag.back();
            if (rank_of[top] == k) {
                std::vector<std::vector<std::size_t>> key(factors.begin(), factors.end());
                if (!seen.insert(nested_key(key)).second) return;
                NestedSet ns;
                ns.p = p;
                ns.k = k;
                for (auto& f : nested_key(key)) {
                    NestedLayer l;
                    l.complete_set = f;
                    l.sat = saturation_rows(character_rows(phi, f, k));
                    l.rank = subset_rank(phi, f, k);
                    ns.layers.push_back(std::move(l));
                }
                if (ns.layers.size() != k) return;  // not a maximal nested set
                ns.up.assign(k, {});
                ns.successor.assign(k, -1);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j)
                        if (ns.layer_leq(i, j)) ns.up[i].push_back(j);
                    // successor: minimal strict superset
                    for (auto j : ns.up[i]) {
                        if (j == i) continue;
                        if (ns.successor[i] < 0 ||
                            ns.layer_leq(j, (std::size_t)ns.successor[i]))
                            ns.successor[i] = (int)j;
                    }
                }
                build_adapted_basis(ns);
                out.push_back(std::move(ns));
                return;
            }
            for (auto& next : all_complete) {
                if (rank_of[next] != rank_of[top] + 1) continue;
                if (!std::includes(next.begin(), next.end(), top.begin(), top.end())) continue;
                auto saved = factors;
                for (auto& f : irreducible_factors(phi, k, next, p)) factors.insert(f);
                auto extended = flag;
                extended.push_back(next);
                dfs(extended, factors);
                factors = saved;
            }
        };

    for (auto& a : all_complete) {
        if (rank_of[a] != 1) continue;
        std::set<std::vector<std::size_t>> factors;
        for (auto& f : irreducible_factors(phi, k, a, p)) factors.insert(f);
        std::vector<std::vector<std::size_t>> flag{a};
        dfs(flag, factors);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chart maps.
// ---------------------------------------------------------------------------

// Coordinates w_i = a_i + prod_{A_j >= A_i} z_j of the chart map f^S.
template <class F>
std::vector<F> chart_units(const NestedSet& ns, const std::vector<F>& z) {
    std::vector<F> w(ns.k);
    for (std::size_t i = 0; i < ns.k; ++i) {
        F prod(1);
        for (auto j : ns.up[i]) prod = prod * z[j];
        w[i] = ChartField<F>::root(ns.rot[i]) + prod;
    }
    return w;
}

// The torus point t with alpha_{C_i}(t) = a_i + prod z: standard coordinates
// q_l = prod_i w_i^{(B^{-1})_{li}}. OutsideTorus when a unit vanishes.
template <class F>
std::vector<F> chart_to_torus(const NestedSet& ns, const std::vector<F>& z) {
    auto w = chart_units(ns, z);
    for (auto& x : w)
        if (x == F(0)) throw Error("OutsideTorus: chart unit vanishes");
    std::vector<F> q(ns.k, F(1));
    for (std::size_t l = 0; l < ns.k; ++l)
        for (std::size_t i = 0; i < ns.k; ++i) {
            long e = (long)ns.adapted_inv(l, i);
            if (e == 0) continue;
            F base = w[i];
            F powed(1);
            long n = e < 0 ? -e : e;
            for (long c = 0; c < n; ++c) powed = powed * base;
            if (e > 0)
                q[l] = q[l] * powed;
            else
                q[l] = q[l] / powed;
        }
    return q;
}

// Inverse chart map: z_C = (alpha_C(t) - a_C) / (alpha_{s(C)}(t) - a_{s(C)}).
template <class F>
std::vector<F> torus_to_chart(const NestedSet& ns, const std::vector<F>& q) {
    std::vector<F> alpha_vals(ns.k, F(1));
    for (std::size_t i = 0; i < ns.k; ++i) {
        F acc(1);
        for (std::size_t l = 0; l < ns.k; ++l) {
            long e = (long)ns.adapted(i, l);
            F powed(1);
            long n = e < 0 ? -e : e;
            for (long c = 0; c < n; ++c) powed = powed * q[l];
            if (e > 0) acc = acc * powed;
            if (e < 0) acc = acc / powed;
        }
        alpha_vals[i] = acc - ChartField<F>::root(ns.rot[i]);
    }
    std::vector<F> z(ns.k);
    for (std::size_t i = 0; i < ns.k; ++i) {
        if (ns.successor[i] < 0) {
            z[i] = alpha_vals[i];
        } else {
            F denom = alpha_vals[(std::size_t)ns.successor[i]];
            if (denom == F(0)) throw Error("DenominatorZero: torus_to_chart at a wall");
            z[i] = alpha_vals[i] / denom;
        }
    }
    return z;
}

// q^alpha(t(z)) - a factored as p_alpha(z) * prod_{A_j >= A_{C_alpha}} z_j;
// returns the regular cofactor p_alpha as a rational function whose
// denominator is a product of chart units. NotDivisible signals a Lemma
// regularity failure and is treated as fatal.
template <class F>
RationalFunc<F> p_alpha(const NestedSet& ns, const std::vector<Int>& alpha,
                        const std::vector<std::vector<Int>>& phi_chars) {
    std::size_t k = ns.k;
    // alpha = m . adapted  =>  m = alpha . adapted^{-1}
    std::vector<Int> m(k, Int(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) m[j] += alpha[i] * ns.adapted_inv(i, j);
    // Unit polynomials w_i(z).
    std::vector<LaurentPoly<F>> w;
    for (std::size_t i = 0; i < k; ++i) {
        LaurentPoly<F> prod = LaurentPoly<F>::constant((int)k, F(1));
        for (auto j : ns.up[i]) prod = prod * LaurentPoly<F>::variable((int)k, (int)j);
        w.push_back(LaurentPoly<F>::constant((int)k, ChartField<F>::root(ns.rot[i])) + prod);
    }
    LaurentPoly<F> numer = LaurentPoly<F>::constant((int)k, F(1));
    LaurentPoly<F> denom = LaurentPoly<F>::constant((int)k, F(1));
    for (std::size_t i = 0; i < k; ++i) {
        long e = (long)m[i];
        if (e > 0) numer = numer * w[i].pow(e);
        if (e < 0) denom = denom * w[i].pow(-e);
    }
    // a = alpha(p) as a field element.
    Rat rot(0);
    for (std::size_t c = 0; c < k; ++c) rot += Rat(alpha[c]) * ns.p.x[c];
    Int nn = num(rot), dd = den(rot);
    Int rmd = nn % dd;
    if (rmd < 0) rmd += dd;
    F a = ChartField<F>::root(Rat(rmd, dd));
    LaurentPoly<F> top = numer - LaurentPoly<F>::constant((int)k, a) * denom;

    std::size_t c_alpha = p_s_map(ns, alpha);
    LaurentPoly<F> monom = LaurentPoly<F>::constant((int)k, F(1));
    for (auto j : ns.up[c_alpha]) monom = monom * LaurentPoly<F>::variable((int)k, (int)j);
    LaurentPoly<F> reduced = exact_divide(top, monom);
    RationalFunc<F> out(reduced, denom);
    // Regularity: p_alpha(0) != 0.
    std::vector<F> zero(k, F(0));
    if (out.num().evaluate(zero) == F(0))
        throw Error("NotDivisible: p_alpha vanishes at the chart center");
    return out;
}

// Projective chart map psi_C for an irreducible layer through p, given by its
// complete set. Coordinates indexed by the chosen generators of Phi_C.
template <class F>
std::vector<F> psi_C(const NestedSet& ns, const std::vector<std::vector<Int>>& phi_chars,
                     const std::vector<std::size_t>& phi_C,
                     const std::vector<std::size_t>& generators, const std::vector<F>& z) {
    // Core: the minimal nested element containing Phi_C.
    int core = -1;
    for (std::size_t i = 0; i < ns.layers.size(); ++i) {
        auto& a = ns.layers[i].complete_set;
        if (!std::includes(a.begin(), a.end(), phi_C.begin(), phi_C.end())) continue;
        if (core < 0 || ns.layer_leq(i, (std::size_t)core)) core = (int)i;
    }
    if (core < 0) throw Error("psi_C: layer has no core in the nested set");
    std::vector<F> coords;
    bool any_nonzero = false;
    for (auto g : generators) {
        auto pa = p_alpha<F>(ns, phi_chars[g], phi_chars);
        F val = pa.evaluate(z);
        std::size_t ca = p_s_map(ns, phi_chars[g]);
        // Monomial over layers strictly between the core and C_alpha.
        F monom(1);
        for (auto j : ns.up[ca])
            if (!ns.layer_leq((std::size_t)core, j)) monom = monom * z[j];
        F coord = val * monom;
        any_nonzero |= !(coord == F(0));
        coords.push_back(coord);
    }
    if (!any_nonzero) throw Error("AllZero: point outside V_S");
    return coords;
}

// Membership in V_S: every localized character's regular factor is nonzero.
template <class F>
bool in_V_S(const NestedSet& ns, const std::vector<std::vector<Int>>& phi_chars,
            const std::vector<F>& z) {
    for (std::size_t g = 0; g < phi_chars.size(); ++g) {
        if (!ns.p.on_hypersurface(phi_chars[g])) continue;
        auto pa = p_alpha<F>(ns, phi_chars[g], phi_chars);
        if (pa.evaluate(z) == F(0)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Boundary extension of the Grassmannian-valued family (Theorem on extending
// Q over the blow-up boundary).
// ---------------------------------------------------------------------------

template <class F>
F mult_int(long v) {
    F acc(0);
    long n = v < 0 ? -v : v;
    for (long i = 0; i < n; ++i) acc = acc + F(1);
    return v < 0 ? F(0) - acc : acc;
}

// u^1 coordinates: t_alpha block indexed by phi_chars order, then the t^k
// block. The spanning vectors are
//   w_i = hbar * sum_{alpha in ±Phi_p, alpha_i != 0} (prod_{A_i <= A_j < A_{C_alpha}} z_j / p_alpha) alpha_i t_alpha
//       + m_i [B^{-1}] v_i + hbar m_i sum_{alpha in ±Phi off p, alpha_i != 0} (alpha_i/(q^alpha - 1)) t_alpha,
// where m_i = prod_{A_j >= A_i} z_j and alpha_i are adapted-basis coordinates.
template <class F>
SubspacePoint<F> boundary_extension(const NestedSet& ns,
                                    const std::vector<std::vector<Int>>& phi_chars,
                                    const std::vector<F>& z, const F& hbar) {
    std::size_t k = ns.k;
    std::size_t nphi = phi_chars.size();
    auto w_units = chart_units(ns, z);
    for (auto& x : w_units)
        if (x == F(0)) throw Error("OutsideTorus: chart unit vanishes");
    std::vector<F> q = chart_to_torus(ns, z);

    // Precompute p_alpha values for localized characters.
    std::vector<bool> local(nphi);
    std::vector<F> pa_val(nphi, F(1));
    std::vector<std::size_t> c_alpha(nphi, 0);
    for (std::size_t g = 0; g < nphi; ++g) {
        local[g] = ns.p.on_hypersurface(phi_chars[g]);
        if (local[g]) {
            auto pa = p_alpha<F>(ns, phi_chars[g], phi_chars);
            pa_val[g] = pa.evaluate(z);
            if (pa_val[g] == F(0)) throw Error("PAlphaZero: point outside V_S");
            c_alpha[g] = p_s_map(ns, phi_chars[g]);
        }
    }

    std::vector<std::vector<F>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        F m_i(1);
        for (auto j : ns.up[i]) m_i = m_i * z[j];
        std::vector<F> w(nphi + k, F(0));
        // t^k part: m_i * column i of B^{-1}.
        for (std::size_t r = 0; r < k; ++r) {
            long e = (long)ns.adapted_inv(r, i);
            if (e != 0) w[nphi + r] = m_i * mult_int<F>(e);
        }
        for (int sign : {+1, -1}) {
            for (std::size_t g = 0; g < nphi; ++g) {
                // Signed character and its adapted coordinates.
                std::vector<Int> alpha(k);
                for (std::size_t c = 0; c < k; ++c)
                    alpha[c] = Int(sign) * phi_chars[g][c];
                Int ai = 0;
                for (std::size_t c = 0; c < k; ++c) ai += alpha[c] * ns.adapted_inv(c, i);
                if (ai == 0) continue;
                if (local[g]) {
                    // Singular part: the p_alpha of the signed character.
                    auto pa = p_alpha<F>(ns, alpha, phi_chars);
                    F pav = pa.evaluate(z);
                    if (pav == F(0)) throw Error("PAlphaZero: point outside V_S");
                    std::size_t ca = p_s_map(ns, alpha);
                    if (!ns.layer_leq(i, ca))
                        throw Error("boundary_extension: C_alpha not below C_i");
                    F monom(1);
                    for (auto j : ns.up[i])
                        if (!ns.layer_leq(ca, j)) monom = monom * z[j];
                    w[g] = w[g] + hbar * mult_int<F>((long)ai) * monom / pav;
                } else {
                    // Regular part: q^alpha - 1 does not vanish near p.
                    F qa(1);
                    for (std::size_t l = 0; l < k; ++l) {
                        long e = (long)alpha[l];
                        F powed(1);
                        long nn = e < 0 ? -e : e;
                        for (long c = 0; c < nn; ++c) powed = powed * q[l];
                        if (e > 0) qa = qa * powed;
                        if (e < 0) qa = qa / powed;
                    }
                    if (qa == F(1)) throw Error("WallCollision: q^alpha = 1 off the base point");
                    w[g] = w[g] + hbar * m_i * mult_int<F>((long)ai) / (qa - F(1));
                }
            }
        }
        rows.push_back(std::move(w));
    }
    return canonical_subspace(rows, nphi + k);
}

// Interior family in u^1 coordinates at a torus point q (multiplicative
// coordinates in F): Span{ e_i + hbar sum_{alpha in ±Phi} (alpha(e_i)/(q^alpha-1)) t_alpha }.
template <class F>
SubspacePoint<F> u1_interior_family(const std::vector<std::vector<Int>>& phi_chars,
                                    std::size_t k, const std::vector<F>& q, const F& hbar) {
    std::size_t nphi = phi_chars.size();
    std::vector<std::vector<F>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<F> w(nphi + k, F(0));
        w[nphi + i] = F(1);
        for (int sign : {+1, -1}) {
            for (std::size_t g = 0; g < nphi; ++g) {
                long ai = (long)(Int(sign) * phi_chars[g][i]);
                if (ai == 0) continue;
                F qa(1);
                for (std::size_t l = 0; l < k; ++l) {
                    long e = (long)(Int(sign) * phi_chars[g][l]);
                    F powed(1);
                    long nn = e < 0 ? -e : e;
                    for (long c = 0; c < nn; ++c) powed = powed * q[l];
                    if (e > 0) qa = qa * powed;
                    if (e < 0) qa = qa / powed;
                }
                if (qa == F(1)) throw Error("QOnWall: q^alpha = 1", 2);
                w[g] = w[g] + hbar * mult_int<F>(ai) / (qa - F(1));
            }
        }
        rows.push_back(std::move(w));
    }
    return canonical_subspace(rows, nphi + k);
}

}  // namespace hyperq
