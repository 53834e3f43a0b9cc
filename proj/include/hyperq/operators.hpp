#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hyperq/stable_basis.hpp"
#include "hyperq/subspace.hpp"

namespace hyperq {

// ---------------------------------------------------------------------------
// Steinberg operator matrices in the stable basis.
// ---------------------------------------------------------------------------

// Integer matrix of L_S in the moment-ordered fixed-point basis. Column Q is
// nonzero iff |S \ Q| = 1; entries are read off the local T*P^{|S|-1} model:
// normalize by a_Q^{-1}, sort the local indices by eps_l * tau'_l (the
// distinguished index j = S \ Q gets key 0), and conjugate the checkerboard
// matrix [(-1)^{1+i+j}] by that sorting permutation.
inline IntMatrix steinberg_matrix(const HypertoricData& data, const std::vector<Int>& tau,
                                  const CircuitVector& s,
                                  const std::vector<std::vector<std::size_t>>& fps) {
    std::size_t m = fps.size();
    IntMatrix L(m, m);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[fps[i]] = i;

    for (std::size_t qi = 0; qi < m; ++qi) {
        const auto& q = fps[qi];
        std::vector<std::size_t> diff;
        std::set_difference(s.support.begin(), s.support.end(), q.begin(), q.end(),
                            std::back_inserter(diff));
        if (diff.size() != 1) continue;
        std::size_t j = diff[0];

        auto tq = local_cocharacter(data, q, tau);
        std::map<std::size_t, std::size_t> pos_in_q;
        for (std::size_t c = 0; c < q.size(); ++c) pos_in_q[q[c]] = c;

        // Local sorting keys for the members of S.
        std::vector<std::pair<Int, std::size_t>> keyed;
        for (auto l : s.support) {
            Int key = 0;
            if (l != j) {
                Int eps = s.beta[l] * s.beta[j];
                key = eps * tq[pos_in_q[l]];
            }
            keyed.push_back({key, l});
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            return a.first > b.first;  // decreasing
        });
        for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
            if (keyed[i].first == keyed[i + 1].first)
                throw Error("NotStronglyGeneric: local model keys collide");
        std::map<std::size_t, std::size_t> pos;  // member -> 1-based sorted position
        for (std::size_t i = 0; i < keyed.size(); ++i) pos[keyed[i].second] = i + 1;

        for (auto i : s.support) {
            std::vector<std::size_t> row_set;
            std::set_union(q.begin(), q.end(), &j, &j + 1, std::back_inserter(row_set));
            row_set.erase(std::remove(row_set.begin(), row_set.end(), i), row_set.end());
            auto it = index.find(row_set);
            if (it == index.end()) throw Error("steinberg_matrix: exchange set is not a basis");
            int sign = ((1 + pos[i] + pos[j]) % 2 == 0) ? 1 : -1;
            L(it->second, qi) = sign;
        }
    }
    return L;
}

// ---------------------------------------------------------------------------
// Polynomial Steinberg evaluation: hbar * L_S(u_M) in C[u_1..u_n, hbar].
// ---------------------------------------------------------------------------

// Variables: u_1..u_n then hbar (index n).
inline Poly evaluate_L_polynomial(const HypertoricData& data, const CircuitVector& s,
                                  const std::vector<std::size_t>& m_set) {
    std::size_t n = data.n();
    int nv = (int)n + 1;
    // Precondition: M independent.
    IntMatrix sub = data.a.submatrix(identity_rows(data.d()), m_set);
    if (rank_int(sub) != m_set.size()) throw Error("DependentM: M contains a circuit");

    std::vector<std::size_t> diff;
    std::set_difference(s.support.begin(), s.support.end(), m_set.begin(), m_set.end(),
                        std::back_inserter(diff));
    if (diff.size() >= 2) return Poly(nv);
    if (diff.empty()) throw Error("evaluate_L_polynomial: independent M cannot contain S");
    std::size_t i = diff[0];

    auto u = [&](std::size_t idx) { return Poly::variable(nv, (int)idx); };
    Poly h = Poly::variable(nv, nv - 1);

    // z_S = prod_{l in S+} (u_l - hbar) * prod_{l in S-} u_l
    Poly z = Poly::constant(nv, Rat(1));
    for (auto l : s.positive_part) z = z * (u(l) - h);
    for (auto l : s.negative_part) z = z * u(l);
    // hbar L_S(u_M) = u_{M \ S} * beta_i * z_S
    Poly pref = Poly::constant(nv, Rat(s.beta[i]));
    for (auto l : m_set)
        if (s.beta[l] == 0) pref = pref * u(l);
    return pref * z;
}

// Substitute polynomials for the variables of src (non-negative exponents).
inline Poly substitute(const Poly& src, const std::vector<Poly>& images) {
    if (images.empty()) throw Error("substitute: no images");
    int nv = images[0].nvars();
    Poly acc(nv);
    for (auto& [e, c] : src.terms()) {
        Poly term = Poly::constant(nv, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) throw Error("substitute: negative exponent");
            term = term * images[i].pow(e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Cup products and quantum operators, evaluated at an integer (t, hbar) point.
// ---------------------------------------------------------------------------

struct EvalPoint {
    std::vector<Int> t;
    Int h = 1;
};

// Everything needed to conjugate diagonal restriction operators through the
// stable basis at a fixed evaluation point.
struct CupContext {
    const StableBasisModel* sb = nullptr;
    EvalPoint pt;
    RatMatrix t_eval, t_inv;
    std::vector<std::vector<Int>> phi_val;  // phi_val[p][i] = phi_P(u_i)(pt)
};

inline CupContext make_cup_context(const StableBasisModel& sb, const EvalPoint& pt) {
    CupContext ctx;
    ctx.sb = &sb;
    ctx.pt = pt;
    std::size_t m = sb.count(), n = sb.data.n();
    std::vector<Rat> vals;
    for (auto& x : pt.t) vals.push_back(Rat(x));
    vals.push_back(Rat(pt.h));
    ctx.t_eval = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) ctx.t_eval(i, j) = sb.transition(i, j).evaluate(vals);
    ctx.t_inv = inverse(ctx.t_eval);  // throws if the point is degenerate
    ctx.phi_val.assign(m, std::vector<Int>(n));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i) ctx.phi_val[p][i] = sb.phi[p][i].evaluate(pt.t, pt.h);
    return ctx;
}

// Retry seeded integer points until the transition matrix is invertible.
inline CupContext choose_cup_context(const StableBasisModel& sb, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        EvalPoint pt;
        for (std::size_t j = 0; j < sb.data.d(); ++j) pt.t.push_back(rng.int_in(-40, 40));
        pt.h = rng.int_in(1, 40);
        try {
            return make_cup_context(sb, pt);
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("choose_cup_context: no invertible evaluation point found");
}

// T^{-1} diag(phi_P(u_i)) T.
inline RatMatrix cup_matrix(const CupContext& ctx, std::size_t i) {
    std::size_t m = ctx.sb->count();
    RatMatrix dt(m, m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) dt(p, q) = Rat(ctx.phi_val[p][i]) * ctx.t_eval(p, q);
    return ctx.t_inv * dt;
}

// Cup matrix of a divisor v in t^n + C hbar (the hbar component acts as a
// scalar).
inline RatMatrix cup_matrix_of_vector(const CupContext& ctx, const std::vector<Rat>& v) {
    std::size_t m = ctx.sb->count(), n = ctx.sb->data.n();
    RatMatrix dt(m, m);
    for (std::size_t p = 0; p < m; ++p) {
        Rat diag(0);
        for (std::size_t i = 0; i < n; ++i) diag += v[i] * Rat(ctx.phi_val[p][i]);
        if (v.size() > n) diag += v[n] * Rat(ctx.pt.h);
        for (std::size_t q = 0; q < m; ++q) dt(p, q) = diag * ctx.t_eval(p, q);
    }
    return ctx.t_inv * dt;
}

// q^beta for a multiplicative torus point q in (Q^x)^k.
inline Rat character_value(const CircuitVector& beta, const std::vector<Rat>& q) {
    Rat acc(1);
    for (std::size_t l = 0; l < q.size(); ++l) {
        long e = (long)beta.character[l];
        if (e != 0) acc *= pow_rat(q[l], e);
    }
    return acc;
}

inline bool on_wall(const std::vector<CircuitVector>& phi, const std::vector<Rat>& q) {
    for (auto& b : phi)
        if (character_value(b, q) == 1) return true;
    return false;
}

// u_i *_q (-) = u_i cup (-) + hbar sum_beta q^beta/(1-q^beta) beta_i L_beta.
inline RatMatrix quantum_operator(const CupContext& ctx, const std::vector<CircuitVector>& phi,
                                  const std::vector<IntMatrix>& steinberg, std::size_t i,
                                  const std::vector<Rat>& q) {
    RatMatrix m = cup_matrix(ctx, i);
    Rat h = Rat(ctx.pt.h);
    for (std::size_t b = 0; b < phi.size(); ++b) {
        if (phi[b].beta[i] == 0) continue;
        Rat qb = character_value(phi[b], q);
        if (qb == 1) throw Error("QOnWall: q^beta = 1", 2);
        Rat coef = h * qb / (1 - qb) * Rat(phi[b].beta[i]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) += coef * Rat(steinberg[b](r, c));
    }
    return m;
}

// Clear denominators: smallest positive scalar multiple with integer entries.
inline IntMatrix clear_denominators(const RatMatrix& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j) * Rat(l);
            out(i, j) = num(v);
        }
    return out;
}

// Zero test for a commutator of rational matrices via integer scaling.
inline bool commute(const RatMatrix& a, const RatMatrix& b) {
    IntMatrix ia = clear_denominators(a), ib = clear_denominators(b);
    return commutator(ia, ib).is_zero();
}

// ---------------------------------------------------------------------------
// Holonomy relation verification (Theorem: gamma is a Lie algebra morphism
// iff the quantum multiplication operators commute).
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct HolonomyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct OperatorModel {
    HypertoricData data;
    StableBasisModel sb;
    std::vector<CircuitVector> phi;
    std::vector<RankTwoFlat> flats;
    std::vector<IntMatrix> steinberg;
};

inline OperatorModel operator_model(const HypertoricData& data, const std::vector<Int>& tau) {
    OperatorModel om;
    om.data = data;
    om.sb = transition_matrix(data, tau);
    // The operator formulas live on the Kahler-positive orientation of the
    // circuit vectors; the Steinberg matrices themselves are flip-invariant
    // (entries depend only on products beta_i beta_j).
    om.phi = oriented_circuits(data);
    om.flats = rank2_flats(om.phi);
    for (auto& s : om.phi) om.steinberg.push_back(steinberg_matrix(data, tau, s, om.sb.fps));
    return om;
}

// (a) exact integer commutators over every rank-2 flat; (b) delta-relations
// [L_alpha, C_v - 1/2 sum_beta (beta, v) hbar L_beta] = 0 for v spanning
// Ker(alpha~), at `points` seeded evaluation points (exact rational zeros).
inline HolonomyReport holonomy_check(const OperatorModel& om, std::uint64_t seed,
                                     int points = 3) {
    HolonomyReport rep;
    auto name_of = [&](std::size_t b) {
        std::string s = "L[";
        for (auto i : om.phi[b].support) s += std::to_string(i + 1);
        return s + "]";
    };

    for (auto& f : om.flats) {
        if (!f.is_triple) {
            CheckResult c;
            c.name = "flat_pair " + name_of(f.members[0]) + "," + name_of(f.members[1]);
            c.pass = commutator(om.steinberg[f.members[0]], om.steinberg[f.members[1]]).is_zero();
            if (!c.pass) c.witness = "nonzero commutator";
            rep.checks.push_back(c);
        } else {
            auto &a = om.steinberg[f.members[0]], &b = om.steinberg[f.members[1]],
                 &ab = om.steinberg[f.members[2]];
            CheckResult c1;
            c1.name = "flat_triple [" + name_of(f.members[0]) + ", " + name_of(f.members[1]) +
                      "+" + name_of(f.members[2]) + "]";
            c1.pass = commutator(a, b + ab).is_zero();
            rep.checks.push_back(c1);
            CheckResult c2;
            c2.name = "flat_triple [" + name_of(f.members[0]) + "+" + name_of(f.members[2]) +
                      ", " + name_of(f.members[1]) + "]";
            c2.pass = commutator(a + ab, b).is_zero();
            rep.checks.push_back(c2);
        }
    }

    Rng rng(seed);
    std::size_t n = om.data.n();
    for (int ptidx = 0; ptidx < points; ++ptidx) {
        CupContext ctx = choose_cup_context(om.sb, rng);
        Rat h = Rat(ctx.pt.h);
        for (std::size_t b = 0; b < om.phi.size(); ++b) {
            // Kernel of the lifted character alpha~ = (beta, 0) on t^n + C hbar.
            IntMatrix alpha_row(1, n + 1);
            for (std::size_t i = 0; i < n; ++i) alpha_row(0, i) = om.phi[b].beta[i];
            IntMatrix ker = kernel_basis(alpha_row);
            RatMatrix L = to_rat(om.steinberg[b]);
            bool pass = true;
            for (std::size_t vcol = 0; vcol < ker.cols() && pass; ++vcol) {
                std::vector<Rat> v(n + 1);
                for (std::size_t i = 0; i <= n; ++i) v[i] = Rat(ker(i, vcol));
                RatMatrix cv = cup_matrix_of_vector(ctx, v);
                // 2 * delta(v) keeps everything integral after clearing.
                RatMatrix dv2 = cv * Rat(2);
                for (std::size_t b2 = 0; b2 < om.phi.size(); ++b2) {
                    Rat pair(0);
                    for (std::size_t i = 0; i < n; ++i)
                        pair += Rat(om.phi[b2].beta[i]) * v[i];
                    if (pair == 0) continue;
                    RatMatrix lb = to_rat(om.steinberg[b2]);
                    dv2 = dv2 - lb * (pair * h);
                }
                pass = commute(L, dv2);
            }
            CheckResult c;
            c.name = "delta_relation " + name_of(b) + " @pt" + std::to_string(ptidx);
            c.pass = pass;
            if (!pass) c.witness = "commutator nonzero at seeded point";
            rep.checks.push_back(c);
        }
    }
    return rep;
}

// Commutativity of quantum operators at seeded q in T^reg; exact rational
// zero matrices required.
inline HolonomyReport commutativity_check(const OperatorModel& om, std::uint64_t seed,
                                          int q_points = 20) {
    HolonomyReport rep;
    Rng rng(seed);
    std::size_t n = om.data.n(), k = om.data.k();
    CupContext ctx = choose_cup_context(om.sb, rng);
    for (int qi = 0; qi < q_points; ++qi) {
        std::vector<Rat> q;
        do {
            q.clear();
            for (std::size_t l = 0; l < k; ++l) q.push_back(rng.rat(-9, 9));
        } while (on_wall(om.phi, q));
        std::vector<RatMatrix> ops;
        for (std::size_t i = 0; i < n; ++i)
            ops.push_back(quantum_operator(ctx, om.phi, om.steinberg, i, q));
        std::vector<IntMatrix> iops;
        for (auto& o : ops) iops.push_back(clear_denominators(o));
        bool pass = true;
        std::string witness;
        for (std::size_t i = 0; i < n && pass; ++i)
            for (std::size_t j = i + 1; j < n && pass; ++j)
                if (!commutator(iops[i], iops[j]).is_zero()) {
                    pass = false;
                    witness = "[M_" + std::to_string(i + 1) + ", M_" + std::to_string(j + 1) +
                              "] != 0";
                }
        CheckResult c;
        c.name = "quantum_commute @q" + std::to_string(qi);
        c.pass = pass;
        c.witness = witness;
        rep.checks.push_back(c);
    }
    return rep;
}

// Rank of the Steinberg family viewed as vectors in Q^(m^2); certifies
// linear independence when it equals |Phi^+|.
inline std::size_t independence_rank(const std::vector<IntMatrix>& ls) {
    if (ls.empty()) return 0;
    std::size_t m = ls[0].rows();
    RatMatrix stack(ls.size(), m * m);
    for (std::size_t b = 0; b < ls.size(); ++b)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) stack(b, i * m + j) = Rat(ls[b](i, j));
    return rank(stack);
}

// ---------------------------------------------------------------------------
// Grassmannian-valued data (the map Q and its companions).
// ---------------------------------------------------------------------------

// Indices i_1 < ... < i_k such that u_{i_1}..u_{i_k} lift a basis of
// H^2(X)/H^2(pt): pivot rows of the kernel basis.
inline std::vector<std::size_t> lift_basis_indices(const HypertoricData& data) {
    IntMatrix kb = kernel_basis(data.a);
    RatMatrix kt = to_rat(kb.transpose());
    auto piv = rref_in_place(kt);
    return std::vector<std::size_t>(piv.begin(), piv.end());
}

// Span of the flattened quantum multiplication operators for a lift basis.
inline SubspacePoint<Rat> subspace_Q(const CupContext& ctx, const std::vector<CircuitVector>& phi,
                                     const std::vector<IntMatrix>& steinberg,
                                     const std::vector<Rat>& q) {
    const HypertoricData& data = ctx.sb->data;
    std::size_t m = ctx.sb->count();
    std::vector<std::vector<Rat>> rows;
    for (auto i : lift_basis_indices(data)) {
        RatMatrix op = quantum_operator(ctx, phi, steinberg, i, q);
        std::vector<Rat> flat;
        flat.reserve(m * m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) flat.push_back(op(r, c));
        rows.push_back(std::move(flat));
    }
    return canonical_subspace(rows, m * m);
}

// Coordinates in u^1: the t_alpha block (order of phi) then the t^k block.
struct U1Vector {
    std::vector<Rat> coords;
};

inline std::size_t u1_dim(const std::vector<CircuitVector>& phi, std::size_t k) {
    return phi.size() + k;
}

struct FgResult {
    std::vector<Rat> f, g, difference;  // u^1 coordinates
};

// f_q(v) = sum 1/(alpha(q)-1) alpha(v) t_alpha and g_q(v) with alpha(q)
// numerator; their difference is sum alpha(v) t_alpha, independent of q.
inline FgResult fg_maps(const std::vector<CircuitVector>& phi, std::size_t k,
                        const std::vector<Rat>& q, const std::vector<Rat>& v) {
    FgResult r;
    std::size_t dim = u1_dim(phi, k);
    r.f.assign(dim, Rat(0));
    r.g.assign(dim, Rat(0));
    r.difference.assign(dim, Rat(0));
    for (std::size_t b = 0; b < phi.size(); ++b) {
        Rat av(0);
        for (std::size_t l = 0; l < k; ++l) av += Rat(phi[b].character[l]) * v[l];
        if (av == 0) continue;
        Rat aq = character_value(phi[b], q);
        if (aq == 1) throw Error("QOnWall: alpha(q) = 1", 2);
        r.f[b] = av / (aq - 1);
        r.g[b] = av * aq / (aq - 1);
        r.difference[b] = r.g[b] - r.f[b];
    }
    return r;
}

// The interior family: Span{ v_i + hbar sum_{alpha in Phi} alpha(v_i)/(q^alpha - 1) t_alpha }
// in u^1 coordinates, with the sum over Phi = Phi^+ ∪ (-Phi^+).
inline SubspacePoint<Rat> interior_family(const std::vector<CircuitVector>& phi, std::size_t k,
                                          const std::vector<Rat>& q, const Rat& hbar) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rat> w(u1_dim(phi, k), Rat(0));
        w[phi.size() + i] = 1;
        for (std::size_t b = 0; b < phi.size(); ++b) {
            Rat ai = Rat(phi[b].character[i]);
            if (ai == 0) continue;
            Rat qa = character_value(phi[b], q);
            if (qa == 1) throw Error("QOnWall: q^alpha = 1", 2);
            // alpha and -alpha both contribute to the t_alpha coordinate.
            w[b] += hbar * (ai / (qa - 1));
            w[b] += hbar * (-ai / (Rat(1) / qa - 1));
        }
        rows.push_back(std::move(w));
    }
    return canonical_subspace(rows, u1_dim(phi, k));
}

// Delta_*: the shear w -> w - sum_beta beta(x_w) t_beta on the t^k part;
// transports the f_q-family to the g_q-family.
inline SubspacePoint<Rat> delta_star(const SubspacePoint<Rat>& sub,
                                     const std::vector<CircuitVector>& phi, std::size_t k) {
    if (sub.ambient != u1_dim(phi, k)) throw Error("delta_star: ambient mismatch");
    std::vector<std::vector<Rat>> rows;
    for (std::size_t r = 0; r < sub.basis.rows(); ++r) {
        std::vector<Rat> w = sub.basis.row(r);
        for (std::size_t b = 0; b < phi.size(); ++b) {
            Rat bx(0);
            for (std::size_t l = 0; l < k; ++l)
                bx += Rat(phi[b].character[l]) * w[phi.size() + l];
            w[b] -= bx;
        }
        rows.push_back(std::move(w));
    }
    return canonical_subspace(rows, sub.ambient);
}

// ---------------------------------------------------------------------------
// Exact mode: cup and quantum operators over rational functions in (t, hbar).
// ---------------------------------------------------------------------------

using FuncMatrix = Matrix<RatFunc>;

inline FuncMatrix transition_exact(const StableBasisModel& sb) {
    std::size_t m = sb.count();
    FuncMatrix t(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t(i, j) = RatFunc(sb.transition(i, j));
    return t;
}

inline FuncMatrix cup_matrix_exact(const StableBasisModel& sb, std::size_t i) {
    std::size_t m = sb.count();
    FuncMatrix t = transition_exact(sb);
    FuncMatrix tin = inverse(t);
    FuncMatrix dt(m, m);
    for (std::size_t p = 0; p < m; ++p) {
        RatFunc diag(sb.phi[p][i].to_poly());
        for (std::size_t q = 0; q < m; ++q) dt(p, q) = diag * t(p, q);
    }
    return tin * dt;
}

inline FuncMatrix quantum_operator_exact(const StableBasisModel& sb,
                                         const std::vector<CircuitVector>& phi,
                                         const std::vector<IntMatrix>& steinberg, std::size_t i,
                                         const std::vector<Rat>& q) {
    FuncMatrix m = cup_matrix_exact(sb, i);
    int nv = (int)sb.data.d() + 1;
    RatFunc h(Poly::variable(nv, nv - 1));
    for (std::size_t b = 0; b < phi.size(); ++b) {
        if (phi[b].beta[i] == 0) continue;
        Rat qb = character_value(phi[b], q);
        if (qb == 1) throw Error("QOnWall: q^beta = 1", 2);
        RatFunc coef = h * RatFunc(Poly::constant(nv, qb / (1 - qb) * Rat(phi[b].beta[i])));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = m(r, c) + coef * RatFunc(Poly::constant(nv, Rat(steinberg[b](r, c))));
    }
    return m;
}

}  // namespace hyperq
