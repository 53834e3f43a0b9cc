#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hyperq/hypertoric.hpp"
#include "hyperq/laurent.hpp"

namespace hyperq {

// Linear form c_1 t_1 + ... + c_d t_d + c_h hbar with integer coefficients.
struct LinearForm {
    std::vector<Int> t;
    Int h = 0;

    bool is_zero() const {
        if (h != 0) return false;
        for (auto& c : t)
            if (c != 0) return false;
        return true;
    }
    bool is_hbar() const {
        if (h != 1) return false;
        for (auto& c : t)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const LinearForm& o) const { return t == o.t && h == o.h; }

    LinearForm operator-(const LinearForm& o) const {
        LinearForm r = *this;
        for (std::size_t i = 0; i < t.size(); ++i) r.t[i] -= o.t[i];
        r.h -= o.h;
        return r;
    }

    // As a polynomial in variables (t_1, ..., t_d, hbar).
    Poly to_poly() const {
        int n = (int)t.size() + 1;
        Poly p(n);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] != 0) p.add_term([&] {
                std::vector<int> e(n, 0);
                e[i] = 1;
                return e;
            }(), Rat(t[i]));
        if (h != 0) p.add_term([&] {
            std::vector<int> e(n, 0);
            e[n - 1] = 1;
            return e;
        }(), Rat(h));
        return p;
    }

    Int evaluate(const std::vector<Int>& tv, const Int& hv) const {
        Int s = h * hv;
        for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * tv[i];
        return s;
    }
};

inline LinearForm hbar_form(std::size_t d) {
    LinearForm f;
    f.t.assign(d, Int(0));
    f.h = 1;
    return f;
}

struct GenericityReport {
    bool generic = false;
    bool strong = false;
    std::string witness;
};

// a_Q^{-1} tau for a basis Q; entries integral by unimodularity.
inline std::vector<Int> local_cocharacter(const HypertoricData& data,
                                          const std::vector<std::size_t>& q,
                                          const std::vector<Int>& tau) {
    IntMatrix aq = data.a.submatrix(identity_rows(data.d()), q);
    IntMatrix inv = int_inverse(aq);
    std::vector<Int> out(q.size(), Int(0));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i] += inv(i, j) * tau[j];
    return out;
}

// generic: all entries of a_Q^{-1} tau nonzero at every basis Q.
// strong: per circuit, the local model keys eps_l * tau'_l together with the
// distinguished value 0 are pairwise distinct.
inline GenericityReport is_generic(const HypertoricData& data, const std::vector<Int>& tau) {
    GenericityReport rep;
    auto fps = fixed_points(data);
    std::map<std::vector<std::size_t>, std::vector<Int>> taus;
    for (auto& q : fps) {
        auto t = local_cocharacter(data, q, tau);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] == 0) {
                rep.witness = "a_Q^{-1} tau vanishes at basis entry " + std::to_string(i + 1);
                return rep;
            }
        taus[q] = t;
    }
    rep.generic = true;
    rep.strong = true;
    auto phi = circuits(data);
    for (auto& s : phi) {
        for (auto& q : fps) {
            std::vector<std::size_t> diff;
            std::set_difference(s.support.begin(), s.support.end(), q.begin(), q.end(),
                                std::back_inserter(diff));
            if (diff.size() != 1) continue;
            std::size_t j = diff[0];
            std::vector<Int> keys;
            keys.push_back(0);  // the distinguished index j
            for (std::size_t c = 0; c < q.size(); ++c) {
                std::size_t i = q[c];
                if (s.beta[i] == 0) continue;
                Int eps = s.beta[i] * s.beta[j];
                keys.push_back(eps * taus[q][c]);
            }
            std::sort(keys.begin(), keys.end());
            for (std::size_t i = 0; i + 1 < keys.size(); ++i)
                if (keys[i] == keys[i + 1]) {
                    rep.strong = false;
                    rep.witness = "local keys collide for a circuit at a basis";
                    return rep;
                }
        }
    }
    return rep;
}

// Squarefree stable-basis monomial v_Q: per i in Q, u_i when the matching
// entry of a_Q^{-1} tau is positive, hbar - u_i otherwise.
struct StabMonomial {
    std::vector<std::size_t> q;
    std::vector<bool> plus;  // aligned with q: true = u_i factor
};

inline StabMonomial stab_monomial(const HypertoricData& data, const std::vector<Int>& tau,
                                  const std::vector<std::size_t>& q) {
    auto t = local_cocharacter(data, q, tau);
    StabMonomial m;
    m.q = q;
    m.plus.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (t[i] == 0) throw Error("NotGeneric: a_Q^{-1} tau has a zero entry");
        m.plus[i] = t[i] > 0;
    }
    return m;
}

// Fixed-point restriction model: phi_P(u_i) for all P, i, with the global
// side orientation calibrated so that every circuit relation restricts to
// zero (self-certifying; the polynomial ring is a domain, so the product of
// linear forms vanishes iff one factor does).
struct RestrictionModel {
    std::vector<std::vector<std::size_t>> fps;     // lexicographic order
    std::vector<std::vector<Rat>> vertices;        // per fixed point
    std::vector<std::vector<LinearForm>> phi;      // phi[p][i], i = 0..n-1
    int orientation = +1;
};

inline bool circuit_relations_vanish(const HypertoricData& data,
                                     const std::vector<CircuitVector>& phi_set,
                                     const std::vector<std::vector<std::size_t>>& fps,
                                     const std::vector<std::vector<LinearForm>>& phi) {
    for (std::size_t p = 0; p < fps.size(); ++p) {
        for (auto& s : phi_set) {
            bool vanishes = false;
            for (auto i : s.positive_part)
                if (phi[p][i].is_zero()) vanishes = true;
            for (auto i : s.negative_part)
                if (phi[p][i].is_hbar()) vanishes = true;
            if (!vanishes) return false;
        }
    }
    return true;
}

inline RestrictionModel restriction_model(const HypertoricData& data) {
    if (!data.chi) throw Error("ChiMissing: restrictions require a character lift");
    auto rep = validate_smooth(data);
    if (!rep.ok()) throw Error(rep.simple ? "NotSmooth: " + rep.witness
                                          : "ChiNotGeneric: " + rep.witness);
    std::size_t d = data.d(), n = data.n();
    RestrictionModel model;
    model.fps = fixed_points_unchecked(data);
    for (auto& q : model.fps) model.vertices.push_back(vertex(data, q));
    auto phi_set = oriented_circuits(data);

    for (int orient : {+1, -1}) {
        model.orientation = orient;
        model.phi.assign(model.fps.size(), std::vector<LinearForm>(n));
        for (std::size_t p = 0; p < model.fps.size(); ++p) {
            auto& q = model.fps[p];
            auto& v = model.vertices[p];
            // Off-basis coordinates: 0 on the positive side, hbar otherwise.
            std::vector<Int> w(d, Int(0));  // sum of a_j over hbar-valued columns
            for (std::size_t j = 0; j < n; ++j) {
                if (std::find(q.begin(), q.end(), j) != q.end()) continue;
                Rat sv = side_value(data, v, j) * orient;
                LinearForm f;
                f.t.assign(d, Int(0));
                if (sv > 0) {
                    f.h = 0;
                } else {
                    f.h = 1;
                    for (std::size_t r = 0; r < d; ++r) w[r] += data.a(r, j);
                }
                model.phi[p][j] = f;
            }
            // Basis coordinates solve sum_i a_{ji} phi(u_i) = t_j.
            IntMatrix aq = data.a.submatrix(identity_rows(d), q);
            IntMatrix inv = int_inverse(aq);
            for (std::size_t c = 0; c < q.size(); ++c) {
                LinearForm f;
                f.t.assign(d, Int(0));
                for (std::size_t j = 0; j < d; ++j) f.t[j] = inv(c, j);
                Int hc = 0;
                for (std::size_t j = 0; j < d; ++j) hc -= inv(c, j) * w[j];
                f.h = hc;
                model.phi[p][q[c]] = f;
            }
        }
        if (circuit_relations_vanish(data, phi_set, model.fps, model.phi)) return model;
    }
    throw Error("restriction side convention failed to certify for both orientations");
}

inline LinearForm restriction(const HypertoricData& data, const std::vector<std::size_t>& q,
                              std::size_t i) {
    RestrictionModel m = restriction_model(data);
    for (std::size_t p = 0; p < m.fps.size(); ++p)
        if (m.fps[p] == q) return m.phi[p][i];
    throw Error("restriction: not a fixed point");
}

// Localization data of the stable basis: moment-ordered fixed points, the
// monomials v_Q, and the transition matrix T_{P,Q} = phi_P(v_Q) over
// polynomials in (t_1..t_d, hbar).
struct StableBasisModel {
    HypertoricData data;
    std::vector<Int> tau;
    std::vector<std::vector<std::size_t>> fps;  // moment order
    std::vector<std::vector<Rat>> vertices;
    std::vector<Rat> moment_keys;               // <v_Q, tau>, strictly increasing
    std::vector<StabMonomial> monomials;
    std::vector<std::vector<LinearForm>> phi;   // phi[p][i]
    Matrix<Poly> transition;                    // row P, col Q
    int orientation = +1;

    std::size_t count() const { return fps.size(); }
    std::size_t index_of(const std::vector<std::size_t>& q) const {
        for (std::size_t i = 0; i < fps.size(); ++i)
            if (fps[i] == q) return i;
        throw Error("StableBasisModel: unknown fixed point");
    }
};

inline Poly restrict_monomial(const StableBasisModel& m, std::size_t p, const StabMonomial& mono) {
    std::size_t d = m.data.d();
    Poly acc = Poly::constant((int)d + 1, Rat(1));
    for (std::size_t c = 0; c < mono.q.size(); ++c) {
        LinearForm f = m.phi[p][mono.q[c]];
        if (!mono.plus[c]) f = hbar_form(d) - f;
        if (f.is_zero()) return Poly((int)d + 1);
        acc = acc * f.to_poly();
    }
    return acc;
}

inline StableBasisModel transition_matrix(const HypertoricData& data,
                                          const std::vector<Int>& tau) {
    auto gen = is_generic(data, tau);
    if (!gen.generic) throw Error("NotGeneric: " + gen.witness);
    RestrictionModel rm = restriction_model(data);

    StableBasisModel m;
    m.data = data;
    m.tau = tau;
    m.orientation = rm.orientation;

    // Moment order: sort fixed points by <v_Q, tau>, ties are a hard error.
    std::vector<std::size_t> perm(rm.fps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<Rat> keys(rm.fps.size());
    for (std::size_t i = 0; i < rm.fps.size(); ++i) {
        Rat k(0);
        for (std::size_t j = 0; j < data.d(); ++j) k += rm.vertices[i][j] * Rat(tau[j]);
        keys[i] = k;
    }
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return rm.fps[a] < rm.fps[b];
    });
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        if (keys[perm[i]] == keys[perm[i + 1]])
            throw Error("MomentOrderTie: tau does not separate the vertices");

    for (auto i : perm) {
        m.fps.push_back(rm.fps[i]);
        m.vertices.push_back(rm.vertices[i]);
        m.moment_keys.push_back(keys[i]);
        m.phi.push_back(rm.phi[i]);
    }
    for (auto& q : m.fps) m.monomials.push_back(stab_monomial(data, tau, q));

    std::size_t mcount = m.fps.size();
    m.transition = Matrix<Poly>(mcount, mcount);
    for (std::size_t p = 0; p < mcount; ++p)
        for (std::size_t q = 0; q < mcount; ++q)
            m.transition(p, q) = restrict_monomial(m, p, m.monomials[q]);

    // Support axiom: nonzero entries only on or above the diagonal
    // (moment key of P <= moment key of Q).
    for (std::size_t p = 0; p < mcount; ++p) {
        if (m.transition(p, p).is_zero())
            throw Error("transition_matrix: vanishing diagonal entry");
        for (std::size_t q = 0; q < p; ++q)
            if (!m.transition(p, q).is_zero())
                throw Error("transition_matrix: support axiom violated below the diagonal");
    }
    return m;
}

}  // namespace hyperq
