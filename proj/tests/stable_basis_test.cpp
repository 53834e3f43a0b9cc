#include <gtest/gtest.h>

#include "hyperq/stable_basis.hpp"

using namespace hyperq;

namespace {

HypertoricData section23_example(bool with_chi = false) {
    HypertoricData d;
    d.a = IntMatrix{{Int(1), Int(0), Int(0), Int(-1)}, {Int(0), Int(1), Int(-1), Int(-1)}};
    if (with_chi) d.chi = std::vector<Int>{Int(0), Int(0), Int(1), Int(3)};
    return d;
}

HypertoricData tpn(std::size_t n, bool with_chi = false) {
    HypertoricData d;
    d.a = IntMatrix(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        d.a(i, i) = 1;
        d.a(i, n) = -1;
    }
    if (with_chi) {
        std::vector<Int> chi(n + 1);
        for (std::size_t i = 0; i <= n; ++i) chi[i] = Int(1) << i;
        d.chi = chi;
    }
    return d;
}

std::vector<Int> tau_desc(std::size_t n) {
    std::vector<Int> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = Int(n - i);
    return t;
}

}  // namespace

TEST(IsGeneric, PaperTau) {
    auto d = section23_example();
    auto rep = is_generic(d, {Int(2), Int(1)});
    EXPECT_TRUE(rep.generic);
}

TEST(IsGeneric, ZeroTauFails) {
    auto d = section23_example();
    auto rep = is_generic(d, {Int(0), Int(0)});
    EXPECT_FALSE(rep.generic);
    EXPECT_FALSE(rep.witness.empty());
}

TEST(IsGeneric, TP3Strong) {
    auto rep = is_generic(tpn(3), tau_desc(3));
    EXPECT_TRUE(rep.generic);
    EXPECT_TRUE(rep.strong);
}

TEST(StabMonomial, PaperExamples) {
    auto d = section23_example();
    std::vector<Int> tau{Int(2), Int(1)};
    // Q4 = {2,4} in the paper's 1-based labels.
    auto m4 = stab_monomial(d, tau, {1, 3});
    EXPECT_EQ(m4.plus, (std::vector<bool>{false, false}));  // (h-u2)(h-u4)
    auto m1 = stab_monomial(d, tau, {0, 1});
    EXPECT_EQ(m1.plus, (std::vector<bool>{true, true}));  // u1 u2
}

TEST(StabMonomial, TPnPattern) {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto d = tpn(n);
        auto tau = tau_desc(n);
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<std::size_t> q;
            for (std::size_t j = 0; j <= n; ++j)
                if (j != i) q.push_back(j);
            auto m = stab_monomial(d, tau, q);
            // u_1 ... u_{i-1} (h-u_{i+1}) ... (h-u_{n+1})
            for (std::size_t c = 0; c < q.size(); ++c)
                EXPECT_EQ(m.plus[c], q[c] < i) << n << " " << i;
        }
    }
}

TEST(Restriction, DefiningConstraintHolds) {
    auto d = section23_example(true);
    auto rm = restriction_model(d);
    // sum_i a_{ji} phi_Q(u_i) = t_j for every Q and j, as linear forms.
    for (std::size_t p = 0; p < rm.fps.size(); ++p) {
        for (std::size_t j = 0; j < d.d(); ++j) {
            LinearForm acc;
            acc.t.assign(d.d(), Int(0));
            for (std::size_t i = 0; i < d.n(); ++i) {
                for (std::size_t r = 0; r < d.d(); ++r)
                    acc.t[r] += d.a(j, i) * rm.phi[p][i].t[r];
                acc.h += d.a(j, i) * rm.phi[p][i].h;
            }
            for (std::size_t r = 0; r < d.d(); ++r) EXPECT_EQ(acc.t[r], r == j ? 1 : 0);
            EXPECT_EQ(acc.h, 0);
        }
    }
}

TEST(Restriction, CircuitRelationsVanishEverywhere) {
    auto d = section23_example(true);
    auto rm = restriction_model(d);
    EXPECT_TRUE(circuit_relations_vanish(d, circuits(d), rm.fps, rm.phi));
}

TEST(Restriction, TP1ByHand) {
    HypertoricData d;
    d.a = IntMatrix{{Int(1), Int(-1)}};
    d.chi = std::vector<Int>{Int(1), Int(0)};
    auto rm = restriction_model(d);
    ASSERT_EQ(rm.fps.size(), 2u);
    // Non-basis coordinate restricts to 0 or hbar at each fixed point.
    for (std::size_t p = 0; p < 2; ++p) {
        auto& q = rm.fps[p];
        for (std::size_t i = 0; i < 2; ++i) {
            if (std::find(q.begin(), q.end(), i) != q.end()) continue;
            EXPECT_TRUE(rm.phi[p][i].is_zero() || rm.phi[p][i].is_hbar());
        }
    }
    // Single defining relation reproduces t.
    LinearForm diff = rm.phi[0][0] - rm.phi[0][1];
    EXPECT_EQ(diff.t[0], 1);
    EXPECT_EQ(diff.h, 0);
}

TEST(TransitionMatrix, TP1Triangular) {
    HypertoricData d;
    d.a = IntMatrix{{Int(1), Int(-1)}};
    d.chi = std::vector<Int>{Int(1), Int(0)};
    auto m = transition_matrix(d, {Int(1)});
    ASSERT_EQ(m.count(), 2u);
    EXPECT_TRUE(m.transition(1, 0).is_zero());
    EXPECT_FALSE(m.transition(0, 0).is_zero());
    EXPECT_FALSE(m.transition(1, 1).is_zero());
    // Diagonal entries are single linear forms (d = 1): total degree 1.
    for (std::size_t i = 0; i < 2; ++i) {
        for (auto& [e, c] : m.transition(i, i).terms()) {
            int deg = 0;
            for (int x : e) deg += x;
            EXPECT_EQ(deg, 1);
        }
    }
}

TEST(TransitionMatrix, DiagonalEqualsSelfRestriction) {
    auto d = section23_example(true);
    auto m = transition_matrix(d, {Int(2), Int(1)});
    for (std::size_t q = 0; q < m.count(); ++q)
        EXPECT_EQ(m.transition(q, q), restrict_monomial(m, q, m.monomials[q]));
}

TEST(TransitionMatrix, Paper5x5TriangularAndInvertible) {
    auto d = section23_example(true);
    auto m = transition_matrix(d, {Int(2), Int(1)});
    ASSERT_EQ(m.count(), 5u);
    for (std::size_t p = 0; p < 5; ++p)
        for (std::size_t q = 0; q < p; ++q) EXPECT_TRUE(m.transition(p, q).is_zero());
    // det(T) != 0 as a polynomial: witnessed by a random rational point
    // (several samples; a single unlucky point can kill a diagonal factor).
    Rng rng(17);
    bool witnessed = false;
    for (int trial = 0; trial < 5 && !witnessed; ++trial) {
        std::vector<Rat> pt{rng.rat(), rng.rat(), rng.rat()};
        RatMatrix num(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) num(i, j) = m.transition(i, j).evaluate(pt);
        witnessed = rank(num) == 5u;
    }
    EXPECT_TRUE(witnessed);
}

TEST(TransitionMatrix, MomentOrderTieDetected) {
    auto d = section23_example(true);
    bool rejected = false;
    try {
        transition_matrix(d, {Int(0), Int(1)});
    } catch (const Error& e) {
        std::string w = e.what();
        rejected = w.find("MomentOrderTie") != std::string::npos ||
                   w.find("NotGeneric") != std::string::npos;
    }
    EXPECT_TRUE(rejected);
}
