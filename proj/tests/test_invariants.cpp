#include <doctest.h>

#include <random>

#include "cgk/constructions.hpp"
#include "cgk/geometry.hpp"
#include "cgk/invariants.hpp"
#include "support/braids.hpp"
#include "support/gauss_oracle.hpp"
#include "support/generators.hpp"

using namespace cgk;
using namespace cgk::tests;

TEST_CASE("a2 of reference knots") {
    CHECK(a2(KnotDiagram{}) == 0); // 0-crossing unknot
    for (int s = 1; s <= 5; ++s) {
        CHECK(a2(torus_knot_2q(2 * s + 1)) == s * (s + 1) / 2);
        // mirror: same a2
        KnotDiagram m = torus_knot_2q(2 * s + 1);
        for (auto& p : m.passages) {
            p.sign = -p.sign;
            p.role = p.role == Role::over ? Role::under : Role::over;
        }
        CHECK(a2(m) == s * (s + 1) / 2);
    }
    CHECK(a2(figure_eight()) == -1);
    CHECK(a2_gauss_count(figure_eight()) == -1);
}

TEST_CASE("a2 rejects malformed sequences") {
    KnotDiagram bad;
    bad.passages = {KnotPassage{0, Role::over, 1}, KnotPassage{1, Role::under, 1}};
    CHECK_THROWS_AS(a2(bad), invalid_diagram);
    KnotDiagram twice_over;
    twice_over.passages = {KnotPassage{0, Role::over, 1}, KnotPassage{0, Role::over, 1},
                           KnotPassage{1, Role::over, 1}, KnotPassage{1, Role::under, 1}};
    CHECK_THROWS_AS(a2(twice_over), invalid_diagram);
}

TEST_CASE("skein a2 agrees with the arrow-count oracle") {
    std::mt19937_64 rng(2024);
    for (int q : {3, 5, 7, 9, 11}) CHECK(a2(torus_knot_2q(q)) == a2_gauss_count(torus_knot_2q(q)));

    for (int n : {6, 7}) {
        Diagram h = standard_diagram(n);
        for (const Cycle& c : hamiltonian_cycles(GraphSpec(n))) {
            KnotDiagram k = extract_knot(h, c);
            CHECK(a2(k) == a2_gauss_count(k));
        }
    }
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 2);
        Diagram d = random_gadget_diagram(rng, n);
        auto hams = hamiltonian_cycles(GraphSpec(n));
        const Cycle& c = hams[rng() % hams.size()];
        KnotDiagram k = extract_knot(d, c);
        CHECK(a2(k) == a2_gauss_count(k));
    }
}

TEST_CASE("a2 is stable under basepoint, reversal, and canceling pokes") {
    std::mt19937_64 rng(77);
    std::vector<KnotDiagram> samples = {torus_knot_2q(3), torus_knot_2q(7), figure_eight()};
    Diagram h7 = standard_diagram(7);
    auto hams = hamiltonian_cycles(GraphSpec(7));
    for (int i = 0; i < 10; ++i) samples.push_back(extract_knot(h7, hams[rng() % hams.size()]));

    for (const KnotDiagram& k : samples) {
        const long long base = a2(k);
        for (int t = 0; t < 8; ++t) {
            CHECK(a2(rotated(k, rng() % (k.passages.size() + 1))) == base);
            CHECK(a2_gauss_count(k, rng() % (k.passages.size() + 1)) == base);
        }
        CHECK(a2(reversed(k)) == base);
        for (int t = 0; t < 8; ++t) {
            KnotDiagram poked = with_r2_pair(k, rng(), rng(), rng() % 2 ? 1 : -1);
            CHECK(a2(poked) == base);
            CHECK(a2_gauss_count(poked) == base);
        }
    }
}

TEST_CASE("a2 is independent of the cycle traversal handed to extract_knot") {
    Diagram d = twist_embedding(TwistParams{7, 1, 0, 1});
    for (std::vector<int> cyc : {std::vector<int>{1, 6, 3, 2, 5, 4, 7}, std::vector<int>{1, 2, 3, 4, 5, 6, 7}}) {
        long long base = a2(extract_knot(d, cyc));
        std::vector<int> rev(cyc.rbegin(), cyc.rend());
        CHECK(a2(extract_knot(d, rev)) == base);
        std::rotate(cyc.begin(), cyc.begin() + 3, cyc.end()); // different basepoint vertex
        CHECK(a2(extract_knot(d, cyc)) == base);
    }
}

TEST_CASE("lk of reference links") {
    LinkDiagram split;
    CHECK(lk(split) == 0);
    CHECK(std::abs(lk(torus_link_2q(4))) == 2);
    CHECK(std::abs(lk(torus_link_2q(8))) == 4);

    Diagram h6 = standard_diagram(6);
    LinkDiagram hopf = extract_link(h6, std::vector<int>{1, 3, 5}, std::vector<int>{2, 4, 6});
    CHECK(std::abs(lk(hopf)) == 1);

    // swapping component order preserves lk
    LinkDiagram swapped = extract_link(h6, std::vector<int>{2, 4, 6}, std::vector<int>{1, 3, 5});
    CHECK(lk(swapped) == lk(hopf));

    // exactly one nonsplittable pair among the ten
    int nonzero = 0;
    for (const CyclePair& p : disjoint_triangle_pairs(GraphSpec(6)))
        if (lk(extract_link(h6, p)) != 0) ++nonzero;
    CHECK(nonzero == 1);
}

TEST_CASE("lk flags odd sign sums") {
    LinkDiagram bad;
    bad.inter_ids = {0};
    bad.inter_signs = {1};
    CHECK_THROWS_AS(lk(bad), invalid_diagram);
}

TEST_CASE("invariant_report on the standard diagrams") {
    SUBCASE("h(K_6)") {
        InvariantReport r = invariant_report(standard_diagram(6));
        CHECK(r.sum_a2_hamiltonian == 0);
        CHECK(r.sum_a2_pentagons == 0);
        CHECK(r.sum_lk2_triangles == 1);
        CHECK(r.sum_lk_triangles % 2 != 0);
        CHECK(r.residue_modulus == 1);
        CHECK(r.residue == 0);
    }
    SUBCASE("h(K_7)") {
        InvariantReport r = invariant_report(standard_diagram(7));
        CHECK(r.sum_a2_hamiltonian == 1);
        CHECK(r.sum_a2_pentagons == 0);
        CHECK(r.sum_lk2_triangles == 7);
        CHECK(r.residue_modulus == 2);
        CHECK(r.residue == 1);
    }
    SUBCASE("n below 6 is rejected") {
        CHECK_THROWS_AS(invariant_report(standard_diagram(5)), std::invalid_argument);
    }
}

TEST_CASE("worker count does not change the report") {
    Diagram d = standard_diagram(7);
    InvariantReport r1 = invariant_report(d, 1);
    for (int w : {2, 3, 8}) {
        InvariantReport rw = invariant_report(d, w);
        CHECK(rw.sum_a2_hamiltonian == r1.sum_a2_hamiltonian);
        CHECK(rw.sum_a2_pentagons == r1.sum_a2_pentagons);
        CHECK(rw.sum_lk2_triangles == r1.sum_lk2_triangles);
        CHECK(rw.sum_lk_triangles == r1.sum_lk_triangles);
    }
}

TEST_CASE("identity and congruence checks") {
    for (int n : {6, 7}) {
        InvariantReport r = invariant_report(standard_diagram(n));
        IdentityCheck ic = verify_identity(r);
        CHECK(ic.pass);
        CHECK(ic.lhs == ic.rhs);
        CongruenceCheck cc = verify_congruence(r);
        CHECK(cc.pass.has_value());
        CHECK(*cc.pass);
    }
    // h(K_7): LHS = 1, RHS = (2/2)(7 - 6) = 1
    InvariantReport r7 = invariant_report(standard_diagram(7));
    IdentityCheck ic7 = verify_identity(r7);
    CHECK(ic7.lhs == 1);
    CHECK(ic7.rhs == 1);
    // h(K_6): LHS = 0, RHS = (1/2)(1 - 1) = 0
    InvariantReport r6 = invariant_report(standard_diagram(6));
    IdentityCheck ic6 = verify_identity(r6);
    CHECK(ic6.lhs == 0);
    CHECK(ic6.rhs == 0);

    SUBCASE("random n=7 embedding satisfies both") {
        Diagram d = random_diagram(7, 5);
        InvariantReport r = invariant_report(d);
        CHECK(verify_identity(r).pass);
        CHECK(*verify_congruence(r).pass);
    }
    SUBCASE("non-dividing modulus yields no verdict") {
        CongruenceCheck cc = verify_congruence(r7, Int(5));
        CHECK_FALSE(cc.pass.has_value());
        CHECK(cc.residue == floor_mod(Int(r7.sum_a2_hamiltonian), 5));
        CHECK_THROWS_AS(verify_congruence(r7, Int(0)), std::invalid_argument);
    }
}

TEST_CASE("r_n closed form") {
    CHECK(r_n(6) == 0);
    CHECK(r_n(7) == 1);
    CHECK(r_n(8) == 3);
    CHECK(r_n(9) == 0);
    CHECK(r_n(15) == factorial(10) / 2);
    CHECK(r_n(16) == factorial(11) / 2);
    CHECK(r_n(10) == 0);
    CHECK_THROWS_AS(r_n(5), std::invalid_argument);
}

TEST_CASE("sachs parity on K_6") {
    SachsCheck s = verify_sachs(invariant_report(standard_diagram(6)));
    CHECK(s.pass);
    CHECK(s.odd);
    CHECK_THROWS_AS(verify_sachs(invariant_report(standard_diagram(7))), std::invalid_argument);
}
