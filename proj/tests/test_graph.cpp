#include <doctest.h>

#include <set>

#include "cgk/graph.hpp"

using namespace cgk;

TEST_CASE("canonical cycle form") {
    Cycle c = Cycle::canonical(std::vector<int>{3, 1, 2});
    CHECK(c.vertices == std::vector<int>{1, 2, 3});
    // direction tiebreak: second entry smaller than last
    CHECK(Cycle::canonical(std::vector<int>{1, 4, 3, 2}).vertices == std::vector<int>{1, 2, 3, 4});
    // two opposite traversals of one cycle share the canonical form
    CHECK(Cycle::canonical(std::vector<int>{5, 7, 2, 9}).vertices == std::vector<int>{2, 7, 5, 9});
    CHECK(Cycle::canonical(std::vector<int>{5, 9, 2, 7}).vertices == std::vector<int>{2, 7, 5, 9});
    CHECK_THROWS_AS(Cycle::canonical(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Cycle::canonical(std::vector<int>{1, 2, 2}), std::invalid_argument);
}

TEST_CASE("graph spec validation") {
    CHECK_THROWS_AS(GraphSpec(2), std::invalid_argument);
    CHECK(GraphSpec(7).edge_count() == 21);
}

TEST_CASE("hamiltonian cycle enumeration counts") {
    CHECK(hamiltonian_cycles(GraphSpec(3)).size() == 1);
    CHECK(hamiltonian_cycles(GraphSpec(3))[0].vertices == std::vector<int>{1, 2, 3});
    CHECK(hamiltonian_cycles(GraphSpec(7)).size() == 360);
    CHECK(hamiltonian_cycles(GraphSpec(8)).size() == 2520);
}

TEST_CASE("p-cycle enumeration counts match the closed form") {
    // C(n,p) * (p-1)!/2 for all 3 <= p <= n <= 9
    for (int n = 3; n <= 9; ++n) {
        for (int p = 3; p <= n; ++p) {
            const Int expected = binomial(n, p) * factorial(p - 1) / 2;
            CHECK(Int(p_cycles(GraphSpec(n), p).size()) == expected);
        }
    }
    CHECK(p_cycles(GraphSpec(7), 5).size() == 252);
    CHECK(p_cycles(GraphSpec(6), 3).size() == 20);
    CHECK(p_cycles(GraphSpec(5), 5).size() == 12);
    CHECK_THROWS_AS(p_cycles(GraphSpec(5), 2), std::invalid_argument);
    CHECK_THROWS_AS(p_cycles(GraphSpec(5), 6), std::invalid_argument);
}

TEST_CASE("streams are canonical, duplicate-free, and sorted") {
    for (int n = 4; n <= 8; ++n) {
        for (int p : {3, 5, n}) {
            if (p > n) continue;
            auto cycles = p_cycles(GraphSpec(n), p);
            std::set<std::vector<int>> unique_seqs;
            for (const Cycle& c : cycles) {
                CHECK(Cycle::canonical(c.vertices).vertices == c.vertices);
                unique_seqs.insert(c.vertices);
            }
            CHECK(unique_seqs.size() == cycles.size());
            CHECK(std::is_sorted(cycles.begin(), cycles.end()));
        }
    }
}

TEST_CASE("disjoint triangle pairs") {
    CHECK(disjoint_triangle_pairs(GraphSpec(6)).size() == 10);
    CHECK(disjoint_triangle_pairs(GraphSpec(7)).size() == 70);
    CHECK(disjoint_triangle_pairs(GraphSpec(5)).empty());

    auto pairs = disjoint_triangle_pairs(GraphSpec(8));
    CHECK(Int(pairs.size()) == binomial(8, 6) * 10);
    std::set<std::pair<std::vector<int>, std::vector<int>>> unique;
    for (const CyclePair& p : pairs) {
        CHECK(p.first.vertices.front() < p.second.vertices.front());
        unique.insert({p.first.vertices, p.second.vertices});
    }
    CHECK(unique.size() == pairs.size());
}

TEST_CASE("hamiltonian cycles through a length-3 path") {
    const std::vector<int> path{1, 2, 3, 4};
    CHECK(hamiltonian_cycles_through_path(GraphSpec(7), path) == 6);
    CHECK(hamiltonian_cycles_through_path(GraphSpec(6), path) == 2);

    // brute-force oracle: filter the full enumeration for the three edges
    auto contains_edge = [](const Cycle& c, int a, int b) {
        for (auto [u, v] : c.traversal_edges())
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    };
    for (int n = 5; n <= 8; ++n) {
        for (std::vector<int> p : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 5, 1, 4}}) {
            if (*std::max_element(p.begin(), p.end()) > n) continue;
            long long count = 0;
            for (const Cycle& c : hamiltonian_cycles(GraphSpec(n)))
                if (contains_edge(c, p[0], p[1]) && contains_edge(c, p[1], p[2]) && contains_edge(c, p[2], p[3])) ++count;
            CHECK(hamiltonian_cycles_through_path(GraphSpec(n), p) == count);
        }
    }
    // spec'd instance: n=8, path 2-5-1-7 -> 24
    const std::vector<int> p2{2, 5, 1, 7};
    long long count = 0;
    for (const Cycle& c : hamiltonian_cycles(GraphSpec(8)))
        if (contains_edge(c, 2, 5) && contains_edge(c, 5, 1) && contains_edge(c, 1, 7)) ++count;
    CHECK(count == 24);
    CHECK(hamiltonian_cycles_through_path(GraphSpec(8), p2) == 24);

    CHECK_THROWS_AS(hamiltonian_cycles_through_path(GraphSpec(7), std::vector<int>{1, 2, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_cycles_through_path(GraphSpec(7), std::vector<int>{1, 2, 3}), std::invalid_argument);
}
