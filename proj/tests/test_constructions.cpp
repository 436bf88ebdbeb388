#include <doctest.h>

#include "cgk/constructions.hpp"
#include "cgk/diagram_json.hpp"
#include "cgk/geometry.hpp"
#include "cgk/invariants.hpp"

using namespace cgk;

TEST_CASE("closed forms r_n, c_n, sigma, tau") {
    CHECK(c_n(6) == 0);
    CHECK(c_n(7) == 1);
    CHECK(c_n(8) == 21);
    CHECK(c_n(9) == 12 * (binomial(9, 6) - binomial(8, 5))); // (4!/2)(84 - 56) = 336
    CHECK_THROWS_AS(c_n(5), std::invalid_argument);

    CHECK(sigma(0, 0, 0) == 0);
    CHECK(tau(7, 0, 0, 0) == 0);
    CHECK(sigma(1, 0, 1) == 1);
    CHECK(tau(7, 1, 0, 1) == 1);
    CHECK(sigma(1, 0, 2) == 6);
    CHECK(tau(7, 1, 0, 2) == 2);
    CHECK(sigma(1, 1, 1) == 2);
    CHECK(tau(8, 1, 1, 1) == 1);
    CHECK_THROWS_AS(sigma(-1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(tau(7, 2, 2, 1), std::invalid_argument); // k + l > n - 4
}

TEST_CASE("twist parameter validation") {
    CHECK_THROWS_AS(twist_embedding(TwistParams{5, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(twist_embedding(TwistParams{7, 2, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(twist_embedding(TwistParams{7, -1, 0, 1}), std::invalid_argument);
    TwistParams p{7, 1, 0, 1};
    CHECK(p.e1() == Edge{1, 6});
    CHECK(p.e2() == Edge{2, 5});
}

TEST_CASE("twist with s = 0 is the standard diagram") {
    Diagram t = twist_embedding(TwistParams{7, 1, 0, 0});
    Diagram h = standard_diagram(7);
    CHECK(t.walks == h.walks);
    CHECK(t.crossings == h.crossings);
    CHECK(t.meta.builder == "twist");
}

TEST_CASE("twist diagrams validate cleanly") {
    for (auto [n, k, l, s] : {std::array<int, 4>{6, 0, 0, 1}, {7, 1, 0, 2}, {7, 3, 0, 1}, {8, 2, 1, 2}}) {
        Diagram d = twist_embedding(TwistParams{n, k, l, s});
        auto rep = validate(d);
        CHECK(rep.ok());
        CHECK(rep.warnings.empty()); // no self-crossings from the builders
    }
}

TEST_CASE("twist sums match the closed forms") {
    // the two spec'd instances, frozen: 1 + 6 sigma(1,0,s) + 2 tau(7,1,0,s)
    CHECK(invariant_report(twist_embedding(TwistParams{7, 1, 0, 1}), 2).sum_a2_hamiltonian == 9);
    CHECK(invariant_report(twist_embedding(TwistParams{7, 1, 0, 2}), 2).sum_a2_hamiltonian == 41);

    // full brute-force sweep at n = 6
    const Int c6 = Int(invariant_report(standard_diagram(6)).sum_a2_hamiltonian);
    CHECK(c6 == c_n(6));
    for (int k = 0; k + 4 <= 6; ++k) {
        for (int l = 0; k + l + 4 <= 6; ++l) {
            for (int s = 0; s <= 2; ++s) {
                InvariantReport rep = invariant_report(twist_embedding(TwistParams{6, k, l, s}), 2);
                const Int expected = c6 + factorial(2) * sigma(k, l, s) + factorial(1) * tau(6, k, l, s);
                INFO("k=", k, " l=", l, " s=", s);
                CHECK(Int(rep.sum_a2_hamiltonian) == expected);
                CHECK(verify_identity(rep).pass);
                CHECK(*verify_congruence(rep).pass);
            }
        }
    }
}

TEST_CASE("delta gadget changes exactly the knots through its path") {
    for (int n : {6, 7}) {
        Diagram h = standard_diagram(n);
        GraphSpec gs(n);
        auto base_ham = hamiltonian_cycles(gs);
        for (int sign : {+1, -1}) {
            Diagram d = delta_gadget(h, {1, 2, 3, 4}, sign);
            auto rep = validate(d);
            CHECK(rep.ok());
            CHECK(rep.warnings.empty());

            int changed = 0;
            auto on_path = [](const Cycle& c) {
                auto has = [&](int a, int b) {
                    for (auto [u, v] : c.traversal_edges())
                        if ((u == a && v == b) || (u == b && v == a)) return true;
                    return false;
                };
                return has(1, 2) && has(2, 3) && has(3, 4);
            };
            for (const Cycle& c : base_ham) {
                long long before = a2(extract_knot(h, c));
                long long after = a2(extract_knot(d, c));
                if (on_path(c)) {
                    CHECK(after - before == sign);
                    ++changed;
                } else {
                    CHECK(after == before);
                }
            }
            CHECK(Int(changed) == factorial(n - 4));

            // pentagon sums shift by (n-4) * sign; lk values are untouched
            InvariantReport before = invariant_report(h, 2), after = invariant_report(d, 2);
            CHECK(after.sum_a2_pentagons - before.sum_a2_pentagons == sign * (n - 4));
            CHECK(after.sum_lk2_triangles == before.sum_lk2_triangles);
            CHECK(after.sum_lk_triangles == before.sum_lk_triangles);
            CHECK(verify_identity(after).pass);
        }
    }
}

TEST_CASE("delta gadgets cancel and commute") {
    Diagram h = standard_diagram(6);
    InvariantReport base = invariant_report(h);

    Diagram up_down = delta_gadget(delta_gadget(h, {1, 2, 3, 4}, +1), {1, 2, 3, 4}, -1);
    InvariantReport r1 = invariant_report(up_down);
    CHECK(r1.sum_a2_hamiltonian == base.sum_a2_hamiltonian);

    Diagram down_up = delta_gadget(delta_gadget(h, {1, 2, 3, 4}, -1), {1, 2, 3, 4}, +1);
    InvariantReport r2 = invariant_report(down_up);
    CHECK(r2.sum_a2_hamiltonian == base.sum_a2_hamiltonian);

    // stacking on top of a twist
    Diagram twist = twist_embedding(TwistParams{6, 0, 0, 1});
    Diagram a = delta_gadget(delta_gadget(twist, {1, 2, 3, 4}, +1), {1, 2, 3, 4}, +1);
    InvariantReport ra = invariant_report(a, 2);
    CHECK(Int(ra.sum_a2_hamiltonian) == Int(invariant_report(twist, 2).sum_a2_hamiltonian) + 2 * factorial(2));
    CHECK(verify_identity(ra).pass);
}

TEST_CASE("delta gadget input validation") {
    Diagram h = standard_diagram(6);
    CHECK_THROWS_AS(delta_gadget(h, {1, 2, 2, 4}, +1), std::invalid_argument);
    CHECK_THROWS_AS(delta_gadget(h, {1, 2, 3, 9}, +1), std::invalid_argument);
    CHECK_THROWS_AS(delta_gadget(h, {1, 2, 3, 4}, 0), std::invalid_argument);
    // no replayable recipe on a random diagram
    Diagram r = random_diagram(6, 3);
    CHECK_THROWS_AS(delta_gadget(r, {1, 2, 3, 4}, +1), std::invalid_argument);
}

TEST_CASE("realization planner arithmetic") {
    SUBCASE("n=7, m=9") {
        RealizationPlan p = plan_realization(7, 9);
        CHECK(p.k == 1);
        CHECK(p.l == 0);
        CHECK(p.s == 1);
        CHECK(p.predicted_sum == 9);
        CHECK(p.delta_count == 0);
    }
    SUBCASE("n=7, m=-1") {
        RealizationPlan p = plan_realization(7, -1);
        CHECK(p.s == 2);
        CHECK(p.predicted_sum == 41);
        CHECK(p.delta_count == -7);
    }
    SUBCASE("n=8, m=27") {
        RealizationPlan p = plan_realization(8, 27);
        CHECK(p.k == 1);
        CHECK(p.l == 1);
        CHECK(p.s == 1);
        CHECK(p.predicted_sum == 75);
        CHECK(p.delta_count == -2);
    }
    SUBCASE("n=6 admits every integer") {
        for (int m : {-3, 0, 1, 4}) {
            RealizationPlan p = plan_realization(6, m);
            CHECK(p.k == 0);
            CHECK(p.l == 0);
            CHECK(p.predicted_sum + p.delta_count * factorial(2) == m);
        }
    }
    SUBCASE("inadmissible targets are rejected with the congruence class") {
        CHECK_THROWS_AS(plan_realization(7, 2), inadmissible_target);
        CHECK_THROWS_AS(plan_realization(8, 4), inadmissible_target);
        try {
            plan_realization(7, 2);
        } catch (const inadmissible_target& e) {
            std::string msg = e.what();
            CHECK(msg.find("(mod 2)") != std::string::npos);
            CHECK(msg.find("1 and 3") != std::string::npos); // nearest admissible
        }
    }
    SUBCASE("plan invariant: predicted + deltas*(n-4)! = m") {
        for (int j = -5; j <= 5; ++j) {
            Int m = r_n(7) + 2 * j;
            RealizationPlan p = plan_realization(7, m);
            CHECK(p.predicted_sum + p.delta_count * factorial(3) == m);
            CHECK(p.s >= 0);
            CHECK(p.s <= 2);
        }
    }
    SUBCASE("large targets plan exactly") {
        Int big("123456789012345678901234567890");
        Int m = big * factorial(15) + r_n(20);
        RealizationPlan p = plan_realization(20, m);
        CHECK(p.predicted_sum + p.delta_count * factorial(16) == m);
    }
}

TEST_CASE("realize round trips in a small window") {
    for (int n : {6, 7}) {
        for (int j : {-2, 0, 3}) {
            Int m = r_n(n) + j * factorial(n - 5);
            Diagram d = realize(n, m, true, 2); // throws on mismatch
            CHECK(d.meta.builder == "realize");
            InvariantReport rep = invariant_report(d, 2);
            CHECK(Int(rep.sum_a2_hamiltonian) == m);
            CHECK(verify_identity(rep).pass);
            CHECK(*verify_congruence(rep).pass);
        }
    }
    // the value the standard K_7 itself realizes
    Diagram d = realize(7, 1, true, 2);
    CHECK(invariant_report(d, 2).sum_a2_hamiltonian == 1);
}

TEST_CASE("constructed diagrams serialize with their recipes") {
    Diagram d = realize(6, -3);
    Diagram back = deserialize(serialize(d));
    CHECK(back == d);
    // the recipe replays to the same diagram
    Diagram replayed = diagram_from_embedding(replay_embedding(back.meta));
    CHECK(replayed.walks == d.walks);
    CHECK(replayed.crossings == d.crossings);
}
