#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "domcycle/cycles.hpp"
#include "domcycle/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domcycle;

TEST_CASE("longest cycle on named graphs") {
    CHECK(longest_cycle_length(fixtures::path(5)) == 0);
    CHECK(longest_cycle_length(fixtures::cycle(3)) == 3);
    CHECK(longest_cycle_length(fixtures::cycle(8)) == 8);
    CHECK(longest_cycle_length(Graph::complete(8)) == 8);
    CHECK(longest_cycle_length(witness8()) == 6);
    CHECK(longest_cycle_length(fixtures::petersen()) == 9);  // hypohamiltonian
    CHECK(longest_cycle_length(Graph::join(Graph::complete(3), Graph::edgeless(4))) == 6);
    CHECK(longest_cycle_length(Graph::edgeless(4)) == 0);
}

TEST_CASE("branch-and-bound equals unpruned DFS on all graphs n <= 7") {
    for (const Graph& g : fixtures::all_graphs_upto(7))
        CHECK(longest_cycle_length(g) == oracle::longest_cycle_length(g));
}

TEST_CASE("branch-and-bound equals unpruned DFS on random graphs n in {9,10}") {
    std::uint64_t state = 0xabcdef12345ull;
    for (int round = 0; round < 30; ++round)
        for (int n : {9, 10})
            for (double p : {0.2, 0.4, 0.7}) {
                Graph g = oracle::random_graph(n, p, state);
                CAPTURE(round);
                CHECK(longest_cycle_length(g) == oracle::longest_cycle_length(g));
            }
}

TEST_CASE("all longest cycles match brute force on all graphs n <= 6") {
    for (const Graph& g : fixtures::all_graphs_upto(6)) {
        auto got = all_longest_cycles(g);
        auto expected = oracle::all_longest_cycles(g);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].verts == expected[i].verts);
    }
}

TEST_CASE("cycle lists on named graphs") {
    CHECK(all_longest_cycles(Graph::complete(4)).size() == 3);
    CHECK(all_longest_cycles(fixtures::cycle(6)).size() == 1);
    CHECK(all_longest_cycles(witness8()).size() == 3);
    CHECK(all_longest_cycles(fixtures::petersen()).size() ==
          oracle::all_longest_cycles(fixtures::petersen()).size());

    for (const Cycle& c : all_longest_cycles(witness8())) {
        CHECK(c.length() == 6);
        CHECK(is_valid_cycle(witness8(), c));
        CHECK_FALSE(is_dominating(witness8(), c));
    }
}

TEST_CASE("canonical cycle orientation") {
    for (const Graph& g : {Graph::complete(5), witness8()}) {
        auto cycles = all_longest_cycles(g);
        std::set<std::vector<int>> seen;
        for (const Cycle& c : cycles) {
            CHECK(c.verts[0] == *std::min_element(c.verts.begin(), c.verts.end()));
            CHECK(c.verts[1] < c.verts.back());
            CHECK(seen.insert(c.verts).second);
        }
    }
}

TEST_CASE("cycle validity") {
    Graph c5 = fixtures::cycle(5);
    Cycle ok{{0, 1, 2, 3, 4}};
    CHECK(is_valid_cycle(c5, ok));
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1, 2}}));         // chord missing
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1}}));            // too short
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1, 2, 3, 3}}));   // repeated vertex
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{1, 2, 3, 4, 0}}));   // not anchored at minimum
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 4, 3, 2, 1}}));   // wrong direction
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1, 2, 3, 7}}));   // out of range
}

TEST_CASE("domination") {
    Graph w = witness8();
    Cycle hexagon{{0, 1, 2, 3, 4, 5}};
    REQUIRE(is_valid_cycle(w, hexagon));
    CHECK_FALSE(is_dominating(w, hexagon));  // edge 6-7 has no endpoint on C

    Graph k123 = Graph::join(Graph::complete(1), Graph::disjoint_union(Graph::complete(2), Graph::complete(2)));
    auto cycles = all_longest_cycles(k123);
    REQUIRE_FALSE(cycles.empty());
    CHECK(cycles[0].length() == 3);
    for (const Cycle& c : cycles) CHECK_FALSE(is_dominating(k123, c));

    Graph c4 = fixtures::cycle(4);
    CHECK(is_dominating(c4, Cycle{{0, 1, 2, 3}}));
    CHECK_THROWS_AS((void)is_dominating(c4, Cycle{{0, 1, 3}}), std::invalid_argument);

    CHECK(is_hamiltonian(Graph::complete(4)));
    CHECK_FALSE(is_hamiltonian(witness8()));
    CHECK(is_hamiltonian(c4));
}

TEST_CASE("lazy longest-cycle visitor supports early exit") {
    Graph k6 = Graph::complete(6);
    int visits = 0;
    bool completed = for_each_longest_cycle(k6, [&](const Cycle&) {
        ++visits;
        return false;
    });
    CHECK_FALSE(completed);
    CHECK(visits == 1);

    int total = 0;
    CHECK(for_each_longest_cycle(k6, [&](const Cycle&) {
        ++total;
        return true;
    }));
    CHECK(total == static_cast<int>(all_longest_cycles(k6).size()));
}

TEST_CASE("longest paths in the remainder") {
    Graph w = witness8();
    Cycle hexagon{{0, 1, 2, 3, 4, 5}};
    auto paths = all_longest_paths_in_remainder(w, hexagon);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].verts == std::vector<int>{6, 7});
    CHECK(paths[0].length() == 1);

    // Hamiltonian cycle leaves nothing behind.
    CHECK(all_longest_paths_in_remainder(fixtures::cycle(4), Cycle{{0, 1, 2, 3}}).empty());

    // Isolated remainder vertices give single-vertex paths.
    Graph k13 = Graph::join(Graph::complete(1), Graph::edgeless(3));
    auto cycles = all_longest_cycles(k13);
    CHECK(cycles.empty());  // a star has no cycle
    Graph k23 = Graph::join(Graph::complete(2), Graph::edgeless(3));
    auto longest = all_longest_cycles(k23);
    REQUIRE_FALSE(longest.empty());
    CHECK(longest[0].length() == 4);
    auto rem = all_longest_paths_in_remainder(k23, longest[0]);
    REQUIRE(rem.size() == 1);
    CHECK(rem[0].length() == 0);

    // Endpoint order is canonical and paths are distinct.
    Graph two_edges = Graph::disjoint_union(fixtures::cycle(3), Graph::complete(2));
    Graph g = Graph::disjoint_union(two_edges, Graph::complete(2));
    auto tri = all_longest_cycles(g);
    REQUIRE(tri.size() == 1);
    auto rpaths = all_longest_paths_in_remainder(g, tri[0]);
    REQUIRE(rpaths.size() == 2);
    for (const Path& p : rpaths) CHECK(p.verts.front() < p.verts.back());
}

TEST_CASE("classical predicate checks hold on small graphs") {
    for (const Graph& g : fixtures::all_graphs_upto(7)) {
        ClassicalPredicates preds = classical_predicates(g);
        CHECK(preds.size_hamiltonian.implication());
        CHECK(preds.two_connected_long_cycle.implication());
        CHECK(preds.cycle_vs_remainder.implication());
        CHECK(preds.degree_sum_hamiltonian.implication());
    }
}

TEST_CASE("classical predicate hypotheses fire where expected") {
    ClassicalPredicates k4 = classical_predicates(Graph::complete(4));
    CHECK(k4.size_hamiltonian.hypothesis);
    CHECK(k4.size_hamiltonian.conclusion);
    CHECK(k4.degree_sum_hamiltonian.hypothesis);
    CHECK(k4.two_connected_long_cycle.hypothesis);

    ClassicalPredicates w = classical_predicates(witness8());
    CHECK(w.two_connected_long_cycle.hypothesis);   // 2-connected
    CHECK(w.two_connected_long_cycle.conclusion);   // longest 6 >= 2*delta = 4
    CHECK_FALSE(w.size_hamiltonian.hypothesis);     // q=9 > delta^2+delta-1=5
    CHECK_FALSE(w.degree_sum_hamiltonian.hypothesis);

    ClassicalPredicates p = classical_predicates(fixtures::path(2));
    CHECK_FALSE(p.size_hamiltonian.hypothesis);     // too small for a cycle
    CHECK_FALSE(p.degree_sum_hamiltonian.hypothesis);
}
