#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "domcycle/segments.hpp"
#include "domcycle/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domcycle;

namespace {

// 10-cycle plus an attached 2-vertex path: x sees {0,2}, y sees {5,7},
// and the attachments are spread so no splice beats the 10-cycle.
Graph lemma1_instance_p1() {
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i) edges.push_back({i, (i + 1) % 10});
    edges.insert(edges.end(), {{10, 0}, {10, 2}, {11, 5}, {11, 7}, {10, 11}});
    return Graph::build(12, edges);
}

// 14-cycle plus an attached 3-vertex path (edge-length 2).
Graph lemma1_instance_p2() {
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
    edges.insert(edges.end(), {{14, 0}, {14, 2}, {16, 7}, {16, 9}, {14, 15}, {15, 16}});
    return Graph::build(17, edges);
}

// 8-cycle with x,y both attached at {0,4}; with_chord adds the single
// intermediate edge 2-6 between the two segment interiors.
Graph lemma2_instance(bool with_chord) {
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i) edges.push_back({i, (i + 1) % 8});
    edges.insert(edges.end(), {{8, 0}, {8, 4}, {9, 0}, {9, 4}, {8, 9}});
    if (with_chord) edges.push_back({2, 6});
    return Graph::build(10, edges);
}

Cycle base_cycle(int k) {
    Cycle c;
    c.verts.resize(k);
    std::iota(c.verts.begin(), c.verts.end(), 0);
    return c;
}

}  // namespace

TEST_CASE("decomposition of the 8-vertex witness") {
    Graph w = witness8();
    Cycle hexagon = base_cycle(6);
    Path p{{6, 7}};
    SegmentDecomposition dec = decompose(w, hexagon, p);
    CHECK(dec.xi == std::vector<int>{0, 3});
    REQUIRE(dec.s() == 2);
    CHECK(dec.segments[0].from == 0);
    CHECK(dec.segments[0].to == 3);
    CHECK(dec.segments[0].edge_length == 3);
    CHECK(dec.segments[0].interior == std::vector<int>{1, 2});
    CHECK(dec.segments[1].from == 3);
    CHECK(dec.segments[1].to == 0);
    CHECK(dec.segments[1].edge_length == 3);
    CHECK(dec.segments[1].interior == std::vector<int>{4, 5});

    // No path joins the two interiors while avoiding C and P: every vertex
    // of the graph already lies on one of them.
    CHECK(intermediate_paths(w, hexagon, p, dec, 0, 1).empty());
}

TEST_CASE("single-attachment decomposition wraps the whole cycle") {
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
    edges.insert(edges.end(), {{6, 0}, {6, 7}});
    Graph g = Graph::build(8, edges);
    SegmentDecomposition dec = decompose(g, base_cycle(6), Path{{6, 7}});
    REQUIRE(dec.s() == 1);
    CHECK(dec.segments[0].from == 0);
    CHECK(dec.segments[0].to == 0);
    CHECK(dec.segments[0].edge_length == 6);
    CHECK(dec.segments[0].interior == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("decomposition rejects malformed instances") {
    Graph g = Graph::disjoint_union(fixtures::cycle(6), Graph::complete(2));
    CHECK_THROWS_AS(decompose(g, base_cycle(6), Path{{6, 7}}), std::invalid_argument);

    Graph w = witness8();
    CHECK_THROWS_AS(decompose(w, base_cycle(6), Path{{5, 6}}), std::invalid_argument);  // overlaps C
    CHECK_THROWS_AS(decompose(w, base_cycle(6), Path{{6, 6}}), std::invalid_argument);  // repeat
    CHECK_THROWS_AS(decompose(w, base_cycle(5), Path{{6, 7}}), std::invalid_argument);  // not a cycle
    CHECK_THROWS_AS(decompose(w, base_cycle(6), Path{{6, 8}}), std::invalid_argument);  // range
    CHECK_THROWS_AS(decompose(w, base_cycle(6), Path{}), std::invalid_argument);        // empty
    CHECK_THROWS_AS(decompose(w, base_cycle(6), Path{{6, 5, 7}}), std::invalid_argument);

    // A reversed path is still a path; attachments are symmetric in x and y.
    CHECK(decompose(w, base_cycle(6), Path{{7, 6}}).xi == std::vector<int>{0, 3});
}

TEST_CASE("decomposition conserves cycle length on every small instance") {
    for (const Graph& g : fixtures::all_graphs_upto(7))
        for (const Cycle& c : all_longest_cycles(g))
            for (const Path& p : all_longest_paths_in_remainder(g, c)) {
                int x = p.verts.front(), y = p.verts.back();
                VertexSet nx = g.neighbors(x) & c.vertex_set();
                VertexSet ny = g.neighbors(y) & c.vertex_set();
                if ((nx | ny).empty()) {
                    CHECK_THROWS_AS(decompose(g, c, p), std::invalid_argument);
                    continue;
                }
                SegmentDecomposition dec = decompose(g, c, p);
                long long total = 0;
                std::set<int> interior_seen;
                for (const Segment& seg : dec.segments) {
                    total += seg.edge_length;
                    CHECK(seg.edge_length >= 1);
                    CHECK(static_cast<int>(seg.interior.size()) == seg.edge_length - 1);
                    for (int v : seg.interior) CHECK(interior_seen.insert(v).second);
                }
                CHECK(total == c.length());
                CHECK(static_cast<int>(interior_seen.size() + dec.xi.size()) == c.length());

                // A longest cycle admits no attachment gap of one when the
                // remainder path has two attached endpoints.
                if (p.length() >= 1 && !nx.empty() && !ny.empty())
                    for (const Segment& seg : dec.segments) CHECK(seg.edge_length >= 2);
            }
}

TEST_CASE("intermediate paths find a constructed chord") {
    Graph g = lemma2_instance(true);
    Cycle c = base_cycle(8);
    Path p{{8, 9}};
    SegmentDecomposition dec = decompose(g, c, p);
    REQUIRE(dec.s() == 2);
    auto paths = intermediate_paths(g, c, p, dec, 0, 1);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 1);
    CHECK(paths[0].verts == std::vector<int>{2, 6});
    CHECK(paths[0].seg_a == 0);
    CHECK(paths[0].seg_b == 1);
}

TEST_CASE("first inequality: distinct attachment sets") {
    Graph g = lemma1_instance_p1();
    REQUIRE(longest_cycle_length(g) == 10);
    Cycle c = base_cycle(10);
    Path p{{10, 11}};
    auto remainder = all_longest_paths_in_remainder(g, c);
    REQUIRE(remainder.size() == 1);
    CHECK(remainder[0].verts == p.verts);

    LemmaVerdict v = check_lemma1(g, c, p);
    CHECK(v.applicable);
    CHECK(v.holds);
    CHECK(v.lhs == 10);
    CHECK(v.rhs == 7);  // 3*2 + max(2,2) - 1

    Graph g2 = lemma1_instance_p2();
    REQUIRE(longest_cycle_length(g2) == 14);
    LemmaVerdict v2 = check_lemma1(g2, base_cycle(14), Path{{14, 15, 16}});
    CHECK(v2.applicable);
    CHECK(v2.holds);
    CHECK(v2.lhs == 14);
    CHECK(v2.rhs == 12);  // max(2*2+8, 4*2-2*2)
}

TEST_CASE("first inequality: hypothesis gates") {
    // Equal attachment sets are the second lemma's territory.
    Graph g = lemma2_instance(false);
    CHECK_FALSE(check_lemma1(g, base_cycle(8), Path{{8, 9}}).applicable);

    // A single attachment on one endpoint is out too.
    Graph w = witness8();
    CHECK_FALSE(check_lemma1(w, base_cycle(6), Path{{6, 7}}).applicable);
}

TEST_CASE("second inequality on a constructed equality instance") {
    Graph g = lemma2_instance(true);
    REQUIRE(longest_cycle_length(g) == 8);
    auto verdicts = check_lemma2(g, base_cycle(8), Path{{8, 9}});
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].applicable);
    CHECK(verdicts[0].holds);
    CHECK(verdicts[0].lhs == 8);
    CHECK(verdicts[0].rhs == 8);  // both branches: 2p+2|L|+4 and 2p+i+5 give 8
}

TEST_CASE("second inequality: no intermediate paths, no claim") {
    Graph g = lemma2_instance(false);
    auto verdicts = check_lemma2(g, base_cycle(8), Path{{8, 9}});
    REQUIRE(verdicts.size() == 1);
    CHECK_FALSE(verdicts[0].applicable);

    // Hypothesis failure (different attachment sets) yields no verdicts.
    CHECK(check_lemma2(witness8(), base_cycle(6), Path{{6, 7}}).empty());
}

TEST_CASE("component size inequality on the hub constructions") {
    Graph k2 = Graph::complete(2);
    Graph branches = Graph::disjoint_union(Graph::disjoint_union(k2, k2), k2);
    Graph g = Graph::join(k2, branches);  // two hubs, three 2-cliques
    REQUIRE(g.min_degree() == 3);
    auto verdicts = check_lemma3(g, VertexSet::first_n(2));
    REQUIRE(verdicts.size() == 3);
    for (const LemmaVerdict& v : verdicts) {
        CHECK(v.applicable);
        CHECK(v.holds);
        CHECK(v.lhs == 10);  // 2*q_H with q_H = 5
        CHECK(v.rhs == 10);  // h(2*delta - h + 1) with h=2, delta=3
    }

    Graph apex = Graph::join(Graph::complete(1), Graph::disjoint_union(k2, k2));
    auto av = check_lemma3(apex, VertexSet::single(0));
    REQUIRE(av.size() == 2);
    for (const LemmaVerdict& v : av) {
        CHECK(v.holds);
        CHECK(v.lhs == 6);  // q_H = 3: the branch edge plus two apex edges
        CHECK(v.rhs == 6);  // h=2, delta=2
    }

    CHECK_THROWS_AS(check_lemma3(Graph::complete(4), VertexSet::single(0)), std::invalid_argument);

    // The empty set separates a disconnected graph.
    Graph two = Graph::disjoint_union(k2, k2);
    auto ev = check_lemma3(two, VertexSet());
    REQUIRE(ev.size() == 2);
    for (const LemmaVerdict& v : ev) CHECK(v.holds);
}

TEST_CASE("dichotomy threshold and verdicts") {
    CHECK(dichotomy_size_threshold(2) == 9);
    CHECK(dichotomy_size_threshold(3) == 15);
    CHECK(dichotomy_size_threshold(4) == 27);
    CHECK(dichotomy_size_threshold(5) == 42);
    CHECK_THROWS_AS(dichotomy_size_threshold(1), std::invalid_argument);

    LemmaVerdict w = check_lemma4(witness8());
    CHECK(w.applicable);  // 3*2 >= 8-2
    CHECK(w.holds);       // q = 9 >= 9: size branch
    CHECK(w.lhs == 9);
    CHECK(w.rhs == 9);

    LemmaVerdict k23 = check_lemma4(Graph::join(Graph::complete(2), Graph::edgeless(3)));
    CHECK(k23.applicable);
    CHECK(k23.holds);  // q = 7 < 9, but every longest cycle dominates

    LemmaVerdict c9 = check_lemma4(fixtures::cycle(9));
    CHECK_FALSE(c9.applicable);  // 3*2 < 9-2

    LemmaVerdict k4 = check_lemma4(Graph::complete(4));
    CHECK(k4.applicable);
    CHECK(k4.holds);

    CHECK_THROWS_AS(check_lemma4(fixtures::path(4)), std::invalid_argument);
}
