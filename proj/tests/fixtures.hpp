// Named graphs and small corpora shared across test files.
#pragma once

#include <vector>

#include "domcycle/enumerate.hpp"
#include "domcycle/graph.hpp"

namespace fixtures {

inline domcycle::Graph cycle(int n) {
    std::vector<domcycle::Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return domcycle::Graph::build(n, edges);
}

inline domcycle::Graph path(int n) {
    std::vector<domcycle::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return domcycle::Graph::build(n, edges);
}

// Outer 5-cycle, inner pentagram, spokes.
inline domcycle::Graph petersen() {
    return domcycle::Graph::build(10, {{0, 1},
                                       {1, 2},
                                       {2, 3},
                                       {3, 4},
                                       {4, 0},
                                       {5, 7},
                                       {7, 9},
                                       {9, 6},
                                       {6, 8},
                                       {8, 5},
                                       {0, 5},
                                       {1, 6},
                                       {2, 7},
                                       {3, 8},
                                       {4, 9}});
}

// Every graph on 1..n_max vertices, one per isomorphism class.
inline std::vector<domcycle::Graph> all_graphs_upto(int n_max) {
    std::vector<domcycle::Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        domcycle::EnumSpec spec;
        spec.n = n;
        for (domcycle::Graph& g : enumerate_graphs(spec)) out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<domcycle::Graph> biconnected_upto(int n_max) {
    std::vector<domcycle::Graph> out;
    for (int n = 3; n <= n_max; ++n) {
        domcycle::EnumSpec spec;
        spec.n = n;
        spec.min_degree = 2;
        spec.biconnected_only = true;
        for (domcycle::Graph& g : enumerate_graphs(spec)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fixtures
