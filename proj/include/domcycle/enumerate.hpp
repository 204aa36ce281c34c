#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domcycle/graph.hpp"

namespace domcycle {

// Complete isomorphism invariant: the lexicographically least upper-triangle
// adjacency bit string over the labelings visited by the refinement /
// individualization search (row-major pair order, MSB-first packing).
// new_to_old[i] is the input vertex placed at canonical position i.
struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 8> bits{};
    std::array<std::uint8_t, Graph::kMaxVertices> new_to_old{};

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.bits == b.bits;
    }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n <=> b.n;
        return a.bits <=> b.bits;
    }
};

CanonicalForm canonical_form(const Graph& g);
// g relabeled into its canonical labeling.
Graph canonical_graph(const Graph& g);
// graph6 line of the canonical labeling; equal strings <=> isomorphic.
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

struct EnumSpec {
    int n = 1;                   // order of the generated graphs, 1..12
    int min_degree = 0;
    int max_edges = -1;          // -1: no cap
    bool biconnected_only = false;
};

// Isomorph-free generation by canonical augmentation: grow one vertex at a
// time, keep a child only when deleting its canonical last vertex lands back
// on the parent's isomorphism class. Emitted graphs are canonically labeled;
// callback order is the (deterministic) generation order.
void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& sink);

// Collected form, sorted by canonical bit string.
std::vector<Graph> enumerate_graphs(const EnumSpec& spec);

}  // namespace domcycle
