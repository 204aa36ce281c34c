#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "domcycle/graph.hpp"

namespace domcycle {

// Simple cycle, length >= 3, stored in canonical orientation: verts[0] is
// the smallest vertex and verts[1] < verts.back().
struct Cycle {
    std::vector<int> verts;
    int length() const { return static_cast<int>(verts.size()); }
    VertexSet vertex_set() const {
        VertexSet s;
        for (int v : verts) s.add(v);
        return s;
    }
};

// Simple path; a single vertex is a path of length 0. Canonical orientation:
// verts is lexicographically <= its reverse.
struct Path {
    std::vector<int> verts;
    int length() const { return static_cast<int>(verts.size()) - 1; }
    VertexSet vertex_set() const {
        VertexSet s;
        for (int v : verts) s.add(v);
        return s;
    }
};

bool is_valid_cycle(const Graph& g, const Cycle& c);

// 0 when acyclic, else the exact maximum cycle length. Exhaustive DFS,
// pruned by reachability upper bounds; exact for every input.
int longest_cycle_length(const Graph& g);

// Every longest cycle, each exactly once (canonical orientation), sorted
// lexicographically by vertex sequence. Empty when acyclic.
std::vector<Cycle> all_longest_cycles(const Graph& g);

// Lazily visits the longest cycles in lexicographic order; stops when the
// visitor returns false. Returns false iff stopped early. Useful when only
// the existence of a cycle with some property matters.
bool for_each_longest_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit);

// True iff no edge of g has both endpoints off the cycle. Throws
// std::invalid_argument if c is not a valid cycle of g.
bool is_dominating(const Graph& g, const Cycle& c);

bool is_hamiltonian(const Graph& g);

// Longest paths of g - V(c), every one of them, sorted lexicographically.
// When the remainder has no edge the longest paths are its single vertices.
// Empty result iff the cycle spans the graph.
std::vector<Path> all_longest_paths_in_remainder(const Graph& g, const Cycle& c);

// First entry of the above (lexicographically least), if any.
std::optional<Path> longest_path_in_remainder(const Graph& g, const Cycle& c);

struct TheoremCheck {
    bool hypothesis = false;
    bool conclusion = false;
    bool implication() const { return !hypothesis || conclusion; }
};

// Classical sufficient conditions, each recorded as hypothesis/conclusion so
// sweeps can assert the implication on every graph.
struct ClassicalPredicates {
    // q <= delta^2 + delta - 1 implies hamiltonian (n >= 3).
    TheoremCheck size_hamiltonian;
    // 2-connected implies hamiltonian or longest cycle >= 2*delta.
    TheoremCheck two_connected_long_cycle;
    // For each longest cycle with nonempty remainder and longest remainder
    // path length p: |C| >= (p+2)(delta-p).
    TheoremCheck cycle_vs_remainder;
    // Degree sum >= n over nonadjacent pairs implies hamiltonian (n >= 3).
    TheoremCheck degree_sum_hamiltonian;
};

ClassicalPredicates classical_predicates(const Graph& g);

}  // namespace domcycle
