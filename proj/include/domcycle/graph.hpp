#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace domcycle {

// Set of vertex ids in [0, 32), one bit per vertex.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
    // {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 32 ? ~0u : (1u << n) - 1u);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr void add(int v) { bits_ |= 1u << v; }
    constexpr void remove(int v) { bits_ &= ~(1u << v); }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t raw() const { return bits_; }
    // Lowest vertex id present; undefined on empty sets.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    // Iterates set bits in increasing order.
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;
    private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 32 vertices, adjacency kept as one
// bitmask row per vertex. Immutable once constructed.
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    Graph() = default;

    // Throws std::invalid_argument on n out of [1,32], vertex out of range,
    // or a loop. Duplicate edges are idempotent.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges);

    static Graph complete(int k);
    static Graph edgeless(int k);
    // Vertices of g renumbered before h's (g keeps its labels, h shifted).
    static Graph disjoint_union(const Graph& g, const Graph& h);
    // disjoint_union(g, h) plus all edges between the two parts.
    static Graph join(const Graph& g, const Graph& h);

    int order() const { return n_; }
    int size() const;  // number of edges
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    std::vector<Edge> edges() const;  // u < v, lexicographic

    bool is_connected() const;
    // n >= 3, connected, and no articulation vertex.
    bool is_biconnected() const;
    // Menger via max-flow on the split-vertex digraph. Complete graphs give
    // n-1; disconnected graphs (and K1) give 0.
    int vertex_connectivity() const;

    // Copy with one extra vertex (id = order()) adjacent to `nbrs`.
    Graph added_vertex(VertexSet nbrs) const;
    // Subgraph induced by `keep`, vertices relabeled to 0..k-1 preserving
    // relative order.
    Graph induced(VertexSet keep) const;
    // new_to_old[i] = vertex of *this placed at position i.
    Graph relabeled(std::span<const int> new_to_old) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Vertices reachable from `from` inside `allowed` (from need not be in
// allowed; result excludes `from` unless allowed contains it).
VertexSet reachable_within(const Graph& g, int from, VertexSet allowed);

// Connected components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

}  // namespace domcycle
