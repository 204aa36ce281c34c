#include "domcycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domcycle {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1,32], got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        g.adj_[u].add(v);
        g.adj_[v].add(u);
    }
    return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::complete(int k) {
    Graph g = edgeless(k);
    VertexSet all = VertexSet::first_n(k);
    for (int v = 0; v < k; ++v) {
        g.adj_[v] = all;
        g.adj_[v].remove(v);
    }
    return g;
}

Graph Graph::edgeless(int k) {
    if (k < 1 || k > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1,32], got " + std::to_string(k));
    Graph g;
    g.n_ = k;
    return g;
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
    int n = g.n_ + h.n_;
    if (n > kMaxVertices)
        throw std::invalid_argument("union exceeds 32 vertices");
    Graph u;
    u.n_ = n;
    for (int v = 0; v < g.n_; ++v) u.adj_[v] = g.adj_[v];
    for (int v = 0; v < h.n_; ++v)
        u.adj_[g.n_ + v] = VertexSet(h.adj_[v].raw() << g.n_);
    return u;
}

Graph Graph::join(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    VertexSet left = VertexSet::first_n(g.n_);
    VertexSet right = VertexSet::first_n(u.n_).minus(left);
    for (int v : left) u.adj_[v] |= right;
    for (int v : right) u.adj_[v] |= left;
    return u;
}

int Graph::size() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += adj_[v].count();
    return total / 2;
}

int Graph::min_degree() const {
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet reachable_within(const Graph& g, int from, VertexSet allowed) {
    VertexSet seen;
    VertexSet frontier = g.neighbors(from) & allowed;
    while (!frontier.empty()) {
        seen |= frontier;
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        frontier = (next & allowed).minus(seen);
    }
    return seen;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet rest = within;
    while (!rest.empty()) {
        int v = rest.lowest();
        VertexSet comp = reachable_within(g, v, within);
        comp.add(v);
        comps.push_back(comp);
        rest = rest.minus(comp);
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexSet comp = reachable_within(*this, 0, vertices());
    comp.add(0);
    return comp == vertices();
}

bool Graph::is_biconnected() const {
    if (n_ < 3 || !is_connected()) return false;
    // Small n: try removing each vertex.
    for (int v = 0; v < n_; ++v) {
        VertexSet rest = vertices();
        rest.remove(v);
        int anchor = rest.lowest();
        VertexSet comp = reachable_within(*this, anchor, rest);
        comp.add(anchor);
        if (comp != rest) return false;
    }
    return true;
}

namespace {

// Max number of internally vertex-disjoint s-t paths, via unit-capacity
// max-flow on the split digraph (v_in -> v_out cap 1, edges cap 1).
int disjoint_path_count(const Graph& g, int s, int t) {
    int n = g.order();
    // Node 2v = v_in, 2v+1 = v_out.
    int nn = 2 * n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(nn, -1);
        prev[source] = source;
        std::vector<int> queue{source};
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
            int u = queue[qi];
            for (int w = 0; w < nn; ++w)
                if (prev[w] < 0 && cap[u][w] > 0) {
                    prev[w] = u;
                    queue.push_back(w);
                }
        }
        if (prev[sink] < 0) break;
        for (int w = sink; w != source; w = prev[w]) {
            cap[prev[w]][w] -= 1;
            cap[w][prev[w]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int Graph::vertex_connectivity() const {
    if (n_ == 1) return 0;
    if (!is_connected()) return 0;
    int best = n_ - 1;  // complete-graph value; also an upper bound
    bool any_nonadjacent = false;
    for (int s = 0; s < n_; ++s)
        for (int t = s + 1; t < n_; ++t)
            if (!has_edge(s, t)) {
                any_nonadjacent = true;
                best = std::min(best, disjoint_path_count(*this, s, t));
            }
    if (!any_nonadjacent) return n_ - 1;
    return best;
}

Graph Graph::added_vertex(VertexSet nbrs) const {
    if (n_ + 1 > kMaxVertices)
        throw std::invalid_argument("vertex addition exceeds 32 vertices");
    if (!nbrs.minus(vertices()).empty())
        throw std::invalid_argument("neighbor outside existing vertex range");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_[n_] = nbrs;
    for (int v : nbrs) g.adj_[v].add(n_);
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    std::vector<int> new_to_old;
    for (int v : keep)
        if (v < n_) new_to_old.push_back(v);
    return relabeled(new_to_old);
}

Graph Graph::relabeled(std::span<const int> new_to_old) const {
    int k = static_cast<int>(new_to_old.size());
    Graph g = edgeless(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (has_edge(new_to_old[i], new_to_old[j])) {
                g.adj_[i].add(j);
                g.adj_[j].add(i);
            }
    return g;
}

}  // namespace domcycle
