#include "domcycle/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace domcycle {

namespace {

// DFS for cycles anchored at their minimum vertex: paths start at `anchor`
// and may only visit larger vertices, so each cycle is explored from a
// unique anchor. Direction duplicates are dropped at emission time.
class CycleSearch {
public:
    explicit CycleSearch(const Graph& g) : g_(g), n_(g.order()) {}

    int longest() {
        best_ = 0;
        for (anchor_ = 0; anchor_ + 2 < n_; ++anchor_)
            extend_best(anchor_, VertexSet::single(anchor_), 0);
        return best_;
    }

    // Returns false iff the visitor stopped the walk.
    bool visit_all(int target, const std::function<bool(const Cycle&)>& visit) {
        target_ = target;
        visit_ = &visit;
        stopped_ = false;
        if (target_ >= 3)
            for (anchor_ = 0; anchor_ + 2 < n_ && !stopped_; ++anchor_) {
                path_[0] = anchor_;
                extend_all(anchor_, VertexSet::single(anchor_), 0);
            }
        return !stopped_;
    }

private:
    VertexSet open_after(VertexSet visited) const {
        return VertexSet::first_n(n_).minus(VertexSet::first_n(anchor_ + 1)).minus(visited);
    }

    void extend_best(int cur, VertexSet visited, int len) {
        if (len >= 2 && g_.has_edge(cur, anchor_)) best_ = std::max(best_, len + 1);
        VertexSet reach = reachable_within(g_, cur, open_after(visited));
        if ((g_.neighbors(anchor_) & reach).empty()) return;  // no longer cycle can close
        if (len + reach.count() + 1 <= best_) return;
        for (int v : g_.neighbors(cur) & reach) extend_best(v, visited | VertexSet::single(v), len + 1);
    }

    void extend_all(int cur, VertexSet visited, int len) {
        if (stopped_) return;
        if (len + 1 == target_) {
            if (g_.has_edge(cur, anchor_) && path_[1] < cur)
                stopped_ = !(*visit_)(Cycle{std::vector<int>(path_.begin(), path_.begin() + target_)});
            return;
        }
        VertexSet reach = reachable_within(g_, cur, open_after(visited));
        if ((g_.neighbors(anchor_) & reach).empty()) return;
        if (len + reach.count() + 1 < target_) return;
        for (int v : g_.neighbors(cur) & reach) {
            if (stopped_) return;
            path_[len + 1] = v;
            extend_all(v, visited | VertexSet::single(v), len + 1);
        }
    }

    const Graph& g_;
    int n_;
    int anchor_ = 0;
    int best_ = 0;
    int target_ = 0;
    std::array<int, Graph::kMaxVertices> path_{};
    const std::function<bool(const Cycle&)>* visit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    int k = c.length();
    if (k < 3 || k > g.order()) return false;
    VertexSet seen;
    for (int v : c.verts) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(c.verts[i], c.verts[(i + 1) % k])) return false;
    if (c.verts[0] != seen.lowest()) return false;
    return c.verts[1] < c.verts.back();
}

int longest_cycle_length(const Graph& g) { return CycleSearch(g).longest(); }

std::vector<Cycle> all_longest_cycles(const Graph& g) {
    std::vector<Cycle> out;
    for_each_longest_cycle(g, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    // DFS with ascending anchors and neighbors already yields lexicographic
    // order; keep the sort as a guarantee, it is nearly free on sorted input.
    std::sort(out.begin(), out.end(),
              [](const Cycle& a, const Cycle& b) { return a.verts < b.verts; });
    return out;
}

bool for_each_longest_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit) {
    CycleSearch search(g);
    int len = search.longest();
    if (len < 3) return true;
    return search.visit_all(len, visit);
}

bool is_dominating(const Graph& g, const Cycle& c) {
    if (!is_valid_cycle(g, c)) throw std::invalid_argument("not a valid cycle of this graph");
    VertexSet off = g.vertices().minus(c.vertex_set());
    for (int v : off)
        if (!(g.neighbors(v) & off).empty()) return false;
    return true;
}

bool is_hamiltonian(const Graph& g) {
    return g.order() >= 3 && longest_cycle_length(g) == g.order();
}

namespace {

class RemainderPaths {
public:
    RemainderPaths(const Graph& g, VertexSet rem) : g_(g), rem_(rem) {}

    std::vector<Path> longest_all() {
        best_ = 0;
        out_.clear();
        for (int u : rem_) {
            path_.clear();
            path_.push_back(u);
            walk(u, VertexSet::single(u));
        }
        std::sort(out_.begin(), out_.end(),
                  [](const Path& a, const Path& b) { return a.verts < b.verts; });
        return std::move(out_);
    }

private:
    void note_current() {
        int len = static_cast<int>(path_.size()) - 1;
        if (len < best_) return;
        if (len > best_) {
            best_ = len;
            out_.clear();
        }
        // Each path with an edge is walked from both endpoints; keep the
        // orientation that is lexicographically least (front < back).
        if (len == 0 || path_.front() < path_.back()) out_.push_back(Path{path_});
    }

    void walk(int cur, VertexSet visited) {
        note_current();
        for (int v : (g_.neighbors(cur) & rem_).minus(visited)) {
            path_.push_back(v);
            walk(v, visited | VertexSet::single(v));
            path_.pop_back();
        }
    }

    const Graph& g_;
    VertexSet rem_;
    int best_ = 0;
    std::vector<int> path_;
    std::vector<Path> out_;
};

}  // namespace

std::vector<Path> all_longest_paths_in_remainder(const Graph& g, const Cycle& c) {
    if (!is_valid_cycle(g, c)) throw std::invalid_argument("not a valid cycle of this graph");
    VertexSet rem = g.vertices().minus(c.vertex_set());
    if (rem.empty()) return {};
    return RemainderPaths(g, rem).longest_all();
}

std::optional<Path> longest_path_in_remainder(const Graph& g, const Cycle& c) {
    auto all = all_longest_paths_in_remainder(g, c);
    if (all.empty()) return std::nullopt;
    return all.front();
}

ClassicalPredicates classical_predicates(const Graph& g) {
    const int n = g.order();
    const int q = g.size();
    const int delta = g.min_degree();
    const int longest = longest_cycle_length(g);
    const bool ham = n >= 3 && longest == n;

    ClassicalPredicates out;

    // Degenerate 1- and 2-vertex "cycles" are not represented here, so the
    // two hamiltonicity predicates only claim anything for n >= 3 (K2 meets
    // both antecedents but cannot carry a cycle of length >= 3).
    out.size_hamiltonian.hypothesis = n >= 3 && q <= delta * delta + delta - 1;
    out.size_hamiltonian.conclusion = ham;

    out.two_connected_long_cycle.hypothesis = g.is_biconnected();
    out.two_connected_long_cycle.conclusion = ham || longest >= 2 * delta;

    out.cycle_vs_remainder.hypothesis = longest >= 3;
    bool rem_ok = true;
    if (longest >= 3)
        for (const Cycle& c : all_longest_cycles(g)) {
            auto p = longest_path_in_remainder(g, c);
            if (!p) continue;  // spanning cycle, nothing to bound
            int pbar = p->length();
            if (longest < (pbar + 2) * (delta - pbar)) rem_ok = false;
        }
    out.cycle_vs_remainder.conclusion = rem_ok;

    bool degree_sum = n >= 3;
    for (int u = 0; u < n && degree_sum; ++u)
        for (int v = u + 1; v < n && degree_sum; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n) degree_sum = false;
    out.degree_sum_hamiltonian.hypothesis = degree_sum;
    out.degree_sum_hamiltonian.conclusion = ham;

    return out;
}

}  // namespace domcycle
