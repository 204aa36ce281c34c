#include "domcycle/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "domcycle/graph6.hpp"

namespace domcycle {

namespace {

// Ordered partition of the vertex set, cells as bitmasks.
struct Partition {
    std::array<std::uint32_t, Graph::kMaxVertices> cells{};
    int count = 0;
};

// Split cells by neighbor counts into every other cell until equitable.
// Restarts the scan after each split; cell order (subcells ascending by
// count) depends only on structure, so isomorphic graphs refine in lockstep.
void refine(const Graph& g, Partition& p) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int wi = 0; wi < p.count && !changed; ++wi) {
            const std::uint32_t w = p.cells[wi];
            for (int xi = 0; xi < p.count && !changed; ++xi) {
                const std::uint32_t x = p.cells[xi];
                if (std::popcount(x) < 2) continue;
                std::array<std::uint32_t, Graph::kMaxVertices + 1> bucket{};
                int lo = Graph::kMaxVertices + 1, hi = -1;
                for (int v : VertexSet(x)) {
                    int c = std::popcount(g.neighbors(v).raw() & w);
                    bucket[c] |= 1u << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) continue;
                int pieces = 0;
                for (int c = lo; c <= hi; ++c)
                    if (bucket[c]) ++pieces;
                for (int t = p.count - 1; t > xi; --t) p.cells[t + pieces - 1] = p.cells[t];
                int at = xi;
                for (int c = lo; c <= hi; ++c)
                    if (bucket[c]) p.cells[at++] = bucket[c];
                p.count += pieces - 1;
                changed = true;
            }
        }
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    bool have = false;
    std::array<std::uint64_t, 8> best{};
    std::array<std::uint8_t, Graph::kMaxVertices> best_lab{};

    void leaf(const Partition& p) {
        std::array<std::uint8_t, Graph::kMaxVertices> lab{};
        for (int i = 0; i < p.count; ++i)
            lab[i] = static_cast<std::uint8_t>(VertexSet(p.cells[i]).lowest());
        std::array<std::uint64_t, 8> bits{};
        long bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(lab[i], lab[j])) bits[bit >> 6] |= 1ull << (63 - (bit & 63));
        if (!have || bits < best) {
            have = true;
            best = bits;
            best_lab = lab;
        }
    }

    void descend(Partition p) {
        refine(g, p);
        int ti = -1;
        for (int i = 0; i < p.count; ++i)
            if (std::popcount(p.cells[i]) >= 2) {
                ti = i;
                break;
            }
        if (ti < 0) {
            leaf(p);
            return;
        }
        const std::uint32_t cell = p.cells[ti];
        // One representative per twin class: swapping two vertices with equal
        // neighborhoods away from the pair is an automorphism, so their
        // subtrees yield identical bit strings.
        std::array<int, Graph::kMaxVertices> reps{};
        int nreps = 0;
        for (int v : VertexSet(cell)) {
            bool twin = false;
            for (int r = 0; r < nreps && !twin; ++r) {
                std::uint32_t excl = ~((1u << v) | (1u << reps[r]));
                twin = (g.neighbors(v).raw() & excl) == (g.neighbors(reps[r]).raw() & excl);
            }
            if (twin) continue;
            reps[nreps++] = v;
            Partition q;
            int at = 0;
            for (int i = 0; i < ti; ++i) q.cells[at++] = p.cells[i];
            q.cells[at++] = 1u << v;
            q.cells[at++] = cell & ~(1u << v);
            for (int i = ti + 1; i < p.count; ++i) q.cells[at++] = p.cells[i];
            q.count = at;
            descend(q);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search{g, g.order()};
    Partition start;
    start.cells[0] = g.vertices().raw();
    start.count = 1;
    search.descend(start);
    CanonicalForm cf;
    cf.n = g.order();
    cf.bits = search.best;
    cf.new_to_old = search.best_lab;
    return cf;
}

Graph canonical_graph(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    std::array<int, Graph::kMaxVertices> order{};
    for (int i = 0; i < cf.n; ++i) order[i] = cf.new_to_old[i];
    return g.relabeled({order.data(), static_cast<std::size_t>(cf.n)});
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

struct ChildKey {
    std::uint64_t a, b;
    friend bool operator==(ChildKey, ChildKey) = default;
};

struct ChildKeyHash {
    std::size_t operator()(ChildKey k) const {
        return std::hash<std::uint64_t>{}(k.a * 0x9e3779b97f4a7c15ull ^ k.b);
    }
};

class Grower {
public:
    Grower(const EnumSpec& spec, const std::function<void(const Graph&)>& sink)
        : spec_(spec), sink_(sink) {}

    void run() {
        Graph seed = Graph::edgeless(1);
        grow(seed, canonical_form(seed));
    }

private:
    // Feasibility of finishing at order spec_.n: every current deficit must
    // be coverable by future vertices, and a lower bound on remaining edges
    // must fit the budget. Future-to-existing edges fix one deficit unit
    // each (>= D of them); future vertices themselves need f*min_degree
    // degree units, each future-future edge supplying two.
    bool viable(const Graph& g) const {
        int f = spec_.n - g.order();
        long long deficit = 0;
        for (int v = 0; v < g.order(); ++v) {
            int d = spec_.min_degree - g.degree(v);
            if (d > f) return false;
            if (d > 0) deficit += d;
        }
        if (spec_.max_edges < 0) return true;
        long long q = g.size();
        long long need = static_cast<long long>(f) * spec_.min_degree;
        long long future = deficit + std::max(0ll, (need - deficit + 1) / 2);
        return q + future <= spec_.max_edges;
    }

    bool final_ok(const Graph& g) const {
        if (g.min_degree() < spec_.min_degree) return false;
        if (spec_.biconnected_only && !g.is_biconnected()) return false;
        return true;
    }

    void grow(const Graph& g, const CanonicalForm& gcf) {
        if (g.order() == spec_.n) {
            if (final_ok(g)) {
                std::array<int, Graph::kMaxVertices> order{};
                for (int i = 0; i < gcf.n; ++i) order[i] = gcf.new_to_old[i];
                sink_(g.relabeled({order.data(), static_cast<std::size_t>(gcf.n)}));
            }
            return;
        }
        const int k = g.order();
        std::unordered_set<ChildKey, ChildKeyHash> seen;
        seen.reserve(64);
        for (std::uint32_t s = 0; s < (1u << k); ++s) {
            Graph child = g.added_vertex(VertexSet(s));
            if (!viable(child)) continue;
            CanonicalForm ccf = canonical_form(child);
            if (!seen.insert({ccf.bits[0], ccf.bits[1]}).second) continue;
            // Accept iff deleting the canonical last vertex undoes this
            // augmentation up to isomorphism (the parent is the child's
            // canonical parent).
            int victim = ccf.new_to_old[k];
            if (victim != k) {
                VertexSet keep = child.vertices();
                keep.remove(victim);
                if (canonical_form(child.induced(keep)) != gcf) continue;
            }
            grow(child, ccf);
        }
    }

    EnumSpec spec_;
    const std::function<void(const Graph&)>& sink_;
};

}  // namespace

void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& sink) {
    if (spec.n < 1 || spec.n > 12)
        throw std::invalid_argument("enumeration order must be in [1,12], got " +
                                    std::to_string(spec.n));
    Grower grower(spec, sink);
    grower.run();
}

std::vector<Graph> enumerate_graphs(const EnumSpec& spec) {
    std::vector<std::pair<CanonicalForm, Graph>> keyed;
    enumerate_graphs(spec, [&](const Graph& g) { keyed.emplace_back(canonical_form(g), g); });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [cf, g] : keyed) out.push_back(g);
    return out;
}

}  // namespace domcycle
