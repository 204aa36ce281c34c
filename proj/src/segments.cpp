#include "domcycle/segments.hpp"

#include <algorithm>
#include <stdexcept>

namespace domcycle {

namespace {

void validate_instance(const Graph& g, const Cycle& c, const Path& p) {
    if (!is_valid_cycle(g, c)) throw std::invalid_argument("not a valid cycle of this graph");
    if (p.verts.empty()) throw std::invalid_argument("empty path");
    VertexSet cset = c.vertex_set();
    VertexSet seen;
    for (int v : p.verts) {
        if (v < 0 || v >= g.order() || seen.contains(v))
            throw std::invalid_argument("path vertices must be distinct and in range");
        if (cset.contains(v)) throw std::invalid_argument("path meets the cycle");
        seen.add(v);
    }
    for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!g.has_edge(p.verts[i], p.verts[i + 1]))
            throw std::invalid_argument("path edge missing in graph");
}

}  // namespace

SegmentDecomposition decompose(const Graph& g, const Cycle& c, const Path& p) {
    validate_instance(g, c, p);
    int x = p.verts.front(), y = p.verts.back();
    VertexSet att = (g.neighbors(x) | g.neighbors(y)) & c.vertex_set();
    if (att.empty()) throw std::invalid_argument("path has no attachment on the cycle");

    SegmentDecomposition dec;
    const int len = c.length();
    std::vector<int> pos;
    for (int i = 0; i < len; ++i)
        if (att.contains(c.verts[i])) {
            dec.xi.push_back(c.verts[i]);
            pos.push_back(i);
        }
    const int s = dec.s();
    for (int i = 0; i < s; ++i) {
        int from = pos[i], to = pos[(i + 1) % s];
        int gap = (to - from + len) % len;
        if (gap == 0) gap = len;  // single attachment: the segment is the whole cycle
        Segment seg;
        seg.from = c.verts[from];
        seg.to = c.verts[to];
        seg.edge_length = gap;
        for (int step = 1; step < gap; ++step) seg.interior.push_back(c.verts[(from + step) % len]);
        dec.segments.push_back(std::move(seg));
    }
    return dec;
}

std::vector<IntermediatePath> intermediate_paths(const Graph& g, const Cycle& c, const Path& p,
                                                 const SegmentDecomposition& dec, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= dec.s() || b >= dec.s())
        throw std::invalid_argument("segment indices must be distinct and in range");
    VertexSet bset;
    for (int v : dec.segments[b].interior) bset.add(v);
    VertexSet inner = g.vertices().minus(c.vertex_set()).minus(p.vertex_set());

    std::vector<IntermediatePath> out;
    std::vector<int> trail;
    auto walk = [&](auto&& self, int cur, VertexSet visited) -> void {
        for (int w : g.neighbors(cur)) {
            if (bset.contains(w)) {
                trail.push_back(w);
                out.push_back(IntermediatePath{trail, a, b});
                trail.pop_back();
            } else if (inner.contains(w) && !visited.contains(w)) {
                trail.push_back(w);
                self(self, w, visited | VertexSet::single(w));
                trail.pop_back();
            }
        }
    };
    for (int z : dec.segments[a].interior) {
        trail.assign(1, z);
        walk(walk, z, VertexSet());
    }
    std::sort(out.begin(), out.end(), [](const IntermediatePath& l, const IntermediatePath& r) {
        return std::pair(l.length(), l.verts) < std::pair(r.length(), r.verts);
    });
    return out;
}

namespace {

std::string describe(const Cycle& c, const Path& p) {
    std::string s = "C=";
    for (std::size_t i = 0; i < c.verts.size(); ++i)
        s += (i ? "-" : "") + std::to_string(c.verts[i]);
    s += " P=";
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        s += (i ? "-" : "") + std::to_string(p.verts[i]);
    return s;
}

}  // namespace

LemmaVerdict check_lemma1(const Graph& g, const Cycle& c, const Path& p) {
    validate_instance(g, c, p);
    LemmaVerdict v;
    int x = p.verts.front(), y = p.verts.back();
    VertexSet nx = g.neighbors(x) & c.vertex_set();
    VertexSet ny = g.neighbors(y) & c.vertex_set();
    v.applicable = nx.count() >= 2 && ny.count() >= 2 && !(nx == ny);
    if (!v.applicable) return v;

    const int pbar = p.length();
    const int delta = g.min_degree();
    const int sigma1 = nx.minus(ny).count();
    const int sigma2 = ny.minus(nx).count();
    v.lhs = c.length();
    v.rhs = pbar == 1 ? 3 * delta + std::max(sigma1, sigma2) - 1
                      : std::max(2 * pbar + 8, 4 * delta - 2 * pbar);
    v.holds = v.lhs >= v.rhs;
    v.witness = describe(c, p) + " sigma1=" + std::to_string(sigma1) +
                " sigma2=" + std::to_string(sigma2);
    return v;
}

std::vector<LemmaVerdict> check_lemma2(const Graph& g, const Cycle& c, const Path& p) {
    validate_instance(g, c, p);
    int x = p.verts.front(), y = p.verts.back();
    VertexSet nx = g.neighbors(x) & c.vertex_set();
    VertexSet ny = g.neighbors(y) & c.vertex_set();
    if (!(nx == ny) || nx.count() < 2) return {};

    const int pbar = p.length();
    SegmentDecomposition dec = decompose(g, c, p);
    std::vector<LemmaVerdict> verdicts;
    for (int a = 0; a < dec.s(); ++a)
        for (int b = a + 1; b < dec.s(); ++b) {
            LemmaVerdict v;
            v.lhs = dec.segments[a].edge_length + dec.segments[b].edge_length;
            auto paths = intermediate_paths(g, c, p, dec, a, b);
            if (paths.empty()) {
                v.applicable = false;
                v.witness = describe(c, p) + " pair=(" + std::to_string(a) + "," +
                            std::to_string(b) + ") no intermediate paths";
                verdicts.push_back(std::move(v));
                continue;
            }
            v.applicable = true;
            const int longest = paths.back().length();
            long long rhs = 2 * pbar + 2 * longest + 4;
            const int count = static_cast<int>(paths.size());
            if (longest == 1 && count <= 3)  // i >= 4 single edges imposes nothing extra
                rhs = std::max(rhs, static_cast<long long>(2 * pbar + count + 5));
            v.rhs = rhs;
            v.holds = v.lhs >= v.rhs;
            v.witness = describe(c, p) + " pair=(" + std::to_string(a) + "," + std::to_string(b) +
                        ") paths=" + std::to_string(count) + " longest=" + std::to_string(longest);
            verdicts.push_back(std::move(v));
        }
    return verdicts;
}

std::vector<LemmaVerdict> check_lemma3(const Graph& g, VertexSet cut) {
    VertexSet rest = g.vertices().minus(cut);
    auto comps = components_within(g, rest);
    if (comps.size() < 2) throw std::invalid_argument("not a cut set: removal leaves a connected graph");

    const int delta = g.min_degree();
    std::vector<LemmaVerdict> verdicts;
    for (const VertexSet& comp : comps) {
        const int h = comp.count();
        long long q_h = 0;
        for (auto [u, v] : g.edges())
            if (comp.contains(u) || comp.contains(v)) ++q_h;
        LemmaVerdict v;
        v.applicable = true;
        v.lhs = 2 * q_h;
        v.rhs = static_cast<long long>(h) * (2 * delta - h + 1);
        v.holds = v.lhs >= v.rhs;
        v.witness = "component={";
        bool first = true;
        for (int w : comp) {
            v.witness += (first ? "" : ",") + std::to_string(w);
            first = false;
        }
        v.witness += "} h=" + std::to_string(h) + " q_H=" + std::to_string(q_h);
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

long long dichotomy_size_threshold(int delta) {
    if (delta < 2) throw std::invalid_argument("threshold needs delta >= 2");
    if (delta == 2) return 9;
    return 3ll * (delta - 1) * (delta + 2) / 2;  // (delta-1)(delta+2) is even
}

LemmaVerdict check_lemma4(const Graph& g) {
    if (!g.is_biconnected()) throw std::invalid_argument("graph is not 2-connected");
    const int n = g.order();
    const int delta = g.min_degree();
    LemmaVerdict v;
    v.applicable = 3 * delta >= n - 2;
    if (!v.applicable) return v;
    v.lhs = g.size();
    v.rhs = dichotomy_size_threshold(delta);
    if (v.lhs >= v.rhs) {
        v.holds = true;
        v.witness = "size branch: q >= threshold";
        return v;
    }
    if (n - longest_cycle_length(g) <= 1) {
        // At most one vertex off the cycle: nothing it could strand.
        v.holds = true;
        v.witness = "cycle branch: every longest cycle dominating";
        return v;
    }
    bool all_dominating = for_each_longest_cycle(g, [&](const Cycle& c) {
        if (is_dominating(g, c)) return true;
        std::string cyc;
        for (std::size_t i = 0; i < c.verts.size(); ++i)
            cyc += (i ? "-" : "") + std::to_string(c.verts[i]);
        v.witness = "both branches fail: q < threshold and non-dominating longest cycle " + cyc;
        return false;
    });
    v.holds = all_dominating;
    if (all_dominating) v.witness = "cycle branch: every longest cycle dominating";
    return v;
}

}  // namespace domcycle
