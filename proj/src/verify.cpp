#include "domcycle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "domcycle/cycles.hpp"
#include "domcycle/enumerate.hpp"
#include "domcycle/parallel.hpp"
#include "domcycle/segments.hpp"

namespace domcycle {

using nlohmann::json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

long long theorem_q_max(int delta) {
    if (delta < 2) throw std::invalid_argument("theorem needs delta >= 2");
    if (delta == 2) return 8;
    // (delta-1)(delta+2) is even, so the floor of (3(delta-1)(delta+2)-1)/2
    // is exactly (3(delta-1)(delta+2)-2)/2.
    return (3ll * (delta - 1) * (delta + 2) - 2) / 2;
}

bool theorem_applies(const Graph& g) {
    if (g.min_degree() < 2 || !g.is_biconnected()) return false;
    return g.size() <= theorem_q_max(g.min_degree());
}

GraphAnalysis analyze_graph(const Graph& g) {
    GraphAnalysis a;
    a.n = g.order();
    a.q = g.size();
    a.delta = g.min_degree();
    a.kappa = g.vertex_connectivity();
    a.longest = longest_cycle_length(g);
    a.hamiltonian = a.n >= 3 && a.longest == a.n;
    if (a.longest >= 3)
        for_each_longest_cycle(g, [&](const Cycle& c) {
            ++a.longest_count;
            if (!is_dominating(g, c)) ++a.non_dominating_count;
            return true;
        });
    a.applicable = theorem_applies(g);
    return a;
}

namespace {

std::array<int, 2> stranded_edge(const Graph& g, const Cycle& c) {
    VertexSet off = g.vertices().minus(c.vertex_set());
    for (int u : off)
        for (int v : g.neighbors(u) & off)
            if (v > u) return {u, v};
    return {-1, -1};
}

ViolationRecord base_record(const Graph& g, std::string kind) {
    ViolationRecord r;
    r.graph6 = emit_graph6(g);
    r.kind = std::move(kind);
    r.n = g.order();
    r.q = g.size();
    r.delta = g.min_degree();
    r.kappa = g.vertex_connectivity();
    r.longest = longest_cycle_length(g);
    return r;
}

// Record for the first (lexicographic) non-dominating longest cycle, if
// any, with all labels in the canonical labeling so the graph6 string alone
// reproduces the finding.
std::optional<ViolationRecord> non_dominating_record(const Graph& g, const char* kind) {
    int longest = longest_cycle_length(g);
    if (g.order() - longest <= 1) return std::nullopt;  // remainder too small to strand an edge
    bool clean = for_each_longest_cycle(g, [&](const Cycle& c) { return is_dominating(g, c); });
    if (clean) return std::nullopt;
    Graph gc = canonical_graph(g);
    ViolationRecord r = base_record(gc, kind);
    for_each_longest_cycle(gc, [&](const Cycle& c) {
        if (is_dominating(gc, c)) return true;
        r.cycle = c.verts;
        r.off_edge = stranded_edge(gc, c);
        return false;
    });
    r.detail = "longest cycle strands an off-cycle edge";
    return r;
}

ViolationRecord error_record(const Graph& g, const std::exception& e) {
    ViolationRecord r;
    r.kind = "error";
    r.graph6 = emit_graph6(g);
    r.n = g.order();
    r.detail = e.what();
    return r;
}

void theorem_sweep_into(VerificationReport& rep, std::span<const Graph> graphs,
                        const SweepOptions& opts) {
    std::vector<std::uint8_t> applicable(graphs.size(), 0);
    std::vector<std::optional<ViolationRecord>> slot(graphs.size());
    parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        try {
            if (!theorem_applies(g)) return;
            applicable[i] = 1;
            slot[i] = non_dominating_record(g, "theorem");
        } catch (const std::exception& e) {
            slot[i] = error_record(g, e);
        }
    });
    rep.graphs_scanned += static_cast<long long>(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        rep.applicable += applicable[i];
        if (slot[i]) rep.records.push_back(std::move(*slot[i]));
    }
}

}  // namespace

VerificationReport verify_theorem(std::span<const Graph> graphs, const SweepOptions& opts) {
    Timer t;
    VerificationReport rep;
    rep.mode = "theorem";
    rep.params_json = json{{"graphs", graphs.size()}}.dump();
    theorem_sweep_into(rep, graphs, opts);
    rep.sort_records();
    rep.wall_ms = t.ms();
    return rep;
}

VerificationReport verify_theorem_stream(Graph6Reader& reader, std::optional<int> delta_filter,
                                         const SweepOptions& opts) {
    Timer t;
    VerificationReport rep;
    rep.mode = "theorem_stream";
    rep.params_json =
        json{{"delta_filter", delta_filter ? json(*delta_filter) : json(nullptr)}}.dump();
    constexpr std::size_t kBatch = 4096;
    std::vector<Graph> batch;
    batch.reserve(kBatch);
    bool more = true;
    while (more) {
        batch.clear();
        long long filtered = 0;
        while (batch.size() < kBatch) {
            auto rec = reader.next();
            if (!rec) {
                more = false;
                break;
            }
            if (!rec->graph) {
                rep.stream_errors.push_back({rec->line_no, rec->error});
                continue;
            }
            if (delta_filter && rec->graph->min_degree() != *delta_filter) {
                ++filtered;
                continue;
            }
            batch.push_back(std::move(*rec->graph));
        }
        theorem_sweep_into(rep, batch, opts);
        rep.graphs_scanned += filtered;
    }
    rep.sort_records();
    rep.wall_ms = t.ms();
    return rep;
}

std::vector<Graph> theorem_domain(int delta, int n_cap) {
    if (delta < 2) throw std::invalid_argument("theorem needs delta >= 2");
    if (delta > 3 && n_cap < 0)
        throw std::invalid_argument(
            "exhaustive domains are delta 2 and 3; larger delta needs an explicit order cap");
    const long long q_max = theorem_q_max(delta);
    int n_hi = static_cast<int>(std::min<long long>(12, 2 * q_max / delta));
    if (n_cap >= 0) n_hi = std::min(n_hi, n_cap);
    std::vector<Graph> out;
    for (int n = std::max(3, delta + 1); n <= n_hi; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.min_degree = delta;
        spec.max_edges = static_cast<int>(q_max);
        spec.biconnected_only = true;
        for (Graph& g : enumerate_graphs(spec)) out.push_back(std::move(g));
    }
    return out;
}

Graph witness8() {
    return Graph::build(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 3}});
}

namespace {

Graph copies(const Graph& g, int count) {
    Graph out = g;
    for (int i = 1; i < count; ++i) out = Graph::disjoint_union(out, g);
    return out;
}

GalleryEntry gallery_entry(std::string name, const Graph& g, std::string note) {
    GalleryEntry e;
    e.name = std::move(name);
    e.graph = g;
    GraphAnalysis a = analyze_graph(g);
    e.n = a.n;
    e.q = a.q;
    e.delta = a.delta;
    e.kappa = a.kappa;
    e.longest = a.longest;
    e.hamiltonian = a.hamiltonian;
    e.non_dominating_longest = a.non_dominating_count > 0;
    e.within_bound = a.q <= theorem_q_max(a.delta);
    e.note = std::move(note);
    return e;
}

}  // namespace

std::vector<GalleryEntry> sharpness_gallery(int delta) {
    if (delta < 2) throw std::invalid_argument("gallery needs delta >= 2");
    if (delta > 11) throw std::invalid_argument("gallery constructions exceed 32 vertices past delta=11");

    std::vector<GalleryEntry> out;
    const std::string d = std::to_string(delta);

    out.push_back(gallery_entry(
        "K1+2K" + d, Graph::join(Graph::edgeless(1), copies(Graph::complete(delta), 2)),
        "cut vertex: dropping 2-connectivity lets a longest cycle strand the second branch"));

    if (delta >= 3) {
        Graph g = Graph::join(Graph::complete(2), copies(Graph::complete(delta - 1), 3));
        long long threshold = dichotomy_size_threshold(delta);
        out.push_back(gallery_entry(
            "K2+3K" + std::to_string(delta - 1), g,
            "size " + std::to_string(g.size()) + " sits one above the dichotomy threshold " +
                std::to_string(threshold) + "; a longest cycle misses a whole branch"));
    }

    {
        Graph g = Graph::join(Graph::complete(delta), Graph::edgeless(delta + 1));
        long long qm = theorem_q_max(delta);
        std::string note = "not hamiltonian, yet every longest cycle dominates: the conclusion "
                           "cannot be strengthened";
        if (g.size() > qm)
            note += "; size " + std::to_string(g.size()) + " exceeds q_max(" + d + ")=" +
                    std::to_string(qm) + ", so it sits outside the theorem domain";
        out.push_back(
            gallery_entry("K" + d + "+" + std::to_string(delta + 1) + "K1", g, std::move(note)));
    }

    if (delta == 2)
        out.push_back(gallery_entry(
            "witness8", witness8(),
            "q=9: one above the size bound, and every longest cycle strands an edge; the bound "
            "is sharp"));

    return out;
}

VerificationReport tightness_search(int delta, int q_lo, int q_hi, int n_max,
                                    const SweepOptions& opts) {
    if (delta < 2) throw std::invalid_argument("tightness search needs delta >= 2");
    if (q_lo > q_hi) throw std::invalid_argument("empty size band");
    if (n_max < 3) throw std::invalid_argument("order cap below 3");

    Timer t;
    VerificationReport rep;
    rep.mode = "tightness";
    rep.params_json =
        json{{"delta", delta}, {"q_lo", q_lo}, {"q_hi", q_hi}, {"n_max", n_max}}.dump();

    int n_hi = std::min({n_max, 12, static_cast<int>(2ll * q_hi / delta)});
    for (int n = delta + 1; n <= n_hi; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.min_degree = delta;
        spec.max_edges = q_hi;
        spec.biconnected_only = true;
        std::vector<Graph> graphs = enumerate_graphs(spec);
        std::vector<std::uint8_t> applicable(graphs.size(), 0);
        std::vector<std::optional<ViolationRecord>> slot(graphs.size());
        parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
            const Graph& g = graphs[i];
            try {
                if (g.min_degree() != delta || g.size() < q_lo) return;
                applicable[i] = 1;
                slot[i] = non_dominating_record(g, "tightness_witness");
            } catch (const std::exception& e) {
                slot[i] = error_record(g, e);
            }
        });
        rep.graphs_scanned += static_cast<long long>(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            rep.applicable += applicable[i];
            if (slot[i]) rep.records.push_back(std::move(*slot[i]));
        }
    }
    rep.sort_records();
    rep.wall_ms = t.ms();
    return rep;
}

namespace {

struct LemmaSlot {
    long long applicable = 0;
    std::vector<ViolationRecord> records;
};

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

// Runs every check of the selected family on g. Returns the number of
// applicable checks; failing verdicts (with a family label) go to out.
long long run_lemma_checks(const Graph& g, int which,
                           std::vector<std::pair<std::string, LemmaVerdict>>* out) {
    long long applicable = 0;
    auto note_failure = [&](std::string label, const LemmaVerdict& v) {
        if (out) out->emplace_back(std::move(label), v);
    };

    if (which == 1 || which == 2) {
        for (const Cycle& c : all_longest_cycles(g))
            for (const Path& p : all_longest_paths_in_remainder(g, c)) {
                if (which == 1) {
                    if (p.length() < 1) continue;
                    LemmaVerdict v = check_lemma1(g, c, p);
                    if (!v.applicable) continue;
                    ++applicable;
                    if (!v.holds) note_failure("lemma1", v);
                } else {
                    for (const LemmaVerdict& v : check_lemma2(g, c, p)) {
                        if (!v.applicable) continue;
                        ++applicable;
                        if (!v.holds) note_failure("lemma2", v);
                    }
                }
            }
        return applicable;
    }

    if (which == 3) {
        const int n = g.order();
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            VertexSet cut(s);
            VertexSet rest = g.vertices().minus(cut);
            if (rest.count() < 2) continue;
            if (components_within(g, rest).size() < 2) continue;
            for (LemmaVerdict& v : check_lemma3(g, cut)) {
                ++applicable;
                if (!v.holds) {
                    std::vector<int> cv(cut.begin(), cut.end());
                    v.witness += " cut={" + join_ints(cv, ',') + "}";
                    note_failure("lemma3", v);
                }
            }
        }
        return applicable;
    }

    // which == 4
    if (!g.is_biconnected()) return 0;
    LemmaVerdict v = check_lemma4(g);
    if (v.applicable) {
        ++applicable;
        if (!v.holds) note_failure("lemma4", v);
    }
    return applicable;
}

}  // namespace

VerificationReport lemma_sweep(std::span<const Graph> graphs, int which, const SweepOptions& opts) {
    if (which < 1 || which > 4) throw std::invalid_argument("lemma selector must be 1..4");
    Timer t;
    VerificationReport rep;
    rep.mode = "lemma" + std::to_string(which);
    rep.params_json = json{{"which", which}, {"graphs", graphs.size()}}.dump();

    std::vector<LemmaSlot> slots(graphs.size());
    parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        LemmaSlot& slot = slots[i];
        try {
            std::vector<std::pair<std::string, LemmaVerdict>> failures;
            slot.applicable = run_lemma_checks(g, which, &failures);
            if (failures.empty()) return;
            // Rerun on the canonical labeling so the recorded witnesses match
            // the emitted graph6 string.
            Graph gc = canonical_graph(g);
            failures.clear();
            run_lemma_checks(gc, which, &failures);
            for (auto& [label, v] : failures) {
                ViolationRecord r = base_record(gc, label);
                r.lhs = v.lhs;
                r.rhs = v.rhs;
                r.detail = v.witness;
                slot.records.push_back(std::move(r));
            }
        } catch (const std::exception& e) {
            slot.records.push_back(error_record(g, e));
        }
    });
    rep.graphs_scanned = static_cast<long long>(graphs.size());
    for (LemmaSlot& s : slots) {
        rep.applicable += s.applicable;
        for (ViolationRecord& r : s.records) rep.records.push_back(std::move(r));
    }
    rep.sort_records();
    rep.wall_ms = t.ms();
    return rep;
}

VerificationReport classical_sweep(std::span<const Graph> graphs, const SweepOptions& opts) {
    Timer t;
    VerificationReport rep;
    rep.mode = "classical";
    rep.params_json = json{{"graphs", graphs.size()}}.dump();

    std::vector<LemmaSlot> slots(graphs.size());
    parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        LemmaSlot& slot = slots[i];
        try {
            ClassicalPredicates preds = classical_predicates(g);
            const std::pair<const char*, const TheoremCheck*> checks[] = {
                {"size_hamiltonian", &preds.size_hamiltonian},
                {"two_connected_long_cycle", &preds.two_connected_long_cycle},
                {"cycle_vs_remainder", &preds.cycle_vs_remainder},
                {"degree_sum_hamiltonian", &preds.degree_sum_hamiltonian},
            };
            for (auto [name, check] : checks) {
                if (!check->hypothesis) continue;
                ++slot.applicable;
                if (!check->implication()) {
                    ViolationRecord r = base_record(canonical_graph(g), std::string("classical_") + name);
                    r.detail = "hypothesis holds, conclusion fails";
                    slot.records.push_back(std::move(r));
                }
            }
        } catch (const std::exception& e) {
            slot.records.push_back(error_record(g, e));
        }
    });
    rep.graphs_scanned = static_cast<long long>(graphs.size());
    for (LemmaSlot& s : slots) {
        rep.applicable += s.applicable;
        for (ViolationRecord& r : s.records) rep.records.push_back(std::move(r));
    }
    rep.sort_records();
    rep.wall_ms = t.ms();
    return rep;
}

void VerificationReport::sort_records() {
    std::sort(records.begin(), records.end(), [](const ViolationRecord& a, const ViolationRecord& b) {
        return std::tie(a.graph6, a.kind, a.detail) < std::tie(b.graph6, b.kind, b.detail);
    });
}

namespace {

json record_json(const ViolationRecord& r) {
    json j{{"type", "violation"}, {"kind", r.kind},     {"graph6", r.graph6}, {"n", r.n},
           {"q", r.q},            {"delta", r.delta},   {"kappa", r.kappa},   {"longest", r.longest},
           {"lhs", r.lhs},        {"rhs", r.rhs},       {"detail", r.detail}};
    if (!r.cycle.empty()) j["cycle"] = r.cycle;
    if (r.off_edge[0] >= 0) j["off_edge"] = r.off_edge;
    return j;
}

}  // namespace

// Wall time stays out of the serialized report so identical inputs give
// byte-identical files whatever the thread count; timings go to stderr.
std::string VerificationReport::summary_json() const {
    json j{{"type", "summary"},
           {"mode", mode},
           {"params", json::parse(params_json)},
           {"graphs_scanned", graphs_scanned},
           {"applicable", applicable},
           {"violations", records.size()},
           {"stream_errors", stream_errors.size()},
           {"confirmed", confirmed()}};
    return j.dump();
}

void VerificationReport::write_ndjson(std::ostream& out) const {
    for (const ViolationRecord& r : records) out << record_json(r).dump() << '\n';
    for (const StreamErrorRecord& e : stream_errors)
        out << json{{"type", "stream_error"}, {"line", e.line_no}, {"message", e.message}}.dump()
            << '\n';
    out << summary_json() << '\n';
}

}  // namespace domcycle
