#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domcycle/graph.hpp"
#include "domcycle/graph6.hpp"

namespace domcycle {

// Largest edge count for which the dominating-cycle theorem applies at the
// given minimum degree: 8 for delta=2, floor((3(delta-1)(delta+2)-1)/2) for
// delta>=3. Throws for delta < 2.
long long theorem_q_max(int delta);

// Theorem applicability for a single graph: 2-connected, delta >= 2,
// q <= theorem_q_max(delta).
bool theorem_applies(const Graph& g);

// Per-graph facts used by the CLI and the sweeps.
struct GraphAnalysis {
    int n = 0;
    int q = 0;
    int delta = 0;
    int kappa = 0;
    int longest = 0;
    long long longest_count = 0;
    long long non_dominating_count = 0;
    bool hamiltonian = false;
    bool applicable = false;  // theorem_applies
};

GraphAnalysis analyze_graph(const Graph& g);

struct ViolationRecord {
    std::string graph6;  // canonical labeling; witness fields use its labels
    std::string kind;
    int n = 0, q = 0, delta = 0, kappa = 0, longest = 0;
    std::vector<int> cycle;            // offending or witnessing cycle
    std::array<int, 2> off_edge{-1, -1};  // an edge stranded off the cycle
    long long lhs = 0, rhs = 0;
    std::string detail;
};

struct StreamErrorRecord {
    long line_no = 0;
    std::string message;
};

struct VerificationReport {
    std::string mode;
    std::string params_json = "{}";
    long long graphs_scanned = 0;
    long long applicable = 0;  // graphs for theorem sweeps, checks for lemma sweeps
    std::vector<ViolationRecord> records;
    std::vector<StreamErrorRecord> stream_errors;
    double wall_ms = 0;

    bool confirmed() const { return records.empty(); }
    void sort_records();  // by graph6, then detail
    std::string summary_json() const;
    // One JSON object per line: records, then stream errors, then summary.
    void write_ndjson(std::ostream& out) const;
};

struct SweepOptions {
    int threads = 1;
};

// Checks every applicable graph for a non-dominating longest cycle.
VerificationReport verify_theorem(std::span<const Graph> graphs, const SweepOptions& opts = {});

// Streamed variant; malformed lines become error records instead of aborting.
// When delta_filter is set, only graphs with that exact minimum degree are
// considered (the applicability test still runs per graph).
VerificationReport verify_theorem_stream(Graph6Reader& reader, std::optional<int> delta_filter,
                                         const SweepOptions& opts = {});

// Exhaustive theorem domain for delta in {2,3}: 2-connected, delta(G) >= delta,
// q <= theorem_q_max(delta); the handshake bound makes n <= 2*q_max/delta.
// n_cap (if >= 0) lowers the order ceiling; other delta values require it.
std::vector<Graph> theorem_domain(int delta, int n_cap = -1);

struct GalleryEntry {
    std::string name;
    Graph graph;
    int n = 0, q = 0, delta = 0, kappa = 0, longest = 0;
    bool hamiltonian = false;
    bool non_dominating_longest = false;
    bool within_bound = false;  // q <= theorem_q_max(delta)
    std::string note;
};

// The 8-vertex extremal graph: a hexagon with a two-edge handle whose ends
// are antipodal hexagon vertices. q = 9, every longest cycle has length 6
// and strands an edge.
Graph witness8();

// Named boundary examples for the given minimum degree (delta >= 2) with
// computed facts. Flags constructions that fall outside the size bound.
std::vector<GalleryEntry> sharpness_gallery(int delta);

// Searches 2-connected graphs with delta(G) == delta exactly and
// q in [q_lo, q_hi], n <= n_max, for non-dominating longest cycles. The
// records are the witnesses found (empty = none exist in that band).
VerificationReport tightness_search(int delta, int q_lo, int q_hi, int n_max,
                                    const SweepOptions& opts = {});

// which = 1, 2, 3, 4 selects the inequality family. 1 and 2 quantify over
// every longest cycle and every longest remainder path; 3 over every cut
// set; 4 over the graphs themselves (non-2-connected inputs are skipped).
VerificationReport lemma_sweep(std::span<const Graph> graphs, int which,
                               const SweepOptions& opts = {});

// Implication sweep for the four classical predicates; a record is emitted
// whenever a hypothesis holds and its conclusion fails.
VerificationReport classical_sweep(std::span<const Graph> graphs, const SweepOptions& opts = {});

}  // namespace domcycle
