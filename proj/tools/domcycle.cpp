// Command-line front end: analyze graph6 streams, enumerate graphs,
// sweep the main theorem and its lemmas, print the sharpness gallery,
// and hunt for witnesses just past the size bound.
//
// stdout carries the deterministic human-readable results; NDJSON reports
// go to the --json path; timings go to stderr.
// Exit codes: 0 clean, 1 violation or witness found, 2 usage/input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcycle/cycles.hpp"
#include "domcycle/enumerate.hpp"
#include "domcycle/graph6.hpp"
#include "domcycle/verify.hpp"

using namespace domcycle;
using nlohmann::json;

namespace {

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct InputStream {
    std::ifstream file;
    std::istringstream literal;
    std::istream* in = nullptr;
};

// Precedence: literal graph6 line, then file ("-" = stdin), then stdin.
bool open_input(InputStream& s, const std::string& path, const std::string& line) {
    if (!line.empty()) {
        s.literal.str(line + '\n');
        s.in = &s.literal;
        return true;
    }
    if (path.empty() || path == "-") {
        s.in = &std::cin;
        return true;
    }
    s.file.open(path);
    if (!s.file) {
        std::cerr << "cannot open " << path << '\n';
        return false;
    }
    s.in = &s.file;
    return true;
}

int run_analyze(const std::string& input, const std::string& line, bool as_json) {
    InputStream s;
    if (!open_input(s, input, line)) return 2;
    Graph6Reader reader(*s.in);
    bool had_errors = false;
    while (auto rec = reader.next()) {
        if (!rec->graph) {
            std::cerr << "line " << rec->line_no << ": " << rec->error << '\n';
            had_errors = true;
            continue;
        }
        GraphAnalysis a = analyze_graph(*rec->graph);
        if (as_json) {
            json j{{"graph6", rec->raw},
                   {"n", a.n},
                   {"q", a.q},
                   {"delta", a.delta},
                   {"kappa", a.kappa},
                   {"longest", a.longest},
                   {"longest_cycles", a.longest_count},
                   {"non_dominating", a.non_dominating_count},
                   {"hamiltonian", a.hamiltonian},
                   {"applicable", a.applicable}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << rec->raw << " n=" << a.n << " q=" << a.q << " delta=" << a.delta
                      << " kappa=" << a.kappa << " longest=" << a.longest
                      << " longest_cycles=" << a.longest_count
                      << " non_dominating=" << a.non_dominating_count
                      << " hamiltonian=" << int(a.hamiltonian)
                      << " applicable=" << int(a.applicable) << '\n';
        }
    }
    return had_errors ? 2 : 0;
}

int run_enum(int n, int min_degree, int max_edges, bool biconnected, bool count_only,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot write " << out_path << '\n';
            return 2;
        }
        out = &file;
    }
    EnumSpec spec;
    spec.n = n;
    spec.min_degree = min_degree;
    spec.max_edges = max_edges;
    spec.biconnected_only = biconnected;
    long long count = 0;
    enumerate_graphs(spec, [&](const Graph& g) {
        ++count;
        if (!count_only) *out << emit_graph6(g) << '\n';
    });
    if (count_only) *out << count << '\n';
    return 0;
}

int emit_report(const VerificationReport& rep, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << '\n';
            return 2;
        }
        rep.write_ndjson(out);
    }
    for (const ViolationRecord& r : rep.records) {
        std::cout << "violation kind=" << r.kind << " graph6=" << r.graph6 << " n=" << r.n
                  << " q=" << r.q << " delta=" << r.delta << " kappa=" << r.kappa
                  << " longest=" << r.longest;
        if (!r.cycle.empty()) {
            std::cout << " cycle=";
            for (std::size_t i = 0; i < r.cycle.size(); ++i)
                std::cout << (i ? "-" : "") << r.cycle[i];
        }
        if (r.off_edge[0] >= 0)
            std::cout << " off_edge=" << r.off_edge[0] << "-" << r.off_edge[1];
        std::cout << " detail=\"" << r.detail << "\"\n";
    }
    for (const StreamErrorRecord& e : rep.stream_errors)
        std::cout << "stream_error line=" << e.line_no << " message=\"" << e.message << "\"\n";
    std::cout << rep.mode << ": scanned=" << rep.graphs_scanned << " applicable=" << rep.applicable
              << " violations=" << rep.records.size()
              << " stream_errors=" << rep.stream_errors.size()
              << (rep.confirmed() && rep.stream_errors.empty() ? " CONFIRMED" : " FAILED") << '\n';
    std::cerr << rep.mode << " wall_ms=" << rep.wall_ms << '\n';
    if (!rep.confirmed()) return 1;
    if (!rep.stream_errors.empty()) return 2;
    return 0;
}

int run_verify(std::optional<int> delta, int n_max, const std::string& input,
               const std::string& json_path, int threads) {
    SweepOptions opts;
    opts.threads = threads;
    VerificationReport rep;
    if (!input.empty()) {
        InputStream s;
        if (!open_input(s, input, "")) return 2;
        Graph6Reader reader(*s.in);
        rep = verify_theorem_stream(reader, delta, opts);
    } else {
        if (!delta) {
            std::cerr << "verify needs --delta for the built-in domain, or --input for a stream\n";
            return 2;
        }
        std::vector<Graph> graphs = theorem_domain(*delta, n_max);
        rep = verify_theorem(graphs, opts);
        rep.params_json = json{{"delta", *delta}, {"n_max", n_max}}.dump();
    }
    return emit_report(rep, json_path);
}

int run_lemmas(int which, int n_max, const std::string& json_path, int threads) {
    std::vector<Graph> graphs;
    const bool biconnected = which == 4;
    for (int n = biconnected ? 3 : 1; n <= n_max; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.min_degree = biconnected ? 2 : 0;
        spec.biconnected_only = biconnected;
        for (Graph& g : enumerate_graphs(spec)) graphs.push_back(std::move(g));
    }
    SweepOptions opts;
    opts.threads = threads;
    VerificationReport rep = lemma_sweep(graphs, which, opts);
    rep.params_json = json{{"which", which}, {"n_max", n_max}}.dump();
    return emit_report(rep, json_path);
}

int run_gallery(int delta, bool print_g6) {
    for (const GalleryEntry& e : sharpness_gallery(delta)) {
        std::cout << "name=" << e.name;
        if (print_g6) std::cout << " g6=" << emit_graph6(e.graph);
        std::cout << " n=" << e.n << " q=" << e.q << " delta=" << e.delta << " kappa=" << e.kappa
                  << " longest=" << e.longest << " hamiltonian=" << int(e.hamiltonian)
                  << " non_dominating_longest=" << int(e.non_dominating_longest)
                  << " within_bound=" << int(e.within_bound) << " note=\"" << e.note << "\"\n";
    }
    return 0;
}

int run_tightness(int delta, std::optional<int> q_single, std::optional<int> q_lo,
                  std::optional<int> q_hi, int n_max, const std::string& json_path, int threads) {
    const int just_past = static_cast<int>(theorem_q_max(delta)) + 1;
    int lo = q_single.value_or(q_lo.value_or(just_past));
    int hi = q_single.value_or(q_hi.value_or(std::max(lo, just_past)));
    SweepOptions opts;
    opts.threads = threads;
    VerificationReport rep = tightness_search(delta, lo, hi, n_max, opts);
    return emit_report(rep, json_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact longest-cycle domination checker"};
    app.require_subcommand(1);
    int rc = 0;

    auto* analyze = app.add_subcommand("analyze", "per-graph invariants for a graph6 stream");
    std::string an_input, an_line;
    bool an_json = false;
    auto* an_i = analyze->add_option("-i,--input", an_input, "graph6 file ('-' or omitted: stdin)");
    analyze->add_option("-g,--graph6-line", an_line, "analyze one literal graph6 line")
        ->excludes(an_i);
    analyze->add_flag("--json", an_json, "one JSON object per graph");
    analyze->callback([&] { rc = run_analyze(an_input, an_line, an_json); });

    auto* en = app.add_subcommand("enum", "graphs up to isomorphism, graph6 output");
    int en_n = 0, en_min_degree = 0, en_max_edges = -1;
    bool en_biconnected = false, en_count = false;
    std::string en_out;
    en->add_option("-n,--n,--order", en_n, "number of vertices (1..12)")->required();
    en->add_option("--min-degree", en_min_degree, "minimum degree filter");
    en->add_option("--max-edges", en_max_edges, "edge count cap (-1: none)");
    en->add_flag("--biconnected", en_biconnected, "keep 2-connected graphs only");
    en->add_flag("--count-only", en_count, "print the count instead of graphs");
    en->add_option("--out", en_out, "write graph6 lines here instead of stdout");
    en->callback(
        [&] { rc = run_enum(en_n, en_min_degree, en_max_edges, en_biconnected, en_count, en_out); });

    auto* verify =
        app.add_subcommand("verify", "check that longest cycles dominate on the theorem domain");
    std::optional<int> v_delta;
    int v_nmax = -1, v_threads = default_threads();
    std::string v_input, v_json;
    verify->add_option("--delta", v_delta,
                       "minimum degree (domain mode: required; stream mode: filter)");
    verify->add_option("--n-max", v_nmax, "order cap for the built-in domain");
    verify->add_option("-i,--input", v_input, "graph6 stream to check instead of the built-in domain");
    verify->add_option("--json", v_json, "write the NDJSON report to this path");
    verify->add_option("--threads", v_threads, "worker threads");
    verify->callback([&] { rc = run_verify(v_delta, v_nmax, v_input, v_json, v_threads); });

    auto* lemmas = app.add_subcommand("lemmas", "sweep one supporting lemma over small graphs");
    int l_which = 0, l_nmax = -1, l_threads = default_threads();
    std::string l_json;
    lemmas->add_option("--which", l_which, "lemma selector (1..4)")->required();
    lemmas->add_option("--n-max", l_nmax, "order cap (defaults: 8, 8, 7, 9)");
    lemmas->add_option("--json", l_json, "write the NDJSON report to this path");
    lemmas->add_option("--threads", l_threads, "worker threads");
    lemmas->callback([&] {
        static constexpr int kDefaultCap[5] = {0, 8, 8, 7, 9};
        int cap = l_nmax > 0 ? l_nmax : (l_which >= 1 && l_which <= 4 ? kDefaultCap[l_which] : 7);
        rc = run_lemmas(l_which, cap, l_json, l_threads);
    });

    auto* gallery = app.add_subcommand("gallery", "extremal constructions around the bound");
    int g_delta = 2;
    bool g_g6 = false;
    gallery->add_option("--delta", g_delta, "minimum degree of the constructions");
    gallery->add_flag("--graph6", g_g6, "include graph6 strings");
    gallery->callback([&] { rc = run_gallery(g_delta, g_g6); });

    auto* tight = app.add_subcommand("tightness", "search just past the size bound for witnesses");
    int t_delta = 3, t_nmax = 10, t_threads = default_threads();
    std::optional<int> t_q, t_qlo, t_qhi;
    std::string t_json;
    tight->add_option("--delta", t_delta, "minimum degree");
    auto* t_qopt = tight->add_option("--q", t_q, "exact edge count (default: q_max+1)");
    tight->add_option("--q-lo", t_qlo, "edge band low end")->excludes(t_qopt);
    tight->add_option("--q-hi", t_qhi, "edge band high end")->excludes(t_qopt);
    tight->add_option("--n-max", t_nmax, "order cap");
    tight->add_option("--json", t_json, "write the NDJSON report to this path");
    tight->add_option("--threads", t_threads, "worker threads");
    tight->callback(
        [&] { rc = run_tightness(t_delta, t_q, t_qlo, t_qhi, t_nmax, t_json, t_threads); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
