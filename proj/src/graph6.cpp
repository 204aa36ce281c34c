#include "domcycle/graph6.hpp"

#include <vector>

namespace domcycle {

namespace {

// Upper-triangle bit count for order n.
constexpr long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

constexpr long body_bytes(int n) { return (pair_count(n) + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error("empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Graph6Error("byte out of graph6 range: code " +
                              std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
    int header = line[0] - 63;
    if (line[0] == '~')
        throw Graph6Error("multi-byte order header not supported (n > 62)");
    int n = header;
    if (n < 1)
        throw Graph6Error("order 0 not supported");
    if (n > Graph::kMaxVertices)
        throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum 32");
    long expect = 1 + body_bytes(n);
    if (static_cast<long>(line.size()) != expect)
        throw Graph6Error("wrong line length for n=" + std::to_string(n) + ": expected " +
                          std::to_string(expect) + " bytes, got " + std::to_string(line.size()));

    std::vector<Edge> edges;
    long bit = 0;
    long total = pair_count(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    // Remaining bits of the final byte must be zero padding.
    for (long b = total; b < 6 * body_bytes(n); ++b) {
        int byte = line[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw Graph6Error("nonzero padding bit");
    }
    return Graph::build(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out(1 + body_bytes(n), 63);
    out[0] = static_cast<char>(63 + n);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    return out;
}

std::optional<Graph6Record> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>", 0) == 0) continue;  // stream header
        Graph6Record rec;
        rec.line_no = line_no_;
        rec.raw = line;
        try {
            rec.graph = parse_graph6(line);
        } catch (const Graph6Error& e) {
            if (!skip_errors_)
                throw Graph6Error("line " + std::to_string(line_no_) + ": " + e.what());
            rec.error = e.what();
        }
        return rec;
    }
    return std::nullopt;
}

}  // namespace domcycle
