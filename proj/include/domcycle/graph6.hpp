#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domcycle/graph.hpp"

namespace domcycle {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict single-line graph6 decode. Accepts only the one-byte order header
// (n in [1,62]) and requires n <= 32, exact line length, bytes in [63,126],
// and zero padding bits. Throws Graph6Error otherwise.
Graph parse_graph6(std::string_view line);

// Canonical single-line encode, no trailing newline.
std::string emit_graph6(const Graph& g);

// One record per input line that was neither blank nor a ">>" header.
struct Graph6Record {
    long line_no = 0;          // 1-based line in the stream
    std::string raw;           // the line as read (without newline)
    std::optional<Graph> graph;
    std::string error;         // nonempty iff graph is empty
};

// Line-oriented reader: blank lines and lines starting with ">>" are
// skipped. Malformed lines become error records when skip_errors is set,
// otherwise the first bad line throws Graph6Error with its line number.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in, bool skip_errors = true)
        : in_(in), skip_errors_(skip_errors) {}

    std::optional<Graph6Record> next();
    long lines_read() const { return line_no_; }

private:
    std::istream& in_;
    bool skip_errors_;
    long line_no_ = 0;
};

}  // namespace domcycle
