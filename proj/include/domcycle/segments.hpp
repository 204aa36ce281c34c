#pragma once

#include <string>
#include <vector>

#include "domcycle/cycles.hpp"
#include "domcycle/graph.hpp"

namespace domcycle {

// Arc of the cycle between two consecutive attachment vertices, walked in
// cycle orientation. edge_length counts cycle edges on the arc; interior
// lists the vertices strictly between the endpoints, in cycle order.
struct Segment {
    int from = 0;
    int to = 0;
    int edge_length = 0;
    std::vector<int> interior;
};

// Attachment structure of a remainder path P = x..y on a longest cycle C:
// xi = (N(x) u N(y)) n V(C) in cycle order, segments between consecutive
// attachments. sum of edge_length over segments == |C|.
struct SegmentDecomposition {
    std::vector<int> xi;
    std::vector<Segment> segments;
    int s() const { return static_cast<int>(xi.size()); }
};

// Throws std::invalid_argument when p is not a path disjoint from c, or when
// neither endpoint of p attaches to the cycle (s = 0).
SegmentDecomposition decompose(const Graph& g, const Cycle& c, const Path& p);

// Path z..w with z in interior(segment a), w in interior(segment b), all
// internal vertices outside V(C) u V(P). A direct edge has length 1.
struct IntermediatePath {
    std::vector<int> verts;
    int seg_a = 0;
    int seg_b = 0;
    int length() const { return static_cast<int>(verts.size()) - 1; }
};

// All intermediate paths between the interiors of segments a and b, each
// once (anchored on the a-side), sorted by (length, sequence). Empty
// interiors simply yield the empty list.
std::vector<IntermediatePath> intermediate_paths(const Graph& g, const Cycle& c, const Path& p,
                                                 const SegmentDecomposition& dec, int a, int b);

struct LemmaVerdict {
    bool applicable = false;
    bool holds = true;  // meaningful only when applicable
    long long lhs = 0;
    long long rhs = 0;
    std::string witness;
};

// |C| against 3*delta + max(sigma1, sigma2) - 1 (path length 1) or
// max(2p+8, 4*delta-2p) (path length >= 2), applicable when both path
// endpoints have >= 2 cycle neighbors and their cycle neighborhoods differ.
// Pre: c is a longest cycle, p a longest path of g - V(c).
LemmaVerdict check_lemma1(const Graph& g, const Cycle& c, const Path& p);

// Per segment pair (a < b): |I_a| + |I_b| against 2p + 2|L| + 4 for the
// longest intermediate path L, and additionally 2p + i + 5 when all i
// intermediate paths are single edges and i <= 3 (i >= 4 imposes nothing).
// Pairs without intermediate paths are returned as not applicable. Overall
// hypothesis: both endpoints see the same cycle neighborhood, of size >= 2;
// otherwise the empty list is returned.
std::vector<LemmaVerdict> check_lemma2(const Graph& g, const Cycle& c, const Path& p);

// One verdict per component H of g - cut: 2*q_H >= h*(2*delta - h + 1)
// where h = |V(H)| and q_H counts edges meeting V(H). Throws when cut is
// not a cut set (fewer than two components).
std::vector<LemmaVerdict> check_lemma3(const Graph& g, VertexSet cut);

// Dichotomy for 2-connected graphs with 3*delta >= n - 2: q >= threshold
// (9 for delta=2, else 3(delta-1)(delta+2)/2) or every longest cycle is
// dominating. Throws when g is not 2-connected.
LemmaVerdict check_lemma4(const Graph& g);

// The size threshold used by the Lemma 4 dichotomy.
long long dichotomy_size_threshold(int delta);

}  // namespace domcycle
