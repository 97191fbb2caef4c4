// Detection of the structures excluded by the solver's hypothesis: no
// quadrilateral of the underlying simple graph may share an edge with a
// triangle or with another quadrilateral.  That condition is equivalent to
// containing none of four small subgraphs, which is what find_forbidden
// scans for directly; find_quad_sharing scans cycles instead.  All detection
// ignores multiplicities.
#pragma once

#include <optional>
#include <utility>

#include "degpart/multigraph.hpp"

namespace degpart {

enum class PatternKind {
    K4Minus,            // 4 vertices spanning >= 5 edges
    C5Plus,             // 5-cycle plus a chord
    K23,                // complete bipartite 2 x 3
    L3,                 // two quadrilaterals sharing exactly one edge
    QuadTriangleShare,  // a 4-cycle and a triangle with a common edge
    QuadQuadShare,      // two distinct 4-cycles with a common edge
};

const char* pattern_kind_name(PatternKind k);

// Vertex tuple conventions:
//   K4Minus            (a,b,c,d) ascending
//   C5Plus             cycle order, starting at the smallest cycle vertex,
//                      second entry the smaller of its two cycle neighbors
//   K23                (a1,a2,b1,b2,b3): every ai-bj adjacent; each side ascending
//   L3                 (u,v,a,b,c,d): quads u-v-a-b-u and u-v-c-d-u share edge uv
//   Quad*Share         the 4-cycle in cycle order, then the partner cycle's
//                      remaining vertices ascending; shared_edge set
struct PatternWitness {
    PatternKind kind;
    std::vector<Vertex> vertices;
    std::optional<std::pair<Vertex, Vertex>> shared_edge;
};

// First forbidden subgraph in kind order K4Minus, C5Plus, K23, L3;
// within a kind the lexicographically smallest canonical tuple.
std::optional<PatternWitness> find_forbidden(const Multigraph& g);

// First edge-sharing cycle pair: all (quad, triangle) pairs are tried before
// any (quad, quad) pair; quads and triangles are enumerated in canonical
// lexicographic order.
std::optional<PatternWitness> find_quad_sharing(const Multigraph& g);

inline bool hypothesis_holds(const Multigraph& g) {
    return !find_quad_sharing(g).has_value();
}

// Re-verifies a witness against the graph from scratch.
bool witness_valid(const Multigraph& g, const PatternWitness& w);

// cycle existence in the underlying simple graph
bool has_triangle(const Multigraph& g);
bool has_quadrilateral(const Multigraph& g);
// true when no two quadrilaterals share an edge
bool quads_edge_disjoint(const Multigraph& g);

}  // namespace degpart
