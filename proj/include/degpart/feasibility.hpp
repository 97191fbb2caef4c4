// Degeneracy peeling and the subset predicates built on it.
//
// For a demand function f (per-vertex integers) and X a vertex set:
//   f-feasible   every x in X has degree_within(x, X) >= f(x)
//   f-nice       every x in X has degree_within(x, X) >= f(x) + mu(x) - 1,
//                mu taken in the whole graph
//   f-degenerate every nonempty X' <= X has some x with
//                degree_within(x, X') <= f(x)
//   f-meager     same with threshold f(x) + mu(x) - 1
//
// The subset-quantified predicates reduce to greedy peeling: repeatedly
// delete any vertex at or below its threshold; the fixed point ("core")
// is empty exactly when the predicate holds.
#pragma once

#include <optional>

#include "degpart/multigraph.hpp"

namespace degpart {

struct PeelResult {
    bool succeeded = false;        // everything was deleted
    std::vector<Vertex> order;     // deletion order
    VertexSet stuck_set;           // nonempty fixed point when !succeeded
};

// Repeatedly delete vertices v of the current set with
// degree_within(v, current) <= threshold[v].  Among deletable vertices the
// earliest in scan_order goes first (ascending id when scan_order is empty).
// The final stuck set is order-independent; only `order` depends on it.
PeelResult peel(const Multigraph& g, VertexSet x, std::span<const int> threshold,
                std::span<const Vertex> scan_order = {});

bool is_f_feasible(const Multigraph& g, VertexSet x, std::span<const int> f);
bool is_f_nice(const Multigraph& g, VertexSet x, std::span<const int> f);
bool is_f_degenerate(const Multigraph& g, VertexSet x, std::span<const int> f);
bool is_f_meager(const Multigraph& g, VertexSet x, std::span<const int> f);

// Largest f-feasible (resp. f-nice) subset of X; empty set when none exists.
VertexSet max_f_feasible_core(const Multigraph& g, VertexSet x, std::span<const int> f);
VertexSet max_f_nice_core(const Multigraph& g, VertexSet x, std::span<const int> f);

bool contains_f_feasible(const Multigraph& g, VertexSet x, std::span<const int> f);

// Inclusion-minimal f-nice subset, or nullopt when no f-nice subset exists.
// Starts from max_f_nice_core(V) and repeatedly replaces the current set S by
// max_f_nice_core(S \ {v}) for the first v (in scan order) where that core is
// nonempty.  Deterministic for a fixed scan order.
std::optional<VertexSet> minimal_f_nice_subset(const Multigraph& g,
                                               std::span<const int> f,
                                               std::span<const Vertex> scan_order = {});

}  // namespace degpart
