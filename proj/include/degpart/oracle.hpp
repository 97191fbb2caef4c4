// Brute-force reference implementations used to cross-check the real
// algorithms at small sizes.  Deliberately naive and strictly serial: only
// the graph type is shared with the main code, degrees are recomputed from
// multiplicities on every query, and there is no caching.  Size caps are
// enforced with exceptions.
#pragma once

#include <optional>
#include <utility>

#include "degpart/multigraph.hpp"

namespace degpart {
struct Instance;  // defined in solver.hpp
}

namespace degpart::oracle {

struct BruteVerdict {
    bool feasible = false;
    VertexSet a_side;  // witness split when feasible
};

// All 2^n - 2 ordered splits in ascending mask order; first feasible wins.
// n <= 20.
BruteVerdict brute_partition(const Instance& inst);

// Literal subset quantification of degeneracy: every nonempty subset of X
// has a vertex at or below its demand.  |X| <= 16.
bool brute_degenerate(const Multigraph& g, VertexSet x, std::span<const int> f);

// Minimum-cardinality f-nice subset; ties broken by lexicographically least
// vertex list.  n <= 16.
std::optional<VertexSet> brute_minimal_nice(const Multigraph& g,
                                            std::span<const int> f);

// First ordered pair of disjoint nonempty sets (X a-feasible, Y b-feasible),
// X in ascending mask order, Y in ascending submask order of the complement.
// n <= 13.
std::optional<std::pair<VertexSet, VertexSet>> brute_feasible_pair(const Instance& inst);

}  // namespace degpart::oracle
