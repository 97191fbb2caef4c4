// The solve pipeline: validate the instance, construct a start split from a
// minimal nice subset, then repair it by weight-maximizing exchanges; an
// exhaustive bitmask scan certifies small instances.  Infeasible is only
// ever reported after exhaustive search; heuristic failure is Unknown.
#pragma once

#include <optional>
#include <string>

#include "degpart/partition.hpp"
#include "degpart/patterns.hpp"

namespace degpart {

struct Instance {
    Multigraph graph;
    DegreeSpec spec;
};

struct Violation {
    enum class Kind { Range, Degree, Structure };
    Kind kind;
    std::string detail;
    std::optional<PatternWitness> witness;  // structure violations only
    bool warning = false;                   // non-strict runs downgrade structure
};

const char* violation_kind_name(Violation::Kind k);

// Checks demand ranges (>= 2), the degree condition
// d(v) >= a(v) + b(v) + 2*mu(v) - 3, and the quadrilateral-sharing
// hypothesis.  Non-strict runs mark structure findings as warnings.
std::vector<Violation> validate(const Instance& inst, bool strict);

// Start split built the way the existence argument does: S is an
// inclusion-minimal a-nice subset; if the rest of the graph has a b-feasible
// core the two make a feasible pair, otherwise the vertex of S with fewest
// edges into the rest is moved across.  scan_order permutes all internal
// tie-breaks (used by restarts).
struct SeedResult {
    // exactly one of the two is set
    std::optional<std::pair<VertexSet, VertexSet>> pair;  // (a-side, b-side) feasible
    std::optional<VertexSet> start_a;                     // start split, side A
};

SeedResult seed_partition(const Instance& inst, std::span<const Vertex> scan_order = {});

struct SearchOptions {
    long long budget = -1;  // accepted-move limit; -1 = 200 * n^2
    int restarts = 8;       // extra seeded chains after the initial one
    std::uint64_t seed = 0;
    int threads = 1;        // 1 = serial; 0 = OpenMP default; k = k workers
};

struct SearchResult {
    std::optional<Partition> best;  // lowest deficiency reached
    long long moves = 0;            // accepted moves of the winning chain
    int winner_chain = 0;           // 0 = the caller's start partition
};

// First-improvement local search on (deficiency, -omega), lexicographic.
// Deficit and near-deficit vertices are tried first; plateau moves that
// strictly increase omega are accepted, so every accepted move strictly
// improves the objective and the search cannot cycle.  When a chain gets
// stuck above deficiency zero, further chains restart from permuted seeds.
// The returned best is never worse than the start.  Results are identical
// for any thread count.
SearchResult local_search(const Instance& inst, const Partition& start,
                          const SearchOptions& opt);

// Extends a feasible pair to a full partition: leftover vertices join the
// side with larger slack (descending graph degree, ties toward A), then
// local search repairs any damage.
Partition greedy_extend(const Instance& inst, VertexSet x, VertexSet y);

struct ExactResult {
    bool feasible = false;
    VertexSet a_side;
    unsigned long long masks_checked = 0;
};

// Exhaustive scan of all 2^n - 2 ordered splits in ascending mask order,
// first feasible wins.  The scan runs in fixed-size blocks; within a block
// masks are checked in parallel and the smallest hit is kept, so the result
// matches the serial scan exactly.  Throws if n > max_exact.
ExactResult exact_solve(const Instance& inst, int max_exact = 22, int threads = 0);

enum class SolveStatus { Feasible, Infeasible, Unknown };

const char* solve_status_name(SolveStatus s);

struct SolveOptions {
    bool strict = false;
    std::uint64_t seed = 0;
    long long budget = -1;  // -1 = 200 * n^2
    int restarts = 8;
    int max_exact = 22;  // exhaustive fallback ceiling
    int threads = 0;     // 0 = OpenMP default
};

struct SolveStats {
    int restarts_used = 0;
    long long moves = 0;
    bool exact_ran = false;
};

struct SolveReport {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<VertexSet> a_side;  // set when Feasible
    long long best_deficiency = -1;   // of the best split seen (0 when Feasible)
    SolveStats stats;
    std::vector<Violation> violations;
};

// Pipeline: validate (strict aborts on any violation), seed, complete the
// pair or run local search, exhaustive fallback when the instance is small
// enough.  Reports are deterministic functions of (instance, options).
SolveReport solve(const Instance& inst, const SolveOptions& opt = {});

}  // namespace degpart
