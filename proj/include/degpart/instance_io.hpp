// JSON serialization for instances, partitions, and reports.
//
// instance  {"n": int, "edges": [[u, v, mult], ...], "a": [...], "b": [...]}
//           0 <= u < v < n, mult >= 1, each pair at most once
// partition {"A": [vertex ids]}
// report    {"status", "A", "B", "deficiency", "stats", "violations"}
#pragma once

#include <nlohmann/json.hpp>

#include "degpart/solver.hpp"

namespace degpart {

using ordered_json = nlohmann::ordered_json;

// throws std::invalid_argument / nlohmann::json::exception on malformed input
Instance instance_from_json(const nlohmann::json& j);
ordered_json instance_to_json(const Instance& inst);

VertexSet partition_a_from_json(const nlohmann::json& j, const Multigraph& g);

ordered_json witness_to_json(const PatternWitness& w);
ordered_json violations_to_json(const std::vector<Violation>& vs);
// order: number of vertices of the solved instance (for the B side)
ordered_json report_to_json(const SolveReport& r, int order);

}  // namespace degpart
