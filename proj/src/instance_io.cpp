#include "degpart/instance_io.hpp"

#include <stdexcept>

namespace degpart {

namespace {

constexpr int kMaxMult = 1'000'000;
constexpr long long kMaxDemand = 1'000'000'000;

// bounds are checked in 64-bit before any narrowing cast
long long require_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("expected integer for ") + what);
    return j.get<long long>();
}

std::vector<int> demand_array(const nlohmann::json& j, int n, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument(std::string("field '") + name +
                                    "' must be an array of length n");
    std::vector<int> out;
    out.reserve(n);
    for (const auto& x : j) {
        long long v = require_int(x, name);
        if (v < 0 || v > kMaxDemand)
            throw std::invalid_argument(std::string("demand out of range in '") +
                                        name + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    for (const char* key : {"n", "edges", "a", "b"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("instance missing field '") +
                                        key + "'");
    long long nv = require_int(j.at("n"), "n");
    if (nv < 0 || nv > kMaxVertices)
        throw std::invalid_argument("n must be in [0, 64]");
    int n = static_cast<int>(nv);
    if (!j.at("edges").is_array())
        throw std::invalid_argument("field 'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("each edge must be [u, v, mult]");
        long long u = require_int(e[0], "edge endpoint");
        long long v = require_int(e[1], "edge endpoint");
        long long m = require_int(e[2], "edge multiplicity");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u >= v)
            throw std::invalid_argument("edges must satisfy u < v");
        if (m < 1 || m > kMaxMult)
            throw std::invalid_argument("edge multiplicity out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(m)});
    }
    // the graph constructor re-checks ranges, loops, and repeated pairs
    Multigraph g(n, edges);
    DegreeSpec spec{demand_array(j.at("a"), n, "a"), demand_array(j.at("b"), n, "b")};
    return Instance{std::move(g), std::move(spec)};
}

ordered_json instance_to_json(const Instance& inst) {
    ordered_json j;
    j["n"] = inst.graph.order();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : inst.graph.edge_list())
        edges.push_back({e.u, e.v, e.mult});
    j["edges"] = std::move(edges);
    j["a"] = inst.spec.a;
    j["b"] = inst.spec.b;
    return j;
}

VertexSet partition_a_from_json(const nlohmann::json& j, const Multigraph& g) {
    if (!j.is_object() || !j.contains("A") || !j.at("A").is_array())
        throw std::invalid_argument("partition file must be {\"A\": [vertex ids]}");
    VertexSet a;
    for (const auto& x : j.at("A")) {
        long long v = require_int(x, "vertex id");
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("partition vertex out of range");
        Vertex id = static_cast<Vertex>(v);
        if (a.contains(id)) throw std::invalid_argument("repeated vertex in partition");
        a.add(id);
    }
    return a;
}

ordered_json witness_to_json(const PatternWitness& w) {
    ordered_json j;
    j["kind"] = pattern_kind_name(w.kind);
    j["vertices"] = w.vertices;
    if (w.shared_edge)
        j["shared_edge"] = {w.shared_edge->first, w.shared_edge->second};
    return j;
}

ordered_json violations_to_json(const std::vector<Violation>& vs) {
    ordered_json arr = ordered_json::array();
    for (const Violation& v : vs) {
        ordered_json j;
        j["kind"] = violation_kind_name(v.kind);
        j["detail"] = v.detail;
        j["warning"] = v.warning;
        if (v.witness) j["witness"] = witness_to_json(*v.witness);
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json report_to_json(const SolveReport& r, int order) {
    ordered_json j;
    j["status"] = solve_status_name(r.status);
    if (r.a_side) {
        j["A"] = r.a_side->to_vector();
        j["B"] = (VertexSet::full(order) - *r.a_side).to_vector();
    } else {
        j["A"] = nullptr;
        j["B"] = nullptr;
    }
    if (r.best_deficiency >= 0)
        j["deficiency"] = r.best_deficiency;
    else
        j["deficiency"] = nullptr;
    j["stats"] = {{"restarts", r.stats.restarts_used},
                  {"moves", r.stats.moves},
                  {"exact_ran", r.stats.exact_ran}};
    j["violations"] = violations_to_json(r.violations);
    return j;
}

}  // namespace degpart
