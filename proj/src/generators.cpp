#include "degpart/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "degpart/rng.hpp"

namespace degpart {

const char* family_name(Family f) {
    switch (f) {
        case Family::Girth5: return "girth5";
        case Family::C4Free: return "c4-free";
        case Family::TriangleFreeEdgeDisjointC4: return "triangle-free-edc4";
        case Family::HypothesisGeneral: return "hypothesis";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Girth5, Family::C4Free,
                     Family::TriangleFreeEdgeDisjointC4, Family::HypothesisGeneral})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

bool family_predicate(Family f, const Multigraph& g) {
    switch (f) {
        case Family::Girth5:
            return !has_triangle(g) && !has_quadrilateral(g);
        case Family::C4Free:
            return !has_quadrilateral(g);
        case Family::TriangleFreeEdgeDisjointC4:
            return !has_triangle(g) && quads_edge_disjoint(g);
        case Family::HypothesisGeneral:
            return hypothesis_holds(g);
    }
    return false;
}

Multigraph gen_structure(int n, double density, std::uint64_t seed, Family family) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("gen_structure: order must be in [0, 64]");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_structure: density must be in [0, 1]");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::mt19937_64 rng(mix_seed(seed, 0));
    shuffle_in_place(pairs, rng);

    const long long target =
        std::max<long long>(1, std::llround(density * pairs.size()));
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        if (static_cast<long long>(edges.size()) >= target) break;
        edges.push_back({u, v, 1});
        if (!family_predicate(family, Multigraph(n, edges))) edges.pop_back();
    }
    return Multigraph(n, edges);
}

Multigraph inflate_multiplicities(const Multigraph& g, int max_mult,
                                  std::uint64_t seed) {
    if (max_mult < 1)
        throw std::invalid_argument("inflate_multiplicities: max_mult must be >= 1");
    std::mt19937_64 rng(mix_seed(seed, 1));
    std::vector<Edge> edges = g.edge_list();
    for (Edge& e : edges) {
        int draw = 1 + static_cast<int>(rng_below(rng, max_mult));
        e.mult = std::max(e.mult, draw);
    }
    return Multigraph(g.order(), edges);
}

std::optional<DegreeSpec> assign_spec(const Multigraph& g, std::uint64_t seed) {
    const int n = g.order();
    std::vector<int> budget(n);
    for (Vertex v = 0; v < n; ++v) {
        budget[v] = g.degree(v) - 2 * g.vertex_weight(v) + 3;
        if (budget[v] < 4) return std::nullopt;
    }
    std::mt19937_64 rng(mix_seed(seed, 2));
    DegreeSpec spec;
    spec.a.resize(n);
    spec.b.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        spec.a[v] = 2 + static_cast<int>(rng_below(rng, budget[v] - 3));
        spec.b[v] = 2 + static_cast<int>(rng_below(rng, budget[v] - spec.a[v] - 1));
    }
    return spec;
}

Multigraph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    return Multigraph(n, edges);
}

Multigraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
    edges.push_back({0, n - 1, 1});
    return Multigraph(n, edges);
}

Multigraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return Multigraph(n, edges);
}

Multigraph complete_bipartite(int p, int q) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = 0; v < q; ++v) edges.push_back({u, p + v, 1});
    return Multigraph(p + q, edges);
}

Multigraph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1});          // outer cycle
        edges.push_back({i, i + 5, 1});                // spokes
        edges.push_back({5 + i, 5 + (i + 2) % 5, 1});  // inner pentagram
    }
    return Multigraph(10, edges);
}

Multigraph robertson_graph() {
    // Hamiltonian cycle 0..18 plus a 2-regular chord set; 4-regular, girth 5
    static const int chords[19][2] = {
        {0, 4},  {0, 7},  {1, 9},   {1, 12},  {2, 6},   {2, 14},  {3, 8},
        {3, 11}, {4, 15}, {5, 13},  {5, 17},  {6, 10},  {7, 16},  {8, 13},
        {9, 17}, {10, 15}, {11, 18}, {12, 16}, {14, 18}};
    std::vector<Edge> edges;
    for (int i = 0; i < 19; ++i) edges.push_back({i, (i + 1) % 19, 1});
    for (auto& c : chords) edges.push_back({c[0], c[1], 1});
    return Multigraph(19, edges);
}

Multigraph l3_graph() {
    // quads 0-1-2-3-0 and 0-1-4-5-0 sharing edge (0,1)
    return Multigraph(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1},
                          {1, 4, 1}, {4, 5, 1}, {0, 5, 1}});
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
    std::vector<Edge> edges = g.edge_list();
    for (Edge e : h.edge_list())
        edges.push_back({e.u + g.order(), e.v + g.order(), e.mult});
    return Multigraph(g.order() + h.order(), edges);
}

namespace {

Instance make_instance(Multigraph g, int a_val, int b_val) {
    int n = g.order();
    return Instance{std::move(g), {constant_fn(n, a_val), constant_fn(n, b_val)}};
}

Multigraph doubled_edge(const Multigraph& g, Vertex u, Vertex v) {
    std::vector<Edge> edges = g.edge_list();
    for (Edge& e : edges)
        if (e.u == std::min(u, v) && e.v == std::max(u, v)) e.mult += 1;
    return Multigraph(g.order(), edges);
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    out.push_back({"single-edge", make_instance(path_graph(2), 2, 2),
                   "smallest infeasible instance"});
    out.push_back({"triangle-ab2", make_instance(cycle_graph(3), 2, 2),
                   "triangle, demands 2; violates the degree condition"});
    out.push_back({"c5-tight-degree", make_instance(cycle_graph(5), 2, 2),
                   "5-cycle, demands 2; degree condition off by one, infeasible"});
    out.push_back({"c5-tight-range", make_instance(cycle_graph(5), 1, 2),
                   "5-cycle, a = 1; shows the demand range cannot be lowered"});
    out.push_back({"c7-tight-degree", make_instance(cycle_graph(7), 2, 2),
                   "7-cycle variant of c5-tight-degree"});
    out.push_back({"c7-tight-range", make_instance(cycle_graph(7), 1, 2),
                   "7-cycle variant of c5-tight-range"});
    out.push_back({"petersen", make_instance(petersen_graph(), 2, 2),
                   "splits into two 5-cycles"});
    out.push_back({"robertson", make_instance(robertson_graph(), 2, 2),
                   "19-vertex 4-regular girth-5 graph, demands 2"});
    out.push_back({"robertson-multi",
                   make_instance(doubled_edge(robertson_graph(), 0, 1), 2, 2),
                   "robertson with edge (0,1) doubled; degree condition tight"});
    out.push_back({"k23", make_instance(complete_bipartite(2, 3), 2, 2),
                   "structure violation: quadrilaterals share edges"});
    out.push_back({"l3", make_instance(l3_graph(), 2, 2),
                   "structure violation: two quadrilaterals share an edge"});
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = build_fixtures();
    return fx;
}

std::optional<Instance> fixture(std::string_view name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f.instance;
    return std::nullopt;
}

}  // namespace degpart
