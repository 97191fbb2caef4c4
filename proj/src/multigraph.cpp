#include "degpart/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace degpart {

VertexSet VertexSet::full(int n) {
    if (n == 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
}

VertexSet VertexSet::of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Multigraph::Multigraph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("multigraph: order must be in [0, 64]");
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
    weight_.assign(n, 0);
    adj_.assign(n, VertexSet{});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("multigraph: edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("multigraph: loops are not allowed");
        if (e.mult < 1)
            throw std::invalid_argument("multigraph: multiplicity must be >= 1");
        if (mult_[idx(e.u, e.v)] != 0)
            throw std::invalid_argument("multigraph: repeated vertex pair in edge list");
        mult_[idx(e.u, e.v)] = e.mult;
        mult_[idx(e.v, e.u)] = e.mult;
        adj_[e.u].add(e.v);
        adj_[e.v].add(e.u);
        degree_[e.u] += e.mult;
        degree_[e.v] += e.mult;
        weight_[e.u] = std::max(weight_[e.u], e.mult);
        weight_[e.v] = std::max(weight_[e.v], e.mult);
        max_mult_ = std::max(max_mult_, e.mult);
        simple_size_ += 1;
        size_ += e.mult;
    }
    int planes = 0;
    while ((1 << planes) <= max_mult_) ++planes;
    plane_.assign(planes, std::vector<std::uint64_t>(n, 0));
    for (Vertex v = 0; v < n; ++v) {
        adj_[v].for_each([&](Vertex u) {
            int m = mult_[idx(u, v)];
            for (int k = 0; k < planes; ++k)
                if ((m >> k) & 1) plane_[k][v] |= std::uint64_t{1} << u;
        });
    }
}

int Multigraph::degree_within(Vertex v, VertexSet x) const {
    check_vertex(v);
    int d = 0;
    for (std::size_t k = 0; k < plane_.size(); ++k)
        d += __builtin_popcountll(plane_[k][v] & x.bits()) << k;
    return d;
}

std::vector<Edge> Multigraph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(simple_size_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (int m = mult_[idx(u, v)]; m > 0) out.push_back({u, v, m});
    return out;
}

Multigraph Multigraph::underlying_simple() const {
    std::vector<Edge> edges = edge_list();
    for (Edge& e : edges) e.mult = 1;
    return Multigraph(n_, edges);
}

std::vector<int> constant_fn(int n, int c) { return std::vector<int>(n, c); }

}  // namespace degpart
