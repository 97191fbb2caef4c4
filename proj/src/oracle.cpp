#include "degpart/oracle.hpp"

#include <stdexcept>

#include "degpart/solver.hpp"

namespace degpart::oracle {

namespace {

// degree of v into X, from scratch off the multiplicity matrix
int naive_degree_within(const Multigraph& g, Vertex v, VertexSet x) {
    int d = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && x.contains(u)) d += g.multiplicity(u, v);
    return d;
}

bool naive_side_ok(const Multigraph& g, VertexSet side, std::span<const int> demand) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (side.contains(v) && naive_degree_within(g, v, side) < demand[v])
            return false;
    return true;
}

}  // namespace

BruteVerdict brute_partition(const Instance& inst) {
    const Multigraph& g = inst.graph;
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("brute_partition: n > 20");
    if (n < 2) return {};
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < all; ++mask) {
        VertexSet a(mask), b(all & ~mask);
        if (naive_side_ok(g, a, inst.spec.a) && naive_side_ok(g, b, inst.spec.b))
            return {true, a};
    }
    return {};
}

bool brute_degenerate(const Multigraph& g, VertexSet x, std::span<const int> f) {
    if (x.count() > 16) throw std::invalid_argument("brute_degenerate: |X| > 16");
    std::vector<Vertex> members = x.to_vector();
    const std::uint64_t subsets = std::uint64_t{1} << members.size();
    for (std::uint64_t s = 1; s < subsets; ++s) {
        VertexSet sub;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((s >> i) & 1) sub.add(members[i]);
        bool has_low = false;
        for (Vertex v : members)
            if (sub.contains(v) && naive_degree_within(g, v, sub) <= f[v]) {
                has_low = true;
                break;
            }
        if (!has_low) return false;
    }
    return true;
}

std::optional<VertexSet> brute_minimal_nice(const Multigraph& g,
                                            std::span<const int> f) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("brute_minimal_nice: n > 16");
    std::optional<VertexSet> best;
    std::vector<Vertex> best_list;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        VertexSet sub(s);
        if (best && sub.count() > best->count()) continue;
        bool nice = true;
        for (Vertex v = 0; v < n && nice; ++v)
            if (sub.contains(v) &&
                naive_degree_within(g, v, sub) < f[v] + g.vertex_weight(v) - 1)
                nice = false;
        if (!nice) continue;
        std::vector<Vertex> list = sub.to_vector();
        if (!best || sub.count() < best->count() ||
            (sub.count() == best->count() && list < best_list)) {
            best = sub;
            best_list = list;
        }
    }
    return best;
}

std::optional<std::pair<VertexSet, VertexSet>> brute_feasible_pair(const Instance& inst) {
    const Multigraph& g = inst.graph;
    const int n = g.order();
    if (n > 13) throw std::invalid_argument("brute_feasible_pair: n > 13");
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t xm = 1; xm <= all; ++xm) {
        VertexSet x(xm);
        if (!naive_side_ok(g, x, inst.spec.a)) continue;
        const std::uint64_t comp = all & ~xm;
        // nonempty submasks of the complement in ascending numeric order
        for (std::uint64_t ym = (0 - comp) & comp; ym != 0; ym = (ym - comp) & comp) {
            VertexSet y(ym);
            if (naive_side_ok(g, y, inst.spec.b)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace degpart::oracle
