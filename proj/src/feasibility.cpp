#include "degpart/feasibility.hpp"

#include <numeric>
#include <stdexcept>

namespace degpart {

namespace {

std::vector<int> nice_thresholds(const Multigraph& g, std::span<const int> f) {
    // nice/meager thresholds compare against f(x) + mu(x) - 1 with mu from
    // the whole graph, not the subset under inspection
    std::vector<int> t(g.order());
    for (Vertex v = 0; v < g.order(); ++v) t[v] = f[v] + g.vertex_weight(v) - 1;
    return t;
}

void check_sizes(const Multigraph& g, std::span<const int> f) {
    if (static_cast<int>(f.size()) != g.order())
        throw std::invalid_argument("demand function size does not match graph order");
}

}  // namespace

PeelResult peel(const Multigraph& g, VertexSet x, std::span<const int> threshold,
                std::span<const Vertex> scan_order) {
    check_sizes(g, threshold);
    std::vector<Vertex> order;
    if (scan_order.empty()) {
        order.resize(g.order());
        std::iota(order.begin(), order.end(), 0);
    } else {
        order.assign(scan_order.begin(), scan_order.end());
    }

    PeelResult res;
    VertexSet cur = x;
    bool removed = true;
    while (removed) {
        removed = false;
        for (Vertex v : order) {
            if (cur.contains(v) && g.degree_within(v, cur) <= threshold[v]) {
                cur.remove(v);
                res.order.push_back(v);
                removed = true;
                break;
            }
        }
    }
    res.succeeded = cur.empty();
    res.stuck_set = cur;
    return res;
}

bool is_f_feasible(const Multigraph& g, VertexSet x, std::span<const int> f) {
    check_sizes(g, f);
    bool ok = true;
    x.for_each([&](Vertex v) { ok = ok && g.degree_within(v, x) >= f[v]; });
    return ok;
}

bool is_f_nice(const Multigraph& g, VertexSet x, std::span<const int> f) {
    check_sizes(g, f);
    bool ok = true;
    x.for_each([&](Vertex v) {
        ok = ok && g.degree_within(v, x) >= f[v] + g.vertex_weight(v) - 1;
    });
    return ok;
}

bool is_f_degenerate(const Multigraph& g, VertexSet x, std::span<const int> f) {
    return peel(g, x, f).succeeded;
}

bool is_f_meager(const Multigraph& g, VertexSet x, std::span<const int> f) {
    check_sizes(g, f);
    return peel(g, x, nice_thresholds(g, f)).succeeded;
}

VertexSet max_f_feasible_core(const Multigraph& g, VertexSet x, std::span<const int> f) {
    check_sizes(g, f);
    // delete while degree < f(v), i.e. <= f(v) - 1
    std::vector<int> t(f.begin(), f.end());
    for (int& v : t) --v;
    return peel(g, x, t).stuck_set;
}

VertexSet max_f_nice_core(const Multigraph& g, VertexSet x, std::span<const int> f) {
    check_sizes(g, f);
    std::vector<int> t = nice_thresholds(g, f);
    for (int& v : t) --v;
    return peel(g, x, t).stuck_set;
}

bool contains_f_feasible(const Multigraph& g, VertexSet x, std::span<const int> f) {
    return !max_f_feasible_core(g, x, f).empty();
}

std::optional<VertexSet> minimal_f_nice_subset(const Multigraph& g,
                                               std::span<const int> f,
                                               std::span<const Vertex> scan_order) {
    check_sizes(g, f);
    std::vector<Vertex> order;
    if (scan_order.empty()) {
        order.resize(g.order());
        std::iota(order.begin(), order.end(), 0);
    } else {
        order.assign(scan_order.begin(), scan_order.end());
    }

    VertexSet s = max_f_nice_core(g, g.vertices(), f);
    if (s.empty()) return std::nullopt;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (Vertex v : order) {
            if (!s.contains(v)) continue;
            VertexSet t = s;
            t.remove(v);
            VertexSet core = max_f_nice_core(g, t, f);
            if (!core.empty()) {
                s = core;
                shrunk = true;
                break;
            }
        }
    }
    return s;
}

}  // namespace degpart
