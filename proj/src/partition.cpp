#include "degpart/partition.hpp"

#include <stdexcept>

#include "degpart/feasibility.hpp"

namespace degpart {

Partition::Partition(const Multigraph& g, VertexSet a_side) : g_(&g), a_(a_side) {
    if (!a_.subset_of(g.vertices()))
        throw std::invalid_argument("partition: side A not within the vertex set");
    b_ = g.vertices() - a_;
    if (a_.empty() || b_.empty())
        throw std::invalid_argument("partition: both sides must be nonempty");
    deg_a_.resize(g.order());
    deg_b_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        deg_a_[v] = g.degree_within(v, a_);
        deg_b_[v] = g.degree_within(v, b_);
    }
}

void Partition::move_a_to_b(Vertex u) {
    if (!a_.contains(u)) throw std::invalid_argument("move: vertex not in side A");
    if (a_.count() == 1) throw std::invalid_argument("move: would empty side A");
    a_.remove(u);
    b_.add(u);
    g_->neighbors(u).for_each([&](Vertex w) {
        int m = g_->multiplicity(u, w);
        deg_a_[w] -= m;
        deg_b_[w] += m;
    });
}

void Partition::move_b_to_a(Vertex v) {
    if (!b_.contains(v)) throw std::invalid_argument("move: vertex not in side B");
    if (b_.count() == 1) throw std::invalid_argument("move: would empty side B");
    b_.remove(v);
    a_.add(v);
    g_->neighbors(v).for_each([&](Vertex w) {
        int m = g_->multiplicity(v, w);
        deg_b_[w] -= m;
        deg_a_[w] += m;
    });
}

void Partition::swap(Vertex u, Vertex v) {
    if (!a_.contains(u) || !b_.contains(v))
        throw std::invalid_argument("swap: expected u in A and v in B");
    // two half-moves; side emptiness cannot occur
    a_.remove(u);
    b_.add(u);
    g_->neighbors(u).for_each([&](Vertex w) {
        int m = g_->multiplicity(u, w);
        deg_a_[w] -= m;
        deg_b_[w] += m;
    });
    b_.remove(v);
    a_.add(v);
    g_->neighbors(v).for_each([&](Vertex w) {
        int m = g_->multiplicity(v, w);
        deg_b_[w] -= m;
        deg_a_[w] += m;
    });
}

long long omega(const Partition& p, const DegreeSpec& spec) {
    const Multigraph& g = p.graph();
    long long twice_internal = 0;
    long long demand = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.in_a(v)) {
            twice_internal += p.deg_a(v);
            demand += spec.b[v];
        } else {
            twice_internal += p.deg_b(v);
            demand += spec.a[v];
        }
    }
    return twice_internal / 2 + demand;
}

MoveDelta delta_move_a_to_b(const Partition& p, const DegreeSpec& spec, Vertex u) {
    if (!p.in_a(u)) throw std::invalid_argument("delta: vertex not in side A");
    if (p.side_a().count() == 1)
        throw std::invalid_argument("delta: move would empty side A");
    long long d = p.deg_b(u) - p.deg_a(u) + spec.a[u] - spec.b[u];
    return {{Move::Kind::AtoB, u, -1}, d};
}

MoveDelta delta_move_b_to_a(const Partition& p, const DegreeSpec& spec, Vertex v) {
    if (p.in_a(v)) throw std::invalid_argument("delta: vertex not in side B");
    if (p.side_b().count() == 1)
        throw std::invalid_argument("delta: move would empty side B");
    long long d = p.deg_a(v) - p.deg_b(v) + spec.b[v] - spec.a[v];
    return {{Move::Kind::BtoA, -1, v}, d};
}

MoveDelta delta_swap(const Partition& p, const DegreeSpec& spec, Vertex u, Vertex v) {
    if (!p.in_a(u) || p.in_a(v))
        throw std::invalid_argument("delta: expected u in A and v in B");
    long long d = (p.deg_b(u) - p.deg_a(u) + spec.a[u] - spec.b[u]) +
                  (p.deg_a(v) - p.deg_b(v) + spec.b[v] - spec.a[v]) -
                  2LL * p.graph().multiplicity(u, v);
    return {{Move::Kind::Swap, u, v}, d};
}

long long deficiency(const Partition& p, const DegreeSpec& spec) {
    long long total = 0;
    p.side_a().for_each([&](Vertex u) {
        total += std::max(0, spec.a[u] - p.deg_a(u));
    });
    p.side_b().for_each([&](Vertex v) {
        total += std::max(0, spec.b[v] - p.deg_b(v));
    });
    return total;
}

bool is_feasible_partition(const Partition& p, const DegreeSpec& spec) {
    return deficiency(p, spec) == 0;
}

bool is_meager_partition(const Partition& p, const DegreeSpec& spec, int offset) {
    const Multigraph& g = p.graph();
    std::vector<int> fa(g.order()), fb(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        fa[v] = spec.a[v] + offset;
        fb[v] = spec.b[v] + offset;
    }
    return is_f_meager(g, p.side_a(), fa) && is_f_meager(g, p.side_b(), fb);
}

SideClassification classify_sides(const Partition& p, const DegreeSpec& spec) {
    const Multigraph& g = p.graph();
    SideClassification c;
    p.side_a().for_each([&](Vertex u) {
        int mu = g.vertex_weight(u);
        if (p.deg_a(u) <= spec.a[u] + mu - 2) c.a_minus.add(u);
        if (p.deg_a(u) <= spec.a[u] - 1) c.a_deficit.add(u);
        if (p.deg_a(u) == spec.a[u] + mu - 1) c.a_tight.add(u);
    });
    p.side_b().for_each([&](Vertex v) {
        int mu = g.vertex_weight(v);
        if (p.deg_b(v) <= spec.b[v] + mu - 2) c.b_minus.add(v);
        if (p.deg_b(v) <= spec.b[v] - 1) c.b_deficit.add(v);
        if (p.deg_b(v) == spec.b[v] + mu - 1) c.b_tight.add(v);
    });
    return c;
}

}  // namespace degpart
