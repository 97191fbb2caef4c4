// Two-sided vertex partitions with incrementally maintained side degrees,
// the exchange weight the search maximizes, and the exact move deltas.
//
// For a split (A,B) and demands (a,b):
//   omega(A,B) = |E(G[A])| + |E(G[B])| + sum_{u in A} b(u) + sum_{v in B} a(v)
//   moving u from A to B changes omega by  d_B(u) - d_A(u) + a(u) - b(u)
//   moving v from B to A changes omega by  d_A(v) - d_B(v) + b(v) - a(v)
//   swapping u,v changes omega by the sum of both minus 2*multiplicity(u,v)
// Deficiency is the total demand shortfall; zero means the partition is the
// answer.
#pragma once

#include "degpart/multigraph.hpp"

namespace degpart {

class Partition {
public:
    // B is the complement of A; both sides must be nonempty
    Partition(const Multigraph& g, VertexSet a_side);

    const Multigraph& graph() const { return *g_; }
    VertexSet side_a() const { return a_; }
    VertexSet side_b() const { return b_; }
    bool in_a(Vertex v) const { return a_.contains(v); }
    // degree of v into side A / side B (cached, kept in sync by moves)
    int deg_a(Vertex v) const { return deg_a_[v]; }
    int deg_b(Vertex v) const { return deg_b_[v]; }

    // each move is O(deg) cache maintenance; moves emptying a side throw
    void move_a_to_b(Vertex u);
    void move_b_to_a(Vertex v);
    void swap(Vertex u, Vertex v);  // u in A, v in B

private:
    const Multigraph* g_;
    VertexSet a_, b_;
    std::vector<int> deg_a_, deg_b_;
};

struct Move {
    enum class Kind { AtoB, BtoA, Swap };
    Kind kind;
    Vertex u = -1;  // AtoB / Swap: the A-side vertex
    Vertex v = -1;  // BtoA / Swap: the B-side vertex
};

struct MoveDelta {
    Move move;
    long long delta;  // exact change of omega
};

long long omega(const Partition& p, const DegreeSpec& spec);

MoveDelta delta_move_a_to_b(const Partition& p, const DegreeSpec& spec, Vertex u);
MoveDelta delta_move_b_to_a(const Partition& p, const DegreeSpec& spec, Vertex v);
MoveDelta delta_swap(const Partition& p, const DegreeSpec& spec, Vertex u, Vertex v);

// sum over A of max(0, a(x) - d_A(x)) plus the mirror over B
long long deficiency(const Partition& p, const DegreeSpec& spec);

bool is_feasible_partition(const Partition& p, const DegreeSpec& spec);

// both sides meager w.r.t. demands shifted by `offset`
bool is_meager_partition(const Partition& p, const DegreeSpec& spec, int offset);

// The vertex classes the exchange argument works with.  Thresholds use
// mu from the whole graph.
struct SideClassification {
    VertexSet a_minus;   // u in A with d_A(u) <= a(u) + mu(u) - 2
    VertexSet a_deficit; // u in A with d_A(u) <= a(u) - 1
    VertexSet a_tight;   // u in A with d_A(u) == a(u) + mu(u) - 1
    VertexSet b_minus;
    VertexSet b_deficit;
    VertexSet b_tight;
};

SideClassification classify_sides(const Partition& p, const DegreeSpec& spec);

}  // namespace degpart
