// Core graph types: loopless multigraphs on dense vertex ids 0..n-1 with
// bitmask vertex sets.  Everything downstream (peeling, pattern scans,
// partition search) works on these.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace degpart {

using Vertex = int;

inline constexpr int kMaxVertices = 64;  // VertexSet is a 64-bit mask

// Set of vertex ids 0..63.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet full(int n);
    static VertexSet of(std::initializer_list<Vertex> vs);

    std::uint64_t bits() const { return bits_; }
    bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    Vertex first() const { return __builtin_ctzll(bits_); }  // pre: !empty()

    void add(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void remove(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool operator==(const VertexSet&) const = default;
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    // ascending-id iteration over members
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t m = bits_; m;) {
            Vertex v = __builtin_ctzll(m);
            m &= m - 1;
            f(v);
        }
    }
    std::vector<Vertex> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    Vertex u;
    Vertex v;
    int mult = 1;
};

// Loopless multigraph, immutable after construction.  Multiplicities are
// symmetric; construction rejects loops, out-of-range endpoints, zero or
// negative multiplicities, and repeated pairs.
class Multigraph {
public:
    Multigraph(int n, std::span<const Edge> edges);
    Multigraph(int n, std::initializer_list<Edge> edges)
        : Multigraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    int multiplicity(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("multigraph: loop query");
        return mult_[idx(u, v)];
    }
    bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
    int degree(Vertex v) const {
        check_vertex(v);
        return degree_[v];
    }
    // mu(v): largest multiplicity over edges at v (0 if isolated)
    int vertex_weight(Vertex v) const {
        check_vertex(v);
        return weight_[v];
    }
    int max_multiplicity() const { return max_mult_; }
    bool is_simple() const { return max_mult_ <= 1; }
    // number of distinct edges / total edge multiplicity
    int simple_size() const { return simple_size_; }
    long long size() const { return size_; }

    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    // sum of multiplicities from v into X (v itself ignored if present)
    int degree_within(Vertex v, VertexSet x) const;
    // edges with u < v, sorted by (u, v)
    std::vector<Edge> edge_list() const;

    Multigraph underlying_simple() const;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("multigraph: vertex id out of range");
    }
    std::size_t idx(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }

    int n_ = 0;
    int max_mult_ = 0;
    int simple_size_ = 0;
    long long size_ = 0;
    std::vector<int> mult_;       // n*n symmetric matrix
    std::vector<int> degree_;
    std::vector<int> weight_;
    std::vector<VertexSet> adj_;
    // bit-plane k of the multiplicity matrix, row per vertex: plane_[k][v]
    // holds the mask of neighbors u with bit k of multiplicity(u,v) set.
    // degree_within then needs popcounts only.
    std::vector<std::vector<std::uint64_t>> plane_;
};

// Per-vertex demand functions a, b.  Values are stored as given; the range
// requirement (>= 2) is an instance-validity question checked by validate(),
// so deliberately out-of-range specs (used by negative fixtures) stay
// representable.
struct DegreeSpec {
    std::vector<int> a;
    std::vector<int> b;
};

// convenience: the constant function v -> c on n vertices
std::vector<int> constant_fn(int n, int c);

}  // namespace degpart
