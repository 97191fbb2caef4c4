// Seeded instance generation: random graphs kept inside a structural family
// by rejection, optional multiplicity inflation, and random admissible
// demand functions.  Also the named fixtures the CLI and tests use.
#pragma once

#include <optional>
#include <string>

#include "degpart/solver.hpp"

namespace degpart {

enum class Family {
    Girth5,                     // no triangles, no quadrilaterals
    C4Free,                     // no quadrilaterals (triangles allowed)
    TriangleFreeEdgeDisjointC4, // no triangles, quadrilaterals pairwise edge-disjoint
    HypothesisGeneral,          // exactly the solver's structural hypothesis
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Random edge insertion with rejection: candidate pairs are visited in a
// seeded shuffle order and kept while the family predicate still holds,
// until round(density * C(n,2)) edges are placed or candidates run out.
// Deterministic for a fixed (n, density, seed, family); heavy rejection can
// return sparse graphs.
Multigraph gen_structure(int n, double density, std::uint64_t seed, Family family);

bool family_predicate(Family f, const Multigraph& g);

// Raises each edge multiplicity independently to max(current, draw) with
// draw uniform in [1, max_mult]; max_mult = 1 returns the graph unchanged.
Multigraph inflate_multiplicities(const Multigraph& g, int max_mult,
                                  std::uint64_t seed);

// Random demands honoring the degree condition: with the per-vertex budget
// s(v) = d(v) - 2*mu(v) + 3, draws a(v) uniform in [2, s(v)-2] and b(v)
// uniform in [2, s(v)-a(v)].  Returns nullopt when some s(v) < 4.
std::optional<DegreeSpec> assign_spec(const Multigraph& g, std::uint64_t seed);

// ---- named graphs and fixtures ----

Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int p, int q);
Multigraph petersen_graph();   // outer 5-cycle 0..4, inner pentagram 5..9
Multigraph robertson_graph();  // the 19-vertex 4-regular girth-5 graph
Multigraph l3_graph();         // two quadrilaterals sharing one edge
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

struct Fixture {
    std::string name;
    Instance instance;
    std::string note;
};

const std::vector<Fixture>& fixtures();
std::optional<Instance> fixture(std::string_view name);

}  // namespace degpart
