// Acceptance gate: one line per criterion, [criterion N] PASS/FAIL with the
// measured numbers.  Exit code is the number of failed criteria.
//
//   1  generated corpus is 100% feasible by exhaustive check and solve verifies
//   2  tight cycles are certified infeasible and flagged by validation
//   3  Petersen solves strictly with deficiency 0 in < 1 s
//   4  Robertson with a doubled edge validates and solves in < 10 s
//   5  peeling predicates match brute-force subset quantification
//   6  exchange deltas equal recomputed weight differences exactly
//   7  core existence matches degeneracy; pair existence implies a partition
//   8  forbidden-pattern list coincides with the quadrilateral-sharing test
//   9  identical seeds give byte-identical solve reports and generator output
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "degpart/feasibility.hpp"
#include "degpart/generators.hpp"
#include "degpart/instance_io.hpp"
#include "degpart/oracle.hpp"
#include "degpart/rng.hpp"
#include "degpart/solver.hpp"

using namespace degpart;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- shared corpus ------------------------------------------------------

constexpr Family kFamilies[] = {Family::Girth5, Family::C4Free,
                                Family::TriangleFreeEdgeDisjointC4,
                                Family::HypothesisGeneral};

struct CorpusEntry {
    Instance inst;
    Family family;
    bool inflated;
};

// Sweep families x n in [6,12] x density x inflation x seed, keeping every
// draw that admits demands and passes strict validation.  Sparse families
// cannot reach minimum degree 3 at the small end of the range (a girth-5
// graph needs n >= 10 for that), so most cells are legitimately empty and
// the seed count is sized for the survivors.
const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> all = [] {
        std::vector<CorpusEntry> out;
        for (Family fam : kFamilies)
            for (int n = 6; n <= 12; ++n)
                for (double density : {0.85, 1.0})
                    for (int max_mult : {1, 2})
                        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
                            std::uint64_t gseed = seed * 7919 + n * 131 + max_mult;
                            Multigraph g = gen_structure(n, density, gseed, fam);
                            if (max_mult > 1)
                                g = inflate_multiplicities(g, max_mult, seed);
                            auto spec = assign_spec(g, seed * 31 + 5);
                            if (!spec) continue;
                            Instance inst{std::move(g), std::move(*spec)};
                            if (!validate(inst, true).empty()) continue;
                            out.push_back({std::move(inst), fam, max_mult > 1});
                        }
        return out;
    }();
    return all;
}

Multigraph random_multigraph(int n, int max_mult, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng_below(rng, 2) == 0)
                edges.push_back({u, v, 1 + static_cast<int>(rng_below(rng, max_mult))});
    return Multigraph(n, edges);
}

std::vector<int> random_demands(int n, int lo, int hi, std::mt19937_64& rng) {
    std::vector<int> f(n);
    for (int& x : f) x = lo + static_cast<int>(rng_below(rng, hi - lo + 1));
    return f;
}

long long omega_recomputed(const Partition& p, const DegreeSpec& spec) {
    const Multigraph& g = p.graph();
    long long inside = 0, demand = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet side = p.in_a(v) ? p.side_a() : p.side_b();
        inside += g.degree_within(v, side);
        demand += p.in_a(v) ? spec.b[v] : spec.a[v];
    }
    return inside / 2 + demand;
}

std::string witness_str(const PatternWitness& w) {
    std::string s = pattern_kind_name(w.kind);
    s += " [";
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.vertices[i]);
    s += "]";
    if (w.shared_edge)
        s += " edge (" + std::to_string(w.shared_edge->first) + "," +
             std::to_string(w.shared_edge->second) + ")";
    return s;
}

// ---- criteria -----------------------------------------------------------

Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    const auto& c = corpus();
    int fam_counts[4] = {0, 0, 0, 0};
    int inflated = 0;
    for (const CorpusEntry& e : c) {
        for (int i = 0; i < 4; ++i) fam_counts[i] += e.family == kFamilies[i];
        inflated += e.inflated;
    }

    int bad = 0;
    std::string first_bad;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Instance& inst = c[i].inst;
        bool ok = oracle::brute_partition(inst).feasible;
        if (ok) {
            SolveReport r = solve(inst);
            ok = r.status == SolveStatus::Feasible && r.a_side &&
                 is_feasible_partition(Partition(inst.graph, *r.a_side), inst.spec);
        }
        if (!ok) {
#pragma omp critical
            {
                ++bad;
                if (first_bad.empty())
                    first_bad = fmt("n=%d %s", inst.graph.order(),
                                    family_name(c[i].family));
            }
        }
    }
    double secs = seconds_since(t0);

    bool pass = c.size() >= 500 && bad == 0 && inflated > 0 && secs < 300.0;
    std::string detail =
        fmt("%zu instances (girth5 %d, c4-free %d, tf-edc4 %d, general %d; "
            "%d with multiplicities > 1), ",
            c.size(), fam_counts[0], fam_counts[1], fam_counts[2], fam_counts[3],
            inflated);
    if (bad)
        detail += fmt("%d FAILED exhaustive/solve verification (first: %s), ", bad,
                      first_bad.c_str());
    else
        detail += "100% exhaustively feasible and solve-verified, ";
    detail += fmt("%.1f s (cap 300 s)", secs);
    return {pass, detail};
}

Outcome criterion2() {
    int checked = 0, wrong = 0;
    std::string note;
    for (int n = 5; n <= 9; ++n) {
        Multigraph g = cycle_graph(n);
        Instance low{g, {std::vector<int>(n, 1), std::vector<int>(n, 2)}};
        Instance tight{g, {std::vector<int>(n, 2), std::vector<int>(n, 2)}};

        auto count = [](const std::vector<Violation>& vs, Violation::Kind k) {
            int c = 0;
            for (const auto& v : vs) c += v.kind == k;
            return c;
        };
        auto vlow = validate(low, true);
        auto vtight = validate(tight, true);

        bool ok = !oracle::brute_partition(low).feasible &&
                  !oracle::brute_partition(tight).feasible &&
                  count(vlow, Violation::Kind::Range) == n &&
                  count(vlow, Violation::Kind::Degree) == 0 &&
                  count(vtight, Violation::Kind::Degree) == n &&
                  count(vtight, Violation::Kind::Range) == 0;
        ++checked;
        if (!ok) {
            ++wrong;
            if (note.empty()) note = fmt(" (first failure at n=%d)", n);
        }
    }
    return {wrong == 0,
            fmt("cycles n=5..9, both demand profiles: %d/%d certified infeasible "
                "with the expected validation findings%s",
                checked - wrong, checked, note.c_str())};
}

Outcome criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    Instance pet = *fixture("petersen");
    SolveReport r = solve(pet, {.strict = true});
    bool solved = r.status == SolveStatus::Feasible && r.best_deficiency == 0 &&
                  r.a_side &&
                  is_feasible_partition(Partition(pet.graph, *r.a_side), pet.spec);
    // the outer-cycle / inner-cycle split is itself a valid answer
    Partition hand(pet.graph, VertexSet::of({0, 1, 2, 3, 4}));
    bool hand_ok = is_feasible_partition(hand, pet.spec) &&
                   deficiency(hand, pet.spec) == 0;
    double secs = seconds_since(t0);
    return {solved && hand_ok && secs < 1.0,
            fmt("strict solve feasible with deficiency 0 (%s), outer/inner split "
                "accepted (%s), %.3f s (cap 1 s)",
                solved ? "yes" : "NO", hand_ok ? "yes" : "NO", secs)};
}

Outcome criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    Instance rob = *fixture("robertson-multi");
    const Multigraph& g = rob.graph;

    bool shape = g.multiplicity(0, 1) == 2 && g.degree(0) == 5 && g.degree(1) == 5;
    for (Vertex v = 2; v < g.order(); ++v) shape = shape && g.degree(v) == 4;

    bool clean = validate(rob, true).empty();
    SolveReport r = solve(rob, {.strict = true});
    bool solved = r.status == SolveStatus::Feasible && r.a_side &&
                  is_feasible_partition(Partition(g, *r.a_side), rob.spec);
    double secs = seconds_since(t0);
    return {shape && clean && solved && secs < 10.0,
            fmt("doubled-edge endpoints have degree 5 >= 5, the rest 4 >= 3 (%s); "
                "strict validation clean (%s); solve feasible and verified (%s); "
                "%.3f s (cap 10 s)",
                shape ? "yes" : "NO", clean ? "yes" : "NO", solved ? "yes" : "NO",
                secs)};
}

Outcome criterion5() {
    long long checked = 0, wrong = 0;

    auto agree = [&](const Multigraph& g, std::mt19937_64& rng) {
        VertexSet all = g.vertices();
        for (int t = 0; t < 5; ++t) {
            std::vector<int> f = random_demands(g.order(), 0, 5, rng);
            std::vector<int> shifted(f);
            for (Vertex v = 0; v < g.order(); ++v)
                shifted[v] = f[v] + g.vertex_weight(v) - 1;
            bool ok =
                is_f_degenerate(g, all, f) == oracle::brute_degenerate(g, all, f) &&
                is_f_meager(g, all, f) == oracle::brute_degenerate(g, all, shifted);
            ++checked;
            wrong += !ok;
        }
    };

    // every labeled simple graph on up to 5 vertices
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second, 1});
            Multigraph g(n, edges);
            std::mt19937_64 rng(mix_seed(501, mask * 37 + n));
            agree(g, rng);
        }
    }
    long long labeled = checked;

    // random multigraphs up to n = 8 (multiplicities matter for meagerness)
    std::mt19937_64 rng(502);
    for (int iter = 0; iter < 500; ++iter) {
        int n = 1 + static_cast<int>(rng_below(rng, 8));
        Multigraph g = random_multigraph(n, 3, rng);
        agree(g, rng);
    }

    return {wrong == 0,
            fmt("degenerate/meager peeling vs subset quantification: %lld/%lld "
                "agree (%lld on all labeled graphs n<=5, rest random n<=8)",
                checked - wrong, checked, labeled)};
}

Outcome criterion6() {
    std::mt19937_64 rng(606);
    long long checked = 0, wrong = 0;
    while (checked < 10000) {
        int n = 2 + static_cast<int>(rng_below(rng, 9));
        Multigraph g = random_multigraph(n, 3, rng);
        DegreeSpec spec{random_demands(n, 0, 4, rng), random_demands(n, 0, 4, rng)};
        std::uint64_t all = (std::uint64_t{1} << n) - 1;
        std::uint64_t m = rng() & all;
        if (m == 0 || m == all) continue;
        Partition p(g, VertexSet(m));

        int kind = static_cast<int>(rng_below(rng, 3));
        long long predicted = 0;
        Partition trial = p;
        if (kind == 0) {
            if (p.side_a().count() < 2) continue;
            Vertex u = p.side_a().to_vector()[rng_below(rng, p.side_a().count())];
            predicted = delta_move_a_to_b(p, spec, u).delta;
            trial.move_a_to_b(u);
        } else if (kind == 1) {
            if (p.side_b().count() < 2) continue;
            Vertex u = p.side_b().to_vector()[rng_below(rng, p.side_b().count())];
            predicted = delta_move_b_to_a(p, spec, u).delta;
            trial.move_b_to_a(u);
        } else {
            Vertex u = p.side_a().to_vector()[rng_below(rng, p.side_a().count())];
            Vertex v = p.side_b().to_vector()[rng_below(rng, p.side_b().count())];
            predicted = delta_swap(p, spec, u, v).delta;
            trial.swap(u, v);
        }
        long long actual = omega_recomputed(trial, spec) - omega_recomputed(p, spec);
        ++checked;
        wrong += predicted != actual;
    }
    return {wrong == 0, fmt("%lld/%lld move/swap deltas equal the recomputed "
                            "weight difference exactly",
                            checked - wrong, checked)};
}

Outcome criterion7() {
    const auto& c = corpus();
    long long core_wrong = 0, pair_wrong = 0, pairs_found = 0;
#pragma omp parallel for schedule(dynamic, 8) \
    reduction(+ : core_wrong, pair_wrong, pairs_found)
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Instance& inst = c[i].inst;
        const Multigraph& g = inst.graph;
        VertexSet all = g.vertices();
        for (const std::vector<int>* f : {&inst.spec.a, &inst.spec.b}) {
            std::vector<int> down(*f);
            for (int& x : down) --x;
            bool has_core = contains_f_feasible(g, all, *f);
            bool degenerate = oracle::brute_degenerate(g, all, down);
            core_wrong += has_core == degenerate;  // must be opposites
        }
        if (auto pr = oracle::brute_feasible_pair(inst)) {
            ++pairs_found;
            pair_wrong += !oracle::brute_partition(inst).feasible;
        }
    }
    bool pass = core_wrong == 0 && pair_wrong == 0 && !c.empty();
    return {pass,
            fmt("on %zu corpus instances: core existence equals "
                "non-degeneracy at lowered demands (%lld mismatches); "
                "%lld disjoint feasible pairs, all extend to full partitions "
                "(%lld failures)",
                c.size(), core_wrong, pairs_found, pair_wrong)};
}

Outcome criterion8() {
    long long checked = 0;
    long long broken_iff = 0;   // sharing-free but a forbidden pattern exists
    long long broken_conv = 0;  // pattern-free but a sharing witness exists
    std::string loud;

    auto check_graph = [&](const Multigraph& g) {
        auto forb = find_forbidden(g);
        auto share = find_quad_sharing(g);
        if (!share && forb) {
#pragma omp critical
            {
                ++broken_iff;
                if (loud.empty()) loud = "pattern without sharing: " + witness_str(*forb);
            }
        }
        if (!forb && share) {
#pragma omp critical
            {
                ++broken_conv;
                if (loud.empty())
                    loud = "sharing without pattern: " + witness_str(*share);
            }
        }
    };

    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
        const long long span = 1ll << pairs.size();
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : checked)
        for (long long mask = 0; mask < span; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second, 1});
            check_graph(Multigraph(n, edges));
            ++checked;
        }
    }

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : checked)
    for (int iter = 0; iter < 10000; ++iter) {
        std::mt19937_64 rng(mix_seed(808, iter));
        int n = 7 + static_cast<int>(rng_below(rng, 3));
        check_graph(random_multigraph(n, 1, rng));
        ++checked;
    }

    if (!loud.empty())
        std::fprintf(stderr, "[criterion 8] WITNESS %s\n", loud.c_str());
    bool pass = broken_iff == 0 && broken_conv == 0;
    std::string detail = fmt(
        "%lld graphs (all labeled n<=6 plus 10000 random n in 7..9): "
        "forbidden-pattern and quadrilateral-sharing detectors agree",
        checked);
    if (!pass) detail += " EXCEPT " + loud;
    return {pass, detail};
}

Outcome criterion9() {
    int cells = 0, mismatched = 0;

    // solve: identical seeds (and any thread count) give identical reports
    std::vector<Instance> insts;
    for (const Fixture& f : fixtures()) insts.push_back(f.instance);
    const auto& c = corpus();
    for (std::size_t i = 0; i < c.size() && i < 25; ++i)
        insts.push_back(c[i * (c.size() / 25)].inst);
    for (const Instance& inst : insts)
        for (std::uint64_t seed : {0ull, 7ull}) {
            SolveOptions opt;
            opt.seed = seed;
            std::string r1 = report_to_json(solve(inst, opt), inst.graph.order()).dump();
            std::string r2 = report_to_json(solve(inst, opt), inst.graph.order()).dump();
            SolveOptions wide = opt;
            wide.threads = 4;
            std::string r3 = report_to_json(solve(inst, wide), inst.graph.order()).dump();
            ++cells;
            mismatched += !(r1 == r2 && r1 == r3);
        }
    int solve_cells = cells;

    // generation: the full pipeline replays byte-identically
    for (Family fam : kFamilies)
        for (int n : {8, 12})
            for (int mm : {1, 2})
                for (std::uint64_t seed : {3ull, 9ull}) {
                    auto once = [&]() -> std::string {
                        Multigraph g = gen_structure(n, 1.0, seed, fam);
                        if (mm > 1) g = inflate_multiplicities(g, mm, seed);
                        auto spec = assign_spec(g, seed);
                        if (!spec) return "no-demands";
                        return instance_to_json(Instance{std::move(g), std::move(*spec)})
                            .dump();
                    };
                    ++cells;
                    mismatched += once() != once();
                }

    return {mismatched == 0,
            fmt("%d solve report replays (fixtures + corpus sample, threads 1 "
                "and 4) and %d generator replays: %d mismatches",
                solve_cells, cells - solve_cells, mismatched)};
}

}  // namespace

int main() {
    Outcome (*criteria[])() = {criterion1, criterion2, criterion3,
                               criterion4, criterion5, criterion6,
                               criterion7, criterion8, criterion9};
    auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (int i = 0; i < 9; ++i) {
        Outcome o = criteria[i]();
        std::printf("[criterion %d] %s — %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("acceptance: %d/9 criteria passed in %.1f s\n", 9 - failures,
                seconds_since(t0));
    return failures;
}
