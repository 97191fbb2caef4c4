#include "degpart/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "degpart/feasibility.hpp"
#include "degpart/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degpart {

namespace {

void check_instance_shape(const Instance& inst) {
    if (static_cast<int>(inst.spec.a.size()) != inst.graph.order() ||
        static_cast<int>(inst.spec.b.size()) != inst.graph.order())
        throw std::invalid_argument("instance: demand sizes do not match graph order");
}

std::vector<Vertex> identity_order(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

const char* violation_kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Range: return "range";
        case Violation::Kind::Degree: return "degree";
        case Violation::Kind::Structure: return "structure";
    }
    return "?";
}

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unknown: return "unknown";
    }
    return "?";
}

std::vector<Violation> validate(const Instance& inst, bool strict) {
    check_instance_shape(inst);
    const Multigraph& g = inst.graph;
    std::vector<Violation> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (inst.spec.a[v] < 2)
            out.push_back({Violation::Kind::Range,
                           "a(" + std::to_string(v) + ") = " +
                               std::to_string(inst.spec.a[v]) + " is below 2",
                           {}, false});
        if (inst.spec.b[v] < 2)
            out.push_back({Violation::Kind::Range,
                           "b(" + std::to_string(v) + ") = " +
                               std::to_string(inst.spec.b[v]) + " is below 2",
                           {}, false});
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        int need = inst.spec.a[v] + inst.spec.b[v] + 2 * g.vertex_weight(v) - 3;
        if (g.degree(v) < need)
            out.push_back({Violation::Kind::Degree,
                           "degree " + std::to_string(g.degree(v)) + " at vertex " +
                               std::to_string(v) + " is below a+b+2*mu-3 = " +
                               std::to_string(need),
                           {}, false});
    }
    if (auto w = find_quad_sharing(g)) {
        std::string detail = std::string("forbidden structure: ") +
                             pattern_kind_name(w->kind);
        out.push_back({Violation::Kind::Structure, detail, w, !strict});
    }
    return out;
}

SeedResult seed_partition(const Instance& inst, std::span<const Vertex> scan_order) {
    check_instance_shape(inst);
    const Multigraph& g = inst.graph;
    if (g.order() < 2)
        throw std::invalid_argument("seed_partition: need at least two vertices");
    std::vector<Vertex> order;
    if (scan_order.empty())
        order = identity_order(g.order());
    else
        order.assign(scan_order.begin(), scan_order.end());

    auto trivial = [&]() {
        VertexSet a;
        a.add(order.front());
        return SeedResult{{}, a};
    };

    std::optional<VertexSet> s = minimal_f_nice_subset(g, inst.spec.a, order);
    if (!s || s->count() == 0) return trivial();
    VertexSet t = g.vertices() - *s;
    if (!t.empty()) {
        VertexSet core = max_f_feasible_core(g, t, inst.spec.b);
        if (!core.empty()) return SeedResult{std::make_pair(*s, core), {}};
    }
    if (s->count() < 2) return trivial();
    // no b-feasible core besides S: move the S-vertex with fewest edges
    // into the rest across, ties by scan order
    Vertex pick = -1;
    int best = -1;
    for (Vertex v : order) {
        if (!s->contains(v)) continue;
        int d = g.degree_within(v, t);
        if (pick < 0 || d < best) {
            pick = v;
            best = d;
        }
    }
    VertexSet a = *s;
    a.remove(pick);
    return SeedResult{{}, a};
}

Partition greedy_extend(const Instance& inst, VertexSet x, VertexSet y) {
    check_instance_shape(inst);
    const Multigraph& g = inst.graph;
    if (x.empty() || y.empty() || !(x & y).empty())
        throw std::invalid_argument("greedy_extend: sides must be disjoint and nonempty");
    std::vector<Vertex> rest = (g.vertices() - x - y).to_vector();
    std::stable_sort(rest.begin(), rest.end(), [&](Vertex p, Vertex q) {
        return g.degree(p) > g.degree(q);
    });
    VertexSet a = x, b = y;
    for (Vertex v : rest) {
        int slack_a = g.degree_within(v, a) - inst.spec.a[v];
        int slack_b = g.degree_within(v, b) - inst.spec.b[v];
        if (slack_a >= slack_b)
            a.add(v);
        else
            b.add(v);
    }
    return Partition(g, a);
}

namespace {

struct ChainOutcome {
    bool ran = false;
    VertexSet a_side;
    long long def = -1;
    long long moves = 0;
};

// candidate vertices, deficit members first, then near-threshold, then rest
std::vector<Vertex> candidate_order(const Partition& p, const DegreeSpec& spec) {
    SideClassification c = classify_sides(p, spec);
    VertexSet deficit = c.a_deficit | c.b_deficit;
    VertexSet close = (c.a_minus | c.b_minus) - deficit;
    std::vector<Vertex> order;
    deficit.for_each([&](Vertex v) { order.push_back(v); });
    close.for_each([&](Vertex v) { order.push_back(v); });
    (p.graph().vertices() - deficit - close).for_each([&](Vertex v) {
        order.push_back(v);
    });
    return order;
}

// run one first-improvement chain; every accepted move strictly improves
// (deficiency, -omega), so termination needs no cycle detection
ChainOutcome run_chain(const Instance& inst, Partition p, long long budget,
                       const std::atomic<int>* cancel_below, int chain_idx) {
    const DegreeSpec& spec = inst.spec;
    ChainOutcome out;
    out.ran = true;
    long long cur_def = deficiency(p, spec);
    while (cur_def > 0 && out.moves < budget) {
        if (cancel_below && cancel_below->load(std::memory_order_relaxed) < chain_idx) {
            out.ran = false;  // a lower chain already won; result irrelevant
            return out;
        }
        std::vector<Vertex> order = candidate_order(p, spec);
        bool accepted = false;
        auto try_move = [&](const MoveDelta& md) {
            if (accepted) return;
            Partition trial = p;
            switch (md.move.kind) {
                case Move::Kind::AtoB: trial.move_a_to_b(md.move.u); break;
                case Move::Kind::BtoA: trial.move_b_to_a(md.move.v); break;
                case Move::Kind::Swap: trial.swap(md.move.u, md.move.v); break;
            }
            long long new_def = deficiency(trial, spec);
            if (new_def < cur_def || (new_def == cur_def && md.delta > 0)) {
                p = std::move(trial);
                cur_def = new_def;
                ++out.moves;
                accepted = true;
            }
        };
        for (Vertex x : order) {
            if (accepted) break;
            if (p.in_a(x)) {
                if (p.side_a().count() > 1) try_move(delta_move_a_to_b(p, spec, x));
            } else {
                if (p.side_b().count() > 1) try_move(delta_move_b_to_a(p, spec, x));
            }
        }
        for (std::size_t i = 0; i < order.size() && !accepted; ++i)
            for (std::size_t j = 0; j < order.size() && !accepted; ++j) {
                Vertex x = order[i], y = order[j];
                if (p.in_a(x) && !p.in_a(y)) try_move(delta_swap(p, spec, x, y));
            }
        if (!accepted) break;  // local optimum
    }
    out.a_side = p.side_a();
    out.def = cur_def;
    return out;
}

Partition chain_start(const Instance& inst, int chain_idx, std::uint64_t seed) {
    std::vector<Vertex> order = identity_order(inst.graph.order());
    std::mt19937_64 rng(mix_seed(seed, 100 + chain_idx));
    shuffle_in_place(order, rng);
    SeedResult sr = seed_partition(inst, order);
    if (sr.pair) return greedy_extend(inst, sr.pair->first, sr.pair->second);
    return Partition(inst.graph, *sr.start_a);
}

}  // namespace

SearchResult local_search(const Instance& inst, const Partition& start,
                          const SearchOptions& opt) {
    check_instance_shape(inst);
    const int n = inst.graph.order();
    const long long total_budget =
        opt.budget >= 0 ? opt.budget : 200LL * n * n;
    const int chains = std::max(1, opt.restarts + 1);
    const long long per_chain =
        total_budget == 0 ? 0 : std::max<long long>(1, total_budget / chains);

    std::vector<ChainOutcome> outcomes(chains);
    std::atomic<int> success_at{chains};  // smallest chain index with deficiency 0

    auto run_one = [&](int c) {
        if (success_at.load(std::memory_order_relaxed) < c) return;  // cannot win
        Partition p = c == 0 ? start : chain_start(inst, c, opt.seed);
        outcomes[c] = run_chain(inst, p, per_chain, &success_at, c);
        if (outcomes[c].ran && outcomes[c].def == 0) {
            int cur = success_at.load(std::memory_order_relaxed);
            while (c < cur &&
                   !success_at.compare_exchange_weak(cur, c, std::memory_order_relaxed)) {
            }
        }
    };

    if (opt.threads == 1) {
        for (int c = 0; c < chains; ++c) {
            run_one(c);
            if (outcomes[c].ran && outcomes[c].def == 0) break;
        }
    } else {
#ifdef _OPENMP
        if (opt.threads > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(opt.threads)
            for (int c = 0; c < chains; ++c) run_one(c);
        } else {
#pragma omp parallel for schedule(dynamic, 1)
            for (int c = 0; c < chains; ++c) run_one(c);
        }
#else
        for (int c = 0; c < chains; ++c) {
            run_one(c);
            if (outcomes[c].ran && outcomes[c].def == 0) break;
        }
#endif
    }

    // winner: lexicographically best (deficiency, chain index) among chains
    // that ran to completion; cancelled chains are dominated by construction
    SearchResult res;
    int winner = -1;
    for (int c = 0; c < chains; ++c) {
        if (!outcomes[c].ran) continue;
        if (winner < 0 || outcomes[c].def < outcomes[winner].def) winner = c;
    }
    assert(winner >= 0);  // chain 0 is never cancelled
    res.best = Partition(inst.graph, outcomes[winner].a_side);
    res.moves = outcomes[winner].moves;
    res.winner_chain = winner;
    return res;
}

ExactResult exact_solve(const Instance& inst, int max_exact, int threads) {
    check_instance_shape(inst);
    const Multigraph& g = inst.graph;
    const int n = g.order();
    if (n > max_exact) throw std::invalid_argument("exact_solve: instance above size cap");
    if (n > 63) throw std::invalid_argument("exact_solve: n > 63");
    ExactResult res;
    if (n < 2) return res;

    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const std::vector<int>& da = inst.spec.a;
    const std::vector<int>& db = inst.spec.b;
    auto feasible = [&](std::uint64_t mask) {
        VertexSet a(mask), b(all & ~mask);
        for (Vertex v = 0; v < n; ++v) {
            if (a.contains(v)) {
                if (g.degree_within(v, a) < da[v]) return false;
            } else {
                if (g.degree_within(v, b) < db[v]) return false;
            }
        }
        return true;
    };

    const std::uint64_t block = std::uint64_t{1} << 16;
    for (std::uint64_t lo = 1; lo < all; lo += block) {
        const std::uint64_t hi = std::min(lo + block, all);
        std::uint64_t best = ~std::uint64_t{0};
        const long long span = static_cast<long long>(hi - lo);
#ifdef _OPENMP
        if (threads == 1) {
            for (long long i = 0; i < span; ++i) {
                std::uint64_t m = lo + static_cast<std::uint64_t>(i);
                if (feasible(m)) {
                    best = m;
                    break;
                }
            }
        } else if (threads > 0) {
#pragma omp parallel for reduction(min : best) num_threads(threads)
            for (long long i = 0; i < span; ++i) {
                std::uint64_t m = lo + static_cast<std::uint64_t>(i);
                if (m < best && feasible(m)) best = m;
            }
        } else {
#pragma omp parallel for reduction(min : best)
            for (long long i = 0; i < span; ++i) {
                std::uint64_t m = lo + static_cast<std::uint64_t>(i);
                if (m < best && feasible(m)) best = m;
            }
        }
#else
        (void)threads;
        for (long long i = 0; i < span; ++i) {
            std::uint64_t m = lo + static_cast<std::uint64_t>(i);
            if (feasible(m)) {
                best = m;
                break;
            }
        }
#endif
        res.masks_checked += static_cast<unsigned long long>(span);
        if (best != ~std::uint64_t{0}) {
            res.feasible = true;
            res.a_side = VertexSet(best);
            return res;
        }
    }
    return res;
}

SolveReport solve(const Instance& inst, const SolveOptions& opt) {
    check_instance_shape(inst);
    const Multigraph& g = inst.graph;
    SolveReport report;
    report.violations = validate(inst, opt.strict);
    if (opt.strict && !report.violations.empty()) return report;  // Unknown + exit 2

    const int n = g.order();
    if (n < 2) {
        // no ordered split exists; exhaustion is vacuous
        report.status = SolveStatus::Infeasible;
        report.stats.exact_ran = true;
        return report;
    }

    SeedResult seed = seed_partition(inst);
    Partition start = seed.pair
                          ? greedy_extend(inst, seed.pair->first, seed.pair->second)
                          : Partition(g, *seed.start_a);

    SearchOptions sopt;
    sopt.budget = opt.budget;
    sopt.restarts = opt.restarts;
    sopt.seed = opt.seed;
    sopt.threads = opt.threads;
    SearchResult sr = local_search(inst, start, sopt);
    report.stats.moves = sr.moves;
    report.stats.restarts_used = sr.winner_chain;
    long long best_def = deficiency(*sr.best, inst.spec);
    report.best_deficiency = best_def;

    VertexSet answer;
    if (best_def == 0) {
        answer = sr.best->side_a();
    } else if (n <= opt.max_exact) {
        ExactResult ex = exact_solve(inst, opt.max_exact, opt.threads);
        report.stats.exact_ran = true;
        if (ex.feasible) {
            answer = ex.a_side;
        } else {
            report.status = SolveStatus::Infeasible;
            return report;
        }
    } else {
        report.status = SolveStatus::Unknown;
        return report;
    }

    // re-verify from scratch before reporting success
    Partition check(g, answer);
    if (deficiency(check, inst.spec) != 0)
        throw std::logic_error("solve: produced split failed re-verification");
    report.status = SolveStatus::Feasible;
    report.a_side = answer;
    report.best_deficiency = 0;
    return report;
}

}  // namespace degpart
