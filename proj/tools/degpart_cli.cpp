// Command line front end: solve / verify / check / gen / oracle over JSON
// instances.  Exit codes: 0 success (feasible, or clean check), 1 infeasible
// or unknown, 2 parse error or strict validation abort.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "degpart/generators.hpp"
#include "degpart/instance_io.hpp"
#include "degpart/oracle.hpp"

using namespace degpart;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string fixture_names() {
    std::string s;
    for (const Fixture& f : fixtures()) {
        if (!s.empty()) s += ", ";
        s += f.name;
    }
    return s;
}

Instance load_instance(const std::string& path, const std::string& fixture_name) {
    if (!fixture_name.empty()) {
        auto inst = fixture(fixture_name);
        if (!inst)
            throw std::invalid_argument("unknown fixture '" + fixture_name +
                                        "' (available: " + fixture_names() + ")");
        return *inst;
    }
    if (path.empty())
        throw std::invalid_argument("expected an instance file or --fixture");
    nlohmann::json j;
    if (path == "-") {
        j = nlohmann::json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        j = nlohmann::json::parse(in);
    }
    return instance_from_json(j);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feasible degree-constrained splits of multigraphs"};
    app.require_subcommand(1);

    std::string path, fixture_name, partition_path;
    SolveOptions sopt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "instance JSON file ('-' for stdin)");
        cmd->add_option("--fixture", fixture_name,
                        "named fixture instead of a file (" + fixture_names() + ")");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance");
    add_input(solve_cmd);
    solve_cmd->add_flag("--strict", sopt.strict, "abort on any validation finding");
    solve_cmd->add_option("--seed", sopt.seed, "search seed (default 0)");
    solve_cmd->add_option("--budget", sopt.budget,
                          "accepted-move limit (default 200*n^2)");
    solve_cmd->add_option("--restarts", sopt.restarts, "restart chains (default 8)");
    solve_cmd->add_option("--max-exact", sopt.max_exact,
                          "exhaustive fallback ceiling (default 22)");
    solve_cmd->add_option("--threads", sopt.threads,
                          "worker threads (0 = runtime default)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a proposed partition file");
    add_input(verify_cmd);
    verify_cmd->add_option("--partition", partition_path, "{\"A\": [ids]} JSON file")
        ->required();

    CLI::App* check_cmd = app.add_subcommand("check", "validate an instance");
    add_input(check_cmd);

    int gen_n = 10;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 0;
    int gen_max_mult = 1;
    std::string gen_family = "hypothesis";
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--family", gen_family,
                        "girth5 | c4-free | triangle-free-edc4 | hypothesis");
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--density", gen_density, "target edge density (default 0.5)");
    gen_cmd->add_option("--seed", gen_seed, "generator seed (default 0)");
    gen_cmd->add_option("--max-mult", gen_max_mult,
                        "inflate multiplicities up to this value");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive reference answer (n <= 20)");
    add_input(oracle_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            Instance inst = load_instance(path, fixture_name);
            SolveReport report = solve(inst, sopt);
            emit(report_to_json(report, inst.graph.order()));
            if (sopt.strict && !report.violations.empty()) return kExitError;
            return report.status == SolveStatus::Feasible ? kExitFeasible
                                                          : kExitNegative;
        }
        if (verify_cmd->parsed()) {
            Instance inst = load_instance(path, fixture_name);
            std::ifstream in(partition_path);
            if (!in)
                throw std::invalid_argument("cannot open '" + partition_path + "'");
            nlohmann::json pj = nlohmann::json::parse(in);
            VertexSet a = partition_a_from_json(pj, inst.graph);
            Partition p(inst.graph, a);  // throws if a side is empty
            ordered_json out;
            out["feasible"] = is_feasible_partition(p, inst.spec);
            out["deficiency"] = deficiency(p, inst.spec);
            out["omega"] = omega(p, inst.spec);
            ordered_json shortfalls = ordered_json::array();
            for (Vertex v = 0; v < inst.graph.order(); ++v) {
                bool in_a = p.in_a(v);
                int need = in_a ? inst.spec.a[v] : inst.spec.b[v];
                int have = in_a ? p.deg_a(v) : p.deg_b(v);
                if (have < need)
                    shortfalls.push_back({{"vertex", v},
                                          {"side", in_a ? "A" : "B"},
                                          {"needed", need},
                                          {"actual", have}});
            }
            out["shortfalls"] = std::move(shortfalls);
            emit(out);
            return out["feasible"].get<bool>() ? kExitFeasible : kExitNegative;
        }
        if (check_cmd->parsed()) {
            Instance inst = load_instance(path, fixture_name);
            std::vector<Violation> vs = validate(inst, true);
            ordered_json out;
            out["ok"] = vs.empty();
            out["violations"] = violations_to_json(vs);
            emit(out);
            return vs.empty() ? kExitFeasible : kExitError;
        }
        if (gen_cmd->parsed()) {
            auto fam = family_from_name(gen_family);
            if (!fam)
                throw std::invalid_argument("unknown family '" + gen_family + "'");
            Multigraph g = gen_structure(gen_n, gen_density, gen_seed, *fam);
            if (gen_max_mult > 1) g = inflate_multiplicities(g, gen_max_mult, gen_seed);
            auto spec = assign_spec(g, gen_seed);
            if (!spec)
                throw std::invalid_argument(
                    "no admissible demands for the generated graph (a vertex has "
                    "degree budget below 4); try a higher density or another seed");
            emit(instance_to_json(Instance{std::move(g), std::move(*spec)}));
            return kExitFeasible;
        }
        if (oracle_cmd->parsed()) {
            Instance inst = load_instance(path, fixture_name);
            oracle::BruteVerdict v = oracle::brute_partition(inst);
            ordered_json out;
            out["status"] = v.feasible ? "feasible" : "infeasible";
            if (v.feasible) {
                out["A"] = v.a_side.to_vector();
                out["B"] = (inst.graph.vertices() - v.a_side).to_vector();
            } else {
                out["A"] = nullptr;
                out["B"] = nullptr;
            }
            emit(out);
            return v.feasible ? kExitFeasible : kExitNegative;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
