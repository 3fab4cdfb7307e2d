#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treepart/generator.hpp"
#include "treepart/instance.hpp"
#include "treepart/oracle.hpp"
#include "treepart/pathdp.hpp"
#include "treepart/solver.hpp"
#include "treepart/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treepart;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

std::pair<long, long> parse_cost_range(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("cost range must look like 'a,b'");
    try {
        long lo = std::stol(text.substr(0, comma));
        long hi = std::stol(text.substr(comma + 1));
        if (lo > hi) throw InputError("empty cost range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError("cost range must look like 'a,b'");
    }
}

SolveResult solve_via(const Instance& inst, const std::string& method, Relaxation relaxation,
                      long node_limit) {
    const Tree& tree = inst.tree();
    if (method == "bruteforce") {
        BruteForceResult bf = solve_bruteforce(inst);
        SolveResult result{bf.labeling, bf.value, {}};
        result.certificate.incumbent = bf.value;
        result.certificate.bound = bf.value;
        result.certificate.nodes = 0;
        result.certificate.optimal = true;
        return result;
    }
    if (method == "dp") {
        if (!tree.is_path()) throw InputError("--method dp requires a path instance");
        PathSolveResult dp = solve_path(inst);
        SolveResult result{labeling_from_partition(tree, dp.partition), dp.value, {}};
        result.certificate.incumbent = dp.value;
        result.certificate.bound = dp.value;
        result.certificate.nodes = 0;
        result.certificate.optimal = true;
        return result;
    }
    if (method == "bnc") {
        BncConfig config;
        config.relaxation = relaxation;
        config.node_limit = node_limit;
        return solve_exact(inst, config);
    }
    if (method == "auto") {
        if (tree.is_path()) return solve_via(inst, "dp", relaxation, node_limit);
        return solve_via(inst, "bnc", relaxation, node_limit);
    }
    throw InputError("unknown method '" + method + "'");
}

int run_solve(const std::string& file, const std::string& method, const std::string& relaxation,
              long node_limit, bool cross_check) {
    Instance inst = load_instance_file(file);
    SolveResult result = solve_via(inst, method, relaxation_from_name(relaxation), node_limit);
    if (cross_check) {
        if (inst.tree().edge_count() > 18)
            throw InputError("--cross-check is limited to 18 edges");
        BruteForceResult bf = solve_bruteforce(inst);
        if (bf.value != result.value) {
            std::cerr << "cross-check mismatch: solver " << to_string(result.value) << " vs exhaustive "
                      << to_string(bf.value) << "\n";
            return kExitVerifyFailed;
        }
        std::cerr << "cross-check ok\n";
    }
    std::cout << solution_to_json(inst, result);
    return kExitOk;
}

int run_bound(const std::string& file, const std::string& relaxation) {
    Instance inst = load_instance_file(file);
    Rational bound = lower_bound(inst, relaxation_from_name(relaxation));
    ordered_json j;
    j["relaxation"] = relaxation;
    j["bound"] = to_string(bound);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_gen(const std::string& type, int nodes, std::uint64_t seed, const std::string& range,
            const std::string& output) {
    auto [lo, hi] = parse_cost_range(range);
    Instance inst = generate_instance(tree_kind_from_name(type), nodes, seed, lo, hi);
    std::string text = save_instance(inst);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write to " + output);
        out << text;
    }
    return kExitOk;
}

int run_convert(const std::string& to, const std::string& file) {
    if (to != "qubo") throw InputError("unknown conversion target '" + to + "'");
    Instance inst = load_instance_file(file);
    PbfCoefficients pbf = star_to_quadratic(inst);
    ordered_json j;
    j["type"] = "qubo";
    j["variables"] = inst.tree().edge_count();
    j["constant"] = "0";
    j["linear"] = ordered_json::array();
    j["quadratic"] = ordered_json::array();
    for (const auto& [edges, coeff] : pbf.terms) {
        if (edges.size() == 1) {
            ordered_json term;
            term["edge"] = edges[0];
            term["c"] = to_string(coeff);
            j["linear"].push_back(term);
        } else {
            ordered_json term;
            term["i"] = edges[0];
            term["j"] = edges[1];
            term["c"] = to_string(coeff);
            j["quadratic"].push_back(term);
        }
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_verify_facets(int max_nodes) {
    struct FamilyTally {
        long rows = 0, predicted = 0, observed = 0, agree = 0;
    };
    std::map<std::string, FamilyTally> families;
    long rows_checked = 0, trees_checked = 0;
    ordered_json disagreements = ordered_json::array();
    for (int nodes = 3; nodes <= max_nodes; ++nodes) {
        for (const Tree& tree : trees_up_to_iso(nodes)) {
            ++trees_checked;
            FacetClassification classes = classify_trivial_facets(tree);
            rows_checked += static_cast<long>(classes.entries.size());
            for (const FacetClassEntry& entry : classes.entries) {
                FamilyTally& tally = families[entry.family];
                ++tally.rows;
                tally.predicted += entry.predicted;
                tally.observed += entry.observed;
                tally.agree += entry.agree;
                if (entry.agree) continue;
                ordered_json bad;
                bad["nodes"] = nodes;
                bad["family"] = entry.family;
                bad["row"] = entry.label;
                bad["predicted"] = entry.predicted;
                bad["observed"] = entry.observed;
                disagreements.push_back(bad);
            }
        }
    }
    TriangleExampleReport triangles = verify_triangle_examples();

    ordered_json report;
    report["check"] = "facets";
    report["max_nodes"] = max_nodes;
    report["trees"] = trees_checked;
    report["rows_checked"] = rows_checked;
    report["families"] = ordered_json::object();
    for (const auto& [family, tally] : families) {
        ordered_json entry;
        entry["rows"] = tally.rows;
        entry["predicted_facets"] = tally.predicted;
        entry["observed_facets"] = tally.observed;
        entry["agree"] = tally.agree;
        report["families"][family] = entry;
    }
    report["disagreements"] = disagreements;
    report["triangle_examples"] = triangles.pass();
    const bool pass = disagreements.empty() && triangles.pass();
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";

    std::fprintf(stderr, "%-16s %6s %10s %9s %6s\n", "family", "rows", "predicted", "observed", "agree");
    for (const auto& [family, tally] : families)
        std::fprintf(stderr, "%-16s %6ld %10ld %9ld %5s\n", family.c_str(), tally.rows, tally.predicted,
                     tally.observed, tally.agree == tally.rows ? "yes" : "NO");
    std::cerr << "facets: " << rows_checked << " rows over " << trees_checked << " trees, "
              << disagreements.size() << " disagreements -> " << (pass ? "ok" : "FAIL") << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_verify_path_polytope(int n, int trials, std::uint64_t seed) {
    ordered_json report;
    report["check"] = "path-polytope";
    report["trials"] = trials;
    report["seed"] = seed;
    ordered_json per_n = ordered_json::array();
    bool pass = true;
    const int lo = n > 0 ? n : 2;
    const int hi = n > 0 ? n : 6;
    for (int k = lo; k <= hi; ++k) {
        bool ok = verify_path_integrality(k, trials, seed);
        ordered_json entry;
        entry["n"] = k;
        entry["integral"] = ok;
        per_n.push_back(entry);
        pass = pass && ok;
        std::cerr << "path-polytope n=" << k << ": " << (ok ? "integral" : "FAIL") << "\n";
    }
    report["results"] = per_n;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_verify_tdi(int n, int trials, std::uint64_t seed) {
    ordered_json report;
    report["check"] = "tdi";
    report["trials"] = trials;
    report["seed"] = seed;
    ordered_json per_n = ordered_json::array();
    bool pass = true;
    const int lo = n > 0 ? n : 2;
    const int hi = n > 0 ? n : 5;
    for (int k = lo; k <= hi; ++k) {
        std::mt19937_64 rng(seed);
        int valid = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<Rational> c = random_extended_objective(k, rng, -5, 5);
            if (tdi_witness(k, c).valid()) ++valid;
        }
        ordered_json entry;
        entry["n"] = k;
        entry["valid_witnesses"] = valid;
        per_n.push_back(entry);
        pass = pass && valid == trials;
        std::cerr << "tdi n=" << k << ": " << valid << "/" << trials << " integral dual witnesses\n";
    }
    report["results"] = per_n;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_verify_non_tu(int n) {
    ordered_json report;
    report["check"] = "non-tu";
    bool pass = true;
    ordered_json results = ordered_json::array();
    std::vector<int> sizes = n > 0 ? std::vector<int>{n} : std::vector<int>{2, 3, 4};
    for (int k : sizes) {
        NonTuWitness witness = verify_non_tu(k);
        ordered_json entry;
        entry["n"] = k;
        entry["witness_found"] = witness.found;
        if (witness.found) {
            entry["rows"] = witness.rows;
            entry["cols"] = witness.cols;
            entry["det"] = witness.det;
        }
        results.push_back(entry);
        if (k <= 3 && witness.found) pass = false;
        if (k == 4 && !witness.found) pass = false;
        std::cerr << "non-tu n=" << k << ": "
                  << (witness.found ? "subdeterminant " + std::to_string(witness.det) : "totally unimodular")
                  << "\n";
    }
    report["results"] = results;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_verify_inclusions(int max_path, int max_nodes) {
    ordered_json report;
    report["check"] = "inclusions";
    bool pass = true;
    ordered_json path_results = ordered_json::array();
    for (int n = 2; n <= max_path; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
        Tree tree(n + 1, edges);
        InclusionReport inner = verify_inclusion(tree, theta_path_system(n), theta1_system(tree));
        InclusionReport outer = verify_inclusion(tree, theta1_system(tree), theta0_system(tree));
        ordered_json entry;
        entry["n"] = n;
        entry["path_in_theta1"] = inner.holds;
        entry["theta1_in_theta0"] = outer.holds;
        path_results.push_back(entry);
        pass = pass && inner.holds && outer.holds;
        std::cerr << "inclusions path n=" << n << ": " << (inner.holds && outer.holds ? "ok" : "FAIL") << "\n";
    }
    ordered_json tree_results = ordered_json::array();
    for (int nodes = 3; nodes <= max_nodes; ++nodes) {
        bool all = true;
        for (const Tree& tree : trees_up_to_iso(nodes))
            all = all && verify_inclusion(tree, theta1_system(tree), theta0_system(tree)).holds;
        ordered_json entry;
        entry["nodes"] = nodes;
        entry["theta1_in_theta0"] = all;
        tree_results.push_back(entry);
        pass = pass && all;
        std::cerr << "inclusions trees with " << nodes << " nodes: " << (all ? "ok" : "FAIL") << "\n";
    }
    StrictnessWitness strict = theta0_strictness_witness();
    const bool strict_ok = strict.violation > 0;
    pass = pass && strict_ok;
    report["paths"] = path_results;
    report["trees"] = tree_results;
    report["strictness_violation"] = to_string(strict.violation);
    report["strictness_row"] = strict.row_label;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    std::cerr << "strictness witness violation " << to_string(strict.violation) << " on " << strict.row_label
              << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree partition toolkit: exact solvers and polyhedral verification"};
    app.require_subcommand(1);

    std::string file, method = "auto", relaxation = "squares", gen_type = "tree", cost_range = "-10,10";
    std::string output, convert_to = "qubo", verify_what;
    int nodes = 6, verify_n = 0, trials = 0, max_nodes = 0;
    long node_limit = 1000000;
    std::uint64_t seed = 1;
    bool cross_check = false;

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file exactly");
    solve_cmd->add_option("file", file, "instance JSON file")->required();
    solve_cmd->add_option("--method", method, "auto|bruteforce|dp|bnc (default auto)");
    solve_cmd->add_option("--relaxation", relaxation, "theta0|theta1|squares|path (default squares)");
    solve_cmd->add_option("--node-limit", node_limit, "branch-and-cut node limit");
    solve_cmd->add_flag("--cross-check", cross_check, "also solve exhaustively and compare");

    CLI::App* bound_cmd = app.add_subcommand("bound", "LP relaxation bound of an instance");
    bound_cmd->add_option("file", file, "instance JSON file")->required();
    bound_cmd->add_option("--relaxation", relaxation, "theta0|theta1|squares|path")->required();

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a reproducible random instance");
    gen_cmd->add_option("--type", gen_type, "path|star|tree")->required();
    gen_cmd->add_option("--nodes", nodes, "number of nodes (>= 2)")->required();
    gen_cmd->add_option("--seed", seed, "PRNG seed (default 1)");
    gen_cmd->add_option("--cost-range", cost_range, "integer cost range 'a,b' (default -10,10)");
    gen_cmd->add_option("-o,--output", output, "write to file instead of stdout");

    CLI::App* convert_cmd = app.add_subcommand("convert", "convert a star instance");
    convert_cmd->add_option("--to", convert_to, "conversion target (qubo)")->required();
    convert_cmd->add_option("file", file, "instance JSON file")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "polyhedral verification sweeps");
    verify_cmd->add_option("what", verify_what, "facets|path-polytope|tdi|non-tu|inclusions")->required();
    verify_cmd->add_option("--n", verify_n, "path length (default: the full sweep)");
    verify_cmd->add_option("--trials", trials, "random objectives per size");
    verify_cmd->add_option("--seed", seed, "PRNG seed (default 1)");
    verify_cmd->add_option("--max-nodes", max_nodes, "tree sweep cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(file, method, relaxation, node_limit, cross_check);
        if (bound_cmd->parsed()) return run_bound(file, relaxation);
        if (gen_cmd->parsed()) return run_gen(gen_type, nodes, seed, cost_range, output);
        if (convert_cmd->parsed()) return run_convert(convert_to, file);
        if (verify_cmd->parsed()) {
            if (verify_what == "facets") return run_verify_facets(max_nodes > 0 ? max_nodes : 6);
            if (verify_what == "path-polytope")
                return run_verify_path_polytope(verify_n, trials > 0 ? trials : 200, seed);
            if (verify_what == "tdi") return run_verify_tdi(verify_n, trials > 0 ? trials : 100, seed);
            if (verify_what == "non-tu") return run_verify_non_tu(verify_n);
            if (verify_what == "inclusions")
                return run_verify_inclusions(verify_n > 0 ? verify_n : 6, max_nodes > 0 ? max_nodes : 7);
            throw InputError("unknown verification sweep '" + verify_what + "'");
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
