// Acceptance suite: every criterion prints one pass/fail line and the binary
// exits nonzero if any of them fails. All checks are exact; the stated time
// limits are asserted where the contract pins one.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "treepart/generator.hpp"
#include "treepart/lp.hpp"
#include "treepart/oracle.hpp"
#include "treepart/pathdp.hpp"
#include "treepart/polytopes.hpp"
#include "treepart/solver.hpp"
#include "treepart/verify.hpp"

using namespace treepart;
using testutil::demo_instance;
using testutil::path_tree;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && seconds > time_limit_s) {
        ok = false;
        note += " (over the " + std::to_string(time_limit_s) + "s limit)";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, note.c_str());
    std::fflush(stdout);
}

bool criterion_demo_reproduction() {
    Instance inst = demo_instance();
    EdgeLabeling expected = EdgeLabeling::all_ones(4);
    expected.y[inst.tree().edge_index(2, 3)] = 0;

    BruteForceResult bf = solve_bruteforce(inst);
    if (bf.value != -3 || !(bf.labeling == expected)) return false;

    bool dp_refused = false;
    try {
        solve_path(inst);
    } catch (const InputError&) {
        dp_refused = true;
    }
    if (!dp_refused) return false;

    SolveResult bnc = solve_exact(inst);
    if (bnc.value != -3 || !bnc.certificate.optimal || !(bnc.labeling == expected)) return false;

    Partition part = partition_from_labeling(inst.tree(), bnc.labeling);
    return part.components == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}};
}

bool criterion_set_partitioning_equivalence() {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 50; ++t) {
        int nodes = 2 + static_cast<int>(bounded_draw(rng, 8));  // at most 8 edges
        Instance inst = generate_instance(TreeKind::random_tree, nodes, rng(), -10, 10);
        if (solve_bruteforce(inst).value != solve_set_partitioning_bruteforce(inst).value) return false;
    }
    return true;
}

bool criterion_linearization_identity() {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 100; ++t) {
        int nodes = 2 + static_cast<int>(bounded_draw(rng, 9));
        auto kind = static_cast<TreeKind>(bounded_draw(rng, 3));
        Instance inst = generate_instance(kind, nodes, rng(), -10, 10);
        const Tree& tree = inst.tree();
        EdgeLabeling y = EdgeLabeling::from_code(
            tree.edge_count(), bounded_draw(rng, std::uint64_t{1} << tree.edge_count()));
        LiftedLabeling x = labeling_to_lifted(tree, y);
        Rational transformed = inst.total_cost();
        for (const auto& [idx, c] : inst.costs())
            if (x.x[idx]) transformed -= c;
        if (evaluate_objective(inst, y) != transformed) return false;
    }
    return true;
}

bool criterion_path_dp_oracle() {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 100; ++t) {
        int nodes = 2 + static_cast<int>(bounded_draw(rng, 14));  // up to 14 edges
        Instance inst = generate_instance(TreeKind::path, nodes, rng(), -20, 20);
        if (solve_path(inst).value != solve_bruteforce(inst).value) return false;
    }
    return true;
}

bool criterion_facet_classification() {
    long rows = 0;
    for (int nodes = 3; nodes <= 6; ++nodes) {
        for (const Tree& tree : trees_up_to_iso(nodes)) {
            FacetClassification classes = classify_trivial_facets(tree);
            rows += static_cast<long>(classes.entries.size());
            if (!classes.all_agree) {
                for (const FacetClassEntry& entry : classes.entries)
                    if (!entry.agree)
                        std::fprintf(stderr, "  disagreement: %s %s predicted=%d observed=%d\n",
                                     entry.family.c_str(), entry.label.c_str(), entry.predicted,
                                     entry.observed);
                return false;
            }
        }
    }
    std::fprintf(stderr, "  facet classification rows checked: %ld\n", rows);
    return rows > 0;
}

bool criterion_example_inequalities() { return verify_triangle_examples().pass(); }

bool criterion_path_integrality() {
    for (int n = 2; n <= 6; ++n)
        if (!verify_path_integrality(n, 200, 1)) return false;
    return true;
}

bool criterion_tdi_witnesses() {
    for (int n = 2; n <= 5; ++n) {
        std::mt19937_64 rng(505 + n);
        for (int t = 0; t < 100; ++t) {
            TdiWitness witness = tdi_witness(n, random_extended_objective(n, rng, -5, 5));
            if (!witness.valid()) return false;
        }
    }
    return true;
}

bool criterion_non_tu() {
    if (verify_non_tu(2).found) return false;
    if (verify_non_tu(3).found) return false;
    NonTuWitness witness = verify_non_tu(4);
    if (!witness.found) return false;
    return witness.det >= 2 || witness.det <= -2;
}

bool criterion_inclusion_chains() {
    for (int n = 2; n <= 6; ++n) {
        Tree tree = path_tree(n);
        if (!verify_inclusion(tree, theta_path_system(n), theta1_system(tree)).holds) return false;
        if (!verify_inclusion(tree, theta1_system(tree), theta0_system(tree)).holds) return false;
    }
    for (int nodes = 3; nodes <= 7; ++nodes)
        for (const Tree& tree : trees_up_to_iso(nodes))
            if (!verify_inclusion(tree, theta1_system(tree), theta0_system(tree)).holds) return false;

    StrictnessWitness strict = theta0_strictness_witness();
    return strict.violation > 0 && theta0_system(path_tree(3)).satisfied(strict.point);
}

bool criterion_branch_and_cut() {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 50; ++t) {
        int nodes = 6 + static_cast<int>(bounded_draw(rng, 8));  // 5..12 edges
        Instance inst = generate_instance(TreeKind::random_tree, nodes, rng(), -10, 10);

        SolveResult result = solve_exact(inst);
        BruteForceResult reference = solve_bruteforce(inst);
        if (result.value != reference.value) return false;
        if (!result.certificate.optimal) return false;
        if (result.certificate.bound != result.certificate.incumbent) return false;
        if (evaluate_objective(inst, result.labeling) != result.value) return false;

        Rational b0 = lower_bound(inst, Relaxation::theta0);
        Rational b1 = lower_bound(inst, Relaxation::theta1);
        Rational bs = lower_bound(inst, Relaxation::theta1_squares);
        if (!(b0 <= b1 && b1 <= bs && bs <= reference.value)) return false;
    }
    return true;
}

bool criterion_lp_certification() {
    LpCounters counters = lp_counters();
    std::fprintf(stderr, "  lp solves: %lld, certified: %lld, failures: %lld\n", counters.solves,
                 counters.certified, counters.certify_failures);
    return counters.solves > 1000 && counters.certified > 0 && counters.certify_failures == 0;
}

}  // namespace

int main() {
    criterion(1, "demo instance solved identically by every method", 1.0,
              criterion_demo_reproduction);
    criterion(2, "set partitioning equals the labeling objective on 50 random trees", 30.0,
              criterion_set_partitioning_equivalence);
    criterion(3, "objective linearization identity on 100 random pairs", 0,
              criterion_linearization_identity);
    criterion(4, "interval dp matches the oracle on 100 random paths", 60.0, criterion_path_dp_oracle);
    criterion(5, "facet classification matches predicates on all trees up to 6 nodes", 300.0,
              criterion_facet_classification);
    criterion(6, "example four-pair inequalities valid, star one facet-defining", 0,
              criterion_example_inequalities);
    criterion(7, "ordered-path lp optima integral for 200 objectives per length", 120.0,
              criterion_path_integrality);
    criterion(8, "integral dual witnesses for 100 objectives per length", 300.0,
              criterion_tdi_witnesses);
    criterion(9, "subdeterminant of magnitude two at length 4, none below", 0, criterion_non_tu);
    criterion(10, "inclusion chains and strictness witness", 0, criterion_inclusion_chains);
    criterion(11, "branch and cut exact on 50 random trees with monotone bounds", 0,
              criterion_branch_and_cut);
    criterion(12, "every lp solved anywhere in this suite self-certified", 0,
              criterion_lp_certification);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
