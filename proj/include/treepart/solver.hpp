#pragma once

#include <map>
#include <string>

#include "treepart/instance.hpp"
#include "treepart/polytopes.hpp"

namespace treepart {

enum class Relaxation { theta0, theta1, theta1_squares, path_exact };

std::string relaxation_name(Relaxation r);
Relaxation relaxation_from_name(const std::string& name);

struct BncConfig {
    Relaxation relaxation = Relaxation::theta1_squares;
    long node_limit = 1000000;
    /// Separation rounds per node at fractional points; when the tree-edge
    /// coordinates are integral, separation always runs to closure.
    int cut_rounds = 50;
    unsigned seed = 0;
    /// Solve path instances with the interval DP instead of branch and cut.
    bool use_path_dp = false;
};

struct BncCertificate {
    Rational incumbent = 0;
    Rational bound = 0;
    long nodes = 0;
    std::map<std::string, long> cuts;  // separated rows added, per family
    bool optimal = false;
};

struct SolveResult {
    EdgeLabeling labeling;
    Rational value;
    BncCertificate certificate;
};

/// Exact minimization of the partition objective by branch and cut on the
/// lifted formulation: the objective is linearized over pair variables with
/// flipped sign plus the constant cost sum, LP relaxations are solved with
/// lazy separation of the configured row families, and branching fixes
/// tree-edge variables (which determine all lifted variables). The returned
/// certificate proves optimality whenever the node limit was not hit.
SolveResult solve_exact(const Instance& inst, const BncConfig& config = {});

/// LP relaxation value of the instance over the chosen system, i.e. the
/// constant cost sum plus the minimum of the lifted objective. Bounds are
/// monotone: theta0 <= theta1 <= theta1+squares <= optimum.
Rational lower_bound(const Instance& inst, Relaxation relaxation);

/// Solution JSON per the CLI contract.
std::string solution_to_json(const Instance& inst, const SolveResult& result);

}  // namespace treepart
