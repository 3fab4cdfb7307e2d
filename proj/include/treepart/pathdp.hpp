#pragma once

#include <vector>

#include "treepart/instance.hpp"

namespace treepart {

/// Costs of consecutive node intervals of a path instance.
///
/// Positions 0..n run along the path; `order[p]` is the original node at
/// position p. d[i][l] is the sum of pair costs inside positions i..l, built
/// in O(n^2) from the incremental identity
///   d[i][l] = d[i][l-1] + sum_{i <= j < l} c(j, l).
struct IntervalCostTable {
    int n = 0;                                   // number of edges = positions - 1
    std::vector<int> order;                      // position -> original node id
    std::vector<std::vector<Rational>> d;        // d[i][l] for i <= l, else 0

    const Rational& at(int i, int l) const { return d[i][l]; }
};

/// Nodes of a path tree in positional order, starting from the smaller-id
/// endpoint. Error on non-path trees.
std::vector<int> path_node_order(const Tree& tree);

/// Error on non-path trees; arbitrary node numberings are reordered internally.
IntervalCostTable interval_costs(const Instance& inst);

struct PathSolveResult {
    Partition partition;
    Rational value;
};

/// Exact polynomial-time minimum of a path instance via shortest path in the
/// interval DAG: f(k) = min_j f(j-1) + d[j][k]. Among minimizing predecessors
/// the smallest j wins, making the reported partition deterministic.
PathSolveResult solve_path(const Instance& inst);

}  // namespace treepart
