#pragma once

#include <cstddef>
#include <vector>

#include "treepart/instance.hpp"

namespace treepart {

struct BruteForceResult {
    EdgeLabeling labeling;
    Rational value;
};

/// Exhaustive minimum over all 2^n edge labelings. Ties go to the smallest
/// labeling read as an n-bit integer with edge 0 as least significant bit.
BruteForceResult solve_bruteforce(const Instance& inst, int max_edges = 25);

/// All 2^n lifted vectors of a tree, in labeling-code order.
std::vector<LiftedLabeling> enumerate_lifted(const Tree& tree, int max_edges = 20);

/// All nonempty connected subtrees, each as a sorted node list.
std::vector<std::vector<int>> enumerate_subtrees(const Tree& tree, std::size_t guard = 1000000);

/// Independent count of connected subtrees by a rooted product formula.
std::size_t count_subtrees(const Tree& tree);

/// Sum of pair costs inside a connected node set; 0 for singletons.
Rational subtree_cost(const Instance& inst, const std::vector<int>& nodes);

struct SetPartitionResult {
    Partition partition;
    Rational value;
};

/// Exhaustive minimum of the set partitioning form: over all decompositions
/// into connected subtrees, minimize the sum of component costs. Enumerates
/// decompositions through edge labelings; the same tie-break applies.
SetPartitionResult solve_set_partitioning_bruteforce(const Instance& inst, int max_edges = 20);

}  // namespace treepart
