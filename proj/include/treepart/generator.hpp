#pragma once

#include <cstdint>
#include <random>

#include "treepart/instance.hpp"

namespace treepart {

enum class TreeKind { path, star, random_tree };

TreeKind tree_kind_from_name(const std::string& name);

/// Unbiased draw from [0, k) via modulo rejection. mt19937_64 output is fixed
/// by the standard, so draws are reproducible across platforms.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t k);

/// Uniform integer in [lo, hi].
long uniform_int(std::mt19937_64& rng, long lo, long hi);

/// Uniform random labeled tree from a random linear-sequence encoding of
/// length nodes-2; edges are sorted lexicographically afterwards.
Tree random_tree(int nodes, std::mt19937_64& rng);

/// Deterministic instance: the tree per `kind` (paths 0-1-..., stars centered
/// at 0, or a uniform random tree), then one integer cost per node pair drawn
/// in pair-index order from [cost_min, cost_max].
Instance generate_instance(TreeKind kind, int nodes, std::uint64_t seed, long cost_min, long cost_max);

}  // namespace treepart
