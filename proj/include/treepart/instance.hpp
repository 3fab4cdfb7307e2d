#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treepart/rational.hpp"
#include "treepart/tree.hpp"

namespace treepart {

/// Binary edge labeling y of a tree: y[e] = 1 keeps edge e (endpoints join the
/// same component), y[e] = 0 cuts it.
struct EdgeLabeling {
    std::vector<std::uint8_t> y;

    EdgeLabeling() = default;
    explicit EdgeLabeling(std::vector<std::uint8_t> bits) : y(std::move(bits)) {}
    static EdgeLabeling all_ones(int n) { return EdgeLabeling(std::vector<std::uint8_t>(n, 1)); }
    static EdgeLabeling all_zeros(int n) { return EdgeLabeling(std::vector<std::uint8_t>(n, 0)); }
    /// Bits of `code`, edge 0 as least significant bit.
    static EdgeLabeling from_code(int n, std::uint64_t code);
    std::uint64_t code() const;
    int size() const { return static_cast<int>(y.size()); }
    bool operator==(const EdgeLabeling&) const = default;
};

/// Lifted 0/1 vector over all node pairs, indexed by pair index. Membership in
/// the feasible set of decompositions is not implied; see lifted_is_consistent.
struct LiftedLabeling {
    std::vector<std::uint8_t> x;

    LiftedLabeling() = default;
    explicit LiftedLabeling(std::vector<std::uint8_t> bits) : x(std::move(bits)) {}
    int size() const { return static_cast<int>(x.size()); }
    bool operator==(const LiftedLabeling&) const = default;
};

/// Decomposition of the tree's node set into connected components.
/// Components are ordered by their smallest node, nodes sorted within each.
struct Partition {
    std::vector<int> component_of;
    std::vector<std::vector<int>> components;

    bool operator==(const Partition&) const = default;
};

/// Multi-linear polynomial over edge variables, term per edge subset.
/// Subsets are stored as sorted edge-index lists; for objectives arising from
/// pairwise costs every nonzero term's edge set forms a path in the tree.
struct PbfCoefficients {
    std::map<std::vector<int>, Rational> terms;

    Rational evaluate(const EdgeLabeling& y) const;
    int degree() const;
};

/// A tree together with an exact rational cost per unordered node pair.
/// Pairs without an entry cost 0. Immutable after construction.
class Instance {
public:
    explicit Instance(Tree tree) : tree_(std::move(tree)) {}
    /// `costs` holds (u, v, c) entries; duplicate pairs are rejected.
    Instance(Tree tree, const std::vector<std::tuple<int, int, Rational>>& costs);

    const Tree& tree() const { return tree_; }
    Rational cost(int u, int v) const;
    Rational cost_by_pair(int pair_idx) const;
    /// Sparse cost map keyed by pair index; zero entries are dropped on construction.
    const std::map<int, Rational>& costs() const { return costs_; }
    /// Sum of all pair costs (the constant of the lifted objective).
    Rational total_cost() const;

private:
    Tree tree_;
    std::map<int, Rational> costs_;
};

/// Exact value of the partition objective: sum over pairs in one component.
Rational evaluate_objective(const Instance& inst, const EdgeLabeling& y);

/// Lifted vector of a labeling: x_uv = 0 iff every edge on the u-v path keeps.
LiftedLabeling labeling_to_lifted(const Tree& tree, const EdgeLabeling& y);

/// True iff x encodes a decomposition, i.e. x equals the lift of its own
/// restriction to tree edges.
bool lifted_is_consistent(const Tree& tree, const LiftedLabeling& x);

/// Inverse of labeling_to_lifted; raises EncodingError when x encodes nothing.
EdgeLabeling lifted_to_labeling(const Tree& tree, const LiftedLabeling& x);

Partition partition_from_labeling(const Tree& tree, const EdgeLabeling& y);

/// Labeling that keeps exactly the edges inside a component of `part`.
EdgeLabeling labeling_from_partition(const Tree& tree, const Partition& part);

/// True when the edge subset induces a path in the tree.
bool edge_set_is_path(const Tree& tree, const std::vector<int>& edge_indices);

/// Polynomial view of the objective: term for the path edge set of every
/// costed pair. The constant term is zero and is not stored.
PbfCoefficients pbf_view(const Instance& inst);

/// Degree <= 2 polynomial of a star instance: linear terms from center-leaf
/// costs, quadratic terms from leaf-leaf costs. Error on non-star trees.
PbfCoefficients star_to_quadratic(const Instance& inst);

/// JSON (de)serialization. The saved form is canonical: pairs normalized to
/// u < v and sorted, integer costs emitted as JSON numbers when they fit,
/// exact "p/q" strings otherwise. load(save(x)) is the identity byte-for-byte.
Instance load_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);
std::string save_instance(const Instance& inst);

}  // namespace treepart
