#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treepart/errors.hpp"

namespace treepart {

/// Number of unordered node pairs over `node_count` nodes.
inline int pair_count_for(int node_count) { return node_count * (node_count - 1) / 2; }

/// Lexicographic index of the pair {u,v}, u < v, within 0..m-1.
int pair_index_for(int node_count, int u, int v);

/// Inverse of pair_index_for.
std::pair<int, int> pair_nodes_for(int node_count, int index);

/// A free tree on nodes 0..node_count-1 with a fixed edge order.
///
/// Edges are normalized to (u,v) with u < v and indexed by their position in
/// the constructor's list. Path and distance queries go through parent/depth
/// arrays rooted at node 0 and a lowest-common-ancestor climb, so a query
/// costs O(dist). Immutable after construction.
class Tree {
public:
    Tree(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int pair_count() const { return pair_count_for(node_count_); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Position of edge {u,v} in the edge list; error if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const;

    bool is_path() const;
    /// True when at most one node has degree >= 2.
    bool is_star() const;
    /// Center of a star; for a 2-node star this is node 0.
    int star_center() const;

    int dist(int u, int v) const;

    /// Node sequence of the unique u-v path, starting at u.
    std::vector<int> path_nodes(int u, int v) const;
    /// Edge sequence of the unique u-v path as oriented node pairs from u to v.
    std::vector<std::pair<int, int>> path_between(int u, int v) const;
    /// Edge indices along the u-v path, in order from u to v.
    std::vector<int> path_edge_indices(int u, int v) const;

    /// First node on the u-v path distinct from both endpoints.
    /// Requires dist(u,v) >= 2.
    int first_step(int u, int v) const;

    int pair_index(int u, int v) const { return pair_index_for(node_count_, u, v); }
    std::pair<int, int> pair_nodes(int index) const { return pair_nodes_for(node_count_, index); }

    /// Bitmask over edge indices of the path joining the pair. Valid for
    /// trees with at most 64 edges (always true at the library's size caps).
    std::uint64_t path_mask(int pair_idx) const {
        if (path_masks_.empty()) throw SizeError("path masks need at most 64 edges");
        return path_masks_[pair_idx];
    }

private:
    void check_node(int v) const;

    int node_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::unordered_map<long long, int> edge_index_;
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::vector<std::uint64_t> path_masks_;
};

}  // namespace treepart
