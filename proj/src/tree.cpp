#include "treepart/tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace treepart {

namespace {
long long edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) << 32 | static_cast<unsigned>(v);
}
}  // namespace

int pair_index_for(int node_count, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= node_count || u == v)
        throw InputError("invalid node pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    // lexicographic over (u,v) with u < v
    return u * (2 * node_count - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_nodes_for(int node_count, int index) {
    if (index < 0 || index >= pair_count_for(node_count)) throw InputError("pair index out of range");
    int u = 0;
    int block = node_count - 1;
    while (index >= block) {
        index -= block;
        ++u;
        --block;
    }
    return {u, u + 1 + index};
}

Tree::Tree(int node_count, std::vector<std::pair<int, int>> edges) : node_count_(node_count) {
    if (node_count_ < 1) throw InputError("tree needs at least one node");
    if (static_cast<int>(edges.size()) != node_count_ - 1)
        throw InputError("tree on " + std::to_string(node_count_) + " nodes needs exactly " +
                         std::to_string(node_count_ - 1) + " edges, got " + std::to_string(edges.size()));
    adjacency_.assign(node_count_, {});
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= node_count_) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop edge at node " + std::to_string(u));
        if (edge_index_.count(edge_key(u, v))) throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edge_index_[edge_key(u, v)] = static_cast<int>(edges_.size());
        edges_.emplace_back(u, v);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }

    // BFS from node 0 fixes parents, depths and checks connectivity (with the
    // right edge count, connected implies acyclic).
    parent_.assign(node_count_, -1);
    parent_edge_.assign(node_count_, -1);
    depth_.assign(node_count_, -1);
    std::queue<int> queue;
    queue.push(0);
    depth_[0] = 0;
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        ++seen;
        for (int w : adjacency_[v]) {
            if (depth_[w] >= 0 || w == 0) continue;
            depth_[w] = depth_[v] + 1;
            parent_[w] = v;
            parent_edge_[w] = edge_index(v, w);
            queue.push(w);
        }
    }
    if (seen != node_count_) throw InputError("edge set is not a tree (disconnected or cyclic)");

    if (edge_count() <= 64) {
        path_masks_.assign(pair_count(), 0);
        for (int p = 0; p < pair_count(); ++p) {
            auto [u, v] = pair_nodes(p);
            std::uint64_t mask = 0;
            for (int e : path_edge_indices(u, v)) mask |= std::uint64_t{1} << e;
            path_masks_[p] = mask;
        }
    }
}

void Tree::check_node(int v) const {
    if (v < 0 || v >= node_count_) throw InputError("unknown node id " + std::to_string(v));
}

const std::vector<int>& Tree::neighbors(int v) const {
    check_node(v);
    return adjacency_[v];
}

int Tree::edge_index(int u, int v) const {
    check_node(u);
    check_node(v);
    auto it = edge_index_.find(edge_key(u, v));
    if (it == edge_index_.end())
        throw InputError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second;
}

bool Tree::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return edge_index_.count(edge_key(u, v)) > 0;
}

bool Tree::is_path() const {
    for (int v = 0; v < node_count_; ++v)
        if (degree(v) > 2) return false;
    return true;
}

bool Tree::is_star() const {
    int big = 0;
    for (int v = 0; v < node_count_; ++v)
        if (degree(v) >= 2) ++big;
    return big <= 1;
}

int Tree::star_center() const {
    if (!is_star()) throw InputError("tree is not a star");
    for (int v = 0; v < node_count_; ++v)
        if (degree(v) >= 2) return v;
    return 0;
}

std::vector<int> Tree::path_nodes(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) throw InputError("path endpoints coincide");
    std::vector<int> up, down;
    int a = u, b = v;
    while (depth_[a] > depth_[b]) {
        up.push_back(a);
        a = parent_[a];
    }
    while (depth_[b] > depth_[a]) {
        down.push_back(b);
        b = parent_[b];
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = parent_[a];
        b = parent_[b];
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::vector<std::pair<int, int>> Tree::path_between(int u, int v) const {
    auto nodes = path_nodes(u, v);
    std::vector<std::pair<int, int>> result;
    result.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) result.emplace_back(nodes[i], nodes[i + 1]);
    return result;
}

std::vector<int> Tree::path_edge_indices(int u, int v) const {
    auto nodes = path_nodes(u, v);
    std::vector<int> result;
    result.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) result.push_back(edge_index(nodes[i], nodes[i + 1]));
    return result;
}

int Tree::dist(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) return 0;
    int a = u, b = v, climbed = 0;
    while (depth_[a] > depth_[b]) {
        a = parent_[a];
        ++climbed;
    }
    while (depth_[b] > depth_[a]) {
        b = parent_[b];
        ++climbed;
    }
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
        climbed += 2;
    }
    return climbed;
}

int Tree::first_step(int u, int v) const {
    if (dist(u, v) < 2) throw InputError("first_step requires dist(u,v) >= 2");
    return path_nodes(u, v)[1];
}

}  // namespace treepart
