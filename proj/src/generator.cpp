#include "treepart/generator.hpp"

#include <algorithm>

namespace treepart {

TreeKind tree_kind_from_name(const std::string& name) {
    if (name == "path") return TreeKind::path;
    if (name == "star") return TreeKind::star;
    if (name == "tree") return TreeKind::random_tree;
    throw InputError("unknown tree kind '" + name + "'");
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t k) {
    if (k == 0) throw InputError("bounded draw over empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % k;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    if (lo > hi) throw InputError("empty integer range");
    return lo + static_cast<long>(bounded_draw(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

Tree random_tree(int nodes, std::mt19937_64& rng) {
    if (nodes < 1) throw InputError("tree needs at least one node");
    if (nodes == 1) return Tree(1, {});
    if (nodes == 2) return Tree(2, {{0, 1}});

    std::vector<int> seq(nodes - 2);
    for (int& s : seq) s = static_cast<int>(bounded_draw(rng, nodes));

    // linear decode: repeatedly join the smallest current leaf to the next
    // sequence entry; the survivor pairs with the last node
    std::vector<int> degree(nodes, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, nodes - 1), std::max(leaf, nodes - 1));
    std::sort(edges.begin(), edges.end());
    return Tree(nodes, std::move(edges));
}

Instance generate_instance(TreeKind kind, int nodes, std::uint64_t seed, long cost_min, long cost_max) {
    if (nodes < 2) throw InputError("instance generation needs at least two nodes");
    if (cost_min > cost_max) throw InputError("empty cost range");
    std::mt19937_64 rng(seed);

    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case TreeKind::path:
            for (int v = 0; v + 1 < nodes; ++v) edges.emplace_back(v, v + 1);
            break;
        case TreeKind::star:
            for (int v = 1; v < nodes; ++v) edges.emplace_back(0, v);
            break;
        case TreeKind::random_tree:
            break;
    }
    Tree tree = kind == TreeKind::random_tree ? random_tree(nodes, rng) : Tree(nodes, std::move(edges));

    std::vector<std::tuple<int, int, Rational>> costs;
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = pair_nodes_for(nodes, p);
        costs.emplace_back(u, v, Rational(uniform_int(rng, cost_min, cost_max)));
    }
    return Instance(std::move(tree), costs);
}

}  // namespace treepart
