#pragma once

#include <tuple>
#include <vector>

#include "treepart/instance.hpp"

namespace treepart::testutil {

/// The 5-node demo instance used throughout: tree edges 0-2, 1-2, 2-3, 3-4
/// with a cost on every node pair. Its optimum is -3, attained by cutting the
/// 2-3 edge only.
inline Instance demo_instance() {
    Tree tree(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<std::tuple<int, int, Rational>> costs = {
        {0, 2, Rational(2)},  {1, 2, Rational(-1)}, {2, 3, Rational(-2)}, {3, 4, Rational(-1)},
        {0, 1, Rational(-3)}, {1, 3, Rational(1)},  {0, 3, Rational(1)},  {0, 4, Rational(2)},
        {1, 4, Rational(-2)}, {2, 4, Rational(3)},
    };
    return Instance(std::move(tree), costs);
}

inline Tree path_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n + 1, std::move(edges));
}

inline Tree star_tree(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Tree(leaves + 1, std::move(edges));
}

}  // namespace treepart::testutil
