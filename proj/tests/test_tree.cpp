#include "doctest.h"
#include "helpers.hpp"
#include "treepart/tree.hpp"

using namespace treepart;
using testutil::path_tree;
using testutil::star_tree;

TEST_CASE("pair indexing is a lexicographic bijection") {
    const int nodes = 7;
    int expected = 0;
    for (int u = 0; u < nodes; ++u)
        for (int v = u + 1; v < nodes; ++v) {
            CHECK(pair_index_for(nodes, u, v) == expected);
            CHECK(pair_nodes_for(nodes, expected) == std::pair<int, int>{u, v});
            ++expected;
        }
    CHECK(expected == pair_count_for(nodes));
    CHECK(pair_index_for(nodes, 5, 2) == pair_index_for(nodes, 2, 5));
}

TEST_CASE("tree construction validates the edge set") {
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), InputError);                    // too few edges
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 2}, {0, 2}}), InputError);    // too many
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {0, 1}, {2, 3}}), InputError);    // duplicate
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {2, 3}}), InputError);    // duplicate again
    CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), InputError);            // self loop
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 3}}), InputError);            // out of range
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {0, 2}}), InputError);    // cycle, disconnected
    CHECK_NOTHROW(Tree(1, {}));
}

TEST_CASE("paths on the demo tree") {
    Tree tree = testutil::demo_instance().tree();
    CHECK(tree.path_between(0, 4) ==
          std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 4}});
    CHECK(tree.dist(0, 4) == 3);
    CHECK(tree.first_step(0, 4) == 2);
}

TEST_CASE("adjacent nodes and star routing") {
    Tree path = path_tree(2);
    CHECK(path.path_between(0, 1) == std::vector<std::pair<int, int>>{{0, 1}});

    Tree star = star_tree(3);
    CHECK(star.path_between(1, 3) == std::vector<std::pair<int, int>>{{1, 0}, {0, 3}});
}

TEST_CASE("first step depends on direction") {
    Tree path = path_tree(3);
    CHECK(path.first_step(0, 3) == 1);
    CHECK(path.first_step(3, 0) == 2);
    CHECK_THROWS_AS(path.first_step(0, 1), InputError);
    CHECK_THROWS_AS(path.first_step(0, 9), InputError);
}

TEST_CASE("shape predicates") {
    CHECK(path_tree(4).is_path());
    CHECK(!star_tree(3).is_path());
    CHECK(star_tree(3).is_star());
    CHECK(star_tree(3).star_center() == 0);
    CHECK(path_tree(1).is_star());
    CHECK(path_tree(2).is_star());  // a 2-edge path is a star with center 1
    CHECK(!testutil::demo_instance().tree().is_star());
}

TEST_CASE("path queries agree with pairwise masks") {
    Tree tree = testutil::demo_instance().tree();
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        std::uint64_t mask = 0;
        for (int e : tree.path_edge_indices(u, v)) mask |= std::uint64_t{1} << e;
        CHECK(tree.path_mask(p) == mask);
        CHECK(static_cast<int>(tree.path_edge_indices(u, v).size()) == tree.dist(u, v));
    }
}
