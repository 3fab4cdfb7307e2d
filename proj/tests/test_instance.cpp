#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "treepart/generator.hpp"
#include "treepart/instance.hpp"
#include "treepart/polytopes.hpp"

using namespace treepart;
using testutil::demo_instance;
using testutil::path_tree;
using testutil::star_tree;

TEST_CASE("objective value of the demo instance") {
    Instance inst = demo_instance();
    CHECK(evaluate_objective(inst, EdgeLabeling::all_ones(4)) == 0);
    CHECK(evaluate_objective(inst, EdgeLabeling::all_zeros(4)) == 0);

    // cutting only the 2-3 edge splits {0,1,2} from {3,4}
    EdgeLabeling cut23 = EdgeLabeling::all_ones(4);
    cut23.y[inst.tree().edge_index(2, 3)] = 0;
    CHECK(evaluate_objective(inst, cut23) == -3);
}

TEST_CASE("labeling length must match") {
    Instance inst = demo_instance();
    CHECK_THROWS_AS(evaluate_objective(inst, EdgeLabeling::all_ones(3)), InputError);
}

TEST_CASE("lifting basics") {
    Tree tree = demo_instance().tree();
    CHECK(labeling_to_lifted(tree, EdgeLabeling::all_ones(4)) ==
          LiftedLabeling(std::vector<std::uint8_t>(10, 0)));
    CHECK(labeling_to_lifted(tree, EdgeLabeling::all_zeros(4)) ==
          LiftedLabeling(std::vector<std::uint8_t>(10, 1)));

    EdgeLabeling cut23 = EdgeLabeling::all_ones(4);
    cut23.y[tree.edge_index(2, 3)] = 0;
    LiftedLabeling x = labeling_to_lifted(tree, cut23);
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        const bool split = (u <= 2) != (v <= 2);  // one endpoint in {0,1,2}, other in {3,4}
        CHECK(int(x.x[p]) == int(split));
    }
}

TEST_CASE("lifted vectors that encode nothing are rejected") {
    Tree path = path_tree(2);
    // order of pairs: (0,1), (0,2), (1,2)
    CHECK(lifted_to_labeling(path, LiftedLabeling({1, 1, 0})) == EdgeLabeling({0, 1}));
    CHECK(lifted_to_labeling(path, LiftedLabeling({0, 0, 0})) == EdgeLabeling({1, 1}));
    CHECK_THROWS_AS(lifted_to_labeling(path, LiftedLabeling({0, 1, 0})), EncodingError);
    CHECK_THROWS_AS(lifted_to_labeling(path, LiftedLabeling({1, 0, 0})), EncodingError);
}

TEST_CASE("round trip over every labeling of assorted shapes") {
    std::vector<Tree> shapes;
    shapes.push_back(path_tree(5));
    shapes.push_back(star_tree(5));
    shapes.push_back(demo_instance().tree());
    {
        std::mt19937_64 rng(42);
        shapes.push_back(random_tree(13, rng));  // 12 edges
    }
    for (const Tree& tree : shapes) {
        const std::uint64_t limit = std::uint64_t{1} << tree.edge_count();
        for (std::uint64_t code = 0; code < limit; ++code) {
            EdgeLabeling y = EdgeLabeling::from_code(tree.edge_count(), code);
            LiftedLabeling x = labeling_to_lifted(tree, y);
            CHECK(lifted_is_consistent(tree, x));
            CHECK(lifted_to_labeling(tree, x) == y);
        }
    }
}

TEST_CASE("lifted output always satisfies the relaxation rows") {
    Tree tree = demo_instance().tree();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        EdgeLabeling y = EdgeLabeling::from_code(4, bounded_draw(rng, 16));
        CHECK(check_membership(tree, labeling_to_lifted(tree, y)));
    }
}

TEST_CASE("linearization identity on random instances and labelings") {
    std::mt19937_64 rng(11);
    for (auto kind : {TreeKind::path, TreeKind::star, TreeKind::random_tree}) {
        for (int t = 0; t < 100; ++t) {
            int nodes = 2 + static_cast<int>(bounded_draw(rng, 8));
            Instance inst = generate_instance(kind, nodes, rng(), -10, 10);
            const Tree& tree = inst.tree();
            EdgeLabeling y = EdgeLabeling::from_code(
                tree.edge_count(), bounded_draw(rng, std::uint64_t{1} << tree.edge_count()));
            LiftedLabeling x = labeling_to_lifted(tree, y);
            Rational rhs = inst.total_cost();
            for (const auto& [idx, c] : inst.costs())
                if (x.x[idx]) rhs -= c;
            CHECK(evaluate_objective(inst, y) == rhs);
        }
    }
}

TEST_CASE("partition from labeling") {
    Instance inst = demo_instance();
    EdgeLabeling cut23 = EdgeLabeling::all_ones(4);
    cut23.y[inst.tree().edge_index(2, 3)] = 0;
    Partition part = partition_from_labeling(inst.tree(), cut23);
    CHECK(part.components == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});

    CHECK(partition_from_labeling(inst.tree(), EdgeLabeling::all_ones(4)).components.size() == 1);
    CHECK(partition_from_labeling(inst.tree(), EdgeLabeling::all_zeros(4)).components.size() == 5);

    CHECK(labeling_from_partition(inst.tree(), part) == cut23);
}

TEST_CASE("pbf view is tree sparse with one term per costed pair") {
    Instance inst = demo_instance();
    PbfCoefficients pbf = pbf_view(inst);
    CHECK(pbf.terms.size() == 10);
    for (const auto& [edges, coeff] : pbf.terms) {
        CHECK(coeff != 0);
        CHECK(edge_set_is_path(inst.tree(), edges));
    }

    // direct translation on a tiny path
    Instance tiny(path_tree(2), {{0, 2, Rational(5)}});
    PbfCoefficients small = pbf_view(tiny);
    REQUIRE(small.terms.size() == 1);
    CHECK(small.terms.begin()->first == std::vector<int>{0, 1});
    CHECK(small.terms.begin()->second == 5);

    Instance empty(path_tree(3));
    CHECK(pbf_view(empty).terms.empty());
}

TEST_CASE("pbf evaluation agrees with the objective everywhere") {
    Instance inst = demo_instance();
    PbfCoefficients pbf = pbf_view(inst);
    for (std::uint64_t code = 0; code < 16; ++code) {
        EdgeLabeling y = EdgeLabeling::from_code(4, code);
        CHECK(pbf.evaluate(y) == evaluate_objective(inst, y));
    }
}

TEST_CASE("star instances reduce to quadratic polynomials") {
    Tree star = star_tree(3);
    std::vector<std::tuple<int, int, Rational>> unit;
    for (int p = 0; p < star.pair_count(); ++p) {
        auto [u, v] = star.pair_nodes(p);
        unit.emplace_back(u, v, Rational(1));
    }
    Instance inst(star, unit);
    PbfCoefficients quad = star_to_quadratic(inst);
    CHECK(quad.degree() == 2);
    // y1+y2+y3 + y1y2+y1y3+y2y3 with edge i joining the center to leaf i+1
    CHECK(quad.terms.size() == 6);
    CHECK(quad.terms.at({0}) == 1);
    CHECK(quad.terms.at({0, 1}) == 1);

    // zero leaf-leaf costs leave a purely linear polynomial
    Instance linear(star, {{0, 1, Rational(2)}, {0, 2, Rational(-7)}});
    CHECK(star_to_quadratic(linear).degree() == 1);

    CHECK_THROWS_AS(star_to_quadratic(demo_instance()), InputError);
}

TEST_CASE("star quadratic matches the objective exhaustively") {
    Instance inst = generate_instance(TreeKind::star, 6, 99, -10, 10);  // 5 edges
    PbfCoefficients quad = star_to_quadratic(inst);
    for (std::uint64_t code = 0; code < 32; ++code) {
        EdgeLabeling y = EdgeLabeling::from_code(5, code);
        CHECK(quad.evaluate(y) == evaluate_objective(inst, y));
    }
}

TEST_CASE("instance json round trip") {
    Instance inst = demo_instance();
    std::string text = save_instance(inst);
    Instance back = load_instance(text);
    CHECK(back.tree().node_count() == 5);
    CHECK(back.tree().edges() == inst.tree().edges());
    CHECK(back.costs() == inst.costs());
    CHECK(save_instance(back) == text);  // byte identical
}

TEST_CASE("json parsing errors are specific") {
    CHECK_THROWS_WITH_AS(load_instance("{"), doctest::Contains("malformed JSON"), InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":3,"edges":[[0,1],[1,2],[0,2]],"costs":[]})"),
                         doctest::Contains("needs exactly"), InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":4,"edges":[[0,1],[1,2],[0,2]],"costs":[]})"),
                         doctest::Contains("not a tree"), InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":2,"edges":[[0,5]],"costs":[]})"),
                         doctest::Contains("out of range"), InputError);
    CHECK_THROWS_WITH_AS(
        load_instance(R"({"nodes":2,"edges":[[0,1]],"costs":[{"u":0,"v":1,"c":1},{"u":1,"v":0,"c":2}]})"),
        doctest::Contains("duplicate cost"), InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":2,"edges":[[0,1]],"costs":[{"u":0,"v":1,"c":"1/0"}]})"),
                         doctest::Contains("zero denominator"), InputError);
}

TEST_CASE("rational cost strings parse exactly") {
    Instance inst = load_instance(R"({"nodes":2,"edges":[[0,1]],"costs":[{"u":0,"v":1,"c":"3/2"}]})");
    CHECK(inst.cost(0, 1) == make_rational(3, 2));
    // non-integer survives the round trip as a string
    Instance back = load_instance(save_instance(inst));
    CHECK(back.cost(0, 1) == make_rational(3, 2));
    CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
    CHECK_THROWS_AS(rational_from_string("1.5"), InputError);
    CHECK_THROWS_AS(rational_from_string(""), InputError);
}
