#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "treepart/generator.hpp"
#include "treepart/oracle.hpp"
#include "treepart/polytopes.hpp"
#include "treepart/verify.hpp"

using namespace treepart;
using testutil::demo_instance;
using testutil::path_tree;
using testutil::star_tree;

TEST_CASE("naive relaxation row counts") {
    InequalitySystem p2 = theta0_system(path_tree(2));
    CHECK(p2.count_family(RowFamily::path) == 1);
    CHECK(p2.count_family(RowFamily::cut) == 2);
    CHECK(p2.count_family(RowFamily::box) == 6);

    InequalitySystem p3 = theta0_system(path_tree(3));
    CHECK(p3.count_family(RowFamily::path) == 3);
    CHECK(p3.count_family(RowFamily::cut) == 7);

    InequalitySystem s3 = theta0_system(star_tree(3));
    CHECK(s3.count_family(RowFamily::path) == 3);
    CHECK(s3.count_family(RowFamily::cut) == 6);
}

TEST_CASE("canonical relaxation rows and dedup") {
    InequalitySystem p2 = theta1_system(path_tree(2));
    // exactly the triangle and the two cuts, plus boxes
    CHECK(p2.count_family(RowFamily::canonical_path) == 1);
    CHECK(p2.count_family(RowFamily::canonical_cut) == 2);

    InequalitySystem p3 = theta1_system(path_tree(3));
    CHECK(p3.count_family(RowFamily::canonical_path) == 4);  // 6 ordered pairs, 2 coincide
    CHECK(p3.count_family(RowFamily::canonical_cut) == 6);
}

TEST_CASE("canonical rows hold on every lifted vector") {
    for (int nodes = 3; nodes <= 7; ++nodes) {
        for (const Tree& tree : trees_up_to_iso(nodes)) {
            InequalitySystem theta1 = theta1_system(tree);
            for (const LiftedLabeling& x : enumerate_lifted(tree))
                CHECK(theta1.satisfied(to_rational_point(x)));
        }
    }
}

TEST_CASE("square rows") {
    InequalitySystem p3 = square_system(path_tree(3));
    REQUIRE(p3.rows.size() == 1);
    // x03 + x12 <= x02 + x13
    const SystemRow& row = p3.rows[0];
    auto coeff = [&](int u, int v) {
        for (const auto& [var, c] : row.coeffs)
            if (var == pair_index_for(4, u, v)) return c;
        return Rational(0);
    };
    CHECK(coeff(0, 3) == 1);
    CHECK(coeff(1, 2) == 1);
    CHECK(coeff(0, 2) == -1);
    CHECK(coeff(1, 3) == -1);

    CHECK(square_system(path_tree(2)).rows.empty());

    // the 7-node example tree: nodes 4 and 5 are four apart
    Tree tree(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}, {2, 6}});
    InequalitySystem squares = square_system(tree);
    bool found = false;
    for (const SystemRow& row45 : squares.rows) {
        std::vector<int> vars;
        for (const auto& [var, c] : row45.coeffs) vars.push_back(var);
        std::vector<int> expected = {tree.pair_index(4, 5), tree.pair_index(3, 2), tree.pair_index(3, 5),
                                     tree.pair_index(2, 4)};
        std::sort(vars.begin(), vars.end());
        std::sort(expected.begin(), expected.end());
        if (vars == expected) found = true;
    }
    CHECK(found);
}

TEST_CASE("square rows hold on every lifted vector") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        Tree tree = random_tree(6 + static_cast<int>(bounded_draw(rng, 5)), rng);  // up to 10 edges
        InequalitySystem squares = square_system(tree);
        for (const LiftedLabeling& x : enumerate_lifted(tree))
            CHECK(squares.satisfied(to_rational_point(x)));
    }
}

TEST_CASE("ordered-path system row counts") {
    CHECK(theta_path_system(2).rows.size() == 4);
    CHECK(theta_path_system(3).rows.size() == 8);
    InequalitySystem p4 = theta_path_system(4);
    CHECK(p4.rows.size() == 13);
    CHECK(p4.count_family(RowFamily::square) == 3);
    CHECK_THROWS_AS(theta_path_system(1), InputError);
}

TEST_CASE("extended system shape") {
    ExtendedPathSystem ext = extended_path_system(2);
    CHECK(ext.num_vars == 3 + 3 * 3 + 1);  // pairs + diagonals/pins per node + end pair
    CHECK(ext.inequalities.rows.size() == 6);
    CHECK(ext.equalities.rows.size() == 10);

    // the end-to-end template row reduces to the box row under the pins
    ExtendedPathSystem ext4 = extended_path_system(4);
    bool found = false;
    for (const SystemRow& row : ext4.inequalities.rows) {
        if (row.label != "ext(L,R)") continue;
        found = true;
        auto coeff = [&](int var) {
            for (const auto& [v, c] : row.coeffs)
                if (v == var) return c;
            return Rational(0);
        };
        CHECK(coeff(ext4.var_ends()) == 1);
        CHECK(coeff(ext4.var_pair(0, 4)) == 1);
        CHECK(coeff(ext4.var_right(0)) == -1);
        CHECK(coeff(ext4.var_left(4)) == -1);
    }
    CHECK(found);
}

TEST_CASE("extended system projects onto the ordered-path system") {
    for (int n : {2, 3, 4}) {
        ExtendedPathSystem ext = extended_path_system(n);
        InequalitySystem plain = theta_path_system(n);
        Tree tree = path_tree(n);

        auto agree = [&](const std::vector<Rational>& x) {
            std::vector<Rational> full = ext.extend_point(x);
            const bool plain_ok = plain.satisfied(x);
            const bool ext_ok = ext.inequalities.satisfied(full) && ext.equalities.satisfied(full);
            CHECK(plain_ok == ext_ok);
        };

        for (const LiftedLabeling& vertex : enumerate_lifted(tree)) agree(to_rational_point(vertex));

        std::mt19937_64 rng(101 + n);
        for (int t = 0; t < 40; ++t) {
            std::vector<Rational> x(tree.pair_count());
            for (auto& value : x) value = make_rational(uniform_int(rng, -2, 6), 4);
            agree(x);
        }
    }
}

TEST_CASE("extended and plain systems describe the same region") {
    // two violation programs per direction: no plain row is violable over the
    // extended rows, and no substituted extended row is violable over the
    // plain rows
    for (int n : {2, 3, 4, 5}) {
        ExtendedPathSystem ext = extended_path_system(n);
        InequalitySystem plain = theta_path_system(n);
        const int m = pair_count_for(n + 1);

        InequalitySystem ext_all = ext.inequalities;
        for (const SystemRow& row : ext.equalities.rows) ext_all.add(row);
        for (const SystemRow& row : plain.rows) {
            std::vector<Rational> c(ext.num_vars, Rational(0));
            for (const auto& [var, coeff] : row.coeffs) c[var] += coeff;
            LpSolution sol = solve(to_linear_program(ext_all, Sense::maximize, c));
            REQUIRE(sol.status == LpStatus::optimal);
            CHECK(sol.objective <= row.rhs);
        }

        for (const SystemRow& row : ext.inequalities.rows) {
            // substitute the pinned values into the template row
            std::vector<Rational> c(m, Rational(0));
            Rational rhs = row.rhs;
            for (const auto& [var, coeff] : row.coeffs) {
                if (var < m) c[var] += coeff;
                else if (var >= ext.var_left(0)) rhs -= coeff;  // pinned to one
            }
            LpSolution sol = solve(to_linear_program(plain, Sense::maximize, c));
            REQUIRE(sol.status == LpStatus::optimal);
            CHECK(sol.objective <= rhs);
        }
    }
}

TEST_CASE("systems export through the lp text dump") {
    InequalitySystem sys = theta_path_system(3);
    LinearProgram lp =
        to_linear_program(sys, Sense::maximize, std::vector<Rational>(sys.num_vars, Rational(1)));
    std::ostringstream out;
    lp.write_lp_format(out);
    CHECK(out.str().rfind("Maximize", 0) == 0);
    CHECK(out.str().find("tri(1):") != std::string::npos);
    CHECK(out.str().find("sq(0,3):") != std::string::npos);
}

TEST_CASE("membership check") {
    Tree path = path_tree(2);
    CHECK(check_membership(path, LiftedLabeling({1, 1, 0})));
    CHECK(!check_membership(path, LiftedLabeling({0, 0, 1})));  // pair cut, path kept
    CHECK(!check_membership(path, LiftedLabeling({1, 0, 0})));  // edge cut, pair kept
    CHECK(!check_membership(path, LiftedLabeling({1, 1})));     // wrong length

    Tree tree = demo_instance().tree();
    for (const LiftedLabeling& x : enumerate_lifted(tree)) CHECK(check_membership(tree, x));
}

TEST_CASE("separation returns sorted violations") {
    Tree path = path_tree(2);
    InequalitySystem theta1 = theta1_system(path);
    // point violating the triangle by a full unit: x01 = x12 = 0, x02 = 1
    std::vector<Rational> x = {Rational(0), Rational(1), Rational(0)};
    auto violated = separate(x, theta1);
    REQUIRE(!violated.empty());
    CHECK(violated.front().row.family == RowFamily::canonical_path);
    CHECK(violated.front().violation == 1);

    // the symmetric half point satisfies every square row
    Tree p3 = path_tree(3);
    std::vector<Rational> half(p3.pair_count(), make_rational(1, 2));
    CHECK(separate(half, square_system(p3)).empty());
}

TEST_CASE("no family separates convex combinations of lifted vectors") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 10; ++t) {
        Tree tree = random_tree(4 + static_cast<int>(bounded_draw(rng, 5)), rng);
        std::vector<LiftedLabeling> vertices = enumerate_lifted(tree);
        // random rational convex combination of a handful of vertices
        std::vector<Rational> point(tree.pair_count(), Rational(0));
        Rational total = 0;
        for (int pick = 0; pick < 4; ++pick) {
            const LiftedLabeling& v = vertices[bounded_draw(rng, vertices.size())];
            Rational w = Rational(1 + uniform_int(rng, 0, 5));
            total += w;
            for (int p = 0; p < tree.pair_count(); ++p)
                if (v.x[p]) point[p] += w;
        }
        for (auto& value : point) value /= total;

        CHECK(separate(point, theta0_system(tree)).empty());
        CHECK(separate(point, theta1_system(tree)).empty());
        CHECK(separate(point, square_system(tree)).empty());
    }
}
