#pragma once

#include <string>
#include <vector>

#include "treepart/instance.hpp"
#include "treepart/lp.hpp"

namespace treepart {

/// Origin of a system row. `path`/`cut` are the naive relaxation rows over
/// whole tree paths, `canonical_*` the triplet rows through the first path
/// node, `square` the four-pair rows for distant pairs, and the remaining
/// tags belong to the ordered-path system and its extended form.
enum class RowFamily {
    path,
    cut,
    canonical_path,
    canonical_cut,
    square,
    box,
    path_cut_right,
    path_cut_left,
    triangle,
    extended,
    equality,
};

std::string family_name(RowFamily family);

struct SystemRow {
    std::vector<std::pair<int, Rational>> coeffs;  // sorted by variable index
    Relation rel = Relation::less_equal;
    Rational rhs = 0;
    RowFamily family = RowFamily::path;
    std::string label;

    Rational activity(const std::vector<Rational>& x) const;
    /// activity - rhs for <= rows, rhs - activity for >= rows, |gap| for = rows.
    Rational violation(const std::vector<Rational>& x) const;
};

/// Sparse rational inequality/equality system over pair-indexed variables.
struct InequalitySystem {
    int num_vars = 0;
    std::vector<SystemRow> rows;

    void add(SystemRow row);
    bool satisfied(const std::vector<Rational>& x) const;
    std::size_t count_family(RowFamily family) const;
};

/// Naive relaxation of the lifted feasible set: per pair at distance >= 2 one
/// path row x_uv <= sum of its path-edge variables and one cut row
/// x_e <= x_uv per path edge, plus 0 <= x <= 1 boxes.
InequalitySystem theta0_system(const Tree& tree);

/// Canonical triplet relaxation: for every ordered pair (u,v) at distance
/// >= 2 with w the first path node, x_uv <= x_uw + x_wv and x_wv <= x_uv,
/// deduplicated, plus boxes. At least as tight as theta0.
InequalitySystem theta1_system(const Tree& tree);

/// Square rows x_uv + x_{w1,w2} <= x_{u,w2} + x_{w1,v} for unordered pairs at
/// distance >= 3, where w1/w2 are the first path nodes seen from u and v.
InequalitySystem square_system(const Tree& tree);

/// The ordered-path system over nodes 0..n (n >= 2): one box row on the end
/// pair, cut chains to both ends, triangles on consecutive triplets and all
/// squares. Exactly the facet rows; integral with integral objectives.
InequalitySystem theta_path_system(int n);

/// The ordered-path system rewritten over an extended index set with two
/// artificial end nodes and diagonal variables, all pinned by equality rows.
/// Every inequality is a single square-shaped template row; projecting the
/// equalities away recovers theta_path_system plus redundant sign rows.
struct ExtendedPathSystem {
    int n = 0;
    int num_vars = 0;            // pair variables plus 3n + 4 artificial ones
    InequalitySystem inequalities;  // template rows, rhs 0
    InequalitySystem equalities;    // diagonal = 0, end-node pairs = 1

    /// Variable index of the pair {j,k} of extended nodes, j < k, where
    /// -1 stands for the left artificial node and n+1 for the right one.
    int var_pair(int j, int k) const;
    int var_diagonal(int i) const;  // x_ii
    int var_left(int i) const;      // pair (left end, i)
    int var_right(int i) const;     // pair (i, right end)
    int var_ends() const;           // pair (left end, right end)

    /// Canonical extension of a real-pair vector: artificial variables take
    /// their pinned values.
    std::vector<Rational> extend_point(const std::vector<Rational>& x) const;
};

ExtendedPathSystem extended_path_system(int n);

/// True iff x is binary and satisfies every naive-relaxation row;
/// equivalently, x encodes a decomposition.
bool check_membership(const Tree& tree, const LiftedLabeling& x);

struct SeparatedRow {
    SystemRow row;
    Rational violation;
};

/// All rows of the system violated at x, sorted by decreasing violation;
/// ties break by family order, then by the row's normalized form.
std::vector<SeparatedRow> separate(const std::vector<Rational>& x, const InequalitySystem& system);

/// Wrap a system as an LP with the given objective over its variables.
LinearProgram to_linear_program(const InequalitySystem& system, Sense sense,
                                const std::vector<Rational>& objective);

/// Convenience: rational point from a lifted 0/1 vector.
std::vector<Rational> to_rational_point(const LiftedLabeling& x);

}  // namespace treepart
