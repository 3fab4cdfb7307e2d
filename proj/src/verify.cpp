#include "treepart/verify.hpp"

#include <algorithm>
#include <set>

#include "treepart/generator.hpp"
#include "treepart/oracle.hpp"

namespace treepart {

namespace {

// Rank of a rational matrix by Gaussian elimination, exact.
int matrix_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = 1 / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

Tree path_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n + 1, std::move(edges));
}

}  // namespace

FacetReport facet_check(const Tree& tree, const SystemRow& row, int max_edges) {
    if (tree.edge_count() > max_edges) throw SizeError("facet check capped at " + std::to_string(max_edges) + " edges");
    FacetReport report;
    report.row = row;
    report.valid = true;

    std::vector<std::vector<Rational>> tight;
    for (const LiftedLabeling& vertex : enumerate_lifted(tree)) {
        std::vector<Rational> point = to_rational_point(vertex);
        Rational gap = row.activity(point) - row.rhs;
        if (gap > 0) report.valid = false;
        if (gap == 0) tight.push_back(std::move(point));
    }
    report.tight_vertex_count = static_cast<int>(tight.size());
    if (tight.empty()) {
        report.face_dimension = -1;
    } else {
        std::vector<std::vector<Rational>> diffs;
        for (std::size_t i = 1; i < tight.size(); ++i) {
            std::vector<Rational> d(tight[i].size());
            for (std::size_t j = 0; j < d.size(); ++j) d[j] = tight[i][j] - tight[0][j];
            diffs.push_back(std::move(d));
        }
        report.face_dimension = matrix_rank(std::move(diffs));
    }
    report.is_facet = report.valid && report.face_dimension == tree.pair_count() - 1;
    return report;
}

FacetClassification classify_trivial_facets(const Tree& tree) {
    if (tree.node_count() < 3) throw InputError("facet classification needs at least three nodes");
    if (tree.edge_count() > 10) throw SizeError("facet classification capped at 10 edges");

    struct Candidate {
        SystemRow row;
        bool predicted;
    };
    std::vector<Candidate> candidates;

    auto is_leaf = [&](int v) { return tree.degree(v) == 1; };

    // naive path rows: facet iff the pair is at distance two
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        const int d = tree.dist(u, v);
        if (d < 2) continue;
        SystemRow row;
        row.coeffs.emplace_back(p, Rational(1));
        for (int e : tree.path_edge_indices(u, v)) {
            auto [a, b] = tree.edges()[e];
            row.coeffs.emplace_back(tree.pair_index(a, b), Rational(-1));
        }
        row.family = RowFamily::path;
        row.label = "path(" + std::to_string(u) + "," + std::to_string(v) + ")";
        candidates.push_back({std::move(row), d == 2});
    }
    // naive cut rows: facet iff distance two and the pair endpoint inside the
    // edge is a leaf (then the row is a canonical cut row)
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        const int d = tree.dist(u, v);
        if (d < 2) continue;
        for (int e : tree.path_edge_indices(u, v)) {
            auto [a, b] = tree.edges()[e];
            SystemRow row;
            row.coeffs.emplace_back(tree.pair_index(a, b), Rational(1));
            row.coeffs.emplace_back(p, Rational(-1));
            row.family = RowFamily::cut;
            row.label = "cut(" + std::to_string(u) + "," + std::to_string(v) + ";" + std::to_string(a) + "-" +
                        std::to_string(b) + ")";
            bool predicted = false;
            if (d == 2) {
                const int endpoint = (a == u || b == u) ? u : v;
                predicted = is_leaf(endpoint);
            }
            candidates.push_back({std::move(row), predicted});
        }
    }
    // canonical triplet rows over ordered pairs
    std::set<std::string> seen;
    auto key_of = [](const SystemRow& row) {
        std::string key;
        for (const auto& [var, coeff] : row.coeffs) key += std::to_string(var) + ":" + to_string(coeff) + ";";
        return key;
    };
    for (int u = 0; u < tree.node_count(); ++u) {
        for (int v = 0; v < tree.node_count(); ++v) {
            if (u == v || tree.dist(u, v) < 2) continue;
            const int w = tree.first_step(u, v);
            SystemRow tri;
            tri.coeffs.emplace_back(tree.pair_index(u, v), Rational(1));
            tri.coeffs.emplace_back(tree.pair_index(u, w), Rational(-1));
            tri.coeffs.emplace_back(tree.pair_index(w, v), Rational(-1));
            std::sort(tri.coeffs.begin(), tri.coeffs.end());
            tri.family = RowFamily::canonical_path;
            tri.label = "cpath(" + std::to_string(u) + "," + std::to_string(v) + ")";
            if (seen.insert(key_of(tri)).second)
                candidates.push_back({std::move(tri), tree.dist(u, v) == 2});

            SystemRow cut;
            cut.coeffs.emplace_back(tree.pair_index(w, v), Rational(1));
            cut.coeffs.emplace_back(tree.pair_index(u, v), Rational(-1));
            std::sort(cut.coeffs.begin(), cut.coeffs.end());
            cut.family = RowFamily::canonical_cut;
            cut.label = "ccut(" + std::to_string(u) + "," + std::to_string(v) + ")";
            if (seen.insert(key_of(cut)).second) candidates.push_back({std::move(cut), is_leaf(v)});
        }
    }
    // boxes
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        SystemRow upper;
        upper.coeffs.emplace_back(p, Rational(1));
        upper.rhs = 1;
        upper.family = RowFamily::box;
        upper.label = "box_up(" + std::to_string(u) + "," + std::to_string(v) + ")";
        candidates.push_back({std::move(upper), is_leaf(u) && is_leaf(v)});

        SystemRow lower;
        lower.coeffs.emplace_back(p, Rational(-1));
        lower.rhs = 0;
        lower.family = RowFamily::box;
        lower.label = "box_lo(" + std::to_string(u) + "," + std::to_string(v) + ")";
        candidates.push_back({std::move(lower), false});
    }
    // squares are always facets
    for (SystemRow& row : square_system(tree).rows) candidates.push_back({std::move(row), true});

    FacetClassification result;
    for (Candidate& cand : candidates) {
        FacetReport report = facet_check(tree, cand.row);
        FacetClassEntry entry;
        entry.family = family_name(cand.row.family);
        entry.label = cand.row.label;
        entry.predicted = cand.predicted;
        entry.observed = report.is_facet;
        entry.agree = entry.predicted == entry.observed;
        if (!entry.agree) result.all_agree = false;
        result.entries.push_back(std::move(entry));
    }
    return result;
}

TriangleExampleReport verify_triangle_examples() {
    TriangleExampleReport report;

    Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
    SystemRow row;
    row.coeffs = {{star.pair_index(0, 1), Rational(1)},
                  {star.pair_index(2, 3), Rational(1)},
                  {star.pair_index(1, 2), Rational(-1)},
                  {star.pair_index(1, 3), Rational(-1)}};
    row.label = "star: x01+x23 <= x12+x13";
    FacetReport star_report = facet_check(star, row);
    report.star_valid = star_report.valid;
    report.star_facet = star_report.is_facet;

    SystemRow reversed;
    reversed.coeffs = {{star.pair_index(1, 2), Rational(1)},
                       {star.pair_index(1, 3), Rational(1)},
                       {star.pair_index(0, 1), Rational(-1)},
                       {star.pair_index(2, 3), Rational(-1)}};
    reversed.label = "star reversed";
    report.star_reversed_invalid = !facet_check(star, reversed).valid;

    Tree tree(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}, {2, 6}});
    SystemRow cubic;
    cubic.coeffs = {{tree.pair_index(0, 2), Rational(1)},
                    {tree.pair_index(5, 6), Rational(1)},
                    {tree.pair_index(0, 5), Rational(-1)},
                    {tree.pair_index(0, 6), Rational(-1)}};
    cubic.label = "tree: x02+x56 <= x05+x06";
    report.tree_valid = facet_check(tree, cubic).valid;
    return report;
}

bool verify_path_integrality(int n, int trials, std::uint64_t seed) {
    if (n < 2 || n > 6) throw InputError("path integrality check supports 2 <= n <= 6");
    Tree tree = path_tree(n);
    InequalitySystem system = theta_path_system(n);
    std::vector<LiftedLabeling> vertices = enumerate_lifted(tree);
    std::mt19937_64 rng(seed);

    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> c(tree.pair_count());
        for (auto& entry : c) entry = Rational(uniform_int(rng, -10, 10));
        LinearProgram lp = to_linear_program(system, Sense::maximize, c);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::optimal) return false;

        std::vector<std::uint8_t> bits(tree.pair_count());
        for (int p = 0; p < tree.pair_count(); ++p) {
            if (sol.x[p] != 0 && sol.x[p] != 1) return false;
            bits[p] = sol.x[p] == 1 ? 1 : 0;
        }
        if (!check_membership(tree, LiftedLabeling(std::move(bits)))) return false;

        bool first = true;
        Rational best;
        for (const LiftedLabeling& vertex : vertices) {
            Rational value = 0;
            for (int p = 0; p < tree.pair_count(); ++p)
                if (vertex.x[p]) value += c[p];
            if (first || value > best) {
                best = value;
                first = false;
            }
        }
        if (sol.objective != best) return false;
    }
    return true;
}

std::optional<std::vector<Rational>> find_fractional_theta0_vertex(int n, int trials, std::uint64_t seed) {
    Tree tree = path_tree(n);
    InequalitySystem system = theta0_system(tree);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> c(tree.pair_count());
        for (auto& entry : c) entry = Rational(uniform_int(rng, -10, 10));
        LinearProgram lp = to_linear_program(system, Sense::maximize, c);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::optimal) continue;
        for (const Rational& value : sol.x)
            if (value != 0 && value != 1) return sol.x;
    }
    return std::nullopt;
}

std::vector<Rational> random_extended_objective(int n, std::mt19937_64& rng, long lo, long hi) {
    ExtendedPathSystem ext = extended_path_system(n);
    std::vector<Rational> c(ext.num_vars);
    for (auto& entry : c) entry = Rational(uniform_int(rng, lo, hi));
    return c;
}

TdiWitness tdi_witness(int n, const std::vector<Rational>& objective) {
    ExtendedPathSystem ext = extended_path_system(n);
    if (static_cast<int>(objective.size()) != ext.num_vars)
        throw InputError("objective length does not match the extended variable space");

    TdiWitness witness;
    witness.n = n;

    // primal over the full extended system
    LinearProgram primal(ext.num_vars, Sense::maximize);
    primal.set_objective(objective);
    for (const SystemRow& row : ext.inequalities.rows) primal.add_row(row.coeffs, row.rel, row.rhs, row.label);
    for (const SystemRow& row : ext.equalities.rows) primal.add_row(row.coeffs, row.rel, row.rhs, row.label);
    LpSolution primal_sol = solve(primal);
    if (primal_sol.status != LpStatus::optimal) throw InternalError("extended primal must be solvable");
    witness.primal_value = primal_sol.objective;

    // interval sums D(i,l) of objective entries on pairs and diagonals inside
    // positions i..l
    std::vector<std::vector<Rational>> D(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 0; i <= n; ++i) {
        for (int l = i; l <= n; ++l) {
            Rational sum = i == l ? Rational(0) : D[i][l - 1];
            for (int j = i; j <= l; ++j) sum += objective[ext.var_pair(j, l)];
            D[i][l] = sum;
        }
    }

    // reduced dual over the equality duals z (one per equality row, in the
    // equality system's row order: diagonals, left pins, right pins, ends)
    const int diag0 = 0, left0 = n + 1, right0 = 2 * (n + 1), ends = 3 * (n + 1);
    LinearProgram dual(3 * (n + 1) + 1, Sense::minimize);
    for (int i = 0; i <= n; ++i) {
        dual.set_objective_coeff(left0 + i, 1);
        dual.set_objective_coeff(right0 + i, 1);
    }
    dual.set_objective_coeff(ends, 1);
    // interval rows: sum of diagonal duals inside i..l bounded by D(i,l)
    for (int i = 0; i <= n; ++i)
        for (int l = i; l <= n; ++l) {
            std::vector<std::pair<int, Rational>> coeffs;
            for (int k = i; k <= l; ++k) coeffs.emplace_back(diag0 + k, Rational(1));
            dual.add_row(std::move(coeffs), Relation::less_equal, D[i][l],
                         "iv(" + std::to_string(i) + "," + std::to_string(l) + ")");
        }
    for (int i = 0; i <= n; ++i) {
        Rational rhs = objective[ext.var_left(i)];
        for (int j = 0; j <= i; ++j) rhs += objective[ext.var_pair(j, i)];
        dual.add_row({{left0 + i, Rational(1)}, {diag0 + i, Rational(1)}}, Relation::equal, rhs,
                     "zl(" + std::to_string(i) + ")");
    }
    for (int i = 0; i <= n; ++i) {
        Rational rhs = objective[ext.var_right(i)];
        for (int k = i; k <= n; ++k) rhs += objective[ext.var_pair(i, k)];
        dual.add_row({{right0 + i, Rational(1)}, {diag0 + i, Rational(1)}}, Relation::equal, rhs,
                     "zr(" + std::to_string(i) + ")");
    }
    {
        std::vector<std::pair<int, Rational>> coeffs{{ends, Rational(1)}};
        for (int k = 0; k <= n; ++k) coeffs.emplace_back(diag0 + k, Rational(-1));
        dual.add_row(std::move(coeffs), Relation::equal, objective[ext.var_ends()] - D[0][n], "ze");
    }
    LpSolution dual_sol = solve(dual);
    if (dual_sol.status != LpStatus::optimal) throw InternalError("reduced dual must be solvable");

    // back-substitution: the dual of template row (j,k) is
    // D(j+1,k-1) - sum of diagonal duals over positions j+1..k-1
    witness.z = dual_sol.x;
    witness.y.reserve(ext.inequalities.rows.size());
    for (int j = -1; j <= n - 1; ++j) {
        for (int k = j + 2; k <= n + 1; ++k) {
            Rational value = D[j + 1][k - 1];
            for (int t = j + 1; t <= k - 1; ++t) value -= witness.z[diag0 + t];
            witness.y.push_back(value);
        }
    }

    witness.y_nonnegative = std::all_of(witness.y.begin(), witness.y.end(),
                                        [](const Rational& v) { return v >= 0; });
    witness.integral =
        std::all_of(witness.y.begin(), witness.y.end(), [](const Rational& v) { return is_integer(v); }) &&
        std::all_of(witness.z.begin(), witness.z.end(), [](const Rational& v) { return is_integer(v); });

    // full dual feasibility: transpose(A) y + transpose(B) z = c, columnwise
    std::vector<Rational> lhs(ext.num_vars, Rational(0));
    for (std::size_t r = 0; r < ext.inequalities.rows.size(); ++r)
        for (const auto& [var, coeff] : ext.inequalities.rows[r].coeffs) lhs[var] += coeff * witness.y[r];
    for (std::size_t r = 0; r < ext.equalities.rows.size(); ++r)
        for (const auto& [var, coeff] : ext.equalities.rows[r].coeffs) lhs[var] += coeff * witness.z[r];
    witness.dual_feasible = true;
    for (int j = 0; j < ext.num_vars; ++j)
        if (lhs[j] != objective[j]) witness.dual_feasible = false;

    // zero gap: rhs of template rows is zero, so the dual objective is the
    // pinned equality rhs values against z
    Rational dual_value = 0;
    for (std::size_t r = 0; r < ext.equalities.rows.size(); ++r)
        dual_value += ext.equalities.rows[r].rhs * witness.z[r];
    witness.duality_gap_zero = dual_value == witness.primal_value;
    return witness;
}

namespace {

long long int_det_bareiss(std::vector<std::vector<long long>> m) {
    const int k = static_cast<int>(m.size());
    long long prev = 1;
    int sign = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[k - 1][k - 1];
}

}  // namespace

NonTuWitness verify_non_tu(int n) {
    InequalitySystem system = theta_path_system(n);
    const int rows = static_cast<int>(system.rows.size());
    const int cols = system.num_vars;
    std::vector<std::vector<long long>> matrix(rows, std::vector<long long>(cols, 0));
    for (int r = 0; r < rows; ++r)
        for (const auto& [var, coeff] : system.rows[r].coeffs)
            matrix[r][var] = coeff.get_num().get_si();

    NonTuWitness witness;
    const int max_order = std::min(rows, cols);
    std::vector<int> row_pick, col_pick;

    // enumerate k-subsets in lexicographic order
    auto next_subset = [](std::vector<int>& subset, int limit) {
        int k = static_cast<int>(subset.size());
        int i = k - 1;
        while (i >= 0 && subset[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        return true;
    };

    for (int k = 2; k <= max_order; ++k) {
        row_pick.resize(k);
        for (int i = 0; i < k; ++i) row_pick[i] = i;
        do {
            // columns must hit every chosen row to allow a nonzero determinant
            col_pick.assign(k, 0);
            for (int i = 0; i < k; ++i) col_pick[i] = i;
            do {
                std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
                bool zero_line = false;
                for (int i = 0; i < k && !zero_line; ++i) {
                    bool nonzero = false;
                    for (int j = 0; j < k; ++j) {
                        sub[i][j] = matrix[row_pick[i]][col_pick[j]];
                        if (sub[i][j] != 0) nonzero = true;
                    }
                    if (!nonzero) zero_line = true;
                }
                if (zero_line) continue;
                long long det = int_det_bareiss(sub);
                if (det >= 2 || det <= -2) {
                    witness.found = true;
                    witness.rows = row_pick;
                    witness.cols = col_pick;
                    witness.det = det;
                    return witness;
                }
            } while (next_subset(col_pick, cols));
        } while (next_subset(row_pick, rows));
    }
    return witness;
}

InclusionReport verify_inclusion(const Tree& tree, const InequalitySystem& inner,
                                 const InequalitySystem& outer) {
    InclusionReport report;
    report.holds = true;

    for (const SystemRow& row : outer.rows) {
        // maximize the row's violation over the inner system
        std::vector<Rational> c(inner.num_vars, Rational(0));
        for (const auto& [var, coeff] : row.coeffs) c[var] += coeff;
        LinearProgram lp = to_linear_program(inner, Sense::maximize, c);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::optimal) throw InternalError("violation program must be bounded");
        Rational violation = sol.objective - row.rhs;
        if (report.worst_label.empty() || violation > report.worst_violation) {
            report.worst_violation = violation;
            report.worst_label = row.label;
        }
        if (violation > 0) report.holds = false;
    }

    if (tree.edge_count() <= 12) {
        for (const LiftedLabeling& vertex : enumerate_lifted(tree)) {
            std::vector<Rational> point = to_rational_point(vertex);
            if (!inner.satisfied(point) || !outer.satisfied(point)) report.holds = false;
        }
    }
    return report;
}

StrictnessWitness theta0_strictness_witness() {
    Tree tree = path_tree(3);
    InequalitySystem theta0 = theta0_system(tree);
    InequalitySystem squares = square_system(tree);
    StrictnessWitness witness;
    for (const SystemRow& row : squares.rows) {
        std::vector<Rational> c(theta0.num_vars, Rational(0));
        for (const auto& [var, coeff] : row.coeffs) c[var] += coeff;
        LinearProgram lp = to_linear_program(theta0, Sense::maximize, c);
        LpSolution sol = solve(lp);
        Rational violation = sol.objective - row.rhs;
        if (violation > witness.violation) {
            witness.violation = violation;
            witness.point = sol.x;
            witness.row_label = row.label;
        }
    }
    return witness;
}

namespace {

// canonical rooted string: children strings sorted
std::string ahu_string(const Tree& tree, int root, int parent) {
    std::vector<std::string> children;
    for (int w : tree.neighbors(root))
        if (w != parent) children.push_back(ahu_string(tree, w, root));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const std::string& c : children) s += c;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const Tree& tree) {
    const int n = tree.node_count();
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : tree.neighbors(v))
                if (--degree[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    return layer;
}

std::string canonical_form(const Tree& tree) {
    std::string best;
    for (int center : tree_centers(tree)) {
        std::string s = ahu_string(tree, center, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

namespace {

// x solving the square system given by the row subset, or empty if singular.
std::vector<Rational> solve_square(const InequalitySystem& system, const std::vector<int>& pick) {
    const int m = system.num_vars;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (const auto& [var, coeff] : system.rows[pick[i]].coeffs) a[i][var] = coeff;
        a[i][m] = system.rows[pick[i]].rhs;
    }
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return {};
        std::swap(a[col], a[pivot]);
        const Rational inv = 1 / a[col][col];
        for (int c = col; c <= m; ++c) a[col][c] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (int c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<Rational> x(m);
    for (int i = 0; i < m; ++i) x[i] = a[i][m];
    return x;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_polytope_vertices(const InequalitySystem& system) {
    const int m = system.num_vars;
    const int rows = static_cast<int>(system.rows.size());
    if (rows < m) return {};
    if (m > 12) throw SizeError("vertex enumeration capped at 12 variables");

    std::vector<std::vector<Rational>> vertices;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        std::vector<Rational> x = solve_square(system, pick);
        if (!x.empty() && system.satisfied(x) &&
            std::find(vertices.begin(), vertices.end(), x) == vertices.end())
            vertices.push_back(std::move(x));

        int i = m - 1;
        while (i >= 0 && pick[i] == rows - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return vertices;
}

std::vector<Tree> trees_up_to_iso(int nodes) {
    if (nodes < 1) throw InputError("node count must be positive");
    if (nodes == 1) return {Tree(1, {})};
    if (nodes == 2) return {Tree(2, {{0, 1}})};
    if (nodes > 9) throw SizeError("isomorphism sweep capped at 9 nodes");

    std::vector<Tree> result;
    std::set<std::string> seen;
    std::vector<int> seq(nodes - 2, 0);
    while (true) {
        // decode the sequence exactly as the uniform generator does
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
        Tree tree(nodes, std::move(edges));
        if (seen.insert(canonical_form(tree)).second) result.push_back(std::move(tree));

        int i = nodes - 3;
        while (i >= 0 && seq[i] == nodes - 1) {
            seq[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return result;
}

}  // namespace treepart
