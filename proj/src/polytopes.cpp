#include "treepart/polytopes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace treepart {

std::string family_name(RowFamily family) {
    switch (family) {
        case RowFamily::path: return "path";
        case RowFamily::cut: return "cut";
        case RowFamily::canonical_path: return "canonical-path";
        case RowFamily::canonical_cut: return "canonical-cut";
        case RowFamily::square: return "square";
        case RowFamily::box: return "box";
        case RowFamily::path_cut_right: return "path-cut-right";
        case RowFamily::path_cut_left: return "path-cut-left";
        case RowFamily::triangle: return "triangle";
        case RowFamily::extended: return "extended";
        case RowFamily::equality: return "equality";
    }
    return "?";
}

Rational SystemRow::activity(const std::vector<Rational>& x) const {
    Rational a = 0;
    for (const auto& [var, coeff] : coeffs) a += coeff * x[var];
    return a;
}

Rational SystemRow::violation(const std::vector<Rational>& x) const {
    Rational a = activity(x);
    switch (rel) {
        case Relation::less_equal: return a - rhs;
        case Relation::greater_equal: return rhs - a;
        case Relation::equal: return abs(a - rhs);
    }
    return 0;
}

void InequalitySystem::add(SystemRow row) {
    std::sort(row.coeffs.begin(), row.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
}

bool InequalitySystem::satisfied(const std::vector<Rational>& x) const {
    for (const SystemRow& row : rows)
        if (row.violation(x) > 0) return false;
    return true;
}

std::size_t InequalitySystem::count_family(RowFamily family) const {
    std::size_t n = 0;
    for (const SystemRow& row : rows)
        if (row.family == family) ++n;
    return n;
}

namespace {

std::string pair_label(const Tree& tree, int idx) {
    auto [u, v] = tree.pair_nodes(idx);
    return std::to_string(u) + "," + std::to_string(v);
}

void add_boxes(InequalitySystem& system, const Tree& tree) {
    for (int p = 0; p < tree.pair_count(); ++p) {
        SystemRow upper;
        upper.coeffs = {{p, Rational(1)}};
        upper.rhs = 1;
        upper.family = RowFamily::box;
        upper.label = "box_up(" + pair_label(tree, p) + ")";
        system.add(std::move(upper));
    }
    for (int p = 0; p < tree.pair_count(); ++p) {
        SystemRow lower;
        lower.coeffs = {{p, Rational(-1)}};
        lower.rhs = 0;
        lower.family = RowFamily::box;
        lower.label = "box_lo(" + pair_label(tree, p) + ")";
        system.add(std::move(lower));
    }
}

std::string row_key(const SystemRow& row) {
    std::ostringstream key;
    for (const auto& [var, coeff] : row.coeffs)
        if (coeff != 0) key << var << ":" << to_string(coeff) << ";";
    key << static_cast<int>(row.rel) << "|" << to_string(row.rhs);
    return key.str();
}

}  // namespace

InequalitySystem theta0_system(const Tree& tree) {
    InequalitySystem system;
    system.num_vars = tree.pair_count();
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        if (tree.dist(u, v) < 2) continue;
        SystemRow row;
        row.coeffs.emplace_back(p, Rational(1));
        for (int e : tree.path_edge_indices(u, v)) {
            auto [a, b] = tree.edges()[e];
            row.coeffs.emplace_back(tree.pair_index(a, b), Rational(-1));
        }
        row.rhs = 0;
        row.family = RowFamily::path;
        row.label = "path(" + pair_label(tree, p) + ")";
        system.add(std::move(row));
    }
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        if (tree.dist(u, v) < 2) continue;
        for (int e : tree.path_edge_indices(u, v)) {
            auto [a, b] = tree.edges()[e];
            SystemRow row;
            row.coeffs.emplace_back(tree.pair_index(a, b), Rational(1));
            row.coeffs.emplace_back(p, Rational(-1));
            row.rhs = 0;
            row.family = RowFamily::cut;
            row.label = "cut(" + pair_label(tree, p) + ";" + std::to_string(a) + "-" + std::to_string(b) + ")";
            system.add(std::move(row));
        }
    }
    add_boxes(system, tree);
    return system;
}

InequalitySystem theta1_system(const Tree& tree) {
    InequalitySystem system;
    system.num_vars = tree.pair_count();
    std::set<std::string> seen;
    // both orderings of each pair; the first path node differs per direction
    for (int u = 0; u < tree.node_count(); ++u) {
        for (int v = 0; v < tree.node_count(); ++v) {
            if (u == v || tree.dist(u, v) < 2) continue;
            const int w = tree.first_step(u, v);
            SystemRow tri;
            tri.coeffs.emplace_back(tree.pair_index(u, v), Rational(1));
            tri.coeffs.emplace_back(tree.pair_index(u, w), Rational(-1));
            tri.coeffs.emplace_back(tree.pair_index(w, v), Rational(-1));
            tri.rhs = 0;
            tri.family = RowFamily::canonical_path;
            tri.label = "cpath(" + std::to_string(u) + "," + std::to_string(v) + ")";
            std::sort(tri.coeffs.begin(), tri.coeffs.end());
            if (seen.insert(row_key(tri)).second) system.add(std::move(tri));

            SystemRow cut;
            cut.coeffs.emplace_back(tree.pair_index(w, v), Rational(1));
            cut.coeffs.emplace_back(tree.pair_index(u, v), Rational(-1));
            cut.rhs = 0;
            cut.family = RowFamily::canonical_cut;
            cut.label = "ccut(" + std::to_string(u) + "," + std::to_string(v) + ")";
            std::sort(cut.coeffs.begin(), cut.coeffs.end());
            if (seen.insert(row_key(cut)).second) system.add(std::move(cut));
        }
    }
    add_boxes(system, tree);
    return system;
}

InequalitySystem square_system(const Tree& tree) {
    InequalitySystem system;
    system.num_vars = tree.pair_count();
    for (int p = 0; p < tree.pair_count(); ++p) {
        auto [u, v] = tree.pair_nodes(p);
        if (tree.dist(u, v) < 3) continue;
        const int w1 = tree.first_step(u, v);
        const int w2 = tree.first_step(v, u);
        SystemRow row;
        row.coeffs.emplace_back(tree.pair_index(u, v), Rational(1));
        row.coeffs.emplace_back(tree.pair_index(w1, w2), Rational(1));
        row.coeffs.emplace_back(tree.pair_index(u, w2), Rational(-1));
        row.coeffs.emplace_back(tree.pair_index(w1, v), Rational(-1));
        row.rhs = 0;
        row.family = RowFamily::square;
        row.label = "square(" + pair_label(tree, p) + ")";
        system.add(std::move(row));
    }
    return system;
}

InequalitySystem theta_path_system(int n) {
    if (n < 2) throw InputError("ordered-path system needs n >= 2");
    const int nodes = n + 1;
    InequalitySystem system;
    system.num_vars = pair_count_for(nodes);
    auto pidx = [&](int a, int b) { return pair_index_for(nodes, a, b); };

    SystemRow box;
    box.coeffs = {{pidx(0, n), Rational(1)}};
    box.rhs = 1;
    box.family = RowFamily::box;
    box.label = "box(0," + std::to_string(n) + ")";
    system.add(std::move(box));

    for (int i = 1; i <= n - 1; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(pidx(i, n), Rational(1));
        row.coeffs.emplace_back(pidx(i - 1, n), Rational(-1));
        row.rhs = 0;
        row.family = RowFamily::path_cut_right;
        row.label = "rcut(" + std::to_string(i) + ")";
        system.add(std::move(row));
    }
    for (int i = 1; i <= n - 1; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(pidx(0, i), Rational(1));
        row.coeffs.emplace_back(pidx(0, i + 1), Rational(-1));
        row.rhs = 0;
        row.family = RowFamily::path_cut_left;
        row.label = "lcut(" + std::to_string(i) + ")";
        system.add(std::move(row));
    }
    for (int i = 1; i <= n - 1; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(pidx(i - 1, i + 1), Rational(1));
        row.coeffs.emplace_back(pidx(i - 1, i), Rational(-1));
        row.coeffs.emplace_back(pidx(i, i + 1), Rational(-1));
        row.rhs = 0;
        row.family = RowFamily::triangle;
        row.label = "tri(" + std::to_string(i) + ")";
        system.add(std::move(row));
    }
    for (int j = 0; j <= n; ++j) {
        for (int k = j + 3; k <= n; ++k) {
            SystemRow row;
            row.coeffs.emplace_back(pidx(j, k), Rational(1));
            row.coeffs.emplace_back(pidx(j + 1, k - 1), Rational(1));
            row.coeffs.emplace_back(pidx(j + 1, k), Rational(-1));
            row.coeffs.emplace_back(pidx(j, k - 1), Rational(-1));
            row.rhs = 0;
            row.family = RowFamily::square;
            row.label = "sq(" + std::to_string(j) + "," + std::to_string(k) + ")";
            system.add(std::move(row));
        }
    }
    return system;
}

int ExtendedPathSystem::var_pair(int j, int k) const {
    if (j > k) std::swap(j, k);
    if (j == k) return var_diagonal(j);
    if (j == -1 && k == n + 1) return var_ends();
    if (j == -1) return var_left(k);
    if (k == n + 1) return var_right(j);
    return pair_index_for(n + 1, j, k);
}

int ExtendedPathSystem::var_diagonal(int i) const { return pair_count_for(n + 1) + i; }
int ExtendedPathSystem::var_left(int i) const { return pair_count_for(n + 1) + (n + 1) + i; }
int ExtendedPathSystem::var_right(int i) const { return pair_count_for(n + 1) + 2 * (n + 1) + i; }
int ExtendedPathSystem::var_ends() const { return pair_count_for(n + 1) + 3 * (n + 1); }

std::vector<Rational> ExtendedPathSystem::extend_point(const std::vector<Rational>& x) const {
    const int m = pair_count_for(n + 1);
    if (static_cast<int>(x.size()) != m) throw InputError("point length does not match pair count");
    std::vector<Rational> full(num_vars, Rational(0));
    std::copy(x.begin(), x.end(), full.begin());
    for (int i = 0; i <= n; ++i) {
        full[var_diagonal(i)] = 0;
        full[var_left(i)] = 1;
        full[var_right(i)] = 1;
    }
    full[var_ends()] = 1;
    return full;
}

ExtendedPathSystem extended_path_system(int n) {
    if (n < 2) throw InputError("extended path system needs n >= 2");
    ExtendedPathSystem ext;
    ext.n = n;
    ext.num_vars = pair_count_for(n + 1) + 3 * (n + 1) + 1;
    ext.inequalities.num_vars = ext.num_vars;
    ext.equalities.num_vars = ext.num_vars;

    auto name = [&](int i) {
        if (i == -1) return std::string("L");
        if (i == n + 1) return std::string("R");
        return std::to_string(i);
    };
    // template row per extended (j,k), j <= k-2:
    //   x_{j,k} + x_{j+1,k-1} <= x_{j+1,k} + x_{j,k-1}
    for (int j = -1; j <= n - 1; ++j) {
        for (int k = j + 2; k <= n + 1; ++k) {
            SystemRow row;
            row.coeffs.emplace_back(ext.var_pair(j, k), Rational(1));
            row.coeffs.emplace_back(ext.var_pair(j + 1, k - 1), Rational(1));
            row.coeffs.emplace_back(ext.var_pair(j + 1, k), Rational(-1));
            row.coeffs.emplace_back(ext.var_pair(j, k - 1), Rational(-1));
            row.rhs = 0;
            row.family = RowFamily::extended;
            row.label = "ext(" + name(j) + "," + name(k) + ")";
            ext.inequalities.add(std::move(row));
        }
    }
    for (int i = 0; i <= n; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(ext.var_diagonal(i), Rational(1));
        row.rel = Relation::equal;
        row.rhs = 0;
        row.family = RowFamily::equality;
        row.label = "diag(" + std::to_string(i) + ")";
        ext.equalities.add(std::move(row));
    }
    for (int i = 0; i <= n; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(ext.var_left(i), Rational(1));
        row.rel = Relation::equal;
        row.rhs = 1;
        row.family = RowFamily::equality;
        row.label = "left(" + std::to_string(i) + ")";
        ext.equalities.add(std::move(row));
    }
    for (int i = 0; i <= n; ++i) {
        SystemRow row;
        row.coeffs.emplace_back(ext.var_right(i), Rational(1));
        row.rel = Relation::equal;
        row.rhs = 1;
        row.family = RowFamily::equality;
        row.label = "right(" + std::to_string(i) + ")";
        ext.equalities.add(std::move(row));
    }
    {
        SystemRow row;
        row.coeffs.emplace_back(ext.var_ends(), Rational(1));
        row.rel = Relation::equal;
        row.rhs = 1;
        row.family = RowFamily::equality;
        row.label = "ends";
        ext.equalities.add(std::move(row));
    }
    return ext;
}

bool check_membership(const Tree& tree, const LiftedLabeling& x) {
    if (x.size() != tree.pair_count()) return false;
    for (std::uint8_t b : x.x)
        if (b > 1) return false;
    std::vector<Rational> point = to_rational_point(x);
    return theta0_system(tree).satisfied(point);
}

std::vector<SeparatedRow> separate(const std::vector<Rational>& x, const InequalitySystem& system) {
    std::vector<SeparatedRow> violated;
    for (const SystemRow& row : system.rows) {
        Rational v = row.violation(x);
        if (v > 0) violated.push_back({row, std::move(v)});
    }
    std::sort(violated.begin(), violated.end(), [](const SeparatedRow& a, const SeparatedRow& b) {
        if (a.violation != b.violation) return a.violation > b.violation;
        if (a.row.family != b.row.family) return a.row.family < b.row.family;
        return row_key(a.row) < row_key(b.row);
    });
    return violated;
}

LinearProgram to_linear_program(const InequalitySystem& system, Sense sense,
                                const std::vector<Rational>& objective) {
    LinearProgram lp(system.num_vars, sense);
    lp.set_objective(objective);
    for (const SystemRow& row : system.rows) lp.add_row(row.coeffs, row.rel, row.rhs, row.label);
    return lp;
}

std::vector<Rational> to_rational_point(const LiftedLabeling& x) {
    std::vector<Rational> point(x.x.size());
    for (std::size_t i = 0; i < x.x.size(); ++i) point[i] = int(x.x[i]);
    return point;
}

}  // namespace treepart
