#include "treepart/solver.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "treepart/lp.hpp"
#include "treepart/oracle.hpp"
#include "treepart/pathdp.hpp"

namespace treepart {

std::string relaxation_name(Relaxation r) {
    switch (r) {
        case Relaxation::theta0: return "theta0";
        case Relaxation::theta1: return "theta1";
        case Relaxation::theta1_squares: return "squares";
        case Relaxation::path_exact: return "path";
    }
    return "?";
}

Relaxation relaxation_from_name(const std::string& name) {
    if (name == "theta0") return Relaxation::theta0;
    if (name == "theta1") return Relaxation::theta1;
    if (name == "squares" || name == "theta1+squares") return Relaxation::theta1_squares;
    if (name == "path" || name == "path-exact") return Relaxation::path_exact;
    throw InputError("unknown relaxation '" + name + "'");
}

namespace {

// Rows of the configured relaxation, split into the part kept in every node
// LP and the part handled by lazy separation.
struct RelaxationRows {
    InequalitySystem base;  // always present
    InequalitySystem lazy;  // separated on demand
};

InequalitySystem boxes_only(const Tree& tree) {
    InequalitySystem theta0 = theta0_system(tree);
    InequalitySystem system;
    system.num_vars = theta0.num_vars;
    for (SystemRow& row : theta0.rows)
        if (row.family == RowFamily::box) system.add(std::move(row));
    return system;
}

InequalitySystem without_boxes(InequalitySystem&& full) {
    InequalitySystem system;
    system.num_vars = full.num_vars;
    for (SystemRow& row : full.rows)
        if (row.family != RowFamily::box) system.add(std::move(row));
    return system;
}

RelaxationRows relaxation_rows(const Tree& tree, Relaxation relaxation) {
    RelaxationRows rows;
    switch (relaxation) {
        case Relaxation::theta0:
            rows.base = boxes_only(tree);
            rows.lazy = without_boxes(theta0_system(tree));
            break;
        case Relaxation::theta1:
            rows.base = boxes_only(tree);
            rows.lazy = without_boxes(theta1_system(tree));
            break;
        case Relaxation::theta1_squares: {
            rows.base = boxes_only(tree);
            rows.lazy = without_boxes(theta1_system(tree));
            for (SystemRow& row : square_system(tree).rows) rows.lazy.add(std::move(row));
            break;
        }
        case Relaxation::path_exact: {
            if (!tree.is_path()) throw InputError("path relaxation requires a path instance");
            // small enough to keep whole; nodes must already be in positional order
            rows.base = theta_path_system(tree.edge_count());
            rows.lazy.num_vars = rows.base.num_vars;
            break;
        }
    }
    return rows;
}

// Lifted objective of the transformed problem: minimize sum(-c_uv x_uv),
// plus the constant sum of costs.
std::vector<Rational> lifted_objective(const Instance& inst) {
    std::vector<Rational> g(inst.tree().pair_count(), Rational(0));
    for (const auto& [idx, c] : inst.costs()) g[idx] = -c;
    return g;
}

std::string sorted_row_key(const SystemRow& row) {
    std::string key;
    for (const auto& [var, coeff] : row.coeffs)
        if (coeff != 0) key += std::to_string(var) + ":" + to_string(coeff) + ";";
    key += to_string(row.rhs);
    return key;
}

struct BncState {
    const Instance& inst;
    BncConfig config;
    std::vector<Rational> objective;  // over pair variables
    Rational constant;

    InequalitySystem lazy;
    std::vector<SystemRow> pool;         // accumulated separated rows (global)
    std::set<std::string> pool_keys;
    std::map<std::string, long> cut_counts;

    struct Node {
        std::vector<std::pair<int, int>> fixings;  // (edge index, value of y)
        Rational bound;                            // inherited lower bound (objective units)
        bool has_bound = false;                    // the root starts without one
        long id = 0;
    };

    std::vector<Node> open;
    bool have_incumbent = false;
    Rational incumbent_value;
    EdgeLabeling incumbent;
    long processed = 0;
    long next_id = 0;

    explicit BncState(const Instance& instance, const BncConfig& cfg)
        : inst(instance), config(cfg), objective(lifted_objective(instance)), constant(instance.total_cost()) {}

    void offer_incumbent(const EdgeLabeling& y) {
        Rational value = evaluate_objective(inst, y);
        if (!have_incumbent || value < incumbent_value) {
            have_incumbent = true;
            incumbent_value = value;
            incumbent = y;
        }
    }

    LinearProgram node_lp(const InequalitySystem& base, const Node& node) const {
        const Tree& tree = inst.tree();
        LinearProgram lp(tree.pair_count(), Sense::minimize);
        lp.set_objective(objective);
        for (const SystemRow& row : base.rows) lp.add_row(row.coeffs, row.rel, row.rhs, row.label);
        for (const SystemRow& row : pool) lp.add_row(row.coeffs, row.rel, row.rhs, row.label);
        for (auto [edge, value] : node.fixings) {
            auto [u, v] = tree.edges()[edge];
            // fixing y_e = b pins the lifted variable x_e to 1 - b
            lp.add_row({{tree.pair_index(u, v), Rational(1)}}, Relation::equal, Rational(1 - value),
                       "fix(" + std::to_string(edge) + ")");
        }
        return lp;
    }
};

EdgeLabeling round_edges(const Tree& tree, const std::vector<Rational>& x) {
    std::vector<std::uint8_t> y(tree.edge_count());
    const Rational half = make_rational(1, 2);
    for (int e = 0; e < tree.edge_count(); ++e) {
        auto [u, v] = tree.edges()[e];
        y[e] = x[tree.pair_index(u, v)] < half ? 1 : 0;
    }
    return EdgeLabeling(std::move(y));
}

SolveResult finish(BncState& state, bool optimal, const Rational& best_open_bound, bool any_open) {
    BncCertificate cert;
    cert.incumbent = state.incumbent_value;
    cert.bound = optimal || !any_open ? state.incumbent_value
                                      : std::min(best_open_bound, state.incumbent_value);
    cert.nodes = state.processed;
    cert.cuts = state.cut_counts;
    cert.optimal = optimal;
    return {state.incumbent, state.incumbent_value, std::move(cert)};
}

SolveResult branch_and_cut(const Instance& inst, const BncConfig& config) {
    if (config.node_limit < 1 || config.cut_rounds < 0) throw InputError("solver limits must be positive");
    const Tree& tree = inst.tree();
    RelaxationRows rows = relaxation_rows(tree, config.relaxation);
    BncState state(inst, config);
    state.lazy = std::move(rows.lazy);

    // root incumbent so pruning always has a reference point
    state.offer_incumbent(EdgeLabeling::all_ones(tree.edge_count()));
    state.offer_incumbent(EdgeLabeling::all_zeros(tree.edge_count()));

    state.open.push_back({{}, Rational(0), false, state.next_id++});
    bool root = true;
    long selections = 0;
    const Rational half = make_rational(1, 2);

    while (!state.open.empty()) {
        if (state.processed >= config.node_limit) break;
        // depth-first with a periodic best-bound pick
        std::size_t pick = state.open.size() - 1;
        if (!root && (++selections % 64) == 0) {
            for (std::size_t i = 0; i < state.open.size(); ++i)
                if (state.open[i].bound < state.open[pick].bound ||
                    (state.open[i].bound == state.open[pick].bound && state.open[i].id < state.open[pick].id))
                    pick = i;
        }
        BncState::Node node = std::move(state.open[pick]);
        state.open.erase(state.open.begin() + static_cast<long>(pick));
        root = false;
        ++state.processed;

        if (state.have_incumbent && node.has_bound && node.bound >= state.incumbent_value) continue;

        LpSolution sol;
        int rounds = 0;
        bool pruned = false;
        while (true) {
            LinearProgram lp = state.node_lp(rows.base, node);
            sol = solve(lp);
            if (sol.status != LpStatus::optimal)
                throw InternalError("node relaxation must have an optimum");
            node.bound = state.constant + sol.objective;
            node.has_bound = true;
            if (state.have_incumbent && node.bound >= state.incumbent_value) {
                pruned = true;
                break;
            }
            bool edges_integral = true;
            for (int e = 0; e < tree.edge_count() && edges_integral; ++e) {
                auto [u, v] = tree.edges()[e];
                const Rational& xe = sol.x[tree.pair_index(u, v)];
                if (xe != 0 && xe != 1) edges_integral = false;
            }
            auto violated = separate(sol.x, state.lazy);
            std::size_t added = 0;
            if (!violated.empty() && (rounds < state.config.cut_rounds || edges_integral)) {
                for (auto& sep : violated) {
                    std::string key = sorted_row_key(sep.row);
                    if (state.pool_keys.insert(key).second) {
                        ++state.cut_counts[family_name(sep.row.family)];
                        state.pool.push_back(sep.row);
                        ++added;
                    }
                }
            }
            if (added == 0) break;
            ++rounds;
        }
        if (pruned) continue;

        state.offer_incumbent(round_edges(tree, sol.x));

        // select the tree edge closest to one half
        int branch_edge = -1;
        Rational branch_score;
        for (int e = 0; e < tree.edge_count(); ++e) {
            auto [u, v] = tree.edges()[e];
            const Rational& xe = sol.x[tree.pair_index(u, v)];
            if (xe == 0 || xe == 1) continue;
            Rational score = abs(xe - half);
            if (branch_edge < 0 || score < branch_score) {
                branch_edge = e;
                branch_score = score;
            }
        }

        if (branch_edge < 0) {
            // all edge variables integral and the lazy rows are satisfied, so
            // the lifted point is exactly the lift of its edge labeling
            std::vector<std::uint8_t> y(tree.edge_count());
            for (int e = 0; e < tree.edge_count(); ++e) {
                auto [u, v] = tree.edges()[e];
                y[e] = sol.x[tree.pair_index(u, v)] == 1 ? 0 : 1;
            }
            EdgeLabeling labeling(std::move(y));
            Rational value = evaluate_objective(inst, labeling);
            if (value != node.bound)
                throw InternalError("integral node value does not match its relaxation bound");
            state.offer_incumbent(labeling);
            continue;  // node solved exactly
        }

        auto [u, v] = tree.edges()[branch_edge];
        const Rational& xe = sol.x[tree.pair_index(u, v)];
        const int first_fix = xe >= half ? 0 : 1;  // explore the rounded side first
        BncState::Node other = node;
        other.fixings.emplace_back(branch_edge, 1 - first_fix);
        other.id = state.next_id++;
        state.open.push_back(std::move(other));
        node.fixings.emplace_back(branch_edge, first_fix);
        node.id = state.next_id++;
        state.open.push_back(std::move(node));
    }

    bool optimal = state.open.empty();
    Rational best_open;
    bool any_open = !state.open.empty();
    for (std::size_t i = 0; i < state.open.size(); ++i)
        if (i == 0 || state.open[i].bound < best_open) best_open = state.open[i].bound;
    return finish(state, optimal, best_open, any_open);
}

// Relabel a path instance so node ids equal positions along the path.
struct Relabeled {
    Instance instance;
    std::vector<int> order;  // position -> original node
};

Relabeled relabel_path(const Instance& inst) {
    std::vector<int> order = path_node_order(inst.tree());
    const int nodes = inst.tree().node_count();
    std::vector<int> position(nodes);
    for (int p = 0; p < nodes; ++p) position[order[p]] = p;
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p + 1 < nodes; ++p) edges.emplace_back(p, p + 1);
    std::vector<std::tuple<int, int, Rational>> costs;
    for (const auto& [idx, c] : inst.costs()) {
        auto [u, v] = inst.tree().pair_nodes(idx);
        costs.emplace_back(position[u], position[v], c);
    }
    return {Instance(Tree(nodes, std::move(edges)), costs), std::move(order)};
}

}  // namespace

SolveResult solve_exact(const Instance& inst, const BncConfig& config) {
    const Tree& tree = inst.tree();
    const int n = tree.edge_count();

    if (config.use_path_dp && tree.is_path()) {
        PathSolveResult dp = solve_path(inst);
        SolveResult result;
        result.labeling = labeling_from_partition(tree, dp.partition);
        result.value = dp.value;
        result.certificate.incumbent = dp.value;
        result.certificate.bound = dp.value;
        result.certificate.nodes = 0;
        result.certificate.optimal = true;
        return result;
    }

    if (n <= 1) {
        BruteForceResult bf = solve_bruteforce(inst);
        SolveResult result;
        result.labeling = bf.labeling;
        result.value = bf.value;
        result.certificate.incumbent = bf.value;
        result.certificate.bound = bf.value;
        result.certificate.nodes = 1;
        result.certificate.optimal = true;
        return result;
    }

    if (config.relaxation == Relaxation::path_exact) {
        if (!tree.is_path()) throw InputError("path relaxation requires a path instance");
        Relabeled relabeled = relabel_path(inst);
        SolveResult inner = branch_and_cut(relabeled.instance, config);
        // map the labeling back through the position order
        std::vector<std::uint8_t> y(n);
        for (int p = 0; p + 1 < tree.node_count(); ++p)
            y[tree.edge_index(relabeled.order[p], relabeled.order[p + 1])] = inner.labeling.y[p];
        inner.labeling = EdgeLabeling(std::move(y));
        return inner;
    }

    return branch_and_cut(inst, config);
}

Rational lower_bound(const Instance& inst, Relaxation relaxation) {
    const Tree& tree = inst.tree();
    if (tree.edge_count() == 0) return 0;
    if (relaxation == Relaxation::path_exact && !tree.is_path())
        throw InputError("path relaxation requires a path instance");
    if (relaxation == Relaxation::path_exact && tree.edge_count() == 1) {
        // the single lifted variable is boxed; the relaxation is already exact
        return solve_bruteforce(inst).value;
    }
    const Instance* target = &inst;
    Relabeled relabeled{Instance(Tree(1, {})), {}};
    if (relaxation == Relaxation::path_exact) {
        relabeled = relabel_path(inst);
        target = &relabeled.instance;
    }

    RelaxationRows rows = relaxation_rows(target->tree(), relaxation);
    std::vector<Rational> objective = lifted_objective(*target);
    InequalitySystem working = rows.base;
    std::set<std::string> keys;
    while (true) {
        LinearProgram lp = to_linear_program(working, Sense::minimize, objective);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::optimal) throw InternalError("relaxation must have an optimum");
        auto violated = separate(sol.x, rows.lazy);
        std::size_t added = 0;
        for (auto& sep : violated)
            if (keys.insert(sorted_row_key(sep.row)).second) {
                working.add(sep.row);
                ++added;
            }
        if (added == 0) return target->total_cost() + sol.objective;
    }
}

std::string solution_to_json(const Instance& inst, const SolveResult& result) {
    nlohmann::ordered_json j;
    j["value"] = to_string(result.value);
    j["cut_edges"] = nlohmann::ordered_json::array();
    for (int e = 0; e < inst.tree().edge_count(); ++e)
        if (!result.labeling.y[e]) {
            auto [u, v] = inst.tree().edges()[e];
            j["cut_edges"].push_back({u, v});
        }
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& comp : partition_from_labeling(inst.tree(), result.labeling).components)
        j["components"].push_back(comp);
    j["optimal"] = result.certificate.optimal;
    j["bound"] = to_string(result.certificate.bound);
    j["nodes"] = result.certificate.nodes;
    j["cuts"] = nlohmann::ordered_json::object();
    for (const auto& [family, count] : result.certificate.cuts) j["cuts"][family] = count;
    return j.dump(2) + "\n";
}

}  // namespace treepart
