#include "treepart/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace treepart {

EdgeLabeling EdgeLabeling::from_code(int n, std::uint64_t code) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int e = 0; e < n; ++e) bits[e] = (code >> e) & 1;
    return EdgeLabeling(std::move(bits));
}

std::uint64_t EdgeLabeling::code() const {
    std::uint64_t c = 0;
    for (int e = 0; e < size(); ++e)
        if (y[e]) c |= std::uint64_t{1} << e;
    return c;
}

Rational PbfCoefficients::evaluate(const EdgeLabeling& y) const {
    Rational value = 0;
    for (const auto& [edges, coeff] : terms) {
        bool all_one = true;
        for (int e : edges)
            if (!y.y[e]) {
                all_one = false;
                break;
            }
        if (all_one) value += coeff;
    }
    return value;
}

int PbfCoefficients::degree() const {
    std::size_t deg = 0;
    for (const auto& [edges, coeff] : terms)
        if (coeff != 0) deg = std::max(deg, edges.size());
    return static_cast<int>(deg);
}

Instance::Instance(Tree tree, const std::vector<std::tuple<int, int, Rational>>& costs)
    : tree_(std::move(tree)) {
    for (const auto& [u, v, c] : costs) {
        int idx = tree_.pair_index(u, v);
        if (costs_.count(idx))
            throw InputError("duplicate cost entry for pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        costs_[idx] = c;
    }
    std::erase_if(costs_, [](const auto& kv) { return kv.second == 0; });
}

Rational Instance::cost(int u, int v) const { return cost_by_pair(tree_.pair_index(u, v)); }

Rational Instance::cost_by_pair(int pair_idx) const {
    auto it = costs_.find(pair_idx);
    return it == costs_.end() ? Rational(0) : it->second;
}

Rational Instance::total_cost() const {
    Rational sum = 0;
    for (const auto& [idx, c] : costs_) sum += c;
    return sum;
}

Rational evaluate_objective(const Instance& inst, const EdgeLabeling& y) {
    const Tree& tree = inst.tree();
    if (y.size() != tree.edge_count()) throw InputError("labeling length does not match edge count");
    const std::uint64_t kept = y.code();
    Rational value = 0;
    for (const auto& [idx, c] : inst.costs()) {
        const std::uint64_t mask = tree.path_mask(idx);
        if ((kept & mask) == mask) value += c;
    }
    return value;
}

LiftedLabeling labeling_to_lifted(const Tree& tree, const EdgeLabeling& y) {
    if (y.size() != tree.edge_count()) throw InputError("labeling length does not match edge count");
    const std::uint64_t kept = y.code();
    std::vector<std::uint8_t> x(tree.pair_count());
    for (int p = 0; p < tree.pair_count(); ++p) {
        const std::uint64_t mask = tree.path_mask(p);
        x[p] = (kept & mask) == mask ? 0 : 1;
    }
    return LiftedLabeling(std::move(x));
}

bool lifted_is_consistent(const Tree& tree, const LiftedLabeling& x) {
    if (x.size() != tree.pair_count()) return false;
    for (std::uint8_t b : x.x)
        if (b > 1) return false;
    std::vector<std::uint8_t> y(tree.edge_count());
    for (int e = 0; e < tree.edge_count(); ++e) {
        auto [u, v] = tree.edges()[e];
        y[e] = x.x[tree.pair_index(u, v)] ? 0 : 1;
    }
    return labeling_to_lifted(tree, EdgeLabeling(std::move(y))) == x;
}

EdgeLabeling lifted_to_labeling(const Tree& tree, const LiftedLabeling& x) {
    if (x.size() != tree.pair_count()) throw InputError("lifted vector length does not match pair count");
    if (!lifted_is_consistent(tree, x))
        throw EncodingError("lifted vector does not encode a decomposition of the tree");
    std::vector<std::uint8_t> y(tree.edge_count());
    for (int e = 0; e < tree.edge_count(); ++e) {
        auto [u, v] = tree.edges()[e];
        y[e] = x.x[tree.pair_index(u, v)] ? 0 : 1;
    }
    return EdgeLabeling(std::move(y));
}

Partition partition_from_labeling(const Tree& tree, const EdgeLabeling& y) {
    if (y.size() != tree.edge_count()) throw InputError("labeling length does not match edge count");
    const int n = tree.node_count();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int e = 0; e < tree.edge_count(); ++e) {
        if (!y.y[e]) continue;
        auto [u, v] = tree.edges()[e];
        root[find(u)] = find(v);
    }
    Partition part;
    part.component_of.assign(n, -1);
    std::vector<int> comp_id(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (comp_id[r] < 0) {
            comp_id[r] = static_cast<int>(part.components.size());
            part.components.emplace_back();
        }
        part.component_of[v] = comp_id[r];
        part.components[comp_id[r]].push_back(v);
    }
    return part;
}

EdgeLabeling labeling_from_partition(const Tree& tree, const Partition& part) {
    if (static_cast<int>(part.component_of.size()) != tree.node_count())
        throw InputError("partition does not cover the node set");
    std::vector<std::uint8_t> y(tree.edge_count());
    for (int e = 0; e < tree.edge_count(); ++e) {
        auto [u, v] = tree.edges()[e];
        y[e] = part.component_of[u] == part.component_of[v] ? 1 : 0;
    }
    return EdgeLabeling(std::move(y));
}

bool edge_set_is_path(const Tree& tree, const std::vector<int>& edge_indices) {
    if (edge_indices.empty()) return false;
    std::map<int, int> deg;
    for (int e : edge_indices) {
        if (e < 0 || e >= tree.edge_count()) return false;
        auto [u, v] = tree.edges()[e];
        ++deg[u];
        ++deg[v];
    }
    int odd = 0;
    for (const auto& [v, d] : deg) {
        if (d > 2) return false;
        if (d == 1) ++odd;
    }
    if (odd != 2) return false;
    // connectivity: the path between the two degree-1 nodes must be exactly this set
    std::vector<int> ends;
    for (const auto& [v, d] : deg)
        if (d == 1) ends.push_back(v);
    auto path = tree.path_edge_indices(ends[0], ends[1]);
    std::vector<int> sorted = edge_indices;
    std::sort(sorted.begin(), sorted.end());
    std::sort(path.begin(), path.end());
    return sorted == path;
}

PbfCoefficients pbf_view(const Instance& inst) {
    PbfCoefficients pbf;
    const Tree& tree = inst.tree();
    for (const auto& [idx, c] : inst.costs()) {
        auto [u, v] = tree.pair_nodes(idx);
        std::vector<int> edges = tree.path_edge_indices(u, v);
        std::sort(edges.begin(), edges.end());
        pbf.terms[std::move(edges)] = c;
    }
    return pbf;
}

PbfCoefficients star_to_quadratic(const Instance& inst) {
    if (!inst.tree().is_star()) throw InputError("tree is not a star");
    PbfCoefficients pbf = pbf_view(inst);
    if (pbf.degree() > 2) throw InternalError("star polynomial has degree above two");
    return pbf;
}

namespace {

using nlohmann::ordered_json;

Rational parse_cost_value(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    throw InputError("cost value must be an integer or a 'p/q' string");
}

}  // namespace

Instance load_instance(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j.contains("costs"))
            throw InputError("instance JSON needs 'nodes', 'edges' and 'costs' fields");
        if (!j["nodes"].is_number_integer()) throw InputError("'nodes' must be an integer");
        const int nodes = j["nodes"].get<int>();
        if (!j["edges"].is_array() || !j["costs"].is_array())
            throw InputError("'edges' and 'costs' must be arrays");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw InputError("each edge must be a pair of node ids");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        Tree tree(nodes, std::move(edges));
        std::vector<std::tuple<int, int, Rational>> costs;
        for (const auto& entry : j["costs"]) {
            if (!entry.is_object() || !entry.contains("u") || !entry.contains("v") || !entry.contains("c"))
                throw InputError("each cost entry needs 'u', 'v' and 'c'");
            if (!entry["u"].is_number_integer() || !entry["v"].is_number_integer())
                throw InputError("cost endpoints must be integers");
            costs.emplace_back(entry["u"].get<int>(), entry["v"].get<int>(), parse_cost_value(entry["c"]));
        }
        return Instance(std::move(tree), costs);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed instance JSON: ") + e.what());
    }
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_instance(buffer.str());
}

std::string save_instance(const Instance& inst) {
    ordered_json j;
    j["nodes"] = inst.tree().node_count();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : inst.tree().edges()) j["edges"].push_back({u, v});
    j["costs"] = ordered_json::array();
    for (const auto& [idx, c] : inst.costs()) {
        auto [u, v] = inst.tree().pair_nodes(idx);
        ordered_json entry;
        entry["u"] = u;
        entry["v"] = v;
        if (is_integer(c) && c.get_num().fits_slong_p())
            entry["c"] = c.get_num().get_si();
        else
            entry["c"] = to_string(c);
        j["costs"].push_back(entry);
    }
    return j.dump(2) + "\n";
}

}  // namespace treepart
