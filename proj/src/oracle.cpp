#include "treepart/oracle.hpp"

#include <algorithm>
#include <string>

namespace treepart {

BruteForceResult solve_bruteforce(const Instance& inst, int max_edges) {
    const Tree& tree = inst.tree();
    const int n = tree.edge_count();
    if (n > max_edges)
        throw SizeError("brute force capped at " + std::to_string(max_edges) + " edges, tree has " + std::to_string(n));

    // Evaluate via per-pair path masks; a pair contributes iff all its path
    // edges are kept.
    std::vector<std::pair<std::uint64_t, Rational>> costed;
    costed.reserve(inst.costs().size());
    for (const auto& [idx, c] : inst.costs()) costed.emplace_back(tree.path_mask(idx), c);

    std::uint64_t best_code = 0;
    Rational best_value;
    bool have_best = false;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < limit; ++code) {
        Rational value = 0;
        for (const auto& [mask, c] : costed)
            if ((code & mask) == mask) value += c;
        if (!have_best || value < best_value) {
            have_best = true;
            best_value = value;
            best_code = code;
        }
    }
    return {EdgeLabeling::from_code(n, best_code), best_value};
}

std::vector<LiftedLabeling> enumerate_lifted(const Tree& tree, int max_edges) {
    const int n = tree.edge_count();
    if (n > max_edges)
        throw SizeError("lifted enumeration capped at " + std::to_string(max_edges) + " edges");
    std::vector<LiftedLabeling> result;
    result.reserve(std::size_t{1} << n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < limit; ++code)
        result.push_back(labeling_to_lifted(tree, EdgeLabeling::from_code(n, code)));
    return result;
}

namespace {

// Connected-subgraph enumeration: for each anchor r, grow sets whose minimum
// node is r, extending only through not-yet-banned neighbors above r.
void grow_subtrees(const Tree& tree, int anchor, std::vector<int>& current, std::vector<char>& in_set,
                   std::vector<char>& banned, std::size_t guard, std::vector<std::vector<int>>& out) {
    if (out.size() >= guard) throw SizeError("subtree enumeration guard exceeded");
    std::vector<int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));

    std::vector<int> frontier;
    for (int v : current)
        for (int w : tree.neighbors(v))
            if (w > anchor && !in_set[w] && !banned[w]) frontier.push_back(w);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

    std::vector<int> newly_banned;
    for (int w : frontier) {
        current.push_back(w);
        in_set[w] = 1;
        grow_subtrees(tree, anchor, current, in_set, banned, guard, out);
        in_set[w] = 0;
        current.pop_back();
        banned[w] = 1;
        newly_banned.push_back(w);
    }
    for (int w : newly_banned) banned[w] = 0;
}

}  // namespace

std::vector<std::vector<int>> enumerate_subtrees(const Tree& tree, std::size_t guard) {
    std::vector<std::vector<int>> out;
    std::vector<char> in_set(tree.node_count(), 0), banned(tree.node_count(), 0);
    for (int r = 0; r < tree.node_count(); ++r) {
        std::vector<int> current{r};
        in_set[r] = 1;
        grow_subtrees(tree, r, current, in_set, banned, guard, out);
        in_set[r] = 0;
    }
    return out;
}

std::size_t count_subtrees(const Tree& tree) {
    // f(v) = number of connected sets within v's rooted subtree containing v;
    // summing f over all nodes counts each subtree once at its root-most node.
    const int n = tree.node_count();
    std::vector<std::size_t> f(n, 1);
    std::vector<int> order, parent(n, -1), stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : tree.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::size_t total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (int w : tree.neighbors(*it))
            if (parent[w] == *it) f[*it] *= 1 + f[w];
        total += f[*it];
    }
    return total;
}

Rational subtree_cost(const Instance& inst, const std::vector<int>& nodes) {
    const Tree& tree = inst.tree();
    std::vector<char> member(tree.node_count(), 0);
    for (int v : nodes) {
        if (v < 0 || v >= tree.node_count()) throw InputError("subtree node out of range");
        member[v] = 1;
    }
    // connectivity within the induced subgraph
    if (nodes.empty()) throw InputError("subtree must be nonempty");
    std::vector<int> stack{nodes.front()};
    std::vector<char> seen(tree.node_count(), 0);
    seen[nodes.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : tree.neighbors(v))
            if (member[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (reached != nodes.size()) throw InputError("node set does not induce a connected subtree");

    Rational sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) sum += inst.cost(nodes[i], nodes[j]);
    return sum;
}

SetPartitionResult solve_set_partitioning_bruteforce(const Instance& inst, int max_edges) {
    const Tree& tree = inst.tree();
    const int n = tree.edge_count();
    if (n > max_edges)
        throw SizeError("partition enumeration capped at " + std::to_string(max_edges) + " edges");

    std::uint64_t best_code = 0;
    Rational best_value;
    bool have_best = false;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < limit; ++code) {
        Partition part = partition_from_labeling(tree, EdgeLabeling::from_code(n, code));
        Rational value = 0;
        for (const auto& comp : part.components) value += subtree_cost(inst, comp);
        if (!have_best || value < best_value) {
            have_best = true;
            best_value = value;
            best_code = code;
        }
    }
    return {partition_from_labeling(tree, EdgeLabeling::from_code(n, best_code)), best_value};
}

}  // namespace treepart
