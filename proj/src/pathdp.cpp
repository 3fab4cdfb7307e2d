#include "treepart/pathdp.hpp"

#include <algorithm>

namespace treepart {

std::vector<int> path_node_order(const Tree& tree) {
    if (!tree.is_path()) throw InputError("tree is not a path");
    if (tree.node_count() == 1) return {0};
    int start = -1;
    for (int v = 0; v < tree.node_count(); ++v)
        if (tree.degree(v) == 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < tree.node_count()) {
        int next = -1;
        for (int w : tree.neighbors(cur))
            if (w != prev) next = w;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

IntervalCostTable interval_costs(const Instance& inst) {
    IntervalCostTable table;
    table.order = path_node_order(inst.tree());
    const int positions = static_cast<int>(table.order.size());
    table.n = positions - 1;
    table.d.assign(positions, std::vector<Rational>(positions, Rational(0)));
    for (int l = 1; l < positions; ++l) {
        // prefix[i] = sum_{i <= j < l} c(order[j], order[l])
        Rational suffix = 0;
        std::vector<Rational> tail(l + 1, Rational(0));
        for (int j = l - 1; j >= 0; --j) {
            suffix += inst.cost(table.order[j], table.order[l]);
            tail[j] = suffix;
        }
        for (int i = 0; i < l; ++i) table.d[i][l] = table.d[i][l - 1] + tail[i];
    }
    return table;
}

PathSolveResult solve_path(const Instance& inst) {
    IntervalCostTable table = interval_costs(inst);
    const int positions = table.n + 1;

    // f[k+1] = best cost of partitioning positions 0..k; f[0] = 0.
    std::vector<Rational> f(positions + 1, Rational(0));
    std::vector<int> from(positions + 1, 0);
    for (int k = 0; k < positions; ++k) {
        bool have = false;
        Rational best;
        int best_j = 0;
        for (int j = 0; j <= k; ++j) {
            Rational candidate = f[j] + table.d[j][k];
            if (!have || candidate < best) {
                have = true;
                best = candidate;
                best_j = j;
            }
        }
        f[k + 1] = best;
        from[k + 1] = best_j;
    }

    Partition part;
    part.component_of.assign(positions, -1);
    std::vector<std::pair<int, int>> intervals;
    for (int end = positions; end > 0; end = from[end]) intervals.emplace_back(from[end], end - 1);
    std::reverse(intervals.begin(), intervals.end());
    for (auto [a, b] : intervals) {
        std::vector<int> comp;
        for (int p = a; p <= b; ++p) comp.push_back(table.order[p]);
        std::sort(comp.begin(), comp.end());
        part.components.push_back(comp);
    }
    // canonical component order: by smallest node
    std::sort(part.components.begin(), part.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t c = 0; c < part.components.size(); ++c)
        for (int v : part.components[c]) part.component_of[v] = static_cast<int>(c);
    return {std::move(part), f[positions]};
}

}  // namespace treepart
