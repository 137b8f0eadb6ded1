#include "rsing/tower.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rsing {

std::vector<DualGraph> blow_down_children(const DualGraph& g, const Cycle& z) {
    auto zv = detail::to_vector(g, z);
    const int n = g.size();
    std::vector<int> zero_set;
    for (int i = 0; i < n; ++i) {
        long long p = detail::row_pairing(g, zv, i);
        if (p > 0)
            throw DomainError("blow_down_children: cycle is not anti-nef at '" + g.id(i) + "'");
        if (p == 0)
            zero_set.push_back(i);
    }
    // Connected components of the induced subgraph, ordered by smallest
    // vertex index for reproducible child order.
    std::set<int> in_zero(zero_set.begin(), zero_set.end());
    std::vector<char> visited(n, 0);
    std::vector<DualGraph> children;
    for (int root : zero_set) {
        if (visited[root])
            continue;
        std::vector<int> component, stack{root};
        visited[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (int w : g.neighbors(v))
                if (in_zero.count(w) && !visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(component.begin(), component.end());
        std::vector<std::string> keep;
        for (int v : component)
            keep.push_back(g.id(v));
        children.push_back(induced_subgraph(g, keep));
    }
    return children;
}

namespace {

TowerNode build_node(const DualGraph& g, int depth, int root_size, bool is_root) {
    if (depth > root_size)
        throw InternalError("build_tower: depth exceeds root vertex count");
    TowerNode node;
    node.vertex_set = g.ids();
    node.graph = g;
    try {
        node.z = fundamental_cycle(g);
        node.inv = numeric_invariants(g, node.z);
    } catch (const DomainError& err) {
        if (is_root)
            throw;
        // Subconfigurations of rational graphs are rational; a failing child
        // can only mean a bug upstream.
        throw InternalError(std::string("build_tower: child graph rejected: ") + err.what());
    }
    if (node.inv.e > 3) {
        for (const auto& child_graph : blow_down_children(g, node.z)) {
            TowerNode child = build_node(child_graph, depth + 1, root_size, false);
            if (child.graph.size() >= g.size())
                throw InternalError("build_tower: child does not shrink");
            node.children.push_back(std::move(child));
        }
    }
    return node;
}

} // namespace

TowerNode build_tower(const DualGraph& g) {
    return build_node(g, 1, g.size(), true);
}

namespace {

void accumulate_i4(const TowerNode& t, I4Sums& sums) {
    if (t.inv.e >= 4) {
        sums.sum_e_minus_4 += t.inv.e - 4;
        sums.sum_t2_terms += (t.inv.e - 2) * (t.inv.e - 4);
        sums.i4_nodes.push_back(&t);
    }
    for (const auto& child : t.children)
        accumulate_i4(child, sums);
}

} // namespace

I4Sums i4_sums(const TowerNode& t) {
    I4Sums sums;
    accumulate_i4(t, sums);
    return sums;
}

void walk_tower(const TowerNode& t,
                const std::function<void(const TowerNode&, const std::string&)>& visit) {
    std::function<void(const TowerNode&, const std::string&)> rec =
        [&](const TowerNode& node, const std::string& path) {
            visit(node, path);
            for (size_t i = 0; i < node.children.size(); ++i)
                rec(node.children[i], path + "." + std::to_string(i));
        };
    rec(t, "root");
}

void walk_tower(TowerNode& t,
                const std::function<void(TowerNode&, const std::string&)>& visit) {
    std::function<void(TowerNode&, const std::string&)> rec =
        [&](TowerNode& node, const std::string& path) {
            visit(node, path);
            for (size_t i = 0; i < node.children.size(); ++i)
                rec(node.children[i], path + "." + std::to_string(i));
        };
    rec(t, "root");
}

} // namespace rsing
