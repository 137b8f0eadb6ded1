#include "rsing/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rsing/correction.hpp"
#include "rsing/fundamental.hpp"
#include "rsing/tower.hpp"

namespace rsing {

namespace {

// Unlabeled tree over vertices 0..n-1.
struct RawTree {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit RawTree(int n_) : n(n_), adj(n_) {}

    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

std::string encode_rooted(const RawTree& t, const std::vector<long long>& weights, int v,
                          int parent) {
    std::vector<std::string> child_encodings;
    for (int w : t.adj[v])
        if (w != parent)
            child_encodings.push_back(encode_rooted(t, weights, w, v));
    std::sort(child_encodings.begin(), child_encodings.end());
    std::string out = "(" + std::to_string(weights[v]);
    for (const auto& e : child_encodings)
        out += e;
    out += ")";
    return out;
}

// One or two centroids of a tree (vertices minimizing the largest component
// of the forest left after their removal).
std::vector<int> centroids(const RawTree& t) {
    std::vector<int> subtree(t.n, 1), order, parent(t.n, -1);
    order.reserve(t.n);
    std::vector<int> stack{0};
    std::vector<char> seen(t.n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0)
            subtree[parent[*it]] += subtree[*it];
    int best = t.n + 1;
    std::vector<int> result;
    for (int v = 0; v < t.n; ++v) {
        int largest = t.n - subtree[v];
        for (int w : t.adj[v])
            if (parent[w] == v)
                largest = std::max(largest, subtree[w]);
        if (largest < best) {
            best = largest;
            result = {v};
        } else if (largest == best) {
            result.push_back(v);
        }
    }
    return result;
}

std::string canonical_string(const RawTree& t, const std::vector<long long>& weights,
                             int* chosen_root = nullptr) {
    std::string best;
    for (int c : centroids(t)) {
        std::string enc = encode_rooted(t, weights, c, -1);
        if (best.empty() || enc < best) {
            best = enc;
            if (chosen_root)
                *chosen_root = c;
        }
    }
    return best;
}

// Rebuilds the tree as a DualGraph labeled v1..vn in canonical preorder
// (children visited in sorted-encoding order from the canonical root).
DualGraph to_canonical_graph(const RawTree& t, const std::vector<long long>& weights) {
    int root = 0;
    canonical_string(t, weights, &root);
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    std::vector<std::string> label(t.n);
    std::function<void(int, int)> visit = [&](int v, int parent) {
        label[v] = "v" + std::to_string(vs.size() + 1);
        vs.push_back({label[v], weights[v]});
        if (parent >= 0)
            es.push_back({label[parent], label[v]});
        std::vector<std::pair<std::string, int>> ordered;
        for (int w : t.adj[v])
            if (w != parent)
                ordered.push_back({encode_rooted(t, weights, w, v), w});
        std::sort(ordered.begin(), ordered.end());
        for (const auto& [enc, w] : ordered)
            visit(w, v);
    };
    visit(root, -1);
    return DualGraph::build(vs, es);
}

// All unlabeled trees on exactly n vertices, by growing a leaf onto every
// vertex of every tree on n-1 vertices and deduplicating canonically.
std::vector<RawTree> unlabeled_trees(int n) {
    std::vector<RawTree> current;
    current.push_back(RawTree(1));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, RawTree> next;
        std::vector<long long> flat(size, 0);
        for (const auto& t : current) {
            for (int host = 0; host < t.n; ++host) {
                RawTree grown(size);
                for (int v = 0; v < t.n; ++v)
                    for (int w : t.adj[v])
                        if (v < w)
                            grown.add_edge(v, w);
                grown.add_edge(host, size - 1);
                next.emplace(canonical_string(grown, flat), grown);
            }
        }
        current.clear();
        for (auto& [key, t] : next)
            current.push_back(std::move(t));
    }
    return current;
}

void validate(const SearchParams& p) {
    if (p.max_vertices < 1)
        throw DomainError("enumerate: max_vertices must be >= 1");
    if (p.weight_min < 2)
        throw DomainError("enumerate: weight_min must be >= 2");
    if (p.weight_max < p.weight_min)
        throw DomainError("enumerate: weight_max must be >= weight_min");
}

bool passes_filter(const DualGraph& g, const SearchParams& p) {
    if (!is_negative_definite(g))
        return false;
    bool needs_rational = p.require_rational || p.filter != SearchFilter::all;
    if (needs_rational && !is_rational(g))
        return false;
    if (p.filter == SearchFilter::all)
        return true;
    TowerNode root = build_tower(g);
    CStatus status = correction_term(root);
    if (p.filter == SearchFilter::c_positive)
        return status.known() && status.value > 0;
    return !status.known();
}

} // namespace

std::string canonical_form(const DualGraph& g) {
    if (g.empty())
        throw DomainError("canonical_form: graph is empty");
    if (!g.connected() || static_cast<int>(g.edges().size()) != g.size() - 1)
        throw DomainError("canonical_form: graph is not a tree");
    RawTree t(g.size());
    for (const auto& [i, j] : g.edges())
        t.add_edge(i, j);
    std::vector<long long> weights(g.size());
    for (int i = 0; i < g.size(); ++i)
        weights[i] = g.weight(i);
    return canonical_string(t, weights);
}

void enumerate_trees(const SearchParams& params,
                     const std::function<void(const DualGraph&)>& emit) {
    validate(params);
    for (int n = 1; n <= params.max_vertices; ++n) {
        std::set<std::string> seen;
        std::map<std::string, DualGraph> accepted;
        for (const auto& tree : unlabeled_trees(n)) {
            std::vector<long long> weights(n, params.weight_min);
            while (true) {
                std::string key = canonical_string(tree, weights);
                if (seen.insert(key).second) {
                    DualGraph g = to_canonical_graph(tree, weights);
                    if (passes_filter(g, params))
                        accepted.emplace(key, std::move(g));
                }
                int pos = 0;
                while (pos < n && weights[pos] == params.weight_max)
                    weights[pos++] = params.weight_min;
                if (pos == n)
                    break;
                weights[pos] += 1;
            }
        }
        for (const auto& [key, g] : accepted)
            emit(g);
    }
}

std::vector<DualGraph> enumerate_trees(const SearchParams& params) {
    std::vector<DualGraph> out;
    enumerate_trees(params, [&](const DualGraph& g) { out.push_back(g); });
    return out;
}

std::vector<CPositiveHit> search_c_positive(SearchParams params) {
    params.filter = SearchFilter::c_positive;
    std::vector<CPositiveHit> hits;
    enumerate_trees(params, [&](const DualGraph& g) {
        NumericInvariants inv = numeric_invariants(g);
        TowerNode root = build_tower(g);
        CStatus status = correction_term(root);
        hits.push_back({g, status.value, inv.mult});
    });
    std::stable_sort(hits.begin(), hits.end(), [](const CPositiveHit& a, const CPositiveHit& b) {
        if (a.mult != b.mult)
            return a.mult < b.mult;
        if (a.graph.size() != b.graph.size())
            return a.graph.size() < b.graph.size();
        return canonical_form(a.graph) < canonical_form(b.graph);
    });
    return hits;
}

std::optional<DualGraph> minimal_multiplicity_example(const SearchParams& params) {
    auto hits = search_c_positive(params);
    if (hits.empty())
        return std::nullopt;
    return hits.front().graph;
}

} // namespace rsing
