#include "rsing/selftest.hpp"

#include <algorithm>

#include "rsing/fundamental.hpp"
#include "rsing/invariants.hpp"

namespace rsing {

namespace {

std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq)
        degree[v] += 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(n, 0);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.push_back({leaf, v});
                used[leaf] = 1;
                degree[v] -= 1;
                break;
            }
        }
    }
    std::vector<int> remaining;
    for (int v = 0; v < n; ++v)
        if (!used[v] && degree[v] == 1)
            remaining.push_back(v);
    edges.push_back({remaining[0], remaining[1]});
    return edges;
}

// Independent reimplementation of the incremental procedure with a randomized
// choice among the vertices with positive pairing; used to check that the
// selection order never changes the result.
Cycle laufer_randomized(const DualGraph& g, SplitMix64& rng) {
    const int n = g.size();
    std::vector<long long> z(n, 1);
    while (true) {
        std::vector<int> positive;
        for (int i = 0; i < n; ++i)
            if (detail::row_pairing(g, z, i) > 0)
                positive.push_back(i);
        if (positive.empty())
            return detail::to_cycle(g, z);
        z[positive[rng.below(positive.size())]] += 1;
    }
}

} // namespace

DualGraph random_tree(SplitMix64& rng, int max_vertices, long long weight_min,
                      long long weight_max) {
    int n = static_cast<int>(rng.range(1, max_vertices));
    std::vector<VertexSpec> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back({"v" + std::to_string(i + 1), rng.range(weight_min, weight_max)});
    std::vector<EdgeSpec> es;
    if (n == 2) {
        es.push_back({"v1", "v2"});
    } else if (n > 2) {
        std::vector<int> seq(n - 2);
        for (auto& s : seq)
            s = static_cast<int>(rng.below(n));
        for (const auto& [a, b] : pruefer_decode(seq, n))
            es.push_back({vs[a].id, vs[b].id});
    }
    return DualGraph::build(vs, es);
}

std::vector<DualGraph> random_rational_graphs(std::uint64_t seed, int count, int max_vertices,
                                              long long weight_min, long long weight_max) {
    SplitMix64 rng(seed);
    std::vector<DualGraph> out;
    while (static_cast<int>(out.size()) < count) {
        DualGraph g = random_tree(rng, max_vertices, weight_min, weight_max);
        if (is_negative_definite(g) && is_rational(g))
            out.push_back(std::move(g));
    }
    return out;
}

IdentitySuiteResult run_identity_suite(std::uint64_t seed, int count, int max_vertices,
                                       long long weight_min, long long weight_max) {
    IdentitySuiteResult result;
    SplitMix64 rng(seed);
    while (result.graphs_checked < count) {
        result.attempts += 1;
        DualGraph g = random_tree(rng, max_vertices, weight_min, weight_max);
        if (!is_negative_definite(g) || !is_rational(g))
            continue;
        result.graphs_checked += 1;
        std::string tag = "graph #" + std::to_string(result.graphs_checked);
        try {
            Cycle z = fundamental_cycle(g);
            NumericInvariants inv = numeric_invariants(g, z);
            ComputationSequence seq = computation_sequence(g, z);

            if (chi_oz_2z(g, z, inv.e) == -2 * inv.e + 3)
                result.chi_oz_2z_passes += 1;
            if (chi_theta_z(g, seq) == -3 * inv.e + 7)
                result.chi_theta_passes += 1;
            if (lemma_e4_check(g) == inv.e - 4)
                result.e4_passes += 1;

            // Every step pairing is exactly 1 and the step count is total(Z) - 1.
            auto sums = partial_sums(seq);
            bool steps_ok = static_cast<long long>(seq.steps.size()) == z.total() - 1;
            for (size_t k = 0; k + 1 < sums.size() && steps_ok; ++k) {
                Cycle step;
                step.set(seq.steps[k], 1);
                steps_ok = pair(g, sums[k], step) == 1;
            }
            if (steps_ok)
                result.sequence_step_passes += 1;
            else
                result.failures.push_back(tag + ": a computation-sequence step pairing is not 1");

            bool genus_ok = true;
            for (const auto& sum : sums)
                if (arithmetic_genus(g, sum) != 0)
                    genus_ok = false;
            if (genus_ok)
                result.partial_genus_passes += 1;
            else
                result.failures.push_back(tag + ": a partial sum has nonzero genus");

            bool order_ok = true;
            for (int trial = 0; trial < 4; ++trial)
                if (!(laufer_randomized(g, rng) == z))
                    order_ok = false;
            if (order_ok)
                result.order_independence_passes += 1;
            else
                result.failures.push_back(tag + ": selection order changed the fundamental cycle");
        } catch (const std::exception& err) {
            result.failures.push_back(tag + ": " + err.what());
        }
    }
    return result;
}

} // namespace rsing
