#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsing/graph.hpp"

namespace rsing {

/// Deterministic 64-bit generator (splitmix64). Self-contained so that seeded
/// runs reproduce bit-for-bit across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform draw in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Random weighted tree on 1..max_vertices vertices (uniform size, uniform
/// weights in [weight_min, weight_max]); edges from a random Pruefer sequence.
DualGraph random_tree(SplitMix64& rng, int max_vertices, long long weight_min,
                      long long weight_max);

/// Draws random trees until `count` rational ones have been collected.
std::vector<DualGraph> random_rational_graphs(std::uint64_t seed, int count, int max_vertices,
                                              long long weight_min, long long weight_max);

struct IdentitySuiteResult {
    int graphs_checked = 0;
    int attempts = 0; // trees drawn, including non-rational rejects
    int chi_oz_2z_passes = 0;
    int chi_theta_passes = 0;
    int e4_passes = 0;
    int sequence_step_passes = 0;  // every step pairing exactly 1
    int partial_genus_passes = 0;  // p_a(Z_k) = 0 for every partial sum
    int order_independence_passes = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Runs the chi identities, the computation-sequence properties, and the
/// order-independence of the incremental fundamental-cycle procedure over a
/// seeded random suite of rational graphs. Failures are collected, not thrown.
IdentitySuiteResult run_identity_suite(std::uint64_t seed, int count, int max_vertices,
                                       long long weight_min, long long weight_max);

} // namespace rsing
