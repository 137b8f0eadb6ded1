#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsing/graph.hpp"

namespace rsing {

/// Numeric invariants attached to the fundamental cycle Z of a rational graph.
struct NumericInvariants {
    long long z_self = 0; // Z^2
    long long e = 0;      // embedding dimension, -Z^2 + 1
    long long mult = 0;   // multiplicity, -Z^2
    bool reduced = false;
    std::map<std::string, long long> r; // r_i = -Z.E_i
    bool rational = false;
};

/// Laufer computation sequence Z_0 = E_start, Z_k = Z_{k-1} + E_{steps[k-1]},
/// ending at Z. On rational graphs every step satisfies Z_{k-1}.E_{i_k} = 1.
struct ComputationSequence {
    std::string start;
    std::vector<std::string> steps;
};

/// Fundamental cycle: the smallest positive cycle Z with Z.E_i <= 0 for all i,
/// computed by the incremental procedure from the reduced full-support cycle.
/// `max_steps` caps the iteration (0 means the default sum(b_i) * |V|^2).
/// Requires g nonempty, connected, negative definite, all weights >= 2.
Cycle fundamental_cycle(const DualGraph& g, long long max_steps = 0);

/// Brute-force oracle: exhaustively enumerates positive cycles with n_i <= bound
/// satisfying D.E_i <= 0 for all i and returns their componentwise minimum.
/// Throws DomainError when no such cycle exists within the bound.
Cycle fundamental_cycle_oracle(const DualGraph& g, long long bound);

/// Computation sequence for the fundamental cycle Z, starting from `start`
/// (default: first vertex of the support in declaration order). Steps pick the
/// first vertex in declaration order that is below its target multiplicity and
/// has current pairing >= 1; a chosen step pairing above 1 or a dead end is
/// reported as an error, signalling non-rational input.
ComputationSequence computation_sequence(const DualGraph& g, const Cycle& z,
                                         const std::optional<std::string>& start = std::nullopt);

/// Partial sums Z_0, ..., Z_l = Z of a computation sequence.
std::vector<Cycle> partial_sums(const ComputationSequence& seq);

/// Artin's criterion: p_a(Z) = 0 for the fundamental cycle.
bool is_rational(const DualGraph& g);

NumericInvariants numeric_invariants(const DualGraph& g);
/// Same, reusing an already computed fundamental cycle.
NumericInvariants numeric_invariants(const DualGraph& g, const Cycle& z);

} // namespace rsing
