#include "rsing/fundamental.hpp"

#include <algorithm>
#include <numeric>

namespace rsing {

using detail::row_pairing;
using detail::to_cycle;
using detail::to_vector;
using detail::vector_pairing;

Cycle fundamental_cycle(const DualGraph& g, long long max_steps) {
    detail::require_minimal_resolution(g, "fundamental_cycle");
    const int n = g.size();
    if (max_steps <= 0) {
        long long weight_sum = 0;
        for (int i = 0; i < n; ++i)
            weight_sum += g.weight(i);
        max_steps = weight_sum * n * n;
    }
    std::vector<long long> z(n, 1);
    long long increments = 0;
    while (true) {
        int pending = -1;
        for (int i = 0; i < n; ++i) {
            if (row_pairing(g, z, i) > 0) {
                pending = i;
                break;
            }
        }
        if (pending < 0)
            return to_cycle(g, z); // anti-nef: the scan found no positive pairing
        if (++increments > max_steps)
            throw DomainError("fundamental_cycle: iteration cap exceeded (" +
                              std::to_string(max_steps) +
                              " increments); preconditions violated?");
        z[pending] += 1;
    }
}

Cycle fundamental_cycle_oracle(const DualGraph& g, long long bound) {
    detail::require_minimal_resolution(g, "fundamental_cycle_oracle");
    if (bound < 1)
        throw DomainError("fundamental_cycle_oracle: bound must be >= 1");
    const int n = g.size();
    std::vector<long long> cur(n, 0);
    std::vector<long long> best;
    bool found = false;
    // Odometer over {0..bound}^n \ {0}.
    while (true) {
        int pos = 0;
        while (pos < n && cur[pos] == bound)
            cur[pos++] = 0;
        if (pos == n)
            break;
        cur[pos] += 1;
        bool anti_nef = true;
        for (int i = 0; i < n && anti_nef; ++i)
            if (row_pairing(g, cur, i) > 0)
                anti_nef = false;
        if (!anti_nef)
            continue;
        if (!found) {
            best = cur;
            found = true;
        } else {
            for (int i = 0; i < n; ++i)
                best[i] = std::min(best[i], cur[i]);
        }
    }
    if (!found)
        throw DomainError("fundamental_cycle_oracle: no anti-nef cycle with multiplicities <= " +
                          std::to_string(bound));
    for (int i = 0; i < n; ++i)
        if (row_pairing(g, best, i) > 0)
            throw InternalError("fundamental_cycle_oracle: componentwise minimum is not anti-nef");
    return to_cycle(g, best);
}

ComputationSequence computation_sequence(const DualGraph& g, const Cycle& z,
                                         const std::optional<std::string>& start) {
    const int n = g.size();
    auto target = to_vector(g, z);
    long long total = std::accumulate(target.begin(), target.end(), 0LL);
    if (total <= 0)
        throw DomainError("computation_sequence: cycle is zero");
    for (int i = 0; i < n; ++i)
        if (row_pairing(g, target, i) > 0)
            throw DomainError("computation_sequence: cycle is not anti-nef at vertex '" +
                              g.id(i) + "'");

    int start_index = -1;
    if (start) {
        start_index = g.index_of(*start);
        if (target[start_index] == 0)
            throw DomainError("computation_sequence: start vertex '" + *start +
                              "' is not in the support of Z");
    } else {
        for (int i = 0; i < n; ++i)
            if (target[i] > 0) {
                start_index = i;
                break;
            }
    }

    ComputationSequence seq;
    seq.start = g.id(start_index);
    std::vector<long long> cur(n, 0);
    cur[start_index] = 1;
    for (long long k = 1; k < total; ++k) {
        int chosen = -1;
        for (int i = 0; i < n; ++i) {
            if (cur[i] < target[i] && row_pairing(g, cur, i) >= 1) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0)
            throw DomainError("computation_sequence: no admissible step after " +
                              std::to_string(k - 1) +
                              " steps; graph is not rational or Z is not fundamental");
        long long pairing = row_pairing(g, cur, chosen);
        if (pairing != 1)
            throw DomainError("computation_sequence: step at vertex '" + g.id(chosen) +
                              "' has pairing " + std::to_string(pairing) +
                              " (rational graphs admit only pairing 1)");
        seq.steps.push_back(g.id(chosen));
        cur[chosen] += 1;
    }
    if (cur != target)
        throw InternalError("computation_sequence: final partial sum differs from Z");
    return seq;
}

std::vector<Cycle> partial_sums(const ComputationSequence& seq) {
    std::vector<Cycle> sums;
    Cycle acc;
    acc.set(seq.start, 1);
    sums.push_back(acc);
    for (const auto& id : seq.steps) {
        acc.set(id, acc.mult(id) + 1);
        sums.push_back(acc);
    }
    return sums;
}

bool is_rational(const DualGraph& g) {
    Cycle z = fundamental_cycle(g);
    return arithmetic_genus(g, z) == 0;
}

NumericInvariants numeric_invariants(const DualGraph& g) {
    return numeric_invariants(g, fundamental_cycle(g));
}

NumericInvariants numeric_invariants(const DualGraph& g, const Cycle& z) {
    if (arithmetic_genus(g, z) != 0)
        throw DomainError("numeric_invariants: graph is not rational (p_a(Z) = " +
                          std::to_string(arithmetic_genus(g, z)) + ")");
    NumericInvariants inv;
    auto zv = to_vector(g, z);
    inv.z_self = vector_pairing(g, zv, zv);
    inv.e = -inv.z_self + 1;
    inv.mult = -inv.z_self;
    inv.reduced = z.reduced();
    for (int i = 0; i < g.size(); ++i) {
        long long ri = -row_pairing(g, zv, i);
        if (ri < 0)
            throw InternalError("numeric_invariants: negative r at vertex '" + g.id(i) + "'");
        inv.r[g.id(i)] = ri;
    }
    inv.rational = true;
    return inv;
}

} // namespace rsing
