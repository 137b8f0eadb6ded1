#include "rsing/invariants.hpp"

namespace rsing {

using boost::multiprecision::cpp_int;

long long chi_oz_2z(const DualGraph& g, const Cycle& z, long long e) {
    long long value = 2 * pair(g, z, z) + 1;
    if (value != -2 * e + 3)
        throw InternalError("chi_oz_2z: 2Z^2 + 1 = " + std::to_string(value) +
                            " but -2e + 3 = " + std::to_string(-2 * e + 3));
    return value;
}

long long chi_theta_z(const DualGraph& g, const ComputationSequence& seq) {
    // Step recursion: the start contributes 3(2 - b) - 2, later steps 3(2 - b).
    long long recursion = 3 * (2 - g.weight(g.index_of(seq.start))) - 2;
    Cycle z;
    z.set(seq.start, 1);
    for (const auto& id : seq.steps) {
        recursion += 3 * (2 - g.weight(g.index_of(id)));
        z.set(id, z.mult(id) + 1);
    }
    long long e = -pair(g, z, z) + 1;
    long long closed_form = -3 * e + 7;
    if (recursion != closed_form)
        throw InternalError("chi_theta_z: step recursion gives " + std::to_string(recursion) +
                            " but the closed form -3e + 7 = " + std::to_string(closed_form));
    return recursion;
}

long long lemma_e4_check(const DualGraph& g) {
    Cycle z = fundamental_cycle(g);
    NumericInvariants inv = numeric_invariants(g, z);
    ComputationSequence seq = computation_sequence(g, z);
    long long difference = chi_oz_2z(g, z, inv.e) - chi_theta_z(g, seq);
    if (difference != inv.e - 4)
        throw InternalError("lemma_e4_check: difference " + std::to_string(difference) +
                            " != e - 4 = " + std::to_string(inv.e - 4));
    return difference;
}

cpp_int expected_betti(long long e, long long i) {
    if (e < 4)
        throw DomainError("expected_betti: requires e >= 4, got " + std::to_string(e));
    if (i < 1 || i > e - 2)
        throw DomainError("expected_betti: index " + std::to_string(i) +
                          " out of range 1..e-2 for e = " + std::to_string(e));
    // C(e-1, i+1), exact.
    cpp_int binom = 1;
    for (long long k = 1; k <= i + 1; ++k) {
        binom *= (e - 1) - (i + 1) + k;
        binom /= k;
    }
    return i * binom;
}

long long minus_two_count(const DualGraph& g, const Cycle& z) {
    if (!z.reduced())
        throw DomainError("minus_two_count: fundamental cycle is not reduced");
    long long count = 0;
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) == 2)
            ++count;
    return count;
}

namespace {

/// Lower bound for an undetermined c. When the image curve on the blow-up is
/// non-reduced (some uncontracted vertex has n_i >= 2) the bound is 1, the
/// smooth-blow-up formula restricted to the uncontracted components; otherwise
/// only c >= 0 is claimed.
long long undetermined_c_lower_bound(const TowerNode& node) {
    for (const auto& [id, n] : node.z.entries())
        if (n >= 2 && node.inv.r.at(id) > 0)
            return 1;
    return 0;
}

} // namespace

InvariantsReport assemble_report(const TowerNode& t) {
    InvariantsReport report;
    report.e_root = t.inv.e;
    report.mult_root = t.inv.mult;
    report.djvs_applicable = true;

    walk_tower(t, [&](const TowerNode& node, const std::string& path) {
        if (!node.c_status)
            throw DomainError("assemble_report: node " + path + " has no c_status");
        const CStatus& c = *node.c_status;
        if (c.known() && c.value < 0)
            throw InternalError("assemble_report: negative known c at " + path);

        PerNodeRow row;
        row.node_id = path;
        row.vertices = node.vertex_set;
        row.e = node.inv.e;
        row.mult = node.inv.mult;
        row.reduced = node.inv.reduced;
        row.c_status = c;
        report.per_node.push_back(std::move(row));

        if (!node.inv.reduced)
            report.djvs_applicable = false;

        if (node.inv.e >= 4) {
            report.t2.value += (node.inv.e - 2) * (node.inv.e - 4);
            report.t1_combinatorial.value += node.inv.e - 4;
            if (c.known()) {
                report.t2.value += c.value;
                report.t1_combinatorial.value += c.value;
            } else {
                long long bound = undetermined_c_lower_bound(node);
                report.t2.exact = false;
                report.t2.value += bound;
                report.t2.undetermined_nodes.push_back(path);
                report.t1_combinatorial.exact = false;
                report.t1_combinatorial.value += bound;
                report.t1_combinatorial.undetermined_nodes.push_back(path);
            }
        }

        // The chi identities run at every node; any failure aborts the report.
        ComputationSequence seq = computation_sequence(node.graph, node.z);
        long long chi1 = chi_oz_2z(node.graph, node.z, node.inv.e);
        long long chi2 = chi_theta_z(node.graph, seq);
        long long diff = chi1 - chi2;
        if (diff != node.inv.e - 4)
            throw InternalError("assemble_report: e - 4 identity fails at " + path);
        if (path == "root") {
            report.checks.chi_oz_2z = chi1;
            report.checks.chi_theta_z = chi2;
            report.checks.e_minus_4 = diff;
        }
        report.checks.nodes_checked += 1;
    });

    report.checks.ok = true;
    if (report.t2.exact && report.e_root >= 4 &&
        report.t2.value < (report.e_root - 2) * (report.e_root - 4))
        throw InternalError("assemble_report: T^2 total below the root term");
    if (t.inv.reduced)
        report.minus_two_count = minus_two_count(t.graph, t.z);
    return report;
}

} // namespace rsing
