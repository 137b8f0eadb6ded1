#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rsing/cstatus.hpp"
#include "rsing/fundamental.hpp"
#include "rsing/graph.hpp"
#include "rsing/tower.hpp"

namespace rsing {

/// The literal symbolic term carried in every T^1 total.
inline constexpr const char* kT1SymbolicTerm = "h1(Theta_minimal_resolution)";

/// chi(O_Z(2Z)) = 2 Z^2 + 1 by Riemann-Roch; asserts it equals -2e + 3.
long long chi_oz_2z(const DualGraph& g, const Cycle& z, long long e);

/// chi(Theta tensor O_Z(Z)) computed two ways: the step recursion over a
/// computation sequence (3(2 - b) per step, start shifted by -2) and the
/// closed form -3e + 7. Asserts the two agree and returns the value.
long long chi_theta_z(const DualGraph& g, const ComputationSequence& seq);

/// chi(O_Z(2Z)) - chi(Theta tensor O_Z(Z)); asserts it equals e - 4.
long long lemma_e4_check(const DualGraph& g);

/// Expected Betti number b_i = i * C(e-1, i+1) of the minimal resolution of
/// the local ring. Requires e >= 4 and 1 <= i <= e - 2.
boost::multiprecision::cpp_int expected_betti(long long e, long long i);

/// Number of (-2) vertices; requires Z reduced.
long long minus_two_count(const DualGraph& g, const Cycle& z);

/// An exact total or a lower bound with the nodes whose c is undetermined.
struct Total {
    bool exact = true;
    long long value = 0; // the exact value, or the lower bound
    std::vector<std::string> undetermined_nodes;
};

struct PerNodeRow {
    std::string node_id;
    std::vector<std::string> vertices;
    long long e = 0;
    long long mult = 0;
    bool reduced = false;
    CStatus c_status;
};

/// Root-level results of the chi identities; assembled only after every
/// node of the tower passed them.
struct IdentityChecks {
    long long chi_oz_2z = 0;
    long long chi_theta_z = 0;
    long long e_minus_4 = 0;
    int nodes_checked = 0;
    bool ok = false;
};

struct InvariantsReport {
    long long e_root = 0;
    long long mult_root = 0;
    Total t2;
    Total t1_combinatorial; // the full T^1 adds the symbolic term below
    std::string t1_symbolic = kT1SymbolicTerm;
    bool djvs_applicable = false; // every tower node has reduced Z
    std::vector<PerNodeRow> per_node;
    IdentityChecks checks;
    std::optional<long long> minus_two_count; // present iff root Z reduced
};

/// Assembles the T^1/T^2 totals over an annotated tower:
///   T^2 = sum over e(v) >= 4 of [(e(v)-2)(e(v)-4) + c(v)]
///   T^1 = sum over e(v) >= 4 of [(e(v)-4) + c(v)] + h1(Theta_minimal_resolution)
/// Exact when every such node has known c; otherwise a lower bound with the
/// undetermined nodes listed. Throws if any node lacks its c_status.
InvariantsReport assemble_report(const TowerNode& t);

} // namespace rsing
