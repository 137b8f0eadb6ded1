#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsing/cstatus.hpp"
#include "rsing/fundamental.hpp"
#include "rsing/graph.hpp"

namespace rsing {

/// One singularity in the blow-down tower. `vertex_set` holds ids of the
/// ROOT graph, so every node's curves trace back to original exceptional
/// curves. `c_status` is filled by the correction module (annotate_tower).
struct TowerNode {
    std::vector<std::string> vertex_set;
    DualGraph graph;
    Cycle z;
    NumericInvariants inv;
    std::optional<CStatus> c_status;
    std::vector<TowerNode> children;
};

/// Configurations contracted when blowing up: connected components of the
/// subgraph induced on the vertices with Z.E_i = 0. An empty list means the
/// blow-up is smooth.
std::vector<DualGraph> blow_down_children(const DualGraph& g, const Cycle& z);

/// Full blow-down recursion tree. Recursion stops at nodes with no
/// zero-pairing vertices or with e = 3 (rational double points; all further
/// descendants are rational double points). Every node's graph is verified
/// connected, negative definite, with weights >= 2, and rational.
TowerNode build_tower(const DualGraph& g);

struct I4Sums {
    long long sum_e_minus_4 = 0;  // sum over e(v) >= 4 of (e(v) - 4)
    long long sum_t2_terms = 0;   // sum over e(v) >= 4 of (e(v) - 2)(e(v) - 4)
    std::vector<const TowerNode*> i4_nodes;
};

I4Sums i4_sums(const TowerNode& t);

/// Depth-first walk in child order; `path` is "root", "root.0", "root.0.1", ...
void walk_tower(const TowerNode& t,
                const std::function<void(const TowerNode&, const std::string& path)>& visit);
void walk_tower(TowerNode& t,
                const std::function<void(TowerNode&, const std::string& path)>& visit);

} // namespace rsing
