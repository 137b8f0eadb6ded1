#include "rsing/correction.hpp"

namespace rsing {

const char* to_string(CRule rule) {
    switch (rule) {
    case CRule::reduced_cycle:
        return "reduced_cycle";
    case CRule::xhat_smooth_formula:
        return "xhat_smooth_formula";
    }
    return "?";
}

long long c2_formula(const DualGraph& g, const Cycle& z) {
    auto zv = detail::to_vector(g, z);
    long long sum = 0;
    for (int i = 0; i < g.size(); ++i) {
        long long ri = -detail::row_pairing(g, zv, i);
        sum += (zv[i] - 1) * (g.weight(i) - 2 + ri);
    }
    return sum;
}

CStatus correction_term(const TowerNode& node) {
    const DualGraph& g = node.graph;
    if (!node.z.positive())
        throw InternalError("correction_term: node carries a zero cycle");
    bool reduced = node.z.reduced();
    bool xhat_smooth = true;
    for (const auto& [id, ri] : node.inv.r)
        if (ri == 0)
            xhat_smooth = false;

    CStatus status;
    // t2hat_zero: every singularity of the blow-up has e <= 4. Recompute the
    // contracted components here; the node's child list stops at e = 3.
    status.t2hat_zero = true;
    if (!xhat_smooth) {
        for (const auto& child : blow_down_children(g, node.z)) {
            if (numeric_invariants(child).e > 4) {
                status.t2hat_zero = false;
                break;
            }
        }
    }

    if (reduced) {
        status.kind = CStatus::Kind::known;
        status.value = 0;
        status.rule = CRule::reduced_cycle;
        return status;
    }
    if (xhat_smooth) {
        status.kind = CStatus::Kind::known;
        status.value = c2_formula(g, node.z);
        status.rule = CRule::xhat_smooth_formula;
        if (status.value <= 0)
            throw InternalError("correction_term: smooth blow-up with non-reduced Z "
                                "must give a positive value");
        return status;
    }
    status.kind = CStatus::Kind::undetermined;
    status.notes.push_back(status.t2hat_zero ? "c = h1(T^1_C(C))" : "c >= h1(T^1_C(C))");
    return status;
}

void annotate_tower(TowerNode& t) {
    walk_tower(t, [](TowerNode& node, const std::string&) {
        node.c_status = correction_term(node);
    });
}

bool c_positive_family_check(const DualGraph& g) {
    const int n = g.size();
    if (n < 4 || !g.connected())
        return false;
    if (static_cast<int>(g.edges().size()) != n - 1)
        return false; // not a tree
    int center = -1;
    for (int i = 0; i < n; ++i) {
        int d = g.degree(i);
        if (d > 3)
            return false;
        if (d == 3) {
            if (center >= 0)
                return false; // a second branch point
            center = i;
        }
    }
    if (center < 0 || g.weight(center) != 2)
        return false;
    for (int neighbor : g.neighbors(center)) {
        // Walk the arm away from the center.
        std::vector<int> arm{neighbor};
        int prev = center, cur = neighbor;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev)
                    next = w;
            if (next < 0)
                break;
            prev = cur;
            cur = next;
            arm.push_back(cur);
        }
        long long required = arm.size() == 1 ? 3 : 4;
        if (g.weight(arm.front()) < required)
            return false;
        for (size_t k = 0; k + 1 < arm.size(); ++k)
            if (g.weight(arm[k]) < 3)
                return false;
    }
    return true;
}

} // namespace rsing
