#include "rsing/report.hpp"

#include <iomanip>
#include <sstream>

namespace rsing {

json c_status_json(const CStatus& c) {
    json out;
    if (c.known()) {
        out["kind"] = "known";
        out["value"] = c.value;
        out["rule"] = to_string(*c.rule);
        out["t2hat_zero"] = c.t2hat_zero;
    } else {
        out["kind"] = "undetermined";
        out["t2hat_zero"] = c.t2hat_zero;
        out["notes"] = c.notes;
    }
    return out;
}

std::string c_status_text(const CStatus& c) {
    if (c.known())
        return "known " + std::to_string(c.value) + " (" + to_string(*c.rule) + ")";
    std::string out = "undetermined";
    for (const auto& note : c.notes)
        out += "; " + note;
    return out;
}

namespace {

json total_json(const Total& t) {
    json out;
    if (t.exact) {
        out["kind"] = "exact";
        out["value"] = t.value;
    } else {
        out["kind"] = "lower_bound";
        out["lower_bound"] = t.value;
        out["undetermined_nodes"] = t.undetermined_nodes;
    }
    return out;
}

std::string total_text(const Total& t) {
    if (t.exact)
        return std::to_string(t.value) + " (exact)";
    std::string out = ">= " + std::to_string(t.value) + " (lower bound; undetermined at";
    for (const auto& node : t.undetermined_nodes)
        out += " " + node;
    return out + ")";
}

json cycle_map_json(const std::map<std::string, long long>& m) {
    json out = json::object();
    for (const auto& [id, n] : m)
        out[id] = n;
    return out;
}

} // namespace

json invariants_json(const InvariantsReport& report) {
    json out;
    out["e_root"] = report.e_root;
    out["mult_root"] = report.mult_root;
    out["t2"] = total_json(report.t2);
    out["t1_combinatorial"] = total_json(report.t1_combinatorial);
    out["t1_symbolic"] = report.t1_symbolic;
    out["djvs_applicable"] = report.djvs_applicable;
    out["per_node"] = json::array();
    for (const auto& row : report.per_node) {
        json r;
        r["node_id"] = row.node_id;
        r["vertices"] = row.vertices;
        r["e"] = row.e;
        r["mult"] = row.mult;
        r["reduced"] = row.reduced;
        r["c_status"] = c_status_json(row.c_status);
        out["per_node"].push_back(std::move(r));
    }
    out["checks"] = {{"chi_oz_2z", report.checks.chi_oz_2z},
                     {"chi_theta_z", report.checks.chi_theta_z},
                     {"e_minus_4", report.checks.e_minus_4},
                     {"nodes_checked", report.checks.nodes_checked},
                     {"ok", report.checks.ok}};
    if (report.minus_two_count)
        out["minus_two_count"] = *report.minus_two_count;
    return out;
}

std::string invariants_text(const InvariantsReport& report) {
    std::ostringstream out;
    out << "e_root:            " << report.e_root << "\n";
    out << "mult_root:         " << report.mult_root << "\n";
    out << "t2:                " << total_text(report.t2) << "\n";
    out << "t1_combinatorial:  " << total_text(report.t1_combinatorial) << "\n";
    out << "t1_symbolic:       + " << report.t1_symbolic << "\n";
    out << "djvs_applicable:   " << (report.djvs_applicable ? "yes" : "no") << "\n";
    if (report.minus_two_count)
        out << "minus_two_count:   " << *report.minus_two_count << "\n";
    out << "checks:            chi(O_Z(2Z)) = " << report.checks.chi_oz_2z
        << ", chi(Theta.O_Z(Z)) = " << report.checks.chi_theta_z
        << ", difference = " << report.checks.e_minus_4 << " = e - 4; "
        << report.checks.nodes_checked << " node(s) checked, "
        << (report.checks.ok ? "ok" : "FAILED") << "\n";
    out << "per_node:\n";
    out << "  " << std::left << std::setw(12) << "node" << std::setw(5) << "e" << std::setw(6)
        << "mult" << std::setw(9) << "reduced" << "c\n";
    for (const auto& row : report.per_node) {
        out << "  " << std::left << std::setw(12) << row.node_id << std::setw(5) << row.e
            << std::setw(6) << row.mult << std::setw(9) << (row.reduced ? "yes" : "no")
            << c_status_text(row.c_status) << "\n";
    }
    return out.str();
}

json cycle_json(const DualGraph& g, const Cycle& z, const NumericInvariants& inv,
                const ComputationSequence& seq) {
    json out;
    json zmap = json::object();
    for (int i = 0; i < g.size(); ++i)
        zmap[g.id(i)] = z.mult(g.id(i));
    out["Z"] = zmap;
    out["z_self"] = inv.z_self;
    out["e"] = inv.e;
    out["mult"] = inv.mult;
    out["reduced"] = inv.reduced;
    out["r"] = cycle_map_json(inv.r);
    out["computation_sequence"] = {{"start", seq.start}, {"steps", seq.steps}};
    return out;
}

std::string cycle_text(const DualGraph& g, const Cycle& z, const NumericInvariants& inv,
                       const ComputationSequence& seq) {
    std::ostringstream out;
    out << "Z:        ";
    for (int i = 0; i < g.size(); ++i)
        out << (i ? " + " : "") << z.mult(g.id(i)) << "*" << g.id(i);
    out << "\n";
    out << "Z^2:      " << inv.z_self << "\n";
    out << "e:        " << inv.e << "\n";
    out << "mult:     " << inv.mult << "\n";
    out << "reduced:  " << (inv.reduced ? "yes" : "no") << "\n";
    out << "r:        ";
    bool first = true;
    for (const auto& [id, r] : inv.r) {
        out << (first ? "" : ", ") << id << "=" << r;
        first = false;
    }
    out << "\n";
    out << "sequence: start " << seq.start << ", steps";
    if (seq.steps.empty())
        out << " (none)";
    for (const auto& s : seq.steps)
        out << " " << s;
    out << "\n";
    return out.str();
}

json graph_json(const DualGraph& g) {
    json out;
    out["vertices"] = json::array();
    for (int i = 0; i < g.size(); ++i)
        out["vertices"].push_back({{"id", g.id(i)}, {"b", g.weight(i)}});
    out["edges"] = json::array();
    for (const auto& [i, j] : g.edges())
        out["edges"].push_back({g.id(i), g.id(j)});
    return out;
}

json tower_json(const TowerNode& t) {
    json nodes = json::array();
    walk_tower(t, [&](const TowerNode& node, const std::string& path) {
        json row;
        row["node_id"] = path;
        row["vertices"] = node.vertex_set;
        row["e"] = node.inv.e;
        row["mult"] = node.inv.mult;
        row["reduced"] = node.inv.reduced;
        if (node.c_status)
            row["c_status"] = c_status_json(*node.c_status);
        nodes.push_back(std::move(row));
    });
    I4Sums sums = i4_sums(t);
    json i4_ids = json::array();
    walk_tower(t, [&](const TowerNode& node, const std::string& path) {
        if (node.inv.e >= 4)
            i4_ids.push_back(path);
    });
    json out;
    out["per_node"] = std::move(nodes);
    out["i4"] = {{"sum_e_minus_4", sums.sum_e_minus_4},
                 {"sum_t2_terms", sums.sum_t2_terms},
                 {"i4_nodes", std::move(i4_ids)}};
    return out;
}

std::string tower_text(const TowerNode& t) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "node" << std::setw(5) << "e" << std::setw(6) << "mult"
        << std::setw(9) << "reduced" << std::setw(24) << "vertices" << "c\n";
    walk_tower(t, [&](const TowerNode& node, const std::string& path) {
        std::string vertices;
        for (const auto& id : node.vertex_set)
            vertices += (vertices.empty() ? "" : ",") + id;
        out << std::left << std::setw(12) << path << std::setw(5) << node.inv.e << std::setw(6)
            << node.inv.mult << std::setw(9) << (node.inv.reduced ? "yes" : "no") << std::setw(24)
            << vertices << (node.c_status ? c_status_text(*node.c_status) : std::string("-"))
            << "\n";
    });
    I4Sums sums = i4_sums(t);
    out << "i4 sums: sum(e - 4) = " << sums.sum_e_minus_4 << ", sum((e - 2)(e - 4)) = "
        << sums.sum_t2_terms << " over " << sums.i4_nodes.size() << " node(s)\n";
    return out.str();
}

json identity_suite_json(const IdentitySuiteResult& r) {
    json out;
    out["graphs_checked"] = r.graphs_checked;
    out["attempts"] = r.attempts;
    out["chi_oz_2z_passes"] = r.chi_oz_2z_passes;
    out["chi_theta_passes"] = r.chi_theta_passes;
    out["e4_passes"] = r.e4_passes;
    out["sequence_step_passes"] = r.sequence_step_passes;
    out["partial_genus_passes"] = r.partial_genus_passes;
    out["order_independence_passes"] = r.order_independence_passes;
    out["failures"] = r.failures;
    out["ok"] = r.ok();
    return out;
}

std::string identity_suite_text(const IdentitySuiteResult& r) {
    std::ostringstream out;
    out << "rational graphs checked: " << r.graphs_checked << " (of " << r.attempts
        << " trees drawn)\n";
    out << "chi(O_Z(2Z)) = -2e + 3:            " << r.chi_oz_2z_passes << " passes\n";
    out << "chi(Theta.O_Z(Z)) = -3e + 7:       " << r.chi_theta_passes << " passes\n";
    out << "difference = e - 4:                " << r.e4_passes << " passes\n";
    out << "sequence steps all pair to 1:      " << r.sequence_step_passes << " passes\n";
    out << "partial sums all have genus 0:     " << r.partial_genus_passes << " passes\n";
    out << "selection-order independence:      " << r.order_independence_passes << " passes\n";
    if (r.ok()) {
        out << "all identities hold\n";
    } else {
        out << r.failures.size() << " FAILURE(S):\n";
        for (const auto& f : r.failures)
            out << "  " << f << "\n";
    }
    return out.str();
}

} // namespace rsing
