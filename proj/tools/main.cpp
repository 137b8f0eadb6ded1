#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>

#include "rsing/correction.hpp"
#include "rsing/enumerate.hpp"
#include "rsing/fundamental.hpp"
#include "rsing/graph_io.hpp"
#include "rsing/invariants.hpp"
#include "rsing/report.hpp"
#include "rsing/selftest.hpp"
#include "rsing/tower.hpp"

namespace {

// Exit codes: 0 report produced, 1 usage or parse error, 2 domain rejection
// (non-rational, not negative definite, weight below 2, ...), 3 violated
// internal identity (a bug, never a user error).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInternal = 3;

rsing::DualGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw rsing::GraphError("cannot open file '" + path + "'");
    return rsing::parse_graph_file(in);
}

void print(const rsing::json& j, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_validate(const std::string& path, const std::string& format) {
    rsing::DualGraph g = load_graph(path);
    bool connected = !g.empty() && g.connected();
    bool weights_ok = true;
    std::string reason;
    if (g.empty())
        reason = "graph is empty";
    else if (!connected)
        reason = "graph is disconnected";
    for (int i = 0; i < g.size() && weights_ok; ++i) {
        if (g.weight(i) < 2) {
            weights_ok = false;
            if (reason.empty())
                reason = "vertex '" + g.id(i) + "' has weight below 2";
        }
    }
    bool negative_definite = rsing::is_negative_definite(g);
    if (!negative_definite && reason.empty())
        reason = "intersection matrix is not negative definite";
    bool rational =
        connected && weights_ok && negative_definite && rsing::is_rational(g);
    if (!rational && reason.empty())
        reason = "graph is not rational (p_a(Z) != 0)";
    bool valid = connected && weights_ok && negative_definite && rational;
    rsing::json j{{"valid", valid},
                  {"connected", connected},
                  {"weights_ok", weights_ok},
                  {"negative_definite", negative_definite},
                  {"rational", rational}};
    std::ostringstream text;
    text << "connected:           " << (connected ? "yes" : "no") << "\n"
         << "weights >= 2:        " << (weights_ok ? "yes" : "no") << "\n"
         << "negative definite:   " << (negative_definite ? "yes" : "no") << "\n"
         << "rational:            " << (rational ? "yes" : "no") << "\n"
         << "valid:               " << (valid ? "yes" : "no") << "\n";
    print(j, text.str(), format);
    if (!valid) {
        std::cerr << "rejected: " << (reason.empty() ? "graph fails validation" : reason) << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

int run_cycle(const std::string& path, const std::string& format) {
    rsing::DualGraph g = load_graph(path);
    rsing::Cycle z = rsing::fundamental_cycle(g);
    rsing::NumericInvariants inv = rsing::numeric_invariants(g, z);
    rsing::ComputationSequence seq = rsing::computation_sequence(g, z);
    print(rsing::cycle_json(g, z, inv, seq), rsing::cycle_text(g, z, inv, seq), format);
    return kExitOk;
}

int run_tower(const std::string& path, const std::string& format) {
    rsing::DualGraph g = load_graph(path);
    rsing::TowerNode t = rsing::build_tower(g);
    rsing::annotate_tower(t);
    print(rsing::tower_json(t), rsing::tower_text(t), format);
    return kExitOk;
}

int run_invariants(const std::string& path, const std::string& format) {
    rsing::DualGraph g = load_graph(path);
    rsing::TowerNode t = rsing::build_tower(g);
    rsing::annotate_tower(t);
    rsing::InvariantsReport report = rsing::assemble_report(t);
    print(rsing::invariants_json(report), rsing::invariants_text(report), format);
    return kExitOk;
}

int run_enumerate(const rsing::SearchParams& params, const std::string& format) {
    rsing::json graphs = rsing::json::array();
    std::ostringstream text;
    int count = 0;
    if (params.filter == rsing::SearchFilter::c_positive) {
        for (const auto& hit : rsing::search_c_positive(params)) {
            ++count;
            rsing::json entry = rsing::graph_json(hit.graph);
            entry["c"] = hit.c;
            entry["mult"] = hit.mult;
            graphs.push_back(std::move(entry));
            text << "# graph " << count << ": c=" << hit.c << " mult=" << hit.mult << "\n"
                 << rsing::render_graph_file(hit.graph) << "\n";
        }
    } else {
        rsing::enumerate_trees(params, [&](const rsing::DualGraph& g) {
            ++count;
            rsing::json entry = rsing::graph_json(g);
            text << "# graph " << count;
            if (rsing::is_rational(g)) {
                rsing::TowerNode root = rsing::build_tower(g);
                rsing::annotate_tower(root);
                entry["rational"] = true;
                entry["e"] = root.inv.e;
                entry["mult"] = root.inv.mult;
                entry["c_status"] = rsing::c_status_json(*root.c_status);
                text << ": e=" << root.inv.e << " mult=" << root.inv.mult
                     << " c=" << rsing::c_status_text(*root.c_status);
            } else {
                entry["rational"] = false;
                text << ": not rational";
            }
            graphs.push_back(std::move(entry));
            text << "\n" << rsing::render_graph_file(g) << "\n";
        });
    }
    text << "# " << count << " graph(s)\n";
    rsing::json j{{"count", count}, {"graphs", std::move(graphs)}};
    print(j, text.str(), format);
    return kExitOk;
}

int run_check_identities(std::uint64_t seed, int count, const std::string& format) {
    rsing::IdentitySuiteResult result = rsing::run_identity_suite(seed, count, 8, 2, 6);
    print(rsing::identity_suite_json(result), rsing::identity_suite_text(result), format);
    return result.ok() ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of rational surface singularities from weighted resolution graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file;
    auto* validate_cmd =
        app.add_subcommand("validate", "check a graph file: build, definiteness, rationality");
    auto* cycle_cmd =
        app.add_subcommand("cycle", "fundamental cycle, e, mult, r, computation sequence");
    auto* tower_cmd = app.add_subcommand("tower", "blow-down tower with per-node invariants");
    auto* invariants_cmd =
        app.add_subcommand("invariants", "full T^1/T^2 report with identity checks");
    for (auto* cmd : {validate_cmd, cycle_cmd, tower_cmd, invariants_cmd})
        cmd->add_option("file", file, "graph file")->required();

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "enumerate weighted trees up to isomorphism");
    rsing::SearchParams params;
    params.weight_max = 6;
    std::string filter_name = "all";
    bool include_non_rational = false;
    enumerate_cmd->add_option("--max-vertices", params.max_vertices, "maximum vertex count")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    enumerate_cmd->add_option("--wmin", params.weight_min, "minimum weight (at least 2)")
        ->check(CLI::Range(2LL, std::numeric_limits<long long>::max()))
        ->capture_default_str();
    enumerate_cmd->add_option("--wmax", params.weight_max, "maximum weight")
        ->check(CLI::Range(2LL, std::numeric_limits<long long>::max()))
        ->capture_default_str();
    enumerate_cmd->add_option("--filter", filter_name, "all, c_positive, or undetermined_c")
        ->check(CLI::IsMember({"all", "c_positive", "undetermined_c"}))
        ->capture_default_str();
    enumerate_cmd->add_flag("--include-non-rational", include_non_rational,
                            "keep negative-definite trees that are not rational");

    auto* check_cmd = app.add_subcommand(
        "check-identities", "random-suite self-test of the Euler characteristic identities");
    std::uint64_t seed = 1;
    int suite_count = 200;
    check_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    check_cmd->add_option("--count", suite_count, "number of rational graphs to check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate_cmd)
            return run_validate(file, format);
        if (*cycle_cmd)
            return run_cycle(file, format);
        if (*tower_cmd)
            return run_tower(file, format);
        if (*invariants_cmd)
            return run_invariants(file, format);
        if (*enumerate_cmd) {
            if (filter_name == "c_positive")
                params.filter = rsing::SearchFilter::c_positive;
            else if (filter_name == "undetermined_c")
                params.filter = rsing::SearchFilter::undetermined_c;
            params.require_rational = !include_non_rational;
            return run_enumerate(params, format);
        }
        if (*check_cmd)
            return run_check_identities(seed, suite_count, format);
    } catch (const rsing::InternalError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    } catch (const rsing::DomainError& err) {
        std::cerr << "rejected: " << err.what() << "\n";
        return kExitDomain;
    } catch (const rsing::GraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
