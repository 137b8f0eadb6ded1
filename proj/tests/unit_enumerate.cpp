#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsing/enumerate.hpp"
#include "rsing/fundamental.hpp"
#include "rsing/graph_io.hpp"
#include "testutil.hpp"

using namespace rsing;
using namespace testutil;

namespace {

SearchParams params(int max_vertices, long long wmin, long long wmax,
                    bool require_rational = true) {
    SearchParams p;
    p.max_vertices = max_vertices;
    p.weight_min = wmin;
    p.weight_max = wmax;
    p.require_rational = require_rational;
    return p;
}

} // namespace

TEST_CASE("enumeration counts on small bounds") {
    CHECK(enumerate_trees(params(1, 2, 3)).size() == 2);
    // 2 singletons + 3 two-vertex trees + 6 three-vertex paths.
    CHECK(enumerate_trees(params(3, 2, 3, false)).size() == 11);

    auto two = enumerate_trees(params(2, 2, 2));
    REQUIRE(two.size() == 2);
    CHECK(isomorphic_bruteforce(two[0], single_vertex(2)));
    CHECK(isomorphic_bruteforce(two[1], chain({2, 2})));
}

TEST_CASE("no two emitted graphs are isomorphic") {
    auto graphs = enumerate_trees(params(4, 2, 3, false));
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(isomorphic_bruteforce(graphs[i], graphs[j]));
}

TEST_CASE("enumeration is complete: counts match brute-force isomorphism classes") {
    // Independent route: all labeled trees x all weight assignments, collapsed
    // with the permutation-based isomorphism oracle.
    for (int max_n = 1; max_n <= 4; ++max_n) {
        std::vector<DualGraph> classes;
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& edges : connected_graphs(n)) {
                if (static_cast<int>(edges.size()) != n - 1)
                    continue; // only trees
                std::vector<long long> weights(n, 2);
                while (true) {
                    DualGraph g = weighted_graph(edges, weights);
                    bool fresh = true;
                    for (const auto& known : classes)
                        if (isomorphic_bruteforce(known, g))
                            fresh = false;
                    if (fresh)
                        classes.push_back(g);
                    int pos = 0;
                    while (pos < n && weights[pos] == 3)
                        weights[pos++] = 2;
                    if (pos == n)
                        break;
                    weights[pos] += 1;
                }
            }
        }
        CHECK(enumerate_trees(params(max_n, 2, 3, false)).size() == classes.size());
    }
}

TEST_CASE("emitted graphs pass validation and the filters") {
    for (const auto& g : enumerate_trees(params(5, 2, 4))) {
        CHECK(g.connected());
        CHECK(is_negative_definite(g));
        CHECK(is_rational(g));
        CHECK(static_cast<int>(g.edges().size()) == g.size() - 1);
    }
}

TEST_CASE("enumeration is deterministic") {
    auto once = enumerate_trees(params(4, 2, 4));
    auto twice = enumerate_trees(params(4, 2, 4));
    REQUIRE(once.size() == twice.size());
    for (size_t i = 0; i < once.size(); ++i)
        CHECK(render_graph_file(once[i]) == render_graph_file(twice[i]));
}

TEST_CASE("canonical form identifies isomorphic weighted trees") {
    DualGraph relabeled = DualGraph::build({{"z", 3}, {"q", 2}, {"p", 3}, {"k", 3}},
                                           {{"q", "z"}, {"q", "p"}, {"q", "k"}});
    CHECK(canonical_form(star_233()) == canonical_form(relabeled));
    CHECK(canonical_form(star_233()) != canonical_form(star(3, {2, 3, 3})));
    CHECK(canonical_form(chain({2, 3})) == canonical_form(chain({3, 2})));
}

TEST_CASE("c-positive search finds exactly the standard counterexample at weights <= 3") {
    auto hits = search_c_positive(params(4, 2, 3));
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].c == 1);
    CHECK(hits[0].mult == 5);
    CHECK(isomorphic_bruteforce(hits[0].graph, star_233()));
    CHECK_FALSE(fundamental_cycle(hits[0].graph).reduced());
}

TEST_CASE("c-positive search on two vertices is empty") {
    CHECK(search_c_positive(params(2, 2, 6)).empty());
}

TEST_CASE("c-positive search at weights <= 4 includes the e = 7 example") {
    auto hits = search_c_positive(params(5, 2, 4));
    bool found = false;
    for (const auto& hit : hits)
        if (isomorphic_bruteforce(hit.graph, graph_e7())) {
            found = true;
            CHECK(hit.c == 1);
            CHECK(hit.mult == 6);
        }
    CHECK(found);
    // Sorted by multiplicity first.
    for (size_t i = 0; i + 1 < hits.size(); ++i)
        CHECK(hits[i].mult <= hits[i + 1].mult);
    for (const auto& hit : hits)
        CHECK_FALSE(fundamental_cycle(hit.graph).reduced());
}

TEST_CASE("minimal multiplicity example") {
    auto minimal = minimal_multiplicity_example(params(4, 2, 4));
    REQUIRE(minimal.has_value());
    CHECK(isomorphic_bruteforce(*minimal, star_233()));

    CHECK_FALSE(minimal_multiplicity_example(params(1, 2, 6)).has_value());
    CHECK_FALSE(minimal_multiplicity_example(params(3, 2, 6)).has_value());
}

TEST_CASE("search parameters are validated") {
    CHECK_THROWS_AS(enumerate_trees(params(0, 2, 3)), DomainError);
    CHECK_THROWS_AS(enumerate_trees(params(3, 1, 3)), DomainError);
    CHECK_THROWS_AS(enumerate_trees(params(3, 4, 3)), DomainError);
}
