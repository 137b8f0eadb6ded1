#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsing/graph.hpp"

namespace rsing {

enum class SearchFilter { all, c_positive, undetermined_c };

struct SearchParams {
    int max_vertices = 1;
    long long weight_min = 2;
    long long weight_max = 2;
    bool require_rational = true;
    SearchFilter filter = SearchFilter::all;
};

/// Canonical form of a weighted tree: the minimal centroid-rooted encoding.
/// Equal strings <=> isomorphic weighted trees. Requires a connected tree.
std::string canonical_form(const DualGraph& g);

/// Streams every connected weighted tree with at most max_vertices vertices
/// and weights in [weight_min, weight_max], exactly once up to isomorphism,
/// restricted to negative-definite graphs and (when require_rational) rational
/// ones. Emission order: vertex count, then canonical form. Vertices of the
/// emitted graphs are labeled v1, v2, ... in canonical preorder.
void enumerate_trees(const SearchParams& params,
                     const std::function<void(const DualGraph&)>& emit);
std::vector<DualGraph> enumerate_trees(const SearchParams& params);

struct CPositiveHit {
    DualGraph graph;
    long long c = 0;
    long long mult = 0;
};

/// All enumerated rational trees whose root correction term is known and
/// positive, sorted by (multiplicity, vertex count, canonical form).
std::vector<CPositiveHit> search_c_positive(SearchParams params);

/// The lowest-multiplicity hit of search_c_positive within the bounds.
std::optional<DualGraph> minimal_multiplicity_example(const SearchParams& params);

} // namespace rsing
