#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsing {

/// Malformed graph data or a cycle referring to vertices outside its graph.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (disconnected,
/// not negative definite, weight below 2, not rational, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A violated internal identity. Signals a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct VertexSpec {
    std::string id;
    long long weight = 0; // b = -E^2
};

struct EdgeSpec {
    std::string a;
    std::string b;
};

/// Weighted dual resolution graph: one vertex per exceptional curve E_i,
/// vertex weight b_i = -E_i^2, an edge for each transverse intersection.
/// Simple graph, weights >= 1. Vertex order is declaration order and is
/// the row/column order of the intersection matrix.
class DualGraph {
public:
    DualGraph() = default;

    /// Validates and builds. Throws GraphError naming the offending token on
    /// duplicate vertex ids, unknown edge endpoints, self-loops, duplicate
    /// edges, or weights below 1.
    static DualGraph build(const std::vector<VertexSpec>& vertices,
                           const std::vector<EdgeSpec>& edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }

    const std::string& id(int i) const { return vertices_[i].id; }
    long long weight(int i) const { return vertices_[i].weight; }

    bool has_vertex(const std::string& id) const;
    /// Index of a vertex id; throws GraphError for unknown ids.
    int index_of(const std::string& id) const;

    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
    int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
    bool adjacent(int i, int j) const;

    /// Edges as index pairs (i < j), in declaration order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<std::string> ids() const;

    bool connected() const;

private:
    std::vector<VertexSpec> vertices_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Divisor supported on the exceptional set: vertex id -> multiplicity n_i >= 0.
/// A value type; operations taking a graph check every key against it.
class Cycle {
public:
    Cycle() = default;
    Cycle(std::initializer_list<std::pair<const std::string, long long>> init);

    /// Sets a multiplicity. Throws GraphError on negative values.
    void set(const std::string& id, long long n);
    /// Multiplicity of a vertex, 0 when absent.
    long long mult(const std::string& id) const;

    bool positive() const; // some n_i > 0
    bool is_zero() const { return !positive(); }
    /// All nonzero multiplicities equal 1.
    bool reduced() const;
    long long total() const; // sum of multiplicities

    const std::map<std::string, long long>& entries() const { return mult_; }

    Cycle operator+(const Cycle& other) const;
    bool operator==(const Cycle& other) const { return mult_ == other.mult_; }

private:
    std::map<std::string, long long> mult_;
};

/// Intersection pairing D1 . D2 of two cycles on g. Symmetric and bilinear.
long long pair(const DualGraph& g, const Cycle& d1, const Cycle& d2);

/// Canonical degree K . D = sum n_i (b_i - 2), by adjunction on rational curves.
long long canonical_pair(const DualGraph& g, const Cycle& d);

/// Arithmetic genus p_a(D) = 1 + (D^2 + K.D)/2 of a positive cycle.
/// Throws DomainError on the zero cycle and InternalError if D^2 + K.D is odd.
long long arithmetic_genus(const DualGraph& g, const Cycle& d);

/// Exact negative-definiteness test of the intersection matrix via signs of
/// leading principal minors, computed in arbitrary-precision integers.
bool is_negative_definite(const DualGraph& g);

/// Subgraph induced on `keep`, weights preserved, declaration order inherited.
DualGraph induced_subgraph(const DualGraph& g, const std::vector<std::string>& keep);

namespace detail {

/// Multiplicity vector in graph index order; rejects foreign vertex ids.
std::vector<long long> to_vector(const DualGraph& g, const Cycle& d);
Cycle to_cycle(const DualGraph& g, const std::vector<long long>& v);

/// E_i . D for D given as an index-order multiplicity vector.
long long row_pairing(const DualGraph& g, const std::vector<long long>& v, int i);
/// a^T M b for the intersection matrix M.
long long vector_pairing(const DualGraph& g, const std::vector<long long>& a,
                         const std::vector<long long>& b);

/// Throws DomainError unless g is nonempty, connected, all weights >= 2,
/// and negative definite. `op` names the operation for the message.
void require_minimal_resolution(const DualGraph& g, const char* op);

} // namespace detail

} // namespace rsing
