#include "rsing/graph.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

namespace rsing {

using boost::multiprecision::cpp_int;

DualGraph DualGraph::build(const std::vector<VertexSpec>& vertices,
                           const std::vector<EdgeSpec>& edges) {
    DualGraph g;
    for (const auto& v : vertices) {
        if (g.index_.count(v.id))
            throw GraphError("duplicate vertex id '" + v.id + "'");
        if (v.weight < 1)
            throw GraphError("vertex '" + v.id + "': weight must be >= 1, got " +
                             std::to_string(v.weight));
        g.index_.emplace(v.id, static_cast<int>(g.vertices_.size()));
        g.vertices_.push_back(v);
    }
    g.adjacency_.resize(g.vertices_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        auto ia = g.index_.find(e.a);
        if (ia == g.index_.end())
            throw GraphError("edge references unknown vertex '" + e.a + "'");
        auto ib = g.index_.find(e.b);
        if (ib == g.index_.end())
            throw GraphError("edge references unknown vertex '" + e.b + "'");
        if (ia->second == ib->second)
            throw GraphError("self-loop at vertex '" + e.a + "'");
        auto p = std::minmax(ia->second, ib->second);
        if (!seen.insert({p.first, p.second}).second)
            throw GraphError("duplicate edge '" + e.a + "'-'" + e.b + "'");
        g.edges_.push_back({p.first, p.second});
        g.adjacency_[p.first].push_back(p.second);
        g.adjacency_[p.second].push_back(p.first);
    }
    for (auto& adj : g.adjacency_)
        std::sort(adj.begin(), adj.end());
    return g;
}

bool DualGraph::has_vertex(const std::string& id) const {
    return index_.count(id) != 0;
}

int DualGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw GraphError("unknown vertex '" + id + "'");
    return it->second;
}

bool DualGraph::adjacent(int i, int j) const {
    const auto& adj = adjacency_[i];
    return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<std::string> DualGraph::ids() const {
    std::vector<std::string> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_)
        out.push_back(v.id);
    return out;
}

bool DualGraph::connected() const {
    if (vertices_.empty())
        return true;
    std::vector<char> visited(vertices_.size(), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == size();
}

Cycle::Cycle(std::initializer_list<std::pair<const std::string, long long>> init) {
    for (const auto& [id, n] : init)
        set(id, n);
}

void Cycle::set(const std::string& id, long long n) {
    if (n < 0)
        throw GraphError("cycle multiplicity of '" + id + "' must be >= 0, got " +
                         std::to_string(n));
    mult_[id] = n;
}

long long Cycle::mult(const std::string& id) const {
    auto it = mult_.find(id);
    return it == mult_.end() ? 0 : it->second;
}

bool Cycle::positive() const {
    for (const auto& [id, n] : mult_)
        if (n > 0)
            return true;
    return false;
}

bool Cycle::reduced() const {
    for (const auto& [id, n] : mult_)
        if (n > 1)
            return false;
    return true;
}

long long Cycle::total() const {
    long long t = 0;
    for (const auto& [id, n] : mult_)
        t += n;
    return t;
}

Cycle Cycle::operator+(const Cycle& other) const {
    Cycle out = *this;
    for (const auto& [id, n] : other.mult_)
        out.mult_[id] += n;
    return out;
}

namespace detail {

std::vector<long long> to_vector(const DualGraph& g, const Cycle& d) {
    std::vector<long long> v(g.size(), 0);
    for (const auto& [id, n] : d.entries())
        v[g.index_of(id)] = n; // index_of rejects foreign ids
    return v;
}

Cycle to_cycle(const DualGraph& g, const std::vector<long long>& v) {
    Cycle d;
    for (int i = 0; i < g.size(); ++i)
        d.set(g.id(i), v[i]);
    return d;
}

long long row_pairing(const DualGraph& g, const std::vector<long long>& v, int i) {
    long long s = -g.weight(i) * v[i];
    for (int j : g.neighbors(i))
        s += v[j];
    return s;
}

long long vector_pairing(const DualGraph& g, const std::vector<long long>& a,
                         const std::vector<long long>& b) {
    long long s = 0;
    for (int i = 0; i < g.size(); ++i)
        if (a[i] != 0)
            s += a[i] * row_pairing(g, b, i);
    return s;
}

void require_minimal_resolution(const DualGraph& g, const char* op) {
    if (g.empty())
        throw DomainError(std::string(op) + ": graph is empty");
    if (!g.connected())
        throw DomainError(std::string(op) + ": graph is disconnected");
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) < 2)
            throw DomainError(std::string(op) + ": vertex '" + g.id(i) +
                              "' has weight below 2 (minimal resolution requires b >= 2)");
    if (!is_negative_definite(g))
        throw DomainError(std::string(op) + ": intersection matrix is not negative definite");
}

} // namespace detail

long long pair(const DualGraph& g, const Cycle& d1, const Cycle& d2) {
    auto a = detail::to_vector(g, d1);
    auto b = detail::to_vector(g, d2);
    return detail::vector_pairing(g, a, b);
}

long long canonical_pair(const DualGraph& g, const Cycle& d) {
    auto v = detail::to_vector(g, d);
    long long s = 0;
    for (int i = 0; i < g.size(); ++i)
        s += v[i] * (g.weight(i) - 2);
    return s;
}

long long arithmetic_genus(const DualGraph& g, const Cycle& d) {
    if (!d.positive())
        throw DomainError("arithmetic_genus: cycle is zero");
    long long self = pair(g, d, d);
    long long kd = canonical_pair(g, d);
    if ((self + kd) % 2 != 0)
        throw InternalError("arithmetic_genus: D^2 + K.D is odd (D^2 = " +
                            std::to_string(self) + ", K.D = " + std::to_string(kd) + ")");
    return 1 + (self + kd) / 2;
}

bool is_negative_definite(const DualGraph& g) {
    const int n = g.size();
    if (n == 0)
        return true;
    // Fraction-free Bareiss elimination. At entry to step k, a[k][k] is the
    // leading principal minor det(M_{k+1}); negative definiteness needs
    // (-1)^(k+1) det(M_{k+1}) > 0 for all k.
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = -g.weight(i);
    for (const auto& [i, j] : g.edges())
        a[i][j] = a[j][i] = 1;

    cpp_int prev = 1;
    for (int k = 0; k < n; ++k) {
        const cpp_int& minor = a[k][k];
        bool sign_ok = (k % 2 == 0) ? (minor < 0) : (minor > 0);
        if (!sign_ok)
            return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

DualGraph induced_subgraph(const DualGraph& g, const std::vector<std::string>& keep) {
    std::set<int> kept;
    for (const auto& id : keep)
        kept.insert(g.index_of(id));
    std::vector<VertexSpec> vs;
    for (int i = 0; i < g.size(); ++i)
        if (kept.count(i))
            vs.push_back({g.id(i), g.weight(i)});
    std::vector<EdgeSpec> es;
    for (const auto& [i, j] : g.edges())
        if (kept.count(i) && kept.count(j))
            es.push_back({g.id(i), g.id(j)});
    return DualGraph::build(vs, es);
}

} // namespace rsing
