#include "ltdkit/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "ltdkit/errors.hpp"

namespace ltdkit {

namespace vset {

bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

}  // namespace vset

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw usage_error("graph order must be non-negative");
    adj_.resize(n);
    rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw usage_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
        if (rows_[u].test(v)) continue;  // duplicate edge in input
        rows_[u].set(v);
        rows_[v].set(u);
    }
    for (int v = 0; v < n; ++v) {
        adj_[v] = rows_[v].to_vector();
        m_ += adj_[v].size();
    }
    m_ /= 2;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw usage_error("vertex out of range: " + std::to_string(v));
    return int(adj_[v].size());
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : int(adj_[0].size());
    for (int v = 1; v < n_; ++v) d = std::min<int>(d, int(adj_[v].size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max<int>(d, int(adj_[v].size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet SubGraph::to_orig(const VertexSet& s) const {
    VertexSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(orig[v]);
    return vset::normalized(out);
}

SubGraph induce(const Graph& g, const VertexSet& keep) {
    VertexSet vs = vset::normalized(keep);
    std::vector<int> idx(g.order(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order())
            throw usage_error("induce: vertex out of range");
        idx[vs[i]] = int(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : vs)
        for (int v : g.neighbors(u))
            if (u < v && idx[v] >= 0) edges.emplace_back(idx[u], idx[v]);
    SubGraph sub;
    sub.g = Graph(int(vs.size()), edges);
    sub.orig = vs;
    return sub;
}

SubGraph induce_without(const Graph& g, const VertexSet& drop) {
    VertexSet all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    return induce(g, vset::minus(all, vset::normalized(drop)));
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    Bitset seen(n);
    std::vector<int> stack{0};
    seen.set(0);
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen.test(v)) {
                seen.set(v);
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == n;
}

bool is_tree(const Graph& g) {
    return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace ltdkit
