#include "chordcycles/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordcycles {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += static_cast<long long>(nbrs.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build(n, edges);
}

Graph Graph::complete_bipartite(int l, int r) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < l; ++u)
        for (int v = 0; v < r; ++v) edges.emplace_back(u, l + v);
    return build(l + r, edges);
}

Graph Graph::cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return build(n, edges);
}

Graph Graph::path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return build(n, edges);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
        if (index[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        index[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int w : adj_[v])
            if (index[w] != -1 && v < w) edges.emplace_back(index[v], index[w]);
    return build(static_cast<int>(vertices.size()), edges);
}

long long Graph::induced_edge_count(const std::vector<int>& vertices) const {
    std::vector<char> in_set(vertex_count(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
        if (in_set[v]) throw std::invalid_argument("duplicate vertex in induced set");
        in_set[v] = 1;
    }
    long long count = 0;
    for (int v : vertices)
        for (int w : adj_[v])
            if (in_set[w]) ++count;
    return count / 2;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == n;
}

}  // namespace chordcycles
