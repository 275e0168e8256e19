#pragma once

#include <utility>
#include <vector>

namespace chordcycles {

// Finite simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are sorted and deduplicated; instances are immutable after
// construction, so all queries are safe for concurrent read-only use.
class Graph {
public:
    Graph() = default;

    // Builds a graph with exactly the given edges (duplicates collapse).
    // Throws std::invalid_argument on out-of-range ids or self-loops.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int n);
    // Sides [0, l) and [l, l + r).
    static Graph complete_bipartite(int l, int r);
    static Graph cycle_graph(int n);
    static Graph path_graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph re-indexed to 0..k-1 in the order given.
    // `vertices` must be distinct, in range.
    Graph induced(const std::vector<int>& vertices) const;

    // Number of edges with both ends in `vertices` (distinct, in range).
    long long induced_edge_count(const std::vector<int>& vertices) const;

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

}  // namespace chordcycles
