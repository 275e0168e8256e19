#pragma once

#include <random>
#include <utility>
#include <vector>

#include "chordcycles/graph.hpp"

namespace testutil {

// Independent chord oracle: count adjacent non-consecutive pairs directly,
// without the edge-count identity the library uses.
inline long long direct_cycle_chords(const chordcycles::Graph& g, const std::vector<int>& verts) {
    long long count = 0;
    int m = static_cast<int>(verts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (!consecutive && g.has_edge(verts[i], verts[j])) ++count;
        }
    return count;
}

inline long long direct_path_chords(const chordcycles::Graph& g, const std::vector<int>& verts) {
    long long count = 0;
    int m = static_cast<int>(verts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (g.has_edge(verts[i], verts[j])) ++count;
    return count;
}

inline chordcycles::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return chordcycles::Graph::build(n, edges);
}

inline chordcycles::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    while (true) {
        chordcycles::Graph g = random_graph(n, p, rng);
        if (g.is_connected()) return g;
    }
}

}  // namespace testutil
