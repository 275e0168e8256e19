#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "chordcycles/coloring.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/patterns.hpp"

namespace chordcycles {

// BFS layering from a root: layers[i] is the set of vertices at distance
// exactly i (sorted); father maps each non-root reachable vertex to its
// lowest-id neighbour in the previous layer. Unreachable vertices appear in
// no layer and have father -1.
struct LayeredState {
    int root = -1;
    std::vector<std::vector<int>> layers;
    std::vector<int> father;  // indexed by vertex id, -1 where undefined

    // Layer index of v, or -1 if unreachable.
    int layer_of(int v) const;
};

LayeredState bfs_layers(const Graph& g, int root);

struct BestLayer {
    int index = 0;       // layer index >= 1
    int chi = 0;         // exact chromatic number of that layer
    std::vector<int> vertices;
};

// The layer i >= 1 maximizing chi(N_i(root)), lowest index on ties. For a
// connected graph on >= 2 vertices the value v satisfies 2v >= chi(g).
BestLayer best_layer(const Graph& g, int root, int size_cap = kDefaultSizeCap);

// One extraction step and the chain of steps. Vertex sets use the ids of the
// original graph throughout.
struct ExtractionStep {
    std::vector<int> vertices;  // V(G_i), sorted
    int chi = 0;                // exact chi(G_i)
    // Extraction details (absent for step 0 == the input graph):
    int root = -1;
    int layer_index = 0;
    LayeredState state;  // BFS layering of the component of G_{i-1} used
};

struct ExtractionChain {
    std::vector<ExtractionStep> steps;  // steps[0] is the whole graph
    bool bottomed_out = false;          // chain stopped before p steps
};

// Single extraction from the given root (graph must be connected, >= 2
// vertices): G_1 = induced subgraph on the best layer.
ExtractionStep extract_once(const Graph& g, int root, int size_cap = kDefaultSizeCap);

// Chain G_0 = g \supseteq G_1 \supseteq ... of length <= p with per-step
// exact halving certificates 2 * chi(G_i) >= chi(G_{i-1}). On a disconnected
// subgraph the step recurses into a component of maximum chromatic number
// (lowest-id component on ties). Bottoms out (flagged) at single vertices.
ExtractionChain extraction_sequence(const Graph& g, int p, int size_cap = kDefaultSizeCap);

// Path between two vertices of the same BFS layer obtained by chasing
// fathers until the two chains first meet or an edge appears between them.
// Induced except possibly the edge xy; interior lies strictly in earlier
// layers. Throws if x == y or the two are not in a common layer i >= 1.
PathWitness unimodal_path(const Graph& g, const LayeredState& state, int x, int y);

// True iff the vertices of p other than its ends and their path-neighbours
// send no edges to q.
bool check_noninterference(const Graph& g, const PathWitness& p, const PathWitness& q,
                           std::pair<int, int> ends_p, std::pair<int, int> ends_q);

// Certificate that u sends at most 8*sqrt(k) edges to the path.
struct EdgeBoundCertificate {
    int u = -1;
    std::vector<std::pair<int, int>> edges;  // all (u, p) edges into the path
    long long k = 0;
    long long bound = 0;  // floor(8 * sqrt(k))
};

// Resolution procedure for a vertex u meeting an induced biclique K and a
// unimodal path P starting in K: either u sends at most 8*sqrt(k) edges to P
// (certificate), or a cycle with exactly k chords is constructed from a path
// through K, a prefix of P, and u. Every returned cycle is re-verified.
std::variant<Cycle, EdgeBoundCertificate> resolve_biclique_path_overlap(
    const Graph& g, const BicliqueWitness& K, const PathWitness& P, int u, long long k);

}  // namespace chordcycles
