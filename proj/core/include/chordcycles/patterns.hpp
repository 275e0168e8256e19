#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chordcycles/graph.hpp"

namespace chordcycles {

struct BicliqueWitness {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// Exhaustive search for an (ell, ell) fully-joined pair across the two given
// sides; the copy is a subgraph copy, not necessarily induced. Returns the
// lexicographically least witness or nullopt. Sides must be disjoint and
// ell must not exceed either side.
std::optional<BicliqueWitness> find_biclique(const Graph& g,
                                             const std::vector<int>& side_a,
                                             const std::vector<int>& side_b,
                                             int ell);

// True iff `mapping` (pattern vertex -> host vertex, one entry per pattern
// vertex) is injective and preserves both edges and non-edges.
bool is_induced_copy(const Graph& g, const Graph& pattern, const std::vector<int>& mapping);

}  // namespace chordcycles
