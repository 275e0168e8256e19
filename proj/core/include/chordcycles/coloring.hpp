#pragma once

#include <vector>

#include "chordcycles/graph.hpp"

namespace chordcycles {

// Hard cap for the exact solvers. Instances above the cap are refused.
inline constexpr int kDefaultSizeCap = 24;

struct Coloring {
    int colours = 0;
    std::vector<int> assignment;  // colour per vertex, 0-based
};

// Exact chromatic number with a witness colouring. DSATUR-ordered branch and
// bound seeded with an exact clique lower bound. Throws SizeCapExceeded when
// vertex_count() > size_cap.
Coloring chromatic_number(const Graph& g, int size_cap = kDefaultSizeCap);

struct CliqueWitness {
    int size = 0;
    std::vector<int> vertices;
};

// Exact maximum clique with witness (branch and bound over bitmasks).
CliqueWitness clique_number(const Graph& g, int size_cap = kDefaultSizeCap);

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment);

}  // namespace chordcycles
