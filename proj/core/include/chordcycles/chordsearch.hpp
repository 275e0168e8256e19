#pragma once

#include <map>
#include <optional>

#include "chordcycles/cycle.hpp"
#include "chordcycles/graph.hpp"

namespace chordcycles {

// Achievable chord counts among cycles of length <= max_len, each with its
// lexicographically least witness. Exhaustive up to max_len.
struct ChordSpectrumReport {
    int max_len = 0;
    std::map<long long, Cycle> achievable;
};

// Exhaustive search (with induced-edge-count pruning) for a cycle of length
// <= max_len with exactly k chords. Returns the lexicographically least
// witness, or nullopt meaning "none up to max_len" (a global absence claim
// only when max_len >= vertex count).
std::optional<Cycle> find_cycle_with_exact_chords(const Graph& g, long long k, int max_len);

ChordSpectrumReport chord_spectrum(const Graph& g, int max_len);

// Induced cycle plus an external hub with at least k neighbours on it.
struct WheelWitness {
    int hub = -1;
    Cycle rim;
    int spokes = 0;  // measured hub-to-rim adjacency
};

std::optional<WheelWitness> find_k_wheel(const Graph& g, int k, int max_rim);

// Closes a cycle through the hub over j+2 consecutive hub neighbours on the
// rim; the result has exactly j chords, all hub-incident. Requires
// j <= spokes - 2 and a window admitting the construction.
Cycle wheel_to_chorded_cycle(const Graph& g, const WheelWitness& w, int j);

// Cycle through the hub and the path segment spanning all k hub neighbours;
// has exactly k-2 chords. The hub must have exactly k >= 2 neighbours on the
// path and must not lie on it.
Cycle fan_to_chorded_cycle(const Graph& g, const PathWitness& path, int hub, int k);

}  // namespace chordcycles
