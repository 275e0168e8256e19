#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordcycles/graph.hpp"

namespace chordcycles {

// Cycle in a host graph, stored in canonical form: rotated/reflected so the
// minimum id comes first and the second entry is smaller than the last.
// All deduplication and ordering of cycles relies on this form.
struct Cycle {
    std::vector<int> vertices;

    Cycle() = default;
    // Validates against the host (distinct vertices, length >= 3, consecutive
    // pairs including the wrap-around are edges) and canonicalizes.
    Cycle(const Graph& host, std::vector<int> verts);

    int length() const { return static_cast<int>(vertices.size()); }

    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& other) const { return vertices < other.vertices; }
};

// Path witness: ordered distinct vertices, consecutive pairs are host edges.
struct PathWitness {
    std::vector<int> vertices;

    PathWitness() = default;
    PathWitness(const Graph& host, std::vector<int> verts);

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const PathWitness&) const = default;
};

bool is_valid_cycle(const Graph& g, const std::vector<int>& verts, std::string* why = nullptr);
bool is_valid_path(const Graph& g, const std::vector<int>& verts, std::string* why = nullptr);

std::vector<int> canonical_cycle_form(std::vector<int> verts);

// Number of chords: e(G[V(C)]) - |C|. Throws on an invalid cycle.
long long chord_count(const Graph& g, const Cycle& c);
// The chord edges themselves, as (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> cycle_chords(const Graph& g, const Cycle& c);

// Chords of a path: host edges joining non-consecutive path vertices.
long long path_chord_count(const Graph& g, const PathWitness& p);
std::vector<std::pair<int, int>> path_chords(const Graph& g, const PathWitness& p);

// Streams every cycle of length <= max_len exactly once, in canonical form,
// in lexicographic order of the canonical sequences. Single consumer;
// re-running yields the identical stream.
class CycleStream {
public:
    CycleStream(const Graph& g, int max_len);
    std::optional<Cycle> next();

private:
    struct Frame {
        int vertex;
        std::size_t next_idx;
    };

    const Graph& g_;
    int max_len_;
    int start_ = 0;
    std::vector<Frame> stack_;
    std::vector<int> path_;
    std::vector<char> on_path_;

    bool begin_root();
};

std::vector<Cycle> all_cycles(const Graph& g, int max_len);

}  // namespace chordcycles
