#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chordcycles/graph.hpp"

namespace chordcycles {

enum class GraphFormat { dimacs, json, autodetect };

// A parsed graph plus the persisted label map when the input used
// non-contiguous vertex labels (labels[i] is the original label of vertex i;
// empty when the input ids were already dense).
struct LoadedGraph {
    Graph graph;
    std::vector<long long> labels;

    bool relabeled() const { return !labels.empty(); }
};

// DIMACS edge format: optional "c" comment lines, one "p edge n m" header,
// then m lines "e u v" (1-based). Ids outside [1, n] switch the parser into
// relabel mode: the distinct labels (which must number exactly n) are
// re-indexed in ascending order and recorded.
LoadedGraph load_dimacs(std::istream& in);
std::string emit_dimacs(const Graph& g);

// JSON document {"n": int, "edges": [[u, v], ...]} with 0-based dense ids.
LoadedGraph load_json_graph(std::istream& in);
std::string emit_json_graph(const Graph& g);

LoadedGraph load_graph_file(const std::string& path, GraphFormat format = GraphFormat::autodetect);

}  // namespace chordcycles
