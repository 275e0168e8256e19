#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "chordcycles/cycle.hpp"
#include "chordcycles/graph.hpp"

namespace chordcycles {

// A constructed host graph with a distinguished cycle or path whose chord
// count is predicted in closed form. The factory re-measures before
// returning; a mismatch is a construction bug and throws std::logic_error.
struct GadgetBlueprint {
    Graph graph;
    std::variant<Cycle, PathWitness> distinguished;
    long long predicted_chords = 0;
    long long measured_chords = 0;
    std::string formula_id;
    std::map<std::string, long long> parameters;
};

// Hub joined to `spokes` consecutive vertices of an induced rim cycle.
// Distinguished: the (chordless) rim. Requires 3 <= spokes <= rim_len.
GadgetBlueprint gen_wheel(int rim_len, int spokes);

// K_{ell,ell} with a distinguished alternating path on 2a+2 vertices
// (2a+1 edges); predicted chords a^2. Requires a + 1 <= ell.
GadgetBlueprint biclique_path(int ell, int a);

// r disjoint K_{ell,ell} plus r hubs, every hub complete to every biclique;
// hub-hub edges as given (x = |hub_edges|, indices into [0, r)). The
// distinguished cycle alternates hubs and (2a_i+1)-edge biclique paths;
// predicted chords sum(a_i^2 + 2r a_i + 2r - 2) + x.
GadgetBlueprint assemble_complete_case(int r, int ell, const std::vector<int>& a,
                                       const std::vector<std::pair<int, int>>& hub_edges);

// Same layout but hubs complete to side 1 and anti-complete to side 2 of
// each biclique; paths have even length 2a_i with both ends in side 1;
// predicted chords sum(a_i^2 + (r-1) a_i + r - 2) + x.
GadgetBlueprint assemble_oneside_case(int r, int ell, const std::vector<int>& a,
                                      const std::vector<std::pair<int, int>>& hub_edges);

// Declared adjacency of the synthetic two-vertex connectors: each listed
// connector vertex is complete to the named biclique side (minus that side's
// path-end vertex); everything unlisted is anti-complete.
struct ConnectorFlag {
    int biclique = 0;      // i in [1, r]: which connector pair (i, j)
    int path_side = 1;     // j in {1, 2}
    bool far_end = false;  // false: vertex adjacent to K_i; true: adjacent to K_0
    int target = 0;        // s in [1, r]: side U_{s,t} the vertex is complete to
    int target_side = 1;   // t in {1, 2}
};

struct ConnectorModel {
    std::vector<ConnectorFlag> complete_flags;
};

// One home biclique K_0 plus r bicliques K_1..K_r, visited by a cycle that
// travels out and back through two-vertex synthetic connectors standing in
// for unimodal paths. Predicted chords: sum(a_s^2) + sum(t_s a_s) + C_0,
// where t_s counts connector vertices complete to a side of K_s and C_0 is
// measured once from the all-zeros calibration instance with the same
// connector model. Requires ell >= r and ell >= max(a_s) + 1.
GadgetBlueprint assemble_multi_biclique(int r, int ell, const std::vector<int>& a,
                                        const ConnectorModel& connectors);

// Chain of k triangle blocks (x_i, f_i, e_i) with a pendant y_i and
// chordless connector paths; the distinguished cycle has exactly the k
// chords x_i e_i. path_lens gives interior vertex counts of the connectors
// (empty means all zero).
GadgetBlueprint case1_gadget(int k, const std::vector<int>& path_lens = {});

// Chain of s diamond blocks (K_4 minus the x_i y_i edge); the distinguished
// cycle has exactly 2s chords: x_i e_i and f_i y_i.
GadgetBlueprint case2_gadget(int s, const std::vector<int>& path_lens = {});

// Five-vertex host {x, y, e, f, g} where e is adjacent to x and y, f to
// x, y and e, g to f and to sigma of {x, y, e}; the distinguished path from
// g to x or y carries exactly `requirement` chords. Only the table-legal
// (sigma, requirement) pairs are accepted:
//   requirement 0 and 3 only for sigma == 1; requirement 1 only for
//   sigma != 1; requirement 2 for every sigma.
GadgetBlueprint claim47_path(int sigma, int requirement);

struct DoubleMatching {
    std::vector<int> a_prime;
    std::vector<int> b_prime;
};

// Greedy-maximal A' with |A'| = |B'| >= m / (4d^2) such that both induced
// bipartite subgraphs g1[A', B'] and g2[A', B'] are perfect matchings.
// Requires g1 subset of g2, both bipartite over (side_a, side_b) partitioning
// the vertex set, every side_a vertex with g1-degree >= 1, every side_b
// vertex with g2-degree <= d, |side_a| == |side_b|.
DoubleMatching induced_double_matching(const Graph& g1, const Graph& g2,
                                       const std::vector<int>& side_a,
                                       const std::vector<int>& side_b, int d);

// Mycielski tower: t = 2 is a single edge, each step adds shadow vertices
// and an apex. Triangle-free with chromatic number t.
Graph gen_mycielski(int t);

// Path on path_len vertices plus a hub with exactly k evenly spread
// neighbours on it; the distinguished cycle (through the hub and the segment
// spanning all k neighbours) has k-2 chords. Requires 2 <= k <= path_len.
GadgetBlueprint gen_fan(int path_len, int k);

}  // namespace chordcycles
