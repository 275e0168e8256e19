#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "chordcycles/coloring.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/errors.hpp"
#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/patterns.hpp"
#include "test_util.hpp"

using namespace chordcycles;

TEST_CASE("build_graph basics") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph empty = Graph::build(4, {});
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);

    Graph k33 = Graph::complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);

    // Duplicates collapse; degree sum is twice the edge count.
    Graph dup = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    long long degree_sum = 0;
    for (int v = 0; v < dup.vertex_count(); ++v) degree_sum += dup.degree(v);
    CHECK(degree_sum == 2 * dup.edge_count());

    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("chord_count named examples") {
    Graph k33 = Graph::complete_bipartite(3, 3);
    Cycle hamilton(k33, {0, 3, 1, 4, 2, 5});
    CHECK(chord_count(k33, hamilton) == 3);  // ell(ell-2) with ell = 3

    Graph k3 = Graph::complete(3);
    CHECK(chord_count(k3, Cycle(k3, {0, 1, 2})) == 0);

    Graph c4_diag = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(chord_count(c4_diag, Cycle(c4_diag, {0, 1, 2, 3})) == 1);

    CHECK_THROWS_AS(Cycle(k3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Cycle(k33, {0, 1, 2}), std::invalid_argument);  // side vertices, no edges
}

TEST_CASE("cycle canonical form") {
    Graph c5 = Graph::cycle_graph(5);
    Cycle a(c5, {2, 3, 4, 0, 1});
    Cycle b(c5, {1, 0, 4, 3, 2});
    CHECK(a.vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(a == b);
}

TEST_CASE("chromatic number examples") {
    Graph k5 = Graph::complete(5);
    Coloring col = chromatic_number(k5);
    CHECK(col.colours == 5);
    CHECK(is_proper_coloring(k5, col.assignment));

    Graph c5 = Graph::cycle_graph(5);
    CHECK(chromatic_number(c5).colours == 3);

    Graph grotzsch = gen_mycielski(4);
    CHECK(grotzsch.vertex_count() == 11);
    Coloring gc = chromatic_number(grotzsch);
    CHECK(gc.colours == 4);
    CHECK(is_proper_coloring(grotzsch, gc.assignment));

    Graph too_big = Graph::build(25, {});
    CHECK_THROWS_AS(chromatic_number(too_big), SizeCapExceeded);
}

TEST_CASE("clique number examples") {
    Graph k44 = Graph::complete_bipartite(4, 4);
    CHECK(clique_number(k44).size == 2);

    // K_6 minus a perfect matching: remove (0,1), (2,3), (4,5).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!((u == 0 && v == 1) || (u == 2 && v == 3) || (u == 4 && v == 5)))
                edges.emplace_back(u, v);
    Graph k6_minus = Graph::build(6, edges);
    CliqueWitness w = clique_number(k6_minus);
    CHECK(w.size == 3);
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
            CHECK(k6_minus.has_edge(w.vertices[i], w.vertices[j]));

    Graph single = Graph::build(1, {});
    CHECK(clique_number(single).size == 1);
}

TEST_CASE("chi >= omega on random instances") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(4 + static_cast<int>(rng() % 8), 0.4, rng);
        CHECK(chromatic_number(g).colours >= clique_number(g).size);
    }
}

TEST_CASE("enumerate_cycles counts and determinism") {
    Graph c5 = Graph::cycle_graph(5);
    CHECK(all_cycles(c5, 5).size() == 1);

    Graph k4 = Graph::complete(4);
    auto cycles = all_cycles(k4, 4);
    CHECK(cycles.size() == 7);  // 4 triangles + 3 four-cycles

    Graph tree = Graph::build(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(all_cycles(tree, 6).empty());

    // Canonical, pairwise distinct, lexicographically ordered; identical on re-run.
    auto again = all_cycles(k4, 4);
    CHECK(cycles == again);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        CHECK(cycles[i].vertices == canonical_cycle_form(cycles[i].vertices));
        if (i > 0) CHECK(cycles[i - 1] < cycles[i]);
    }
}

TEST_CASE("chord formula equals direct count (small corpus)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);  // up to 10
        Graph g = testutil::random_graph(n, 0.5, rng);
        for (const Cycle& c : all_cycles(g, n))
            CHECK(chord_count(g, c) == testutil::direct_cycle_chords(g, c.vertices));
    }
}

TEST_CASE("find_biclique") {
    Graph k33 = Graph::complete_bipartite(3, 3);
    auto found = find_biclique(k33, {0, 1, 2}, {3, 4, 5}, 2);
    REQUIRE(found.has_value());
    CHECK(found->side_a.size() == 2);
    CHECK(found->side_b.size() == 2);
    for (int a : found->side_a)
        for (int b : found->side_b) CHECK(k33.has_edge(a, b));

    Graph matching = Graph::build(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(!find_biclique(matching, {0, 1, 2, 3}, {4, 5, 6, 7}, 2).has_value());

    std::mt19937_64 rng(7);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.9);
    for (int u = 0; u < 8; ++u)
        for (int v = 8; v < 16; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    Graph dense = Graph::build(16, edges);
    std::vector<int> side_a, side_b;
    for (int v = 0; v < 8; ++v) side_a.push_back(v);
    for (int v = 8; v < 16; ++v) side_b.push_back(v);
    auto big = find_biclique(dense, side_a, side_b, 3);
    REQUIRE(big.has_value());
    CHECK(big->side_a.size() == 3);
    for (int a : big->side_a)
        for (int b : big->side_b) CHECK(dense.has_edge(a, b));

    CHECK_THROWS_AS(find_biclique(k33, {0, 1, 2}, {3, 4, 5}, 4), std::invalid_argument);
    CHECK_THROWS_AS(find_biclique(k33, {0, 1}, {1, 2}, 1), std::invalid_argument);
}

TEST_CASE("is_induced_copy") {
    Graph k33 = Graph::complete_bipartite(3, 3);
    Graph k22 = Graph::complete_bipartite(2, 2);
    CHECK(is_induced_copy(k33, k22, {0, 1, 3, 4}));

    Graph k4 = Graph::complete(4);
    CHECK(!is_induced_copy(k4, k22, {0, 1, 2, 3}));  // missing non-edges

    Graph c5 = Graph::cycle_graph(5);
    Graph p4 = Graph::path_graph(4);
    CHECK(is_induced_copy(c5, p4, {0, 1, 2, 3}));
    CHECK(!is_induced_copy(c5, p4, {0, 1, 2, 2}));  // not injective

    CHECK_THROWS_AS(is_induced_copy(c5, p4, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("induced subgraph and edge counts") {
    Graph k5 = Graph::complete(5);
    Graph sub = k5.induced({0, 2, 4});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(k5.induced_edge_count({0, 2, 4}) == 3);
    Graph c6 = Graph::cycle_graph(6);
    CHECK(c6.induced_edge_count({0, 1, 3, 4}) == 2);
}
