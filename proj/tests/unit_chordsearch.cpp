#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "chordcycles/chordsearch.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "test_util.hpp"

using namespace chordcycles;

namespace {

// Brute-force oracle: all chord counts over plain enumeration, no pruning.
std::map<long long, Cycle> spectrum_oracle(const Graph& g, int max_len) {
    std::map<long long, Cycle> result;
    for (const Cycle& c : all_cycles(g, max_len))
        result.try_emplace(testutil::direct_cycle_chords(g, c.vertices), c);
    return result;
}

}  // namespace

TEST_CASE("find_cycle_with_exact_chords examples") {
    Graph k33 = Graph::complete_bipartite(3, 3);
    auto hamilton = find_cycle_with_exact_chords(k33, 3, 6);
    REQUIRE(hamilton.has_value());
    CHECK(chord_count(k33, *hamilton) == 3);

    Graph tree = Graph::build(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    CHECK(!find_cycle_with_exact_chords(tree, 0, 7).has_value());
    CHECK(!find_cycle_with_exact_chords(tree, 2, 7).has_value());

    Graph k4 = Graph::complete(4);
    CHECK(!find_cycle_with_exact_chords(k4, 1, 4).has_value());
    auto two = find_cycle_with_exact_chords(k4, 2, 4);
    REQUIRE(two.has_value());
    CHECK(two->length() == 4);
}

TEST_CASE("find_cycle agrees with brute force on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);  // up to 9
        Graph g = testutil::random_graph(n, 0.45, rng);
        auto oracle = spectrum_oracle(g, n);
        long long max_seen = oracle.empty() ? 0 : oracle.rbegin()->first;
        for (long long k = 0; k <= max_seen + 1; ++k) {
            auto witness = find_cycle_with_exact_chords(g, k, n);
            CHECK(witness.has_value() == (oracle.count(k) > 0));
            if (witness) {
                CHECK(chord_count(g, *witness) == k);
                // Lexicographically least witness.
                CHECK(witness->vertices == oracle.at(k).vertices);
            }
        }
    }
}

TEST_CASE("chord_spectrum examples") {
    Graph c7 = Graph::cycle_graph(7);
    auto rep = chord_spectrum(c7, 7);
    REQUIRE(rep.achievable.size() == 1);
    CHECK(rep.achievable.count(0) == 1);

    Graph k4 = Graph::complete(4);
    auto k4rep = chord_spectrum(k4, 4);
    std::set<long long> k4counts;
    for (const auto& [chords, witness] : k4rep.achievable) k4counts.insert(chords);
    CHECK(k4counts == std::set<long long>{0, 2});

    // K_{3,3} has only 4-cycles (0 chords) and Hamilton 6-cycles (3 chords).
    Graph k33 = Graph::complete_bipartite(3, 3);
    auto k33rep = chord_spectrum(k33, 6);
    std::set<long long> k33counts;
    for (const auto& [chords, witness] : k33rep.achievable) k33counts.insert(chords);
    CHECK(k33counts == std::set<long long>{0, 3});
}

TEST_CASE("chord_spectrum is monotone in max_len and matches the oracle") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_graph(n, 0.5, rng);
        std::set<long long> previous;
        for (int max_len = 3; max_len <= n; ++max_len) {
            auto rep = chord_spectrum(g, max_len);
            auto oracle = spectrum_oracle(g, max_len);
            REQUIRE(rep.achievable.size() == oracle.size());
            for (const auto& [chords, witness] : rep.achievable) {
                CHECK(oracle.count(chords) == 1);
                CHECK(witness.vertices == oracle.at(chords).vertices);
            }
            std::set<long long> current;
            for (const auto& [chords, witness] : rep.achievable) current.insert(chords);
            CHECK(std::includes(current.begin(), current.end(), previous.begin(),
                                previous.end()));
            previous = std::move(current);
        }
    }
}

TEST_CASE("find_k_wheel") {
    // W_7: hub joined to all of C_7.
    GadgetBlueprint w7 = gen_wheel(7, 7);
    auto witness = find_k_wheel(w7.graph, 7, 7);
    REQUIRE(witness.has_value());
    CHECK(witness->spokes == 7);
    CHECK(chord_count(w7.graph, witness->rim) == 0);

    Graph c8 = Graph::cycle_graph(8);
    CHECK(!find_k_wheel(c8, 3, 8).has_value());

    GadgetBlueprint partial = gen_wheel(10, 5);
    auto partial_witness = find_k_wheel(partial.graph, 5, 10);
    REQUIRE(partial_witness.has_value());
    CHECK(partial_witness->spokes == 5);
}

TEST_CASE("wheel_to_chorded_cycle") {
    GadgetBlueprint w7 = gen_wheel(7, 7);
    WheelWitness witness{7, std::get<Cycle>(w7.distinguished), 7};

    Cycle four = wheel_to_chorded_cycle(w7.graph, witness, 4);
    CHECK(chord_count(w7.graph, four) == 4);
    for (auto [u, v] : cycle_chords(w7.graph, four)) CHECK((u == 7 || v == 7));

    Cycle none = wheel_to_chorded_cycle(w7.graph, witness, 0);
    CHECK(chord_count(w7.graph, none) == 0);

    // 3-wheel: hub adjacent to 3 rim vertices, j = 1.
    GadgetBlueprint w3 = gen_wheel(6, 3);
    WheelWitness w3_witness{6, std::get<Cycle>(w3.distinguished), 3};
    Cycle one = wheel_to_chorded_cycle(w3.graph, w3_witness, 1);
    CHECK(chord_count(w3.graph, one) == 1);

    CHECK_THROWS_AS(wheel_to_chorded_cycle(w3.graph, w3_witness, 2), std::invalid_argument);
}

TEST_CASE("wheel cycles re-verify for every j across the family") {
    for (int k = 1; k <= 8; ++k) {
        GadgetBlueprint wheel = gen_wheel(k + 4, k + 2);
        WheelWitness witness{k + 4, std::get<Cycle>(wheel.distinguished), k + 2};
        for (int j = 0; j <= k; ++j) {
            Cycle c = wheel_to_chorded_cycle(wheel.graph, witness, j);
            CHECK(chord_count(wheel.graph, c) == j);
            for (auto [u, v] : cycle_chords(wheel.graph, c)) CHECK((u == k + 4 || v == k + 4));
        }
    }
}

TEST_CASE("fan_to_chorded_cycle") {
    GadgetBlueprint two_fan = gen_fan(5, 2);
    CHECK(two_fan.measured_chords == 0);

    GadgetBlueprint five_fan = gen_fan(9, 5);
    CHECK(five_fan.measured_chords == 3);

    GadgetBlueprint four_fan = gen_fan(10, 4);
    CHECK(four_fan.measured_chords == 2);

    // Direct use of the searcher on a hand-built fan.
    Graph g = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                               {6, 0}, {6, 2}, {6, 5}});
    PathWitness path(g, {0, 1, 2, 3, 4, 5});
    Cycle c = fan_to_chorded_cycle(g, path, 6, 3);
    CHECK(chord_count(g, c) == 1);

    CHECK_THROWS_AS(fan_to_chorded_cycle(g, path, 6, 2), std::invalid_argument);
    Graph lonely = Graph::build(4, {{0, 1}, {1, 2}, {3, 0}});
    PathWitness short_path(lonely, {0, 1, 2});
    CHECK_THROWS_AS(fan_to_chorded_cycle(lonely, short_path, 3, 1), std::invalid_argument);
}

TEST_CASE("triangle-free spectra have no length-3 witnesses") {
    for (int t = 3; t <= 4; ++t) {
        Graph m = gen_mycielski(t);
        auto rep = chord_spectrum(m, m.vertex_count());
        for (const auto& [chords, witness] : rep.achievable) CHECK(witness.length() >= 4);
    }
}
