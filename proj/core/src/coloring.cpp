#include "chordcycles/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "chordcycles/errors.hpp"

namespace chordcycles {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> masks(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) masks[v] |= std::uint64_t{1} << w;
    return masks;
}

void check_cap(const Graph& g, int size_cap, const char* op) {
    if (size_cap < 0 || size_cap > 64)
        throw std::invalid_argument("size cap must be in [0, 64]");
    if (g.vertex_count() > size_cap)
        throw SizeCapExceeded(std::string(op) + ": instance has " +
                              std::to_string(g.vertex_count()) + " vertices, cap is " +
                              std::to_string(size_cap));
}

struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best = 0;
    int best_size = 0;

    void expand(std::uint64_t clique, int size, std::uint64_t cand) {
        if (size + std::popcount(cand) <= best_size) return;
        if (cand == 0) {
            if (size > best_size) {
                best_size = size;
                best = clique;
            }
            return;
        }
        // Pivot on the candidate covering most of cand.
        int pivot = -1, pivot_cover = -1;
        for (std::uint64_t m = cand; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int cover = std::popcount(cand & adj[v]);
            if (cover > pivot_cover) {
                pivot_cover = cover;
                pivot = v;
            }
        }
        std::uint64_t branch = cand & ~adj[pivot];
        while (branch) {
            int v = std::countr_zero(branch);
            branch &= branch - 1;
            expand(clique | (std::uint64_t{1} << v), size + 1, cand & adj[v]);
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

struct ColoringSearch {
    const std::vector<std::uint64_t>& adj;
    int n;
    int best;                       // best colour count found so far
    std::vector<int> best_assign;
    std::vector<int> colour;        // -1 while uncoloured
    int lower_bound;
    bool done = false;

    void dfs(int coloured, int used) {
        if (done || used >= best) return;
        if (coloured == n) {
            best = used;
            best_assign = colour;
            if (best == lower_bound) done = true;
            return;
        }
        // DSATUR choice: max saturation, then max degree, then lowest id.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] != -1) continue;
            std::uint64_t seen = 0;
            for (std::uint64_t m = adj[v]; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (colour[w] != -1) seen |= std::uint64_t{1} << colour[w];
            }
            int sat = std::popcount(seen);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint64_t banned = 0;
        for (std::uint64_t m = adj[pick]; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (colour[w] != -1) banned |= std::uint64_t{1} << colour[w];
        }
        int limit = std::min(used + 1, best - 1);  // one fresh colour at most
        for (int c = 0; c < limit; ++c) {
            if (banned & (std::uint64_t{1} << c)) continue;
            colour[pick] = c;
            dfs(coloured + 1, std::max(used, c + 1));
            colour[pick] = -1;
            if (done) return;
        }
    }
};

Coloring dsatur_greedy(const Graph& g, const std::vector<std::uint64_t>& adj) {
    int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] != -1) continue;
            std::uint64_t seen = 0;
            for (std::uint64_t m = adj[v]; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (colour[w] != -1) seen |= std::uint64_t{1} << colour[w];
            }
            int sat = std::popcount(seen);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint64_t banned = 0;
        for (std::uint64_t m = adj[pick]; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (colour[w] != -1) banned |= std::uint64_t{1} << colour[w];
        }
        int c = 0;
        while (banned & (std::uint64_t{1} << c)) ++c;
        colour[pick] = c;
        used = std::max(used, c + 1);
    }
    return Coloring{used, std::move(colour)};
}

}  // namespace

CliqueWitness clique_number(const Graph& g, int size_cap) {
    check_cap(g, size_cap, "clique_number");
    int n = g.vertex_count();
    if (n == 0) return CliqueWitness{0, {}};
    auto adj = adjacency_masks(g);
    CliqueSearch search{adj};
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search.expand(0, 0, all);
    CliqueWitness witness;
    witness.size = search.best_size;
    for (std::uint64_t m = search.best; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        witness.vertices.push_back(v);
    }
    return witness;
}

Coloring chromatic_number(const Graph& g, int size_cap) {
    check_cap(g, size_cap, "chromatic_number");
    int n = g.vertex_count();
    if (n == 0) return Coloring{0, {}};
    auto adj = adjacency_masks(g);

    CliqueWitness clique = clique_number(g, size_cap);
    Coloring greedy = dsatur_greedy(g, adj);
    if (greedy.colours == clique.size) return greedy;

    ColoringSearch search{adj, n, greedy.colours, greedy.assignment,
                          std::vector<int>(n, -1), clique.size};
    // Pre-colour a maximum clique: its vertices take distinct colours in any
    // proper colouring, so fixing them breaks colour symmetry soundly.
    for (std::size_t i = 0; i < clique.vertices.size(); ++i)
        search.colour[clique.vertices[i]] = static_cast<int>(i);
    search.dfs(static_cast<int>(clique.vertices.size()),
               static_cast<int>(clique.vertices.size()));
    return Coloring{search.best, std::move(search.best_assign)};
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (assignment[u] == assignment[v]) return false;
    for (int c : assignment)
        if (c < 0) return false;
    return true;
}

}  // namespace chordcycles
