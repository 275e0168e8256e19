#include "chordcycles/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordcycles {

namespace {

// Recursive lexicographic scan over ell-subsets of the A-side candidates,
// narrowing the common B-side neighbourhood as it goes.
bool biclique_scan(const Graph& g, const std::vector<int>& candidates, std::size_t from,
                   std::vector<int>& chosen, std::vector<int> common, int ell,
                   BicliqueWitness& out) {
    if (static_cast<int>(chosen.size()) == ell) {
        out.side_a = chosen;
        out.side_b.assign(common.begin(), common.begin() + ell);
        return true;
    }
    int needed = ell - static_cast<int>(chosen.size());
    for (std::size_t i = from; i + needed <= candidates.size(); ++i) {
        int a = candidates[i];
        std::vector<int> next;
        next.reserve(common.size());
        for (int b : common)
            if (g.has_edge(a, b)) next.push_back(b);
        if (static_cast<int>(next.size()) < ell) continue;
        chosen.push_back(a);
        if (biclique_scan(g, candidates, i + 1, chosen, std::move(next), ell, out)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<BicliqueWitness> find_biclique(const Graph& g, const std::vector<int>& side_a,
                                             const std::vector<int>& side_b, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    for (int v : side_a)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("side_a vertex out of range");
    for (int v : side_b)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("side_b vertex out of range");
    {
        std::vector<int> a_sorted = side_a, b_sorted = side_b;
        std::sort(a_sorted.begin(), a_sorted.end());
        std::sort(b_sorted.begin(), b_sorted.end());
        if (std::adjacent_find(a_sorted.begin(), a_sorted.end()) != a_sorted.end() ||
            std::adjacent_find(b_sorted.begin(), b_sorted.end()) != b_sorted.end())
            throw std::invalid_argument("sides must not repeat vertices");
        std::vector<int> overlap;
        std::set_intersection(a_sorted.begin(), a_sorted.end(), b_sorted.begin(), b_sorted.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty()) throw std::invalid_argument("sides must be disjoint");
    }
    if (ell > static_cast<int>(std::min(side_a.size(), side_b.size())))
        throw std::invalid_argument("ell exceeds a side size");

    std::vector<int> b_sorted = side_b;
    std::sort(b_sorted.begin(), b_sorted.end());
    std::vector<int> candidates;
    for (int a : side_a) {
        int deg_b = 0;
        for (int b : b_sorted)
            if (g.has_edge(a, b)) ++deg_b;
        if (deg_b >= ell) candidates.push_back(a);
    }
    std::sort(candidates.begin(), candidates.end());

    BicliqueWitness out;
    std::vector<int> chosen;
    if (biclique_scan(g, candidates, 0, chosen, b_sorted, ell, out)) return out;
    return std::nullopt;
}

bool is_induced_copy(const Graph& g, const Graph& pattern, const std::vector<int>& mapping) {
    if (static_cast<int>(mapping.size()) != pattern.vertex_count())
        throw std::invalid_argument("mapping must cover every pattern vertex");
    for (int v : mapping)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("mapping target out of range");
    std::vector<int> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    int m = pattern.vertex_count();
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (pattern.has_edge(u, v) != g.has_edge(mapping[u], mapping[v])) return false;
    return true;
}

}  // namespace chordcycles
