#include "chordcycles/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace chordcycles {

namespace {

GadgetBlueprint finalize(Graph graph, std::variant<Cycle, PathWitness> distinguished,
                         long long predicted, std::string formula_id,
                         std::map<std::string, long long> parameters) {
    GadgetBlueprint bp;
    bp.graph = std::move(graph);
    bp.distinguished = std::move(distinguished);
    bp.predicted_chords = predicted;
    bp.formula_id = std::move(formula_id);
    bp.parameters = std::move(parameters);
    if (std::holds_alternative<Cycle>(bp.distinguished))
        bp.measured_chords = chord_count(bp.graph, std::get<Cycle>(bp.distinguished));
    else
        bp.measured_chords = path_chord_count(bp.graph, std::get<PathWitness>(bp.distinguished));
    if (bp.measured_chords != bp.predicted_chords)
        throw std::logic_error("gadget '" + bp.formula_id + "' miscounted: predicted " +
                               std::to_string(bp.predicted_chords) + ", measured " +
                               std::to_string(bp.measured_chords));
    return bp;
}

}  // namespace

GadgetBlueprint gen_wheel(int rim_len, int spokes) {
    if (rim_len < 3) throw std::invalid_argument("rim needs at least 3 vertices");
    if (spokes < 3 || spokes > rim_len)
        throw std::invalid_argument("spokes must satisfy 3 <= spokes <= rim_len");
    int hub = rim_len;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rim_len; ++i) edges.emplace_back(i, (i + 1) % rim_len);
    for (int i = 0; i < spokes; ++i) edges.emplace_back(hub, i);
    Graph g = Graph::build(rim_len + 1, edges);
    std::vector<int> rim(rim_len);
    for (int i = 0; i < rim_len; ++i) rim[i] = i;
    Cycle rim_cycle(g, rim);
    return finalize(std::move(g), rim_cycle, 0, "wheel",
                    {{"rim_len", rim_len}, {"spokes", spokes}, {"hub", hub}});
}

GadgetBlueprint biclique_path(int ell, int a) {
    if (ell < 1 || a < 0) throw std::invalid_argument("need ell >= 1 and a >= 0");
    if (a + 1 > ell) throw std::invalid_argument("need a + 1 <= ell");
    Graph g = Graph::complete_bipartite(ell, ell);
    std::vector<int> verts;
    for (int i = 0; i <= a; ++i) {
        verts.push_back(i);        // side A
        verts.push_back(ell + i);  // side B
    }
    PathWitness path(g, verts);
    return finalize(std::move(g), path, static_cast<long long>(a) * a, "biclique_path",
                    {{"ell", ell}, {"a", a}});
}

namespace {

// Shared layout for the two hub assemblies: r disjoint K_{ell,ell} blocks
// followed by r hub vertices.
struct HubAssembly {
    int r, ell;
    int hub_base;

    int side1(int i, int idx) const { return 2 * ell * i + idx; }
    int side2(int i, int idx) const { return 2 * ell * i + ell + idx; }
    int hub(int i) const { return hub_base + i; }
};

GadgetBlueprint assemble_hub_case(int r, int ell, const std::vector<int>& a,
                                  const std::vector<std::pair<int, int>>& hub_edges,
                                  bool complete_both) {
    if (r < 2) throw std::invalid_argument("need at least 2 blocks");
    if (static_cast<int>(a.size()) != r)
        throw std::invalid_argument("need one path parameter per block");
    for (int ai : a)
        if (ai < 0 || ai + 1 > ell)
            throw std::invalid_argument("each a_i must satisfy 0 <= a_i <= ell - 1");
    HubAssembly lay{r, ell, 2 * ell * r};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i)
        for (int p = 0; p < ell; ++p)
            for (int q = 0; q < ell; ++q) edges.emplace_back(lay.side1(i, p), lay.side2(i, q));
    for (int h = 0; h < r; ++h)
        for (int i = 0; i < r; ++i)
            for (int p = 0; p < ell; ++p) {
                edges.emplace_back(lay.hub(h), lay.side1(i, p));
                if (complete_both) edges.emplace_back(lay.hub(h), lay.side2(i, p));
            }
    std::set<std::pair<int, int>> seen_hub_edges;
    for (auto [h1, h2] : hub_edges) {
        if (h1 < 0 || h1 >= r || h2 < 0 || h2 >= r || h1 == h2)
            throw std::invalid_argument("hub edge indices must be distinct and in [0, r)");
        auto key = std::minmax(h1, h2);
        if (!seen_hub_edges.insert(key).second)
            throw std::invalid_argument("duplicate hub edge");
        edges.emplace_back(lay.hub(h1), lay.hub(h2));
    }
    Graph g = Graph::build(2 * ell * r + r, edges);

    // Cycle hub_0 Q_0 hub_1 Q_1 ... hub_{r-1} Q_{r-1}, where Q_i walks the
    // i-th block: odd length 2a_i+1 across both sides in case (a), even
    // length 2a_i inside side 1 (via side 2) in case (b).
    std::vector<int> verts;
    for (int i = 0; i < r; ++i) {
        verts.push_back(lay.hub(i));
        if (complete_both) {
            for (int t = 0; t <= a[i]; ++t) {
                verts.push_back(lay.side1(i, t));
                verts.push_back(lay.side2(i, t));
            }
        } else {
            verts.push_back(lay.side1(i, 0));
            for (int t = 1; t <= a[i]; ++t) {
                verts.push_back(lay.side2(i, t - 1));
                verts.push_back(lay.side1(i, t));
            }
        }
    }
    Cycle cycle(g, verts);

    long long x = static_cast<long long>(hub_edges.size());
    long long predicted = x;
    for (int ai : a) {
        long long al = ai;
        if (complete_both)
            predicted += al * al + 2LL * r * al + (2LL * r - 2);
        else
            predicted += al * al + (r - 1LL) * al + (r - 2LL);
    }
    std::map<std::string, long long> params = {{"r", r}, {"ell", ell}, {"x", x}};
    for (int i = 0; i < r; ++i) params["a" + std::to_string(i)] = a[i];
    return finalize(std::move(g), cycle, predicted,
                    complete_both ? "hubs_complete_both_sides" : "hubs_complete_one_side",
                    std::move(params));
}

}  // namespace

GadgetBlueprint assemble_complete_case(int r, int ell, const std::vector<int>& a,
                                       const std::vector<std::pair<int, int>>& hub_edges) {
    return assemble_hub_case(r, ell, a, hub_edges, true);
}

GadgetBlueprint assemble_oneside_case(int r, int ell, const std::vector<int>& a,
                                      const std::vector<std::pair<int, int>>& hub_edges) {
    return assemble_hub_case(r, ell, a, hub_edges, false);
}

namespace {

// Layout of the multi-biclique assembly: home block K_0, then K_1..K_r, then
// 4 connector vertices per visited block.
struct MultiLayout {
    int r, ell;

    int side(int block, int side_idx, int pos) const {  // side_idx in {1, 2}
        return 2 * ell * block + (side_idx - 1) * ell + pos;
    }
    int connector(int i, int j, bool far_end) const {  // i in [1, r], j in {1, 2}
        return 2 * ell * (r + 1) + 4 * (i - 1) + 2 * (j - 1) + (far_end ? 1 : 0);
    }
    int vertex_count() const { return 2 * ell * (r + 1) + 4 * r; }
};

Graph build_multi_biclique_graph(const MultiLayout& lay, const ConnectorModel& connectors) {
    std::vector<std::pair<int, int>> edges;
    for (int block = 0; block <= lay.r; ++block)
        for (int p = 0; p < lay.ell; ++p)
            for (int q = 0; q < lay.ell; ++q)
                edges.emplace_back(lay.side(block, 1, p), lay.side(block, 2, q));
    for (int i = 1; i <= lay.r; ++i)
        for (int j = 1; j <= 2; ++j) {
            int near = lay.connector(i, j, false);
            int far = lay.connector(i, j, true);
            // Path-end anchors: u'_{i,j} is the first vertex of U_{i,j},
            // v'_{i,j} is the (i-1)-th vertex of U_{0,j}.
            edges.emplace_back(near, lay.side(i, j, 0));
            edges.emplace_back(near, far);
            edges.emplace_back(far, lay.side(0, j, i - 1));
        }
    for (const auto& flag : connectors.complete_flags) {
        if (flag.biclique < 1 || flag.biclique > lay.r || flag.path_side < 1 ||
            flag.path_side > 2 || flag.target < 1 || flag.target > lay.r ||
            flag.target_side < 1 || flag.target_side > 2)
            throw std::invalid_argument("connector flag out of range");
        int c = lay.connector(flag.biclique, flag.path_side, flag.far_end);
        for (int pos = 1; pos < lay.ell; ++pos)  // complete to the side minus its path end
            edges.emplace_back(c, lay.side(flag.target, flag.target_side, pos));
    }
    return Graph::build(lay.vertex_count(), edges);
}

Cycle multi_biclique_cycle(const Graph& g, const MultiLayout& lay, const std::vector<int>& a) {
    std::vector<int> verts;
    for (int i = 1; i <= lay.r; ++i) {
        verts.push_back(lay.side(0, 1, i - 1));        // v'_{i,1}
        verts.push_back(lay.connector(i, 1, true));    // v_{i,1}
        verts.push_back(lay.connector(i, 1, false));   // u_{i,1}
        verts.push_back(lay.side(i, 1, 0));            // u'_{i,1}
        for (int t = 1; t <= a[i - 1]; ++t) {          // 2a_i interior vertices
            verts.push_back(lay.side(i, 2, t));
            verts.push_back(lay.side(i, 1, t));
        }
        verts.push_back(lay.side(i, 2, 0));            // u'_{i,2}
        verts.push_back(lay.connector(i, 2, false));   // u_{i,2}
        verts.push_back(lay.connector(i, 2, true));    // v_{i,2}
        verts.push_back(lay.side(0, 2, i - 1));        // v'_{i,2}
    }
    return Cycle(g, verts);
}

}  // namespace

GadgetBlueprint assemble_multi_biclique(int r, int ell, const std::vector<int>& a,
                                        const ConnectorModel& connectors) {
    if (r < 1) throw std::invalid_argument("need at least one visited block");
    if (static_cast<int>(a.size()) != r)
        throw std::invalid_argument("need one path parameter per block");
    if (ell < r) throw std::invalid_argument("home block needs ell >= r anchor vertices");
    for (int ai : a)
        if (ai < 0 || ai + 1 > ell)
            throw std::invalid_argument("each a_i must satisfy 0 <= a_i <= ell - 1");
    {
        std::set<std::tuple<int, int, bool, int, int>> dedup;
        for (const auto& f : connectors.complete_flags)
            if (!dedup.insert({f.biclique, f.path_side, f.far_end, f.target, f.target_side})
                     .second)
                throw std::invalid_argument("duplicate connector flag");
    }

    MultiLayout lay{r, ell};
    Graph g = build_multi_biclique_graph(lay, connectors);
    Cycle cycle = multi_biclique_cycle(g, lay, a);

    // The a-independent constant is measured once from the all-zeros
    // calibration cycle over the same host and connector model.
    std::vector<int> zeros(r, 0);
    long long c0 = chord_count(g, multi_biclique_cycle(g, lay, zeros));

    std::vector<long long> t(r + 1, 0);
    for (const auto& flag : connectors.complete_flags) ++t[flag.target];
    long long predicted = c0;
    for (int s = 1; s <= r; ++s)
        predicted += static_cast<long long>(a[s - 1]) * a[s - 1] + t[s] * a[s - 1];

    std::map<std::string, long long> params = {{"r", r}, {"ell", ell}, {"c0", c0}};
    for (int s = 1; s <= r; ++s) {
        params["a" + std::to_string(s)] = a[s - 1];
        params["t" + std::to_string(s)] = t[s];
    }
    return finalize(std::move(g), cycle, predicted, "multi_biclique_cycle", std::move(params));
}

namespace {

GadgetBlueprint chain_gadget(int blocks, const std::vector<int>& path_lens, bool diamond) {
    if (blocks < 1) throw std::invalid_argument("need at least one block");
    std::vector<int> lens = path_lens;
    if (lens.empty()) lens.assign(blocks, 0);
    if (static_cast<int>(lens.size()) != blocks)
        throw std::invalid_argument("need one connector length per block");
    for (int len : lens)
        if (len < 0) throw std::invalid_argument("connector lengths must be non-negative");

    // Block i occupies vertices [4i, 4i+3] as x, f, e, y; connector interiors
    // follow all blocks.
    std::vector<std::pair<int, int>> edges;
    auto x_of = [](int i) { return 4 * i; };
    auto f_of = [](int i) { return 4 * i + 1; };
    auto e_of = [](int i) { return 4 * i + 2; };
    auto y_of = [](int i) { return 4 * i + 3; };
    int next_free = 4 * blocks;
    std::vector<int> verts;
    for (int i = 0; i < blocks; ++i) {
        edges.emplace_back(x_of(i), f_of(i));
        edges.emplace_back(f_of(i), e_of(i));
        edges.emplace_back(x_of(i), e_of(i));
        edges.emplace_back(e_of(i), y_of(i));
        if (diamond) edges.emplace_back(f_of(i), y_of(i));
        verts.push_back(x_of(i));
        verts.push_back(f_of(i));
        verts.push_back(e_of(i));
        verts.push_back(y_of(i));
        int prev = y_of(i);
        for (int t = 0; t < lens[i]; ++t) {
            edges.emplace_back(prev, next_free);
            verts.push_back(next_free);
            prev = next_free++;
        }
        edges.emplace_back(prev, x_of((i + 1) % blocks));
    }
    Graph g = Graph::build(next_free, edges);
    Cycle cycle(g, verts);
    long long predicted = diamond ? 2LL * blocks : blocks;
    std::map<std::string, long long> params = {{diamond ? "s" : "k", blocks}};
    for (int i = 0; i < blocks; ++i) params["len" + std::to_string(i)] = lens[i];
    return finalize(std::move(g), cycle, predicted,
                    diamond ? "diamond_chain" : "triangle_chain", std::move(params));
}

}  // namespace

GadgetBlueprint case1_gadget(int k, const std::vector<int>& path_lens) {
    return chain_gadget(k, path_lens, false);
}

GadgetBlueprint case2_gadget(int s, const std::vector<int>& path_lens) {
    return chain_gadget(s, path_lens, true);
}

GadgetBlueprint claim47_path(int sigma, int requirement) {
    if (sigma < 0 || sigma > 3) throw std::invalid_argument("sigma must be in 0..3");
    bool legal = (requirement == 2) || (sigma == 1 && (requirement == 0 || requirement == 3)) ||
                 (sigma != 1 && requirement == 1);
    if (!legal)
        throw std::invalid_argument("no table entry for sigma=" + std::to_string(sigma) +
                                    ", requirement=" + std::to_string(requirement));

    constexpr int X = 0, Y = 1, E = 2, F = 3, G = 4;
    std::vector<std::pair<int, int>> edges = {{X, E}, {Y, E}, {X, F}, {Y, F}, {E, F}, {F, G}};
    // g touches sigma of {x, y, e}; ties are pinned y-first, then x, then e.
    if (sigma >= 1) edges.emplace_back(G, Y);
    if (sigma >= 2) edges.emplace_back(G, X);
    if (sigma >= 3) edges.emplace_back(G, E);
    Graph host = Graph::build(5, edges);

    std::vector<int> verts;
    if (sigma == 1) {
        if (requirement == 0) verts = {G, F, X};
        else if (requirement == 2) verts = {G, F, E, Y};
        else verts = {G, F, X, E, Y};  // requirement == 3
    } else if (sigma == 0) {
        verts = (requirement == 1) ? std::vector<int>{G, F, E, Y}
                                   : std::vector<int>{G, F, X, E, Y};
    } else if (sigma == 2) {
        verts = (requirement == 1) ? std::vector<int>{G, X, E, Y}
                                   : std::vector<int>{G, F, E, Y};
    } else {  // sigma == 3
        verts = (requirement == 1) ? std::vector<int>{G, E, Y} : std::vector<int>{G, X, E, Y};
    }
    PathWitness path(host, verts);
    return finalize(std::move(host), path, requirement, "five_vertex_path_table",
                    {{"sigma", sigma}, {"requirement", requirement}});
}

DoubleMatching induced_double_matching(const Graph& g1, const Graph& g2,
                                       const std::vector<int>& side_a,
                                       const std::vector<int>& side_b, int d) {
    if (d < 1) throw std::invalid_argument("degree bound d must be positive");
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("graphs must share a vertex set");
    int n = g1.vertex_count();
    if (side_a.size() != side_b.size())
        throw std::invalid_argument("sides must have equal size");
    std::vector<int> which(n, -1);  // 0: A, 1: B
    for (int v : side_a) {
        if (v < 0 || v >= n || which[v] != -1) throw std::invalid_argument("bad side_a");
        which[v] = 0;
    }
    for (int v : side_b) {
        if (v < 0 || v >= n || which[v] != -1) throw std::invalid_argument("bad side_b");
        which[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (which[v] == -1)
            throw std::invalid_argument("sides must partition the vertex set");
    for (const Graph* g : {&g1, &g2})
        for (auto [u, v] : g->edges())
            if (which[u] == which[v])
                throw std::invalid_argument("graphs must be bipartite over the given sides");
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(u, v)) throw std::invalid_argument("g1 must be a subgraph of g2");
    for (int v : side_a)
        if (g1.degree(v) < 1)
            throw std::invalid_argument("every side_a vertex needs g1-degree >= 1");
    for (int v : side_b)
        if (g2.degree(v) > d)
            throw std::invalid_argument("every side_b vertex needs g2-degree <= d");

    // Greedy growth over A_0 = {a : deg_{g2}(a) <= 2d}: take a when its
    // g2-neighbourhood avoids N_{g2}(A'), which keeps both restrictions
    // perfect matchings.
    std::vector<char> blocked(n, 0);  // N_{g2}(A')
    DoubleMatching out;
    std::vector<int> a_sorted = side_a;
    std::sort(a_sorted.begin(), a_sorted.end());
    for (int a : a_sorted) {
        if (g2.degree(a) > 2 * d) continue;
        bool clean = true;
        for (int b : g2.neighbors(a))
            if (blocked[b]) clean = false;
        if (!clean) continue;
        out.a_prime.push_back(a);
        out.b_prime.push_back(g1.neighbors(a).front());
        for (int b : g2.neighbors(a)) blocked[b] = 1;
    }
    return out;
}

Graph gen_mycielski(int t) {
    if (t < 2) throw std::invalid_argument("tower starts at t = 2 (a single edge)");
    Graph g = Graph::build(2, {{0, 1}});
    for (int level = 3; level <= t; ++level) {
        int n = g.vertex_count();
        std::vector<std::pair<int, int>> edges = g.edges();
        // Shadow w_i copies the neighbourhood of v_i; the apex joins every shadow.
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) edges.emplace_back(n + v, w);
        int apex = 2 * n;
        for (int v = 0; v < n; ++v) edges.emplace_back(apex, n + v);
        g = Graph::build(2 * n + 1, edges);
    }
    return g;
}

GadgetBlueprint gen_fan(int path_len, int k) {
    if (k < 2) throw std::invalid_argument("a fan needs k >= 2");
    if (path_len < k) throw std::invalid_argument("path too short for k neighbours");
    int hub = path_len;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
    std::vector<int> hits;
    for (int i = 0; i < k; ++i)
        hits.push_back(static_cast<int>(static_cast<long long>(i) * (path_len - 1) / (k - 1)));
    for (int h : hits) edges.emplace_back(hub, h);
    Graph g = Graph::build(path_len + 1, edges);

    std::vector<int> verts;
    for (int i = hits.front(); i <= hits.back(); ++i) verts.push_back(i);
    verts.push_back(hub);
    Cycle cycle(g, verts);
    return finalize(std::move(g), cycle, k - 2, "fan",
                    {{"path_len", path_len}, {"k", k}});
}

}  // namespace chordcycles
