#include "chordcycles/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace chordcycles {

namespace {

long long isqrt_ll(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

LayeredState bfs_in_subset(const Graph& g, const std::vector<char>& in_subset, int root) {
    LayeredState state;
    state.root = root;
    state.father.assign(g.vertex_count(), -1);
    std::vector<int> dist(g.vertex_count(), -1);
    dist[root] = 0;
    state.layers.push_back({root});
    std::vector<int> frontier = {root};
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v)) {
                if (!in_subset[w] || dist[w] != -1) continue;
                dist[w] = depth;
                next.push_back(w);
            }
        std::sort(next.begin(), next.end());
        if (next.empty()) break;
        // Lowest-id father in the previous layer.
        for (int w : next)
            for (int v : g.neighbors(w))
                if (in_subset[v] && dist[v] == depth - 1) {
                    state.father[w] = v;
                    break;
                }
        state.layers.push_back(next);
        frontier = std::move(next);
    }
    return state;
}

// Index (>= 1) of a layer with maximum chromatic number, lowest on ties.
BestLayer best_layer_of_state(const Graph& g, const LayeredState& state, int size_cap) {
    BestLayer best;
    best.index = -1;
    for (std::size_t i = 1; i < state.layers.size(); ++i) {
        Coloring col = chromatic_number(g.induced(state.layers[i]), size_cap);
        if (best.index == -1 || col.colours > best.chi) {
            best.index = static_cast<int>(i);
            best.chi = col.colours;
            best.vertices = state.layers[i];
        }
    }
    if (best.index == -1) throw std::invalid_argument("no layer with index >= 1 (single vertex)");
    return best;
}

std::vector<std::vector<int>> components_of_subset(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in_subset(g.vertex_count(), 0);
    for (int v : subset) in_subset[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::vector<int>> components;
    for (int s : subset) {
        if (seen[s]) continue;
        std::vector<int> comp, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in_subset[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace

int LayeredState::layer_of(int v) const {
    if (v < 0 || v >= static_cast<int>(father.size())) return -1;
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (std::binary_search(layers[i].begin(), layers[i].end(), v)) return static_cast<int>(i);
    return -1;
}

LayeredState bfs_layers(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    std::vector<char> all(g.vertex_count(), 1);
    return bfs_in_subset(g, all, root);
}

BestLayer best_layer(const Graph& g, int root, int size_cap) {
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    if (g.vertex_count() < 2) throw std::invalid_argument("graph has no layer with index >= 1");
    if (!g.is_connected()) throw std::invalid_argument("best_layer requires a connected graph");
    return best_layer_of_state(g, bfs_layers(g, root), size_cap);
}

ExtractionStep extract_once(const Graph& g, int root, int size_cap) {
    BestLayer layer = best_layer(g, root, size_cap);
    ExtractionStep step;
    step.vertices = layer.vertices;
    step.chi = layer.chi;
    step.root = root;
    step.layer_index = layer.index;
    step.state = bfs_layers(g, root);
    return step;
}

ExtractionChain extraction_sequence(const Graph& g, int p, int size_cap) {
    if (p < 0) throw std::invalid_argument("p must be non-negative");
    ExtractionChain chain;
    ExtractionStep whole;
    whole.vertices.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) whole.vertices[v] = v;
    whole.chi = chromatic_number(g, size_cap).colours;
    chain.steps.push_back(std::move(whole));

    for (int step_idx = 1; step_idx <= p; ++step_idx) {
        const ExtractionStep& prev = chain.steps.back();
        if (prev.vertices.size() <= 1) {
            chain.bottomed_out = true;
            break;
        }
        // chi of a disconnected graph lives in one component; extract there.
        auto components = components_of_subset(g, prev.vertices);
        int pick = -1, pick_chi = -1;
        for (std::size_t ci = 0; ci < components.size(); ++ci) {
            int chi = chromatic_number(g.induced(components[ci]), size_cap).colours;
            if (chi > pick_chi) {
                pick_chi = chi;
                pick = static_cast<int>(ci);
            }
        }
        const auto& comp = components[pick];
        if (comp.size() <= 1) {  // edgeless remainder
            chain.bottomed_out = true;
            break;
        }
        std::vector<char> in_comp(g.vertex_count(), 0);
        for (int v : comp) in_comp[v] = 1;
        int root = comp.front();
        LayeredState state = bfs_in_subset(g, in_comp, root);
        BestLayer layer = best_layer_of_state(g, state, size_cap);
        if (2 * layer.chi < prev.chi)
            throw std::logic_error("extraction halving certificate failed");
        ExtractionStep step;
        step.vertices = layer.vertices;
        step.chi = layer.chi;
        step.root = root;
        step.layer_index = layer.index;
        step.state = std::move(state);
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

PathWitness unimodal_path(const Graph& g, const LayeredState& state, int x, int y) {
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (x == y) throw std::invalid_argument("endpoints must be distinct");
    int ix = state.layer_of(x), iy = state.layer_of(y);
    if (ix == -1 || iy == -1 || ix != iy)
        throw std::invalid_argument("endpoints must lie in the same BFS layer");
    if (ix == 0) throw std::invalid_argument("endpoints must lie in a layer with index >= 1");

    // Chase fathers on both sides, stopping at the first edge between the two
    // chains. The check order (new vertex against the other chain's previous
    // depth first) keeps every skipped pair non-adjacent, so the result is
    // induced except possibly the edge xy.
    std::vector<int> xs = {x}, ys = {y};
    auto join = [&](std::size_t x_count, std::size_t y_count) {
        std::vector<int> verts(xs.begin(), xs.begin() + x_count);
        for (std::size_t i = y_count; i-- > 0;) verts.push_back(ys[i]);
        return PathWitness(g, std::move(verts));
    };
    for (int depth = 1; depth <= ix; ++depth) {
        int xd = state.father[xs.back()];
        if (xd == -1) throw std::logic_error("missing father pointer");
        if (g.has_edge(xd, ys.back())) {
            xs.push_back(xd);
            return join(xs.size(), ys.size());
        }
        xs.push_back(xd);
        int yd = state.father[ys.back()];
        if (yd == -1) throw std::logic_error("missing father pointer");
        if (g.has_edge(yd, xs[depth - 1])) {
            ys.push_back(yd);
            return join(xs.size() - 1, ys.size());  // drop the deeper x end
        }
        if (g.has_edge(yd, xs[depth])) {
            ys.push_back(yd);
            return join(xs.size(), ys.size());
        }
        ys.push_back(yd);
    }
    throw std::logic_error("father chains failed to meet");  // unreachable: both reach the root
}

bool check_noninterference(const Graph& g, const PathWitness& p, const PathWitness& q,
                           std::pair<int, int> ends_p, std::pair<int, int> ends_q) {
    std::string why;
    if (!is_valid_path(g, p.vertices, &why)) throw std::invalid_argument("invalid path p: " + why);
    if (!is_valid_path(g, q.vertices, &why)) throw std::invalid_argument("invalid path q: " + why);
    auto matches = [](const PathWitness& path, std::pair<int, int> ends) {
        int a = path.vertices.front(), b = path.vertices.back();
        return (ends.first == a && ends.second == b) || (ends.first == b && ends.second == a);
    };
    if (!matches(p, ends_p)) throw std::invalid_argument("ends_p does not match path p");
    if (!matches(q, ends_q)) throw std::invalid_argument("ends_q does not match path q");

    std::size_t m = p.vertices.size();
    for (std::size_t i = 2; i + 2 < m; ++i) {
        int v = p.vertices[i];
        for (int w : q.vertices)
            if (w != v && g.has_edge(v, w)) return false;
    }
    return true;
}

std::variant<Cycle, EdgeBoundCertificate> resolve_biclique_path_overlap(
    const Graph& g, const BicliqueWitness& K, const PathWitness& P, int u, long long k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::string why;
    if (!is_valid_path(g, P.vertices, &why)) throw std::invalid_argument("invalid path: " + why);
    if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("u out of range");

    const auto& A = K.side_a;
    const auto& B = K.side_b;
    long long ell = static_cast<long long>(A.size());
    if (ell == 0 || static_cast<long long>(B.size()) != ell)
        throw std::invalid_argument("biclique sides must be non-empty and balanced");
    long long sqrt_ceil = isqrt_ll(k);
    if (sqrt_ceil * sqrt_ceil < k) ++sqrt_ceil;
    if (ell < sqrt_ceil + 2)
        throw std::invalid_argument("biclique too small: need ell >= ceil(sqrt(k)) + 2");

    std::vector<char> in_K(g.vertex_count(), 0);
    std::vector<int> side_of(g.vertex_count(), -1);
    for (int v : A) {
        if (v < 0 || v >= g.vertex_count() || in_K[v])
            throw std::invalid_argument("bad biclique side");
        in_K[v] = 1;
        side_of[v] = 0;
    }
    for (int v : B) {
        if (v < 0 || v >= g.vertex_count() || in_K[v])
            throw std::invalid_argument("bad biclique side");
        in_K[v] = 1;
        side_of[v] = 1;
    }
    for (int a : A)
        for (int b : B)
            if (!g.has_edge(a, b)) throw std::invalid_argument("biclique is not fully joined");
    for (const auto& side : {A, B})
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                if (g.has_edge(side[i], side[j]))
                    throw std::invalid_argument("biclique is not induced (edge inside a side)");

    const auto& pv = P.vertices;
    int x = pv.front();
    if (!in_K[x]) throw std::invalid_argument("path must start in the biclique");
    if (pv.size() < 2) throw std::invalid_argument("path must have at least one edge");
    std::vector<char> on_P(g.vertex_count(), 0);
    std::vector<int> pos_in_P(g.vertex_count(), -1);
    for (std::size_t i = 0; i < pv.size(); ++i) {
        on_P[pv[i]] = 1;
        pos_in_P[pv[i]] = static_cast<int>(i);
    }
    if (on_P[u]) throw std::invalid_argument("u must lie outside the path");

    // Unimodality, as far as it is checkable here: the path is induced except
    // possibly its end pair, and the biclique sends no edges into
    // P minus {x, x-, y, y-}.
    int n_p = static_cast<int>(pv.size());
    for (int i = 0; i < n_p; ++i)
        for (int j = i + 2; j < n_p; ++j) {
            if (i == 0 && j == n_p - 1) continue;
            if (g.has_edge(pv[i], pv[j]))
                throw std::invalid_argument("path is not induced except its end pair");
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in_K[v]) continue;
        for (int i = 2; i + 2 < n_p; ++i)
            if (v != pv[i] && g.has_edge(v, pv[i]))
                throw std::invalid_argument("biclique sends edges deep into the path");
    }

    bool u_has_exit = false;
    for (int w : g.neighbors(u))
        if (in_K[w] && !on_P[w]) u_has_exit = true;
    if (!u_has_exit) throw std::invalid_argument("u has no edge into the biclique off the path");

    // Certificate branch: at most 8*sqrt(k) edges from u to P.
    std::vector<std::pair<int, int>> u_edges;
    for (int i = 0; i < n_p; ++i)
        if (g.has_edge(u, pv[i])) u_edges.emplace_back(u, pv[i]);
    long long d = static_cast<long long>(u_edges.size());
    if (d * d <= 64 * k) {
        EdgeBoundCertificate cert;
        cert.u = u;
        cert.edges = std::move(u_edges);
        cert.k = k;
        cert.bound = isqrt_ll(64 * k);
        return cert;
    }

    // Construction branch: close a cycle u w Q x P' u_b u whose chord count
    // is pinned to k by cutting P at the (b+1)-th neighbour of u.
    std::vector<int> nb_idx;  // u's neighbours along P minus x, in path order
    for (int i = 1; i < n_p; ++i)
        if (g.has_edge(u, pv[i])) nb_idx.push_back(i);

    std::vector<int> w_candidates;
    for (int w : g.neighbors(u))
        if (in_K[w] && !on_P[w]) w_candidates.push_back(w);
    std::sort(w_candidates.begin(), w_candidates.end());

    long long a_param = std::max<long long>(isqrt_ll(k) - 2, 0);
    int x_minus = pv[1];
    for (long long m = std::max<long long>(2 * a_param + 1, 2); m >= 2; --m) {
        for (int w : w_candidates) {
            bool same_side = side_of[x] == side_of[w];
            if (same_side != (m % 2 == 1)) continue;
            // Alternating path of m vertices from x to w inside K, interior
            // drawn lowest-id-first and avoiding P and u.
            long long need_x_side = (m + 1) / 2 - 1 - (same_side ? 1 : 0);
            long long need_other = m / 2 - (same_side ? 0 : 1);
            std::vector<int> pool_x, pool_other;
            for (int v : (side_of[x] == 0 ? A : B))
                if (!on_P[v] && v != u && v != w && v != x) pool_x.push_back(v);
            for (int v : (side_of[x] == 0 ? B : A))
                if (!on_P[v] && v != u && v != w) pool_other.push_back(v);
            if (static_cast<long long>(pool_x.size()) < need_x_side ||
                static_cast<long long>(pool_other.size()) < need_other)
                continue;
            std::vector<int> q_path = {x};
            std::size_t used_x = 0, used_other = 0;
            for (long long pos = 1; pos + 1 < m; ++pos) {
                if (pos % 2 == 1)
                    q_path.push_back(pool_other[used_other++]);
                else
                    q_path.push_back(pool_x[used_x++]);
            }
            q_path.push_back(w);

            // Chords of the path u w ... x x-, with the end-to-end edge
            // u x- (if present) left out: it either becomes a cycle edge or
            // is re-counted as a chord of the final cycle.
            std::vector<int> probe = {u};
            probe.insert(probe.end(), q_path.rbegin(), q_path.rend());
            probe.push_back(x_minus);
            long long k2 = path_chord_count(g, PathWitness(g, probe));
            if (g.has_edge(u, x_minus)) --k2;
            long long b = k - k2;
            if (b < 0 || b >= static_cast<long long>(nb_idx.size())) continue;
            int cut = nb_idx[static_cast<std::size_t>(b)];
            std::vector<int> verts = {u};
            verts.insert(verts.end(), q_path.rbegin(), q_path.rend());
            for (int i = 1; i <= cut; ++i) verts.push_back(pv[i]);
            Cycle candidate(g, verts);
            if (chord_count(g, candidate) == k) return candidate;
        }
    }
    throw std::invalid_argument(
        "could not realize a cycle with exactly k chords on this instance");
}

}  // namespace chordcycles
