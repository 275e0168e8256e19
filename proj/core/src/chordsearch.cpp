#include "chordcycles/chordsearch.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordcycles {

namespace {

// DFS over canonical cycle representations (minimum vertex first, ascending
// neighbours, closure before extension) with incremental induced-edge
// counting. A partial path with e induced edges on p vertices can only close
// into cycles with at least e - p chords, so paths with e - p > k are cut.
// Visits cycles in lexicographic order; calls fn(path, chords) on each cycle
// whose chord count is <= k (callers filter); fn returning true stops.
template <typename Fn>
void chord_bounded_scan(const Graph& g, long long k, int max_len, Fn&& fn) {
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    std::vector<long long> edges_within;  // edges_within[d]: induced edges on path[0..d]

    struct Frame {
        int vertex;
        std::size_t next_idx;
    };
    std::vector<Frame> stack;

    for (int start = 0; start < n; ++start) {
        if (g.neighbors(start).empty()) continue;
        stack.assign(1, Frame{start, 0});
        path.assign(1, start);
        on_path[start] = 1;
        edges_within.assign(1, 0);
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto& nbrs = g.neighbors(frame.vertex);
            if (frame.next_idx >= nbrs.size()) {
                on_path[frame.vertex] = 0;
                path.pop_back();
                edges_within.pop_back();
                stack.pop_back();
                continue;
            }
            int u = nbrs[frame.next_idx++];
            if (u == start) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    long long chords = edges_within.back() - static_cast<long long>(path.size());
                    if (chords <= k && fn(path, chords)) return;
                }
                continue;
            }
            if (u < start || on_path[u]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            long long added = 0;
            for (int w : g.neighbors(u))
                if (on_path[w]) ++added;
            long long e_next = edges_within.back() + added;
            long long p_next = static_cast<long long>(path.size()) + 1;
            if (e_next - p_next > k) continue;
            stack.push_back(Frame{u, 0});
            path.push_back(u);
            on_path[u] = 1;
            edges_within.push_back(e_next);
        }
    }
}

}  // namespace

std::optional<Cycle> find_cycle_with_exact_chords(const Graph& g, long long k, int max_len) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
    std::optional<Cycle> found;
    chord_bounded_scan(g, k, max_len, [&](const std::vector<int>& path, long long chords) {
        if (chords != k) return false;
        Cycle c;
        c.vertices = path;
        found = std::move(c);
        return true;
    });
    return found;
}

ChordSpectrumReport chord_spectrum(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
    ChordSpectrumReport report;
    report.max_len = max_len;
    CycleStream stream(g, max_len);
    while (auto c = stream.next()) {
        long long chords = chord_count(g, *c);
        report.achievable.try_emplace(chords, std::move(*c));
    }
    return report;
}

std::optional<WheelWitness> find_k_wheel(const Graph& g, int k, int max_rim) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (max_rim < 3) throw std::invalid_argument("max_rim must be at least 3");
    std::optional<WheelWitness> found;
    // Rims are induced cycles, i.e. cycles with zero chords.
    chord_bounded_scan(g, 0, max_rim, [&](const std::vector<int>& rim, long long chords) {
        if (chords != 0) return false;
        std::vector<char> on_rim(g.vertex_count(), 0);
        for (int v : rim) on_rim[v] = 1;
        for (int hub = 0; hub < g.vertex_count(); ++hub) {
            if (on_rim[hub]) continue;
            int spokes = 0;
            for (int w : g.neighbors(hub))
                if (on_rim[w]) ++spokes;
            if (spokes >= k) {
                WheelWitness w;
                w.hub = hub;
                w.rim.vertices = rim;
                w.spokes = spokes;
                found = std::move(w);
                return true;
            }
        }
        return false;
    });
    return found;
}

Cycle wheel_to_chorded_cycle(const Graph& g, const WheelWitness& w, int j) {
    if (j < 0) throw std::invalid_argument("j must be non-negative");
    std::string why;
    if (!is_valid_cycle(g, w.rim.vertices, &why))
        throw std::invalid_argument("invalid rim: " + why);
    if (chord_count(g, w.rim) != 0) throw std::invalid_argument("rim is not induced");
    int rim_len = w.rim.length();
    std::vector<int> spoke_pos;  // rim positions adjacent to the hub, in rim order
    for (int i = 0; i < rim_len; ++i)
        if (g.has_edge(w.hub, w.rim.vertices[i])) spoke_pos.push_back(i);
    int s = static_cast<int>(spoke_pos.size());
    if (s != w.spokes) throw std::invalid_argument("witness spoke count does not match the graph");
    if (j > s - 2)
        throw std::invalid_argument("j too large for this wheel: j=" + std::to_string(j) +
                                    ", spokes=" + std::to_string(s));

    // Scan windows of j+2 consecutive hub neighbours; the rim arc from the
    // first to the last of the window, closed through the hub, carries the j
    // interior neighbours as its only chords whenever the arc is proper.
    for (int t = 0; t < s; ++t) {
        int from = spoke_pos[t];
        int to = spoke_pos[(t + j + 1) % s];
        int arc_len = (to - from + rim_len) % rim_len;  // forward steps
        if (arc_len == 0 || arc_len == rim_len) continue;
        std::vector<int> verts;
        for (int step = 0; step <= arc_len; ++step)
            verts.push_back(w.rim.vertices[(from + step) % rim_len]);
        if (static_cast<int>(verts.size()) == rim_len) continue;  // whole rim: closing edge
        verts.push_back(w.hub);
        Cycle candidate(g, verts);
        if (chord_count(g, candidate) == j) return candidate;
    }
    throw std::invalid_argument("no spoke window of this wheel admits a cycle with " +
                                std::to_string(j) + " chords");
}

Cycle fan_to_chorded_cycle(const Graph& g, const PathWitness& path, int hub, int k) {
    std::string why;
    if (!is_valid_path(g, path.vertices, &why)) throw std::invalid_argument("invalid path: " + why);
    if (hub < 0 || hub >= g.vertex_count()) throw std::invalid_argument("hub out of range");
    for (int v : path.vertices)
        if (v == hub) throw std::invalid_argument("hub must not lie on the path");
    std::vector<int> hits;  // indices of hub neighbours along the path
    for (std::size_t i = 0; i < path.vertices.size(); ++i)
        if (g.has_edge(hub, path.vertices[i])) hits.push_back(static_cast<int>(i));
    if (hits.size() < 2)
        throw std::invalid_argument("hub has fewer than 2 neighbours on the path");
    if (static_cast<int>(hits.size()) != k)
        throw std::invalid_argument("hub has " + std::to_string(hits.size()) +
                                    " path neighbours, expected exactly " + std::to_string(k));
    std::vector<int> verts(path.vertices.begin() + hits.front(),
                           path.vertices.begin() + hits.back() + 1);
    verts.push_back(hub);
    Cycle cycle(g, verts);
    long long measured = chord_count(g, cycle);
    if (measured != k - 2)
        throw std::invalid_argument("fan cycle has " + std::to_string(measured) +
                                    " chords, expected " + std::to_string(k - 2) +
                                    " (path segment not induced?)");
    return cycle;
}

}  // namespace chordcycles
