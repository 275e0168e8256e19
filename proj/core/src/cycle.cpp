#include "chordcycles/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordcycles {

namespace {

bool all_distinct(const std::vector<int>& verts) {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_valid_cycle(const Graph& g, const std::vector<int>& verts, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (verts.size() < 3) return fail("cycle needs at least 3 vertices");
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
    if (!all_distinct(verts)) return fail("repeated vertex");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int u = verts[i];
        int v = verts[(i + 1) % verts.size()];
        if (!g.has_edge(u, v))
            return fail("missing edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return true;
}

bool is_valid_path(const Graph& g, const std::vector<int>& verts, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (verts.empty()) return fail("empty path");
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
    if (!all_distinct(verts)) return fail("repeated vertex");
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (!g.has_edge(verts[i], verts[i + 1]))
            return fail("missing edge (" + std::to_string(verts[i]) + "," +
                        std::to_string(verts[i + 1]) + ")");
    return true;
}

std::vector<int> canonical_cycle_form(std::vector<int> verts) {
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    if (verts.size() >= 3 && verts[1] > verts.back())
        std::reverse(verts.begin() + 1, verts.end());
    return verts;
}

Cycle::Cycle(const Graph& host, std::vector<int> verts) {
    std::string why;
    if (!is_valid_cycle(host, verts, &why)) throw std::invalid_argument("invalid cycle: " + why);
    vertices = canonical_cycle_form(std::move(verts));
}

PathWitness::PathWitness(const Graph& host, std::vector<int> verts) {
    std::string why;
    if (!is_valid_path(host, verts, &why)) throw std::invalid_argument("invalid path: " + why);
    vertices = std::move(verts);
}

long long chord_count(const Graph& g, const Cycle& c) {
    std::string why;
    if (!is_valid_cycle(g, c.vertices, &why)) throw std::invalid_argument("invalid cycle: " + why);
    return g.induced_edge_count(c.vertices) - c.length();
}

std::vector<std::pair<int, int>> cycle_chords(const Graph& g, const Cycle& c) {
    std::string why;
    if (!is_valid_cycle(g, c.vertices, &why)) throw std::invalid_argument("invalid cycle: " + why);
    int m = c.length();
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (consecutive) continue;
            int u = c.vertices[i], v = c.vertices[j];
            if (g.has_edge(u, v)) chords.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

long long path_chord_count(const Graph& g, const PathWitness& p) {
    std::string why;
    if (!is_valid_path(g, p.vertices, &why)) throw std::invalid_argument("invalid path: " + why);
    return g.induced_edge_count(p.vertices) - p.length();
}

std::vector<std::pair<int, int>> path_chords(const Graph& g, const PathWitness& p) {
    std::string why;
    if (!is_valid_path(g, p.vertices, &why)) throw std::invalid_argument("invalid path: " + why);
    std::vector<std::pair<int, int>> chords;
    int m = static_cast<int>(p.vertices.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) {
            int u = p.vertices[i], v = p.vertices[j];
            if (g.has_edge(u, v)) chords.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

CycleStream::CycleStream(const Graph& g, int max_len) : g_(g), max_len_(max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
    on_path_.assign(g.vertex_count(), 0);
}

// Starts the DFS at the next root with any neighbours left; roots are taken
// in ascending order so every cycle is discovered from its minimum vertex.
bool CycleStream::begin_root() {
    while (start_ < g_.vertex_count()) {
        if (!g_.neighbors(start_).empty()) {
            stack_.assign(1, Frame{start_, 0});
            path_.assign(1, start_);
            on_path_[start_] = 1;
            return true;
        }
        ++start_;
    }
    return false;
}

std::optional<Cycle> CycleStream::next() {
    while (true) {
        if (stack_.empty()) {
            if (!begin_root()) return std::nullopt;
        }
        Frame& frame = stack_.back();
        const auto& nbrs = g_.neighbors(frame.vertex);
        if (frame.next_idx >= nbrs.size()) {
            on_path_[frame.vertex] = 0;
            path_.pop_back();
            stack_.pop_back();
            if (stack_.empty()) ++start_;
            continue;
        }
        int u = nbrs[frame.next_idx++];
        if (u == start_) {
            // Closure: sorted adjacency guarantees this is checked before any
            // extension, so cycles stream out in lexicographic order.
            if (path_.size() >= 3 && path_[1] < path_.back()) {
                Cycle c;
                c.vertices = path_;
                return c;
            }
            continue;
        }
        if (u < start_ || on_path_[u]) continue;
        if (static_cast<int>(path_.size()) >= max_len_) continue;
        stack_.push_back(Frame{u, 0});
        path_.push_back(u);
        on_path_[u] = 1;
    }
}

std::vector<Cycle> all_cycles(const Graph& g, int max_len) {
    CycleStream stream(g, max_len);
    std::vector<Cycle> cycles;
    while (auto c = stream.next()) cycles.push_back(std::move(*c));
    return cycles;
}

}  // namespace chordcycles
