#include "chordcycles/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace chordcycles {

LoadedGraph load_dimacs(std::istream& in) {
    long long n = -1, m = -1;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw std::invalid_argument("duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw std::invalid_argument("bad problem line at line " + std::to_string(line_no));
            continue;
        }
        if (tag == "e") {
            if (n == -1) throw std::invalid_argument("edge before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw std::invalid_argument("bad edge line at line " + std::to_string(line_no));
            raw_edges.emplace_back(u, v);
            continue;
        }
        throw std::invalid_argument("unknown line tag '" + tag + "' at line " +
                                    std::to_string(line_no));
    }
    if (n == -1) throw std::invalid_argument("missing problem line");
    if (static_cast<long long>(raw_edges.size()) != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", file has " + std::to_string(raw_edges.size()));

    bool standard = true;
    for (auto [u, v] : raw_edges)
        if (u < 1 || u > n || v < 1 || v > n) standard = false;

    LoadedGraph out;
    std::vector<std::pair<int, int>> edges;
    if (standard) {
        for (auto [u, v] : raw_edges)
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        out.graph = Graph::build(static_cast<int>(n), edges);
    } else {
        // Arbitrary labels: re-index in ascending label order and persist.
        std::map<long long, int> index;
        for (auto [u, v] : raw_edges) {
            index.emplace(u, 0);
            index.emplace(v, 0);
        }
        if (static_cast<long long>(index.size()) != n)
            throw std::invalid_argument("relabel mode: header n=" + std::to_string(n) +
                                        " but file names " + std::to_string(index.size()) +
                                        " distinct vertices");
        int next = 0;
        for (auto& [label, idx] : index) idx = next++;
        for (auto [u, v] : raw_edges) edges.emplace_back(index[u], index[v]);
        out.graph = Graph::build(static_cast<int>(n), edges);
        out.labels.reserve(index.size());
        for (auto& [label, idx] : index) out.labels.push_back(label);
    }
    return out;
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

LoadedGraph load_json_graph(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array())
        throw std::invalid_argument("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
    int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    LoadedGraph out;
    out.graph = Graph::build(n, edges);
    return out;
}

std::string emit_json_graph(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

LoadedGraph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    if (format == GraphFormat::autodetect) {
        int c = in.peek();
        while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            in.get();
            c = in.peek();
        }
        format = (c == '{') ? GraphFormat::json : GraphFormat::dimacs;
    }
    return format == GraphFormat::json ? load_json_graph(in) : load_dimacs(in);
}

}  // namespace chordcycles
