#include "chordcycles/serialize.hpp"

#include "json.hpp"

namespace chordcycles {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edge_array(const std::vector<std::pair<int, int>>& edges) {
    auto arr = ordered_json::array();
    for (auto [u, v] : edges) arr.push_back({u, v});
    return arr;
}

ordered_json cycle_object(const Graph& g, const Cycle& c) {
    ordered_json obj;
    obj["cycle"] = c.vertices;
    obj["chords"] = edge_array(cycle_chords(g, c));
    return obj;
}

ordered_json path_object(const Graph& g, const PathWitness& p) {
    ordered_json obj;
    obj["path"] = p.vertices;
    obj["chords"] = edge_array(path_chords(g, p));
    return obj;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string cycle_witness_json(const Graph& g, const Cycle& c) {
    return dump(cycle_object(g, c));
}

std::string path_witness_json(const Graph& g, const PathWitness& p) {
    return dump(path_object(g, p));
}

std::string spectrum_json(const Graph& g, const ChordSpectrumReport& report) {
    ordered_json doc;
    doc["max_len"] = report.max_len;
    auto entries = ordered_json::array();
    for (const auto& [chords, witness] : report.achievable) {
        ordered_json entry;
        entry["chords"] = chords;
        entry["witness"] = cycle_object(g, witness);
        entries.push_back(std::move(entry));
    }
    doc["achievable"] = std::move(entries);
    return dump(doc);
}

std::string wheel_witness_json(const Graph& g, const WheelWitness& w) {
    ordered_json doc;
    doc["hub"] = w.hub;
    doc["rim"] = w.rim.vertices;
    doc["spokes"] = w.spokes;
    return dump(doc);
}

std::string square_decomposition_json(const SquareDecomposition& d) {
    ordered_json doc;
    doc["target"] = d.target;
    doc["floor"] = d.floor_c;
    doc["terms"] = d.terms;
    return dump(doc);
}

std::string pronic_decomposition_json(const PronicDecomposition& d) {
    ordered_json doc;
    doc["target"] = d.target;
    doc["floor"] = d.floor_c;
    doc["terms"] = d.terms;
    return dump(doc);
}

std::string extraction_chain_json(const ExtractionChain& chain) {
    ordered_json doc;
    auto steps = ordered_json::array();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        ordered_json entry;
        entry["vertices"] = step.vertices;
        entry["chi"] = step.chi;
        if (i > 0) {
            entry["root"] = step.root;
            entry["layer_index"] = step.layer_index;
            entry["layers"] = step.state.layers;
            auto fathers = ordered_json::array();
            for (std::size_t v = 0; v < step.state.father.size(); ++v)
                if (step.state.father[v] != -1)
                    fathers.push_back({static_cast<int>(v), step.state.father[v]});
            entry["father"] = std::move(fathers);
        }
        steps.push_back(std::move(entry));
    }
    doc["steps"] = std::move(steps);
    doc["bottomed_out"] = chain.bottomed_out;
    return dump(doc);
}

std::string blueprint_json(const GadgetBlueprint& bp) {
    ordered_json doc;
    doc["formula"] = bp.formula_id;
    auto params = ordered_json::object();
    for (const auto& [key, value] : bp.parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    doc["n"] = bp.graph.vertex_count();
    doc["edges"] = edge_array(bp.graph.edges());
    if (std::holds_alternative<Cycle>(bp.distinguished)) {
        doc["distinguished"] = cycle_object(bp.graph, std::get<Cycle>(bp.distinguished));
        doc["distinguished"]["type"] = "cycle";
    } else {
        doc["distinguished"] = path_object(bp.graph, std::get<PathWitness>(bp.distinguished));
        doc["distinguished"]["type"] = "path";
    }
    doc["predicted_chords"] = bp.predicted_chords;
    doc["measured_chords"] = bp.measured_chords;
    return dump(doc);
}

std::string edge_bound_certificate_json(const EdgeBoundCertificate& cert) {
    ordered_json doc;
    doc["u"] = cert.u;
    doc["edges"] = edge_array(cert.edges);
    doc["edge_count"] = cert.edges.size();
    doc["k"] = cert.k;
    doc["bound"] = cert.bound;
    return dump(doc);
}

}  // namespace chordcycles
