// Command-line front end for the chordcycles library. One command per
// process; JSON reports on stdout, diagnostics on stderr. Exit codes:
// 0 success, 2 none/infeasible, 1 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordcycles/chordsearch.hpp"
#include "chordcycles/coloring.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/errors.hpp"
#include "chordcycles/extraction.hpp"
#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/io.hpp"
#include "chordcycles/numtheory.hpp"
#include "chordcycles/serialize.hpp"

namespace {

using chordcycles::Cycle;
using chordcycles::Graph;
using chordcycles::PathWitness;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;

struct Options {
    std::string graph_path;
    std::string format = "auto";
    std::string out_path;
    bool timing = false;
    std::optional<unsigned long long> seed;
};

chordcycles::GraphFormat parse_format(const std::string& name) {
    if (name == "dimacs") return chordcycles::GraphFormat::dimacs;
    if (name == "json") return chordcycles::GraphFormat::json;
    return chordcycles::GraphFormat::autodetect;
}

std::vector<int> parse_id_list(const std::string& csv) {
    std::vector<int> ids;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        ids.push_back(std::stoi(token));
    }
    return ids;
}

// Independent checker: chords counted as adjacent non-consecutive pairs,
// not via the e(G[V(C)]) - |C| identity the library uses.
long long direct_cycle_chords(const Graph& g, const std::vector<int>& verts) {
    long long count = 0;
    int m = static_cast<int>(verts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (!consecutive && g.has_edge(verts[i], verts[j])) ++count;
        }
    return count;
}

int emit_report(const Options& opts, ordered_json report, long long wall_ms, int exit_code) {
    if (opts.timing) report["wall_time_ms"] = wall_ms;
    std::string text = report.dump(2) + "\n";
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return kExitError;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return exit_code;
}

ordered_json base_report(const std::string& command, ordered_json inputs, const Options& opts) {
    ordered_json report;
    report["command"] = command;
    if (opts.seed) inputs["seed"] = *opts.seed;
    report["inputs"] = std::move(inputs);
    return report;
}

Graph load_graph(const Options& opts) {
    if (opts.graph_path.empty()) throw std::invalid_argument("--graph is required");
    return chordcycles::load_graph_file(opts.graph_path, parse_format(opts.format)).graph;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run_chords(const Options& opts, const std::string& cycle_csv) {
    Timer timer;
    Graph g = load_graph(opts);
    std::vector<int> verts = parse_id_list(cycle_csv);
    Cycle cycle(g, verts);
    long long chords = chord_count(g, cycle);
    long long check = direct_cycle_chords(g, cycle.vertices);

    auto report = base_report(
        "chords", {{"graph", opts.graph_path}, {"cycle", verts}}, opts);
    report["outcome"] = ordered_json::parse(chordcycles::cycle_witness_json(g, cycle));
    report["outcome"]["chord_count"] = chords;
    report["verification"] = (chords == check) ? "pass" : "fail";
    if (chords != check) {
        report["predicted"] = chords;
        report["measured"] = check;
        std::cerr << "verification failed: formula " << chords << ", direct " << check << "\n";
        return emit_report(opts, std::move(report), timer.ms(), kExitError);
    }
    return emit_report(opts, std::move(report), timer.ms(), kExitOk);
}

int run_find(const Options& opts, long long k, int max_len) {
    Timer timer;
    Graph g = load_graph(opts);
    auto witness = chordcycles::find_cycle_with_exact_chords(g, k, max_len);
    auto report = base_report(
        "find", {{"graph", opts.graph_path}, {"k", k}, {"max_len", max_len}}, opts);
    if (!witness) {
        report["outcome"] = {{"found", false}, {"note", "none up to max_len"}};
        report["verification"] = "pass";
        return emit_report(opts, std::move(report), timer.ms(), kExitNone);
    }
    long long chords = chord_count(g, *witness);
    long long check = direct_cycle_chords(g, witness->vertices);
    report["outcome"] = ordered_json::parse(chordcycles::cycle_witness_json(g, *witness));
    report["outcome"]["found"] = true;
    report["verification"] = (chords == k && check == k) ? "pass" : "fail";
    if (report["verification"] == "fail") {
        report["predicted"] = k;
        report["measured"] = check;
        std::cerr << "verification failed: asked " << k << ", measured " << check << "\n";
        return emit_report(opts, std::move(report), timer.ms(), kExitError);
    }
    return emit_report(opts, std::move(report), timer.ms(), kExitOk);
}

int run_spectrum(const Options& opts, int max_len) {
    Timer timer;
    Graph g = load_graph(opts);
    auto report_data = chordcycles::chord_spectrum(g, max_len);
    auto report = base_report(
        "spectrum", {{"graph", opts.graph_path}, {"max_len", max_len}}, opts);
    report["outcome"] = ordered_json::parse(chordcycles::spectrum_json(g, report_data));
    bool ok = true;
    for (const auto& [chords, witness] : report_data.achievable)
        if (direct_cycle_chords(g, witness.vertices) != chords) ok = false;
    report["verification"] = ok ? "pass" : "fail";
    return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
}

int run_wheel(const Options& opts, int k, int max_rim, std::optional<int> j) {
    Timer timer;
    Graph g = load_graph(opts);
    auto witness = chordcycles::find_k_wheel(g, k, max_rim);
    auto report = base_report(
        "wheel", {{"graph", opts.graph_path}, {"k", k}, {"max_rim", max_rim}}, opts);
    if (!witness) {
        report["outcome"] = {{"found", false}, {"note", "none up to max_rim"}};
        report["verification"] = "pass";
        return emit_report(opts, std::move(report), timer.ms(), kExitNone);
    }
    report["outcome"] = ordered_json::parse(chordcycles::wheel_witness_json(g, *witness));
    report["outcome"]["found"] = true;
    bool ok = witness->spokes >= k;
    if (j) {
        Cycle chorded = chordcycles::wheel_to_chorded_cycle(g, *witness, *j);
        report["outcome"]["chorded_cycle"] =
            ordered_json::parse(chordcycles::cycle_witness_json(g, chorded));
        ok = ok && direct_cycle_chords(g, chorded.vertices) == *j;
    }
    report["verification"] = ok ? "pass" : "fail";
    return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
}

int run_fan(const Options& opts, const std::string& path_csv, int hub, int k) {
    Timer timer;
    Graph g = load_graph(opts);
    PathWitness path(g, parse_id_list(path_csv));
    Cycle cycle = chordcycles::fan_to_chorded_cycle(g, path, hub, k);
    auto report = base_report(
        "fan", {{"graph", opts.graph_path}, {"path", path.vertices}, {"hub", hub}, {"k", k}},
        opts);
    report["outcome"] = ordered_json::parse(chordcycles::cycle_witness_json(g, cycle));
    bool ok = direct_cycle_chords(g, cycle.vertices) == k - 2;
    report["verification"] = ok ? "pass" : "fail";
    return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
}

int run_decompose(const Options& opts, const std::string& kind, long long k, long long c) {
    Timer timer;
    auto report = base_report("decompose", {{"kind", kind}, {"k", k}, {"c", c}}, opts);
    try {
        std::vector<long long> terms;
        long long resum = 0;
        if (kind == "squares4") {
            auto xs = chordcycles::four_squares(k);
            terms.assign(xs.begin(), xs.end());
            chordcycles::SquareDecomposition d{k, 0, terms};
            report["outcome"] =
                ordered_json::parse(chordcycles::square_decomposition_json(d));
            for (long long t : terms) resum += t * t;
        } else if (kind == "squares20") {
            auto d = chordcycles::twenty_squares_above(k, c);
            terms = d.terms;
            report["outcome"] =
                ordered_json::parse(chordcycles::square_decomposition_json(d));
            for (long long t : terms) resum += t * t;
        } else if (kind == "pronic80") {
            auto d = chordcycles::eighty_pronic(k, c);
            terms = d.terms;
            report["outcome"] =
                ordered_json::parse(chordcycles::pronic_decomposition_json(d));
            for (long long t : terms) resum += t * (t + 1);
        } else {
            throw std::invalid_argument("unknown kind: " + kind);
        }
        bool ok = resum == k;
        report["verification"] = ok ? "pass" : "fail";
        if (!ok) {
            report["predicted"] = k;
            report["measured"] = resum;
            std::cerr << "verification failed: target " << k << ", re-sum " << resum << "\n";
        }
        return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
    } catch (const chordcycles::DecompositionInfeasible& e) {
        report["outcome"] = {{"feasible", false}, {"note", e.what()}};
        report["verification"] = "pass";
        return emit_report(opts, std::move(report), timer.ms(), kExitNone);
    }
}

int run_gadget(const Options& opts, const std::string& name, const std::vector<long long>& p) {
    Timer timer;
    auto need = [&](std::size_t count, const std::string& usage) {
        if (p.size() != count)
            throw std::invalid_argument("gadget " + name + " expects parameters: " + usage);
    };
    auto at = [&](std::size_t i) { return static_cast<int>(p[i]); };

    auto report = base_report("gadget", {{"name", name}, {"params", p}}, opts);
    if (name == "mycielski") {
        need(1, "T");
        Graph g = chordcycles::gen_mycielski(at(0));
        report["outcome"] = ordered_json::parse(chordcycles::emit_json_graph(g));
        report["verification"] = "pass";
        return emit_report(opts, std::move(report), timer.ms(), kExitOk);
    }

    chordcycles::GadgetBlueprint bp;
    if (name == "wheel") {
        need(2, "RIM_LEN SPOKES");
        bp = chordcycles::gen_wheel(at(0), at(1));
    } else if (name == "fan") {
        need(2, "PATH_LEN K");
        bp = chordcycles::gen_fan(at(0), at(1));
    } else if (name == "biclique-path") {
        need(2, "ELL A");
        bp = chordcycles::biclique_path(at(0), at(1));
    } else if (name == "claim47") {
        need(2, "SIGMA REQUIREMENT");
        bp = chordcycles::claim47_path(at(0), at(1));
    } else if (name == "complete-case" || name == "oneside-case") {
        if (p.size() < 3) throw std::invalid_argument("expected R ELL X A_1..A_R");
        int r = at(0), ell = at(1), x = at(2);
        need(3 + static_cast<std::size_t>(r), "R ELL X A_1..A_R");
        std::vector<int> a;
        for (int i = 0; i < r; ++i) a.push_back(at(3 + i));
        // The first x hub pairs in lexicographic order.
        std::vector<std::pair<int, int>> hub_edges;
        for (int h1 = 0; h1 < r && static_cast<int>(hub_edges.size()) < x; ++h1)
            for (int h2 = h1 + 1; h2 < r && static_cast<int>(hub_edges.size()) < x; ++h2)
                hub_edges.emplace_back(h1, h2);
        if (static_cast<int>(hub_edges.size()) != x)
            throw std::invalid_argument("x exceeds the number of hub pairs");
        bp = (name == "complete-case")
                 ? chordcycles::assemble_complete_case(r, ell, a, hub_edges)
                 : chordcycles::assemble_oneside_case(r, ell, a, hub_edges);
    } else if (name == "multi-biclique") {
        if (p.size() < 2) throw std::invalid_argument("expected R ELL A_1..A_R");
        int r = at(0);
        need(2 + static_cast<std::size_t>(r), "R ELL A_1..A_R");
        std::vector<int> a;
        for (int i = 0; i < r; ++i) a.push_back(at(2 + i));
        bp = chordcycles::assemble_multi_biclique(r, at(1), a, {});
    } else if (name == "case1") {
        if (p.empty()) throw std::invalid_argument("expected K [LEN_1..LEN_K]");
        std::vector<int> lens;
        for (std::size_t i = 1; i < p.size(); ++i) lens.push_back(at(i));
        bp = chordcycles::case1_gadget(at(0), lens);
    } else if (name == "case2") {
        if (p.empty()) throw std::invalid_argument("expected S [LEN_1..LEN_S]");
        std::vector<int> lens;
        for (std::size_t i = 1; i < p.size(); ++i) lens.push_back(at(i));
        bp = chordcycles::case2_gadget(at(0), lens);
    } else {
        throw std::invalid_argument("unknown gadget: " + name);
    }

    report["outcome"] = ordered_json::parse(chordcycles::blueprint_json(bp));
    long long check =
        std::holds_alternative<Cycle>(bp.distinguished)
            ? direct_cycle_chords(bp.graph, std::get<Cycle>(bp.distinguished).vertices)
            : static_cast<long long>(
                  path_chords(bp.graph, std::get<PathWitness>(bp.distinguished)).size());
    bool ok = check == bp.predicted_chords && bp.measured_chords == bp.predicted_chords;
    report["verification"] = ok ? "pass" : "fail";
    if (!ok) {
        report["predicted"] = bp.predicted_chords;
        report["measured"] = check;
        std::cerr << "verification failed: predicted " << bp.predicted_chords << ", measured "
                  << check << "\n";
    }
    return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
}

int run_extract(const Options& opts, int steps) {
    Timer timer;
    Graph g = load_graph(opts);
    auto chain = chordcycles::extraction_sequence(g, steps);
    auto report = base_report(
        "extract", {{"graph", opts.graph_path}, {"p", steps}}, opts);
    report["outcome"] = ordered_json::parse(chordcycles::extraction_chain_json(chain));
    bool ok = true;
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        if (2 * step.chi < chain.steps[i - 1].chi) ok = false;
        if (step.layer_index < 1 ||
            step.layer_index >= static_cast<int>(step.state.layers.size()) ||
            step.vertices != step.state.layers[step.layer_index])
            ok = false;
        for (int v : step.vertices) {
            int father = step.state.father[v];
            if (father == -1 || !g.has_edge(v, father)) ok = false;
        }
    }
    report["verification"] = ok ? "pass" : "fail";
    return emit_report(opts, std::move(report), timer.ms(), ok ? kExitOk : kExitError);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for cycles with a prescribed number of chords"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--out", opts.out_path, "write the JSON report to a file instead of stdout");
    app.add_flag("--timing", opts.timing, "include wall_time_ms in the report");
    unsigned long long seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "seed recorded in the report");

    std::string cycle_csv, path_csv, kind, gadget_name;
    long long k_value = 0, c_value = 1;
    int max_len = 0, max_rim = 0, hub = 0, p_steps = 0;
    int j_value = -1;
    std::vector<long long> gadget_params;

    auto add_graph_opts = [&](CLI::App* cmd, bool required = true) {
        auto* g = cmd->add_option("--graph", opts.graph_path, "graph file (DIMACS or JSON)");
        if (required) g->required();
        cmd->add_option("--format", opts.format, "dimacs|json|auto")->default_val("auto");
    };

    auto* cmd_chords = app.add_subcommand("chords", "count the chords of a cycle");
    add_graph_opts(cmd_chords);
    cmd_chords->add_option("--cycle", cycle_csv, "comma-separated vertex ids")->required();

    auto* cmd_find = app.add_subcommand("find", "find a cycle with exactly k chords");
    add_graph_opts(cmd_find);
    cmd_find->add_option("--k", k_value, "chord count")->required();
    cmd_find->add_option("--max-len", max_len, "cycle length bound")->required();

    auto* cmd_spectrum = app.add_subcommand("spectrum", "achievable chord counts up to a bound");
    add_graph_opts(cmd_spectrum);
    cmd_spectrum->add_option("--max-len", max_len, "cycle length bound")->required();

    auto* cmd_wheel = app.add_subcommand("wheel", "find a k-wheel (induced rim)");
    add_graph_opts(cmd_wheel);
    cmd_wheel->add_option("--k", k_value, "required spokes")->required();
    cmd_wheel->add_option("--max-rim", max_rim, "rim length bound")->required();
    cmd_wheel->add_option("--j", j_value, "also close a cycle with j chords");

    auto* cmd_fan = app.add_subcommand("fan", "close a (k-2)-chord cycle from a fan");
    add_graph_opts(cmd_fan);
    cmd_fan->add_option("--path", path_csv, "comma-separated path vertex ids")->required();
    cmd_fan->add_option("--hub", hub, "hub vertex")->required();
    cmd_fan->add_option("--k", k_value, "hub neighbours on the path")->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "additive decompositions");
    cmd_decompose->add_option("--kind", kind, "squares4|squares20|pronic80")->required();
    cmd_decompose->add_option("--k", k_value, "target integer")->required();
    cmd_decompose->add_option("--c", c_value, "floor parameter")->default_val(1);

    auto* cmd_gadget = app.add_subcommand("gadget", "construct a verified gadget");
    cmd_gadget->add_option("name", gadget_name, "gadget name")->required();
    cmd_gadget->add_option("params", gadget_params, "integer parameters");

    auto* cmd_extract = app.add_subcommand("extract", "chi-preserving extraction chain");
    add_graph_opts(cmd_extract);
    cmd_extract->add_option("--p", p_steps, "number of extraction steps")->required();

    // Global flags (--out, --timing, --seed) may trail the subcommand.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (*seed_opt) opts.seed = seed_value;

    try {
        if (cmd_chords->parsed()) return run_chords(opts, cycle_csv);
        if (cmd_find->parsed()) return run_find(opts, k_value, max_len);
        if (cmd_spectrum->parsed()) return run_spectrum(opts, max_len);
        if (cmd_wheel->parsed())
            return run_wheel(opts, static_cast<int>(k_value), max_rim,
                             j_value >= 0 ? std::optional<int>(j_value) : std::nullopt);
        if (cmd_fan->parsed()) return run_fan(opts, path_csv, hub, static_cast<int>(k_value));
        if (cmd_decompose->parsed()) return run_decompose(opts, kind, k_value, c_value);
        if (cmd_gadget->parsed()) return run_gadget(opts, gadget_name, gadget_params);
        if (cmd_extract->parsed()) return run_extract(opts, p_steps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
