#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/io.hpp"

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CHORDCYCLES_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "CHORDCYCLES_CLI must point at the built binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string k33_file() {
    static std::string path =
        write_temp("cli_k33.json",
                   chordcycles::emit_json_graph(chordcycles::Graph::complete_bipartite(3, 3)))
            .string();
    return path;
}

}  // namespace

TEST_CASE("chords command") {
    auto ok = run_cli("chords --graph " + k33_file() + " --cycle 0,3,1,4,2,5");
    CHECK(ok.exit_code == 0);
    json report = json::parse(ok.out);
    CHECK(report["command"] == "chords");
    CHECK(report["outcome"]["chord_count"] == 3);
    CHECK(report["verification"] == "pass");

    auto triangle = write_temp("cli_k3.json",
                               chordcycles::emit_json_graph(chordcycles::Graph::complete(3)));
    auto zero = run_cli("chords --graph " + triangle.string() + " --cycle 0,1,2");
    CHECK(zero.exit_code == 0);
    CHECK(json::parse(zero.out)["outcome"]["chord_count"] == 0);

    auto bad = run_cli("chords --graph " + k33_file() + " --cycle 0,1,2");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("find and spectrum commands") {
    auto k4 = write_temp("cli_k4.json",
                         chordcycles::emit_json_graph(chordcycles::Graph::complete(4)));
    auto hit = run_cli("find --graph " + k4.string() + " --k 2 --max-len 4");
    CHECK(hit.exit_code == 0);
    json hit_report = json::parse(hit.out);
    CHECK(hit_report["outcome"]["found"] == true);
    CHECK(hit_report["outcome"]["chords"].size() == 2);

    auto miss = run_cli("find --graph " + k4.string() + " --k 1 --max-len 4");
    CHECK(miss.exit_code == 2);
    CHECK(json::parse(miss.out)["outcome"]["found"] == false);

    auto tree = write_temp("cli_tree.json",
                           chordcycles::emit_json_graph(chordcycles::Graph::path_graph(5)));
    CHECK(run_cli("find --graph " + tree.string() + " --k 0 --max-len 5").exit_code == 2);

    auto spec = run_cli("spectrum --graph " + k4.string() + " --max-len 4");
    CHECK(spec.exit_code == 0);
    CHECK(json::parse(spec.out)["outcome"]["achievable"].size() == 2);
}

TEST_CASE("decompose command") {
    auto squares4 = run_cli("decompose --kind squares4 --k 7");
    CHECK(squares4.exit_code == 0);
    CHECK(json::parse(squares4.out)["outcome"]["terms"] == json({2, 1, 1, 1}));

    auto squares20 = run_cli("decompose --kind squares20 --k 80 --c 1");
    CHECK(squares20.exit_code == 0);
    CHECK(json::parse(squares20.out)["outcome"]["terms"] == json(std::vector<int>(20, 2)));

    auto pronic = run_cli("decompose --kind pronic80 --k 160 --c 1");
    CHECK(pronic.exit_code == 0);
    CHECK(json::parse(pronic.out)["outcome"]["terms"] == json(std::vector<int>(80, 1)));

    auto infeasible = run_cli("decompose --kind squares20 --k 3 --c 1");
    CHECK(infeasible.exit_code == 2);
    CHECK(json::parse(infeasible.out)["outcome"]["feasible"] == false);
}

TEST_CASE("gadget command") {
    auto wheel = run_cli("gadget wheel 7 7");
    CHECK(wheel.exit_code == 0);
    json wheel_report = json::parse(wheel.out);
    CHECK(wheel_report["verification"] == "pass");
    CHECK(wheel_report["outcome"]["measured_chords"] ==
          wheel_report["outcome"]["predicted_chords"]);

    auto myc = run_cli("gadget mycielski 4");
    CHECK(myc.exit_code == 0);
    CHECK(json::parse(myc.out)["outcome"]["n"] == 11);

    auto complete_case = run_cli("gadget complete-case 3 4 1 1 2 0");
    CHECK(complete_case.exit_code == 0);
    CHECK(json::parse(complete_case.out)["outcome"]["measured_chords"] == 36);

    CHECK(run_cli("gadget wheel 5").exit_code == 1);
    CHECK(run_cli("gadget unknown 1 2 3").exit_code == 1);
}

TEST_CASE("wheel and fan commands") {
    auto wheel_graph = run_cli("gadget wheel 9 5 --out /tmp/cli_wheel.json");
    CHECK(wheel_graph.exit_code == 0);
    json blueprint = json::parse(std::ifstream("/tmp/cli_wheel.json"));
    chordcycles::Graph host(chordcycles::Graph::build(
        blueprint["outcome"]["n"].get<int>(), [&] {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : blueprint["outcome"]["edges"])
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            return edges;
        }()));
    auto host_file = write_temp("cli_wheel_host.json", chordcycles::emit_json_graph(host));

    auto found = run_cli("wheel --graph " + host_file.string() + " --k 5 --max-rim 9 --j 3");
    CHECK(found.exit_code == 0);
    json report = json::parse(found.out);
    CHECK(report["outcome"]["spokes"] == 5);
    CHECK(report["outcome"]["chorded_cycle"]["chords"].size() == 3);

    auto none = run_cli("wheel --graph " + k33_file() + " --k 5 --max-rim 6");
    CHECK(none.exit_code == 2);

    auto fan_path = write_temp(
        "cli_fan.json", chordcycles::emit_json_graph(chordcycles::Graph::build(
                            7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                {6, 0}, {6, 2}, {6, 5}})));
    auto fan = run_cli("fan --graph " + fan_path.string() + " --path 0,1,2,3,4,5 --hub 6 --k 3");
    CHECK(fan.exit_code == 0);
    CHECK(json::parse(fan.out)["outcome"]["chords"].size() == 1);
}

TEST_CASE("extract command") {
    auto grotzsch_path = write_temp(
        "cli_grotzsch.json",
        chordcycles::emit_json_graph(chordcycles::gen_mycielski(4)));
    auto result = run_cli("extract --graph " + grotzsch_path.string() + " --p 1");
    CHECK(result.exit_code == 0);
    json report = json::parse(result.out);
    CHECK(report["verification"] == "pass");
    CHECK(report["outcome"]["steps"][0]["chi"] == 4);
    CHECK(report["outcome"]["steps"][1]["chi"].get<int>() * 2 >= 4);
}

TEST_CASE("reports are byte-identical across runs") {
    std::string cmd = "spectrum --graph " + k33_file() + " --max-len 6 --seed 42";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());

    // Seeds are echoed into the report for reproducibility audits.
    CHECK(json::parse(first.out)["inputs"]["seed"] == 42);
}
