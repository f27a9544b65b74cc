#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

const char* cli_path() {
    const char* path = std::getenv("LTLF_CLI");
    REQUIRE_MESSAGE(path != nullptr, "LTLF_CLI must point at the built binary");
    return path;
}

RunResult run_cli(const std::string& args) {
    std::string command = std::string(cli_path()) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("./") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("sat: witness and exit code") {
    RunResult r = run_cli("sat \"X X X true\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sat") != std::string::npos);
    CHECK(r.output.find("[[],[],[],[]]") != std::string::npos);
}

TEST_CASE("sat: unsat exit code") {
    RunResult r = run_cli("sat \"p & !p\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("unsat") != std::string::npos);
}

TEST_CASE("valid: finiteness") {
    CHECK(run_cli("valid \"F end\"").exit_code == 0);
    CHECK(run_cli("valid --at-root \"F end\"").exit_code == 0);
    CHECK(run_cli("valid --at-root \"end\"").exit_code == 1);
}

TEST_CASE("valid: invalid prints a countermodel") {
    RunResult r = run_cli("valid \"p\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("invalid") != std::string::npos);
    CHECK(r.output.find("[") != std::string::npos);
}

TEST_CASE("eval over a trace file") {
    std::string trace = write_temp("cli_test_k4.json", R"([["x"],["x","y"],[],["x","y","z"]])");
    RunResult r = run_cli("eval \"y -> x\" --trace " + trace);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("position 1: true") != std::string::npos);
    CHECK(r.output.find("all positions: true") != std::string::npos);

    RunResult at3 = run_cli("eval \"x\" --trace " + trace + " --pos 3");
    CHECK(at3.exit_code == 0);
    CHECK(at3.output.find("position 3: false") != std::string::npos);
}

TEST_CASE("eval: bad trace file") {
    std::string bad = write_temp("cli_test_bad.json", "[]");
    RunResult r = run_cli("eval \"p\" --trace " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);

    RunResult missing = run_cli("eval \"p\" --trace ./does_not_exist.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("parse errors report position") {
    RunResult r = run_cli("sat \"p ->\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);
    CHECK(r.output.find("offset") != std::string::npos);
    CHECK(r.output.find("expected") != std::string::npos);
}

TEST_CASE("graph: writes DOT") {
    std::string dot_path = "./cli_test_graph.dot";
    RunResult r = run_cli("graph \"F end\" --dot " + dot_path);
    CHECK(r.exit_code == 0);
    std::ifstream in(dot_path);
    REQUIRE(in.good());
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line.find("digraph") != std::string::npos);

    RunResult j = run_cli("--json graph \"F end\" --dot " + dot_path);
    CHECK(j.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.output);
    CHECK(doc["nodes"].get<std::size_t>() > 0);
    CHECK(doc["file"] == dot_path);
}

TEST_CASE("oracle subcommands") {
    RunResult sat = run_cli("oracle sat \"X X X true\" --max-len 8");
    CHECK(sat.exit_code == 0);
    CHECK(sat.output.find("[[],[],[],[]]") != std::string::npos);

    CHECK(run_cli("oracle sat \"p & !p\" --max-len 4").exit_code == 1);
    CHECK(run_cli("oracle valid \"F end\" --max-len 6").exit_code == 0);
    CHECK(run_cli("oracle valid \"p\" --max-len 3").exit_code == 1);
}

TEST_CASE("json output") {
    RunResult r = run_cli("--json sat \"X X X true\"");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["verdict"] == "sat");
    CHECK(doc["witness"].size() == 4);
    CHECK(doc["stats"]["nodes"].get<std::size_t>() > 0);
    CHECK(doc["stats"]["expansions"].get<std::size_t>() > 0);

    RunResult v = run_cli("--json valid \"p\"");
    CHECK(v.exit_code == 1);
    nlohmann::json vdoc = nlohmann::json::parse(v.output);
    CHECK(vdoc["verdict"] == "invalid");
    CHECK(vdoc.contains("countermodel"));

    std::string trace = write_temp("cli_test_k4_json.json", R"([["x"],["x","y"],[],["x","y","z"]])");
    RunResult e = run_cli("--json eval \"end\" --trace " + trace + " --pos 4");
    CHECK(e.exit_code == 0);
    nlohmann::json edoc = nlohmann::json::parse(e.output);
    CHECK(edoc["at_position"] == true);
    CHECK(edoc["all_positions"] == false);
}

TEST_CASE("max-closure guard refuses big searches") {
    RunResult r = run_cli("--max-closure 3 sat \"p & q & r\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("closure") != std::string::npos);
}

TEST_CASE("witness re-verifies through eval") {
    RunResult sat = run_cli("--json sat \"p W q & F !p\"");
    REQUIRE(sat.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(sat.output);
    std::string witness = doc["witness"].dump();
    std::string path = write_temp("cli_test_witness.json", witness);
    RunResult check = run_cli("eval \"p W q & F !p\" --trace " + path);
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("position 1: true") != std::string::npos);
}
