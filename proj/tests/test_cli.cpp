#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support/schema_validator.hpp"

// Paths injected by the build: the CLI binary and the shipped schema.
#ifndef TONAL_CLI_PATH
#error "TONAL_CLI_PATH must be defined"
#endif
#ifndef TONAL_SCHEMA_PATH
#error "TONAL_SCHEMA_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(TONAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/tonal_test_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

nlohmann::json load_schema() {
    std::ifstream in(TONAL_SCHEMA_PATH);
    REQUIRE(in.good());
    nlohmann::json schema;
    in >> schema;
    return schema;
}

void check_schema(const std::string& stdout_text) {
    auto doc = nlohmann::json::parse(stdout_text);
    std::string why;
    bool ok = testutil::schema_validate(load_schema(), doc, &why);
    INFO(why);
    CHECK(ok);
    CHECK(doc["schemaVersion"] == 1);
}

}  // namespace

TEST_CASE("canonical sizes: json content and schema") {
    auto r = run_cli("canonical sizes --limit 150");
    CHECK(r.exit_code == 0);
    check_schema(r.out);
    auto doc = nlohmann::json::parse(r.out);
    auto sizes = doc["result"]["sizes"];
    REQUIRE(sizes.size() == 3);
    CHECK(sizes[0]["n"] == 4);
    CHECK(sizes[1]["n"] == 21);
    CHECK(sizes[2]["n"] == 120);
    CHECK(sizes[2]["r"] == 85);
}

TEST_CASE("json output is byte-identical across runs and worker counts") {
    std::string p4 = write_temp("p4.el", "p 4\ne 0 1\ne 1 2\ne 2 3\n");
    std::string cmd = "extremal tot --n 4 --graph " + p4;
    auto one = run_cli(cmd, "TONAL_WORKERS=1");
    auto three = run_cli(cmd, "TONAL_WORKERS=3");
    auto again = run_cli(cmd, "TONAL_WORKERS=3");
    CHECK(one.exit_code == 0);
    CHECK(one.out == three.out);
    CHECK(three.out == again.out);
    check_schema(one.out);

    auto sizes1 = run_cli("canonical sizes --limit 5000", "TONAL_WORKERS=1");
    auto sizes2 = run_cli("canonical sizes --limit 5000", "TONAL_WORKERS=4");
    CHECK(sizes1.out == sizes2.out);
}

TEST_CASE("canonical host emits the exact edge-list format") {
    auto r = run_cli("canonical host --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "p 4\n"
          "e 0 1 R\n"
          "e 0 2 R\n"
          "e 0 3 B\n"
          "e 1 2 R\n"
          "e 1 3 B\n"
          "e 2 3 B\n");
    check_schema(run_cli("canonical host --n 4 --format json").out);

    auto missing = run_cli("canonical host --n 5");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("patterns subcommands") {
    std::string p4 = write_temp("p4b.el", "p 4\ne 0 1\ne 1 2\ne 2 3\n");
    auto classes = run_cli("patterns classes --graph " + p4);
    CHECK(classes.exit_code == 0);
    check_schema(classes.out);
    auto doc = nlohmann::json::parse(classes.out);
    CHECK(doc["result"]["classes"].size() == 6);
    CHECK(doc["result"]["burnsideClassCount"] == 6);

    auto witness = run_cli("patterns witness --graph " + p4);
    CHECK(witness.exit_code == 0);
    check_schema(witness.out);
    CHECK(nlohmann::json::parse(witness.out)["result"]["starForest"] == false);

    std::string a = write_temp("a.el", "p 4\ne 0 1 B\ne 1 2 R\ne 2 3 R\n");
    std::string b = write_temp("b.el", "p 4\ne 0 1 R\ne 1 2 R\ne 2 3 B\n");
    auto eq = run_cli("patterns equivalent --a " + a + " --b " + b);
    CHECK(eq.exit_code == 0);
    check_schema(eq.out);
    CHECK(nlohmann::json::parse(eq.out)["result"]["equivalent"] == true);
}

TEST_CASE("embed subcommands against the canonical host") {
    auto host_text = run_cli("canonical host --n 4").out;
    std::string host = write_temp("host4.el", host_text);
    std::string rbr = write_temp("rbr.el", "p 4\ne 0 1 R\ne 1 2 B\ne 2 3 R\n");
    auto find = run_cli("embed find --host " + host + " --pattern " + rbr);
    CHECK(find.exit_code == 0);
    check_schema(find.out);
    CHECK(nlohmann::json::parse(find.out)["result"]["found"] == false);

    std::string p4 = write_temp("p4c.el", "p 4\ne 0 1\ne 1 2\ne 2 3\n");
    auto coverage = run_cli("embed coverage --host " + host + " --graph " + p4 +
                            " --level class");
    CHECK(coverage.exit_code == 0);
    check_schema(coverage.out);
    CHECK(nlohmann::json::parse(coverage.out)["result"]["complete"] == false);

    std::string star = write_temp("star.el", "p 3\ne 0 1 R\ne 0 2 B\n");
    auto host21_text = run_cli("canonical host --n 21").out;
    std::string host21 = write_temp("host21.el", host21_text);
    auto greedy = run_cli("embed star-forest --host " + host21 + " --pattern " + star);
    CHECK(greedy.exit_code == 0);
    check_schema(greedy.out);
    CHECK(nlohmann::json::parse(greedy.out)["result"]["embedding"].size() == 3);

    // A host wider than one machine word, end to end.
    auto host120_text = run_cli("canonical host --n 120").out;
    std::string host120 = write_temp("host120.el", host120_text);
    std::string k12 = write_temp("k12.el", "p 3\ne 0 1\ne 0 2\n");
    auto wide = run_cli("embed coverage --host " + host120 + " --graph " + k12);
    CHECK(wide.exit_code == 0);
    check_schema(wide.out);
    CHECK(nlohmann::json::parse(wide.out)["result"]["complete"] == true);

    // Precondition violation: domain error, exit 2.
    auto bad = run_cli("embed star-forest --host " + host + " --pattern " + star);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("extremal subcommands and their exit codes") {
    std::string p4 = write_temp("p4d.el", "p 4\ne 0 1\ne 1 2\ne 2 3\n");
    auto tot = run_cli("extremal tot --n 4 --graph " + p4 + " --no-prune");
    CHECK(tot.exit_code == 0);
    check_schema(tot.out);
    auto doc = nlohmann::json::parse(tot.out);
    CHECK(doc["result"]["value"] == 3);
    CHECK(doc["result"]["saturated"] == true);
    CHECK(doc["result"]["hostsScanned"] == 64);

    auto ot = run_cli("extremal ot --n 4 --graph " + p4);
    CHECK(ot.exit_code == 0);
    check_schema(ot.out);
    CHECK(nlohmann::json::parse(ot.out)["result"]["level"] == "tone");

    check_schema(run_cli("extremal formula --n 16 --k 4").out);
    CHECK(nlohmann::json::parse(run_cli("extremal formula --n 16 --k 4").out)["result"]["value"] ==
          29);
    CHECK(run_cli("extremal formula --n 7 --k 2").exit_code == 2);

    check_schema(run_cli("extremal bound --n 16 --parts 2,1").out);
    CHECK(nlohmann::json::parse(
              run_cli("extremal bound --n 16 --parts 2,1").out)["result"]["value"] == 48);
    CHECK(run_cli("extremal bound --n 12 --parts 2,1").exit_code == 2);

    CHECK(run_cli("extremal ot --n 9 --graph " + p4).exit_code == 2);  // guard
}

TEST_CASE("parse and i/o failures exit 1") {
    CHECK(run_cli("patterns classes --graph /tmp/tonal_no_such_file.el").exit_code == 1);
    std::string bad = write_temp("bad.el", "p 4\ne 0 0\n");
    CHECK(run_cli("patterns classes --graph " + bad).exit_code == 1);
    std::string conflict = write_temp("conflict.el", "p 2\ne 0 1 R\ne 0 1 B\n");
    CHECK(run_cli("patterns equivalent --a " + conflict + " --b " + conflict).exit_code == 1);
}

TEST_CASE("verify: budget semantics and the corruption hook") {
    auto starved = run_cli("verify --budget 0.000001");
    CHECK(starved.exit_code == 3);
    CHECK(starved.out.find("incomplete") != std::string::npos);

    auto starved_json = run_cli("verify --budget 0.000001 --format json");
    CHECK(starved_json.exit_code == 3);
    check_schema(starved_json.out);
    CHECK(nlohmann::json::parse(starved_json.out)["result"]["incomplete"] == true);

    // The negative control: a single flipped edge must fail claim 2.
    auto corrupt = run_cli("verify --budget 0.5", "TONAL_VERIFY_CORRUPT=1");
    CHECK(corrupt.exit_code == 1);
    CHECK(corrupt.out.find("FAIL 2 canonical-obstructions") != std::string::npos);
}

TEST_CASE("csv and text formats stay parseable") {
    auto csv = run_cli("canonical sizes --limit 150 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,r,x,y\n", 0) == 0);
    std::istringstream lines(csv.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);

    auto text = run_cli("extremal formula --n 12 --k 3 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("12") != std::string::npos);
}
