#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the installed binary: exit-code contract,
// output formats, report round-trip.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "qdeform_cli_out.txt";
    std::string cmd = std::string(QDEFORM_BIN_PATH) + " " + args + " > " +
                      tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("verify exits 0 on the example preset") {
    RunResult r = run("verify --preset example");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("verify exits 1 on mathematically bad parameters") {
    fs::path bad = write_file("qdeform_bad.params",
                              "c = 1/(1+t)\nd = 1/(1+t)\nw = t\n");
    RunResult r = run("verify --params-file " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("c-neq-d") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("verify --no-such-flag").exit_code == 2);
    CHECK(run("verify --preset nonsense").exit_code == 2);
    CHECK(run("verify --preset example --params-file x.params").exit_code == 2);
    CHECK(run("verify --params-file /does/not/exist").exit_code == 2);
    CHECK(run("verify --check no-such-check").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2);
    fs::path garbage = write_file("qdeform_garbage.params", "c = (1+q)\nd = 1\nw = t\n");
    CHECK(run("verify --params-file " + garbage.string()).exit_code == 2);
    CHECK(run("report --input /does/not/exist.json").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("verify --help").exit_code == 0);
}

TEST_CASE("params subcommands") {
    RunResult v = run("params validate --preset example");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("PASS") != std::string::npos);

    RunResult s = run("params search --degree-bound 0");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("found 0") != std::string::npos);
    CHECK(s.out.find("re-accepted: yes") != std::string::npos);

    fs::path bad = write_file("qdeform_bad2.params", "c = 1/(1+t)\nd = 1/(1+t)\nw = t\n");
    CHECK(run("params validate --params-file " + bad.string()).exit_code == 1);
}

TEST_CASE("check filters restrict the report") {
    RunResult r = run("verify --preset example --check psi-cocycle --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("checks").size() == 1);
    CHECK(j.at("checks")[0].at("id") == "psi-cocycle");
}

TEST_CASE("json reports round-trip through the report subcommand") {
    fs::path saved = fs::temp_directory_path() / "qdeform_run.json";
    RunResult r = run("verify --preset example --format json --output " + saved.string());
    CHECK(r.exit_code == 0);

    RunResult text = run("report --input " + saved.string() + " --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("verdict: PASS") != std::string::npos);

    RunResult json_again = run("report --input " + saved.string() + " --format json");
    CHECK(json_again.exit_code == 0);
    std::ifstream in(saved);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(json_again.out == buf.str());

    CHECK(run("report --input " + saved.string() + " --format yaml").exit_code == 2);
}

TEST_CASE("structured output is deterministic apart from timing") {
    nlohmann::json a = nlohmann::json::parse(
        run("verify --preset example --format json").out);
    nlohmann::json b = nlohmann::json::parse(
        run("verify --preset example --format json").out);
    for (nlohmann::json* j : {&a, &b})
        for (nlohmann::json& c : j->at("checks")) c.erase("elapsed_us");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("the serial reference path gives the same verdict") {
    RunResult r = run("verify --preset example --serial");
    CHECK(r.exit_code == 0);
}

TEST_CASE("precision caps the irreducibility escalation") {
    // this tuple's pi is inconclusive modulo t^2 and needs the deeper search
    fs::path deep = write_file("qdeform_deep.params",
                               "c = 1/(1+t)\nd = 1+t+t^2+t^3\nw = t^2/(1+t)\n");
    CHECK(run("verify --params-file " + deep.string()).exit_code == 0);
    CHECK(run("verify --params-file " + deep.string() + " --precision 8").exit_code == 0);
    RunResult starved = run("verify --params-file " + deep.string() + " --precision 2");
    CHECK(starved.exit_code == 1);
    CHECK(starved.out.find("pi-irreducible") != std::string::npos);
}
