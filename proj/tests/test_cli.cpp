#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tpverify/json_io.hpp"

using namespace tpv;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_file = "cli_capture.txt";
    std::string cmd = env_prefix;
    if (!cmd.empty()) cmd += ' ';
    cmd += std::string(TPVERIFY_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream text;
    text << in.rdbuf();
    result.output = text.str();
    std::remove(out_file.c_str());
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("block identity subcommand prints exact values") {
    const auto r = run_cli("thm32 --n 2 --rows 1,2 --cols 0,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "det_equals_family_sum I=(1,2) J=(0,1): value=1+q^2"));
    CHECK(contains(r.output, "PASS: all 6 checks"));
}

TEST_CASE("hankel sweep batches output by minor order") {
    const auto r = run_cli("hankel --n 4 --max-order 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS] minor_q_nonnegative k=1 (25 checks)"));
    CHECK(contains(r.output, "[PASS] minor_q_nonnegative k=5 (1 checks)"));
    CHECK(contains(r.output, "PASS: all 251 checks"));
}

TEST_CASE("immanant subcommand") {
    const auto r = run_cli("immanant --n 1 --kmax 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "lambda=(2): value=2+6q+2q^2"));
    CHECK(contains(r.output, "lambda=(1,1): value=2q"));
}

TEST_CASE("glued identity and two-parameter subcommands") {
    CHECK(run_cli("main --n 1").exit_code == 0);
    CHECK(run_cli("thm43 --case 1 --e 1 --f 2 --n 1").exit_code == 0);
    CHECK(run_cli("thm43 --case 2 --e 2 --f 1 --n 1").exit_code == 0);
}

TEST_CASE("lgv-check full principal selection") {
    const auto r = run_cli("lgv-check --which h --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS] det_equals_family_sum I=(0,1,2) J=(0,1,2)"));
}

TEST_CASE("network dump round-trips") {
    const auto r = run_cli("dump-network --which h --n 3 --out cli_h3.json");
    REQUIRE(r.exit_code == 0);
    std::ifstream in("cli_h3.json");
    REQUIRE(in.good());
    const auto j = json::parse(in);
    const auto built = build_h(3);
    CHECK(network_from_json(j) == built.ported.net);
    REQUIRE(j.at("segments").size() == 7);
    CHECK(j.at("segments")[3].at("kind") == "diagonal");
    std::remove("cli_h3.json");

    // Without --out the JSON goes to standard output.
    const auto dumped = run_cli("dump-network --which lb --n 2");
    REQUIRE(dumped.exit_code == 0);
    CHECK(network_from_json(json::parse(dumped.output)) == build_lb(2).net);
}

TEST_CASE("certificate file output") {
    const auto r = run_cli("main --n 1 --rows 0,1 --cols 0,1 --out cli_cert.json");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "certificate written to cli_cert.json"));
    std::ifstream in("cli_cert.json");
    REQUIRE(in.good());
    const auto j = json::parse(in);
    CHECK(j.at("pass") == true);
    CHECK(contains(j.at("subject").get<std::string>(), "n=1"));
    bool saw_det = false;
    for (const auto& check : j.at("checks")) {
        if (check.at("name") != "det_equals_family_sum") continue;
        saw_det = true;
        CHECK(qpoly_from_json(check.at("lhs")) == QPoly::monomial(2, 1));
    }
    CHECK(saw_det);
    std::remove("cli_cert.json");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("thm32 --n 2 --rows 1,2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("thm32").exit_code == 2);
    CHECK(run_cli("lgv-check --which h --n 1 --rows 0,1 --cols 0").exit_code == 2);
    CHECK(run_cli("main --n 1 --rows 1,0 --cols 0,1").exit_code == 2);
}

TEST_CASE("budget and cap guards exit with code 3") {
    const auto capped = run_cli("hankel --n 9 --max-order 9");
    CHECK(capped.exit_code == 3);
    CHECK(contains(capped.output, "order cap"));

    CHECK(run_cli("main --n 1 --rows 0,1 --cols 0,1 --budget 1").exit_code == 3);
    // The environment variable sets the default budget.
    const auto via_env = run_cli("main --n 1 --rows 0,1 --cols 0,1", "TPVERIFY_BUDGET=1");
    CHECK(via_env.exit_code == 3);
    CHECK(contains(via_env.output, "budget exceeded"));
}

TEST_CASE("parallel execution output matches serial") {
    const auto serial = run_cli("thm32 --n 2 --jobs 1");
    const auto parallel = run_cli("thm32 --n 2 --jobs 4");
    CHECK(serial.exit_code == 0);
    // Timing lines differ; compare everything before the summary.
    const auto cut = [](const std::string& s) { return s.substr(0, s.rfind("PASS: all")); };
    CHECK(cut(serial.output) == cut(parallel.output));
    CHECK(parallel.exit_code == 0);
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "dump-network"));
}
