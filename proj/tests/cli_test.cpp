// Copyright 2026 The qfid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QFID_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

std::string data_path(const char* name) {
    return std::string(QFID_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli bound reproduces the reference point") {
    CliResult r = run_cli("--format json bound --n 25 --t 3 --p 0.01");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "bound");
    CHECK(j["version"].is_string());
    CHECK(j["tolerances"].contains("numeric"));
    double eps = j["results"]["paper"]["epsilon"].get<double>();
    CHECK(eps == doctest::Approx(1.32e-4).epsilon(0.01));
    CHECK(j["results"]["paper"]["fidelity_lb"].get<double>() ==
          doctest::Approx(0.999868).epsilon(1e-4));
}

TEST_CASE("cli code-info") {
    CliResult r = run_cli("--format json code-info " + data_path("five_qubit.stab"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["n"] == 5);
    CHECK(j["results"]["k"] == 1);
    CHECK(j["results"]["d"] == 3);
    CHECK(j["results"]["d_prime"] == 3);
    CHECK(j["results"]["t"] == 1);
    CHECK(j["results"]["pure"] == true);
}

TEST_CASE("cli decode-table") {
    CliResult r = run_cli("--format json decode-table " + data_path("five_qubit.stab"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"]["entries"].size() == 16);
    CHECK(j["results"]["entries"][0]["leader"] == "+IIIII");
    for (size_t s = 1; s < 16; ++s) {
        CHECK(j["results"]["entries"][s]["weight"] == 1);
        CHECK(j["results"]["entries"][s]["ambiguous"] == false);
    }
}

TEST_CASE("cli channel-info with inline spec") {
    CliResult r = run_cli("--format json channel-info depolarizing:0.04");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["valid"] == true);
    CHECK(j["results"]["p"].get<double>() == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(j["results"]["ell0"].get<double>() == doctest::Approx(0.97).epsilon(1e-12));
}

TEST_CASE("cli simulate exits 0 and reports dominance") {
    CliResult r = run_cli("--format json simulate --code " + data_path("five_qubit.stab") +
                          " --channel depolarizing:0.04 --state basis:0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["dominance_ok"] == true);
    double f = j["results"]["average_fidelity"].get<double>();
    double eps = j["results"]["paper_epsilon"].get<double>();
    CHECK(f >= 1 - eps - 1e-9);
}

TEST_CASE("cli sweep") {
    CliResult r = run_cli("--format json sweep --alpha 0.2 --p 0.01 --n 10 --n 20 --n 30");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"]["points"].size() == 3);
    CHECK(j["results"]["feasible"] == true);
}

TEST_CASE("cli error paths exit 1") {
    CHECK(run_cli("code-info /nonexistent.stab").exit_code == 1);
    CHECK(run_cli("--format json bound --n 25 --t 3 --p 1.5").exit_code == 1);
    CHECK(run_cli("channel-info bogus_spec").exit_code == 1);
}

TEST_CASE("cli json output is deterministic") {
    std::string args = "--format json simulate --code " + data_path("five_qubit.stab") +
                       " --channel x_rotation:0.1 --state random:9";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    // exit codes must be reproducible too, including the dominance-failure path
    std::string args2 = "--format json simulate --code " + data_path("steane.stab") +
                        " --channel x_rotation:0.1 --state basis:0";
    CliResult c = run_cli(args2);
    CliResult d = run_cli(args2);
    CHECK(c.exit_code == d.exit_code);
    CHECK(c.out == d.out);
}
