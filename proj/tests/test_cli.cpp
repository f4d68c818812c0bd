// Copyright 2026 The stabrank Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "test_util.hpp"

using namespace stabrank;
using stabrank::testing::data_path;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("stabrank_cli_" + name)).string();
}

}  // namespace

TEST(cli, rank) {
    CliRun r = run({"rank", data_path("identity8.f2")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "8\n");
    EXPECT_EQ(run({"rank", data_path("rank2.f2")}).out, "2\n");
    EXPECT_EQ(run({"rank", "--via-simulation", data_path("rank2.f2")}).out, "2\n");
}

TEST(cli, simulate_triangle) {
    CliRun r = run({"simulate", data_path("triangle.stab"), "--prob"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "amplitude: 0\nprobability: 0\n");
    CliRun ranked = run({"simulate", data_path("triangle.stab"), "--rank"});
    EXPECT_EQ(ranked.code, kExitContractViolation);
    EXPECT_NE(ranked.err.find("error:"), std::string::npos);
}

TEST(cli, simulate_bell) {
    CliRun r = run({"simulate", data_path("bell.stab"), "--in", "00", "--out", "11", "--prob"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("probability: 2^-1\n"), std::string::npos);
    CliRun zero = run({"simulate", data_path("bell.stab"), "--out", "10", "--prob"});
    EXPECT_EQ(zero.out, "amplitude: 0\nprobability: 0\n");
}

TEST(cli, reduce_then_simulate_recovers_rank) {
    std::string path = temp_path("identity2.stab");
    CliRun reduced = run({"reduce", data_path("identity2.f2"), "-o", path});
    ASSERT_EQ(reduced.code, kExitOk);
    CliRun r = run({"simulate", path, "--rank"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("probability: 2^-4\nrank: 2\n"), std::string::npos);
    std::filesystem::remove(path);

    CliRun to_stdout = run({"reduce", data_path("identity2.f2")});
    EXPECT_EQ(to_stdout.out.rfind("qubits 4\n", 0), 0u);
}

TEST(cli, count) {
    EXPECT_EQ(run({"count", data_path("triangle.z4")}).out, "N0-N2: 0\nN1-N3: 0\n");
    EXPECT_EQ(run({"count", data_path("triangle_loop.z4")}).out, "N0-N2: 2^2\nN1-N3: 0\n");
}

TEST(cli, netzero) {
    EXPECT_EQ(run({"netzero", data_path("triangle.graph")}).out.substr(0, 5), "Zero\n");
    EXPECT_EQ(run({"netzero", "--oracle", data_path("triangle.graph")}).out, "Zero\na: 0\n");
    EXPECT_EQ(run({"netzero", "--oracle", data_path("edge.graph")}).out, "Positive\na: 1/2^1\n");
    EXPECT_EQ(run({"netzero", data_path("barbell.graph")}).out.substr(0, 9), "Negative\n");
    EXPECT_EQ(run({"netzero", data_path("odd_loop.graph")}).code, kExitContractViolation);
    EXPECT_EQ(run({"netzero", "--oracle", data_path("odd_loop.graph")}).code, kExitContractViolation);
}

TEST(cli, verify) {
    CliRun r = run({"verify", data_path("triangle.stab"), data_path("bell.stab"), data_path("cs.stab"),
                 data_path("triangle.z4"), data_path("triangle_loop.z4"), data_path("rank2.f2"),
                 data_path("triangle.graph"), data_path("barbell.graph"), "--random", "20", "--seed", "3"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find(", failed: 0\n"), std::string::npos);
}

TEST(cli, verify_is_deterministic) {
    CliRun a = run({"verify", "--random", "10", "--seed", "7"});
    CliRun b = run({"verify", "--random", "10", "--seed", "7"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run({}).code, kExitParseError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParseError);
    EXPECT_EQ(run({"rank"}).code, kExitParseError);
    EXPECT_EQ(run({"rank", data_path("missing.f2")}).code, kExitParseError);
    EXPECT_EQ(run({"rank", data_path("short.f2")}).code, kExitParseError);
    EXPECT_EQ(run({"simulate", data_path("bad_gate.stab")}).code, kExitParseError);
    EXPECT_EQ(run({"simulate", data_path("bell.stab"), "--in", "0"}).code, kExitParseError);
    EXPECT_EQ(run({"simulate", data_path("bell.stab"), "--in", "0x"}).code, kExitParseError);
    EXPECT_EQ(run({"simulate", data_path("cs.stab")}).code, kExitContractViolation);
    EXPECT_EQ(run({"verify", data_path("triangle.txt")}).code, kExitParseError);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, json_output) {
    CliRun r = run({"--json", "rank", data_path("identity8.f2")});
    ASSERT_EQ(r.code, kExitOk);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verb"], "rank");
    EXPECT_EQ(j["result"]["rank"], 8);
    EXPECT_TRUE(j["timings"].contains("total_ms"));

    nlohmann::json s = nlohmann::json::parse(run({"--json", "simulate", data_path("triangle.stab"), "--prob"}).out);
    EXPECT_EQ(s["result"]["amplitude"], "0");
    EXPECT_EQ(s["result"]["probability"], "0");
}

TEST(cli, bench_small) {
    CliRun r = run({"bench", "--n", "64", "--seed", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("rank via simulation: "), std::string::npos);
}
