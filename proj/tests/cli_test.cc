// Copyright 2026 The Singleton Lab Authors
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

#include "singleton_lab/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include <json.hpp>

using namespace singleton_lab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string db_path() { return std::string(SINGLETON_LAB_DATA_DIR) + "/codes.db"; }

std::string temp_file(const std::string &name, const std::string &content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli, check_admissible) {
    const auto r = run({"check", "--params", "4,1,3,1,2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "[[4,1,3;1]]_2")) << r.out;
    EXPECT_TRUE(contains(r.out, "admissible eaqmds")) << r.out;
}

TEST(cli, check_violation) {
    const auto r = run({"check", "--params", "4,2,3,1,2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "VIOLATION")) << r.out;
}

TEST(cli, check_pure_flag) {
    EXPECT_EQ(run({"check", "--params", "6,1,5,1,2"}).code, 0);
    const auto r = run({"check", "--params", "6,1,5,1,2", "--pure", "--format", "csv"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "6,1,5,1,2,true,2/3,false,false,pure-singleton,")) << r.out;
}

TEST(cli, check_nonexistence_note) {
    const auto r = run({"check", "--params", "4,0,3,0,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "no such code exists")) << r.out;
}

TEST(cli, check_json_roundtrip) {
    const auto batch = temp_file("batch.txt", "# tuples\n4,1,3,1,2\n4,2,3,1,2\n7,4,3,1,3\n6,1,5,1,2,true\n3,1/2,2,-1/2,4\n");
    const auto first = run({"check", "--batch", batch, "--format", "json"});
    EXPECT_EQ(first.code, 1);
    const auto again_path = temp_file("again.jsonl", first.out);
    const auto second = run({"check", "--batch", again_path, "--format", "json"});
    EXPECT_EQ(second.code, first.code);
    EXPECT_EQ(second.out, first.out);
    std::istringstream lines(first.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_TRUE(j.contains("admissible"));
        ++count;
    }
    EXPECT_EQ(count, 5);
}

TEST(cli, check_usage_errors) {
    EXPECT_EQ(run({"check", "--params", "4,1,3"}).code, 2);
    EXPECT_EQ(run({"check", "--params", "4,1,0,1,2"}).code, 2);
    EXPECT_EQ(run({"check", "--params", "4,1,3,0.5,2"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({"check", "--params", "4,1,3,1,2", "--format", "xml"}).code, 2);
}

TEST(cli, general_usage) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_TRUE(contains(help.out, "verify-code"));
}

TEST(cli, region_csv_and_svg) {
    const std::string svg = ::testing::TempDir() + "region.svg";
    const auto r = run({"region", "--delta", "3/4", "--svg", svg});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "vertex,origin,0,0\nvertex,MDS,1/8,1/8\nvertex,EAQ,3/4,1/4\n")) << r.out;
    std::ifstream in(svg);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_TRUE(contains(content.str(), "</svg>"));
    EXPECT_EQ(run({"region", "--delta", "5/4"}).code, 2);
    EXPECT_EQ(run({"region", "--delta", "0.75"}).code, 2);
}

TEST(cli, propagate_database) {
    const auto r = run({"propagate", "--db", db_path(), "--max-steps", "16"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "7 4 3 1 3 unknown derived")) << r.out;
    EXPECT_TRUE(contains(r.out, "fixed point"));
    const auto corrupt = run({"propagate", "--db", db_path(), "--corrupt"});
    EXPECT_EQ(corrupt.code, 1);
    EXPECT_TRUE(contains(corrupt.err, "soundness violation"));
    EXPECT_EQ(run({"propagate", "--db", "/nonexistent/file"}).code, 2);
}

TEST(cli, propagate_json) {
    const auto r = run({"propagate", "--db", db_path(), "--format", "json"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) EXPECT_NO_THROW(nlohmann::json::parse(line)) << line;
}

TEST(cli, propagate_deterministic) {
    EXPECT_EQ(run({"propagate", "--db", db_path()}).out, run({"propagate", "--db", db_path()}).out);
}

TEST(cli, verify_code) {
    auto r = run({"verify-code", "--name", "five-qubit", "--d", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "decoupling: correctable"));
    EXPECT_TRUE(contains(r.out, "tight"));
    r = run({"verify-code", "--name", "five-qubit", "--d", "4"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "not correctable"));
    r = run({"verify-code", "--name", "five-qubit", "--d", "3", "--theorem5", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "theorem5 witness [[4,1,3;1]]_2")) << r.out;
    EXPECT_TRUE(contains(r.out, "admissible eaqmds")) << r.out;
    r = run({"verify-code", "--name", "product-zz", "--d", "3", "--theorem5", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.err, "NotMaximallyMixedOnBin")) << r.err;
    EXPECT_EQ(run({"verify-code", "--name", "five-qubit", "--d", "3", "--theorem5", "3"}).code, 2);
    EXPECT_EQ(run({"verify-code", "--name", "missing", "--d", "3"}).code, 2);
    r = run({"verify-code", "--list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "five-qubit [[5,1,3]]_2 pure"));
}

TEST(cli, fuzz_seed_sources) {
    auto r = run({"fuzz", "--lemma", "1", "--trials", "5", "--seed", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "seed=3\n"));
    ::setenv(cli::kSeedEnv, "77", 1);
    r = run({"fuzz", "--lemma", "2", "--trials", "5"});
    EXPECT_TRUE(contains(r.out, "seed=77\n")) << r.out;
    r = run({"fuzz", "--lemma", "2", "--trials", "5", "--seed", "4"});
    EXPECT_TRUE(contains(r.out, "seed=4\n"));
    ::unsetenv(cli::kSeedEnv);
    r = run({"fuzz", "--trials", "5"});
    EXPECT_TRUE(contains(r.out, "seed=0\n"));
    EXPECT_EQ(run({"fuzz", "--lemma", "3"}).code, 2);
}

TEST(cli, fuzz_reproducible) {
    const auto a = run({"fuzz", "--lemma", "ssa", "--trials", "20", "--seed", "9"});
    const auto b = run({"fuzz", "--lemma", "ssa", "--trials", "20", "--seed", "9"});
    auto strip = [](const std::string &s) { return s.substr(0, s.find(" elapsed_s=")); };
    EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(cli, construct_rs) {
    auto r = run({"construct", "rs", "--q", "5", "--n", "4", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "min_distance 3 designed 3 mds")) << r.out;
    r = run({"construct", "rs", "--q", "4", "--n", "4", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "GF(4) modulus 1 1 1")) << r.out;
    EXPECT_EQ(run({"construct", "rs", "--q", "3", "--n", "4", "--k", "2"}).code, 2);
    EXPECT_EQ(run({"construct", "rs", "--q", "6", "--n", "4", "--k", "2"}).code, 2);
    EXPECT_EQ(run({"construct"}).code, 2);
}

TEST(cli, simulate) {
    auto r = run({"simulate", "densecoding", "--q", "2", "--n", "3", "--d", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "protocol densecoding k=2 c=5 delta=1/3 point=(5/3,2/3) in_region=true")) << r.out;
    EXPECT_TRUE(contains(r.out, "ebits_consumed=5 k=2 fidelity=1"));
    r = run({"simulate", "mdspoint", "--q", "5", "--n", "4", "--d", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "point=(1/4,1/4)"));
    EXPECT_EQ(run({"simulate", "mdspoint", "--q", "7", "--n", "6", "--d", "4"}).code, 2);
    EXPECT_EQ(run({"simulate", "teleport", "--q", "2", "--n", "3", "--d", "2"}).code, 2);
}
