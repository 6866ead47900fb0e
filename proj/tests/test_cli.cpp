// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mumeb/cli.hpp"

namespace mumeb::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mumeb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
};

TEST(RunConfigTest, RoundTripsThroughArguments) {
    std::vector<RunConfig> configs;
    RunConfig a;
    a.command = "construct";
    a.d = 9;
    a.k = 4;
    a.variant = "mols";
    a.out_path = "f.json";
    a.with_identity = true;
    configs.push_back(a);
    RunConfig b;
    b.command = "verify";
    b.family_path = "f.json";
    b.tolerance = 1e-6;
    b.pairs_only = true;
    b.json = true;
    b.report_path = "r.json";
    configs.push_back(b);
    RunConfig c;
    c.command = "bound";
    c.d = 9;
    c.k_range = "2..30";
    configs.push_back(c);
    RunConfig g;
    g.command = "gauss";
    g.q = 13;
    g.c = 2;
    g.order = 4;
    configs.push_back(g);
    RunConfig m;
    m.command = "mols";
    m.subcommand = "mubs";
    m.x = 4;
    m.json = true;
    configs.push_back(m);
    for (const auto& cfg : configs) EXPECT_EQ(parse_args(cfg.to_args()), cfg) << cfg.command;
}

TEST(RunConfigTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"construct"}).code, kUsage);
    EXPECT_EQ(invoke({"construct", "--d", "4"}).code, kUsage);
    EXPECT_EQ(invoke({"construct", "--d", "9", "--variant", "fft"}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    const auto help = invoke({"construct", "--help"});
    EXPECT_EQ(help.code, kOk);
    EXPECT_NE(help.out.find("--with-identity"), std::string::npos);
}

TEST_F(CliTest, ConstructThenVerify) {
    const auto c = invoke({"construct", "--d", "9", "--k", "4", "--out", path("f.json")});
    ASSERT_EQ(c.code, kOk) << c.err;
    EXPECT_NE(c.out.find("bases=5"), std::string::npos);
    const auto v = invoke({"verify", path("f.json"), "--report", path("r.json")});
    EXPECT_EQ(v.code, kOk) << v.err;
    const auto report = nlohmann::json::parse(slurp(path("r.json")));
    EXPECT_EQ(report.at("pairs").size(), 10u);
}

TEST_F(CliTest, TamperedMatrixFailsVerification) {
    ASSERT_EQ(invoke({"construct", "--d", "5", "--out", path("f.json")}).code, kOk);
    auto j = nlohmann::json::parse(slurp(path("f.json")));
    auto& gens = j.at("generators");
    // Still unitary, but now a duplicate basis.
    gens.back() = gens.front();
    gens.back()["label"] = "tampered";
    std::ofstream(path("t.json")) << j.dump();
    EXPECT_EQ(invoke({"verify", path("t.json")}).code, kVerificationFailed);
}

TEST_F(CliTest, TruncatedJsonIsSchemaError) {
    ASSERT_EQ(invoke({"construct", "--d", "3", "--out", path("f.json")}).code, kOk);
    const std::string text = slurp(path("f.json"));
    std::ofstream(path("t.json")) << text.substr(0, text.size() / 2);
    EXPECT_EQ(invoke({"verify", path("t.json")}).code, kSchema);
    EXPECT_EQ(invoke({"verify", path("missing.json")}).code, kSchema);
    std::ofstream(path("w.json")) << R"({"d": 3})";
    EXPECT_EQ(invoke({"verify", path("w.json")}).code, kSchema);
}

TEST_F(CliTest, MolsCommands) {
    ASSERT_EQ(invoke({"mols", "gen", "--x", "4", "--out", path("m.txt")}).code, kOk);
    EXPECT_EQ(invoke({"mols", "check", path("m.txt")}).code, kOk);
    EXPECT_EQ(invoke({"mols", "net", path("m.txt")}).code, kOk);
    EXPECT_EQ(invoke({"mols", "mubs", "--x", "3"}).code, kOk);
    std::ofstream(path("bad.txt")) << "3 2\n0 1 2\n1 2 0\n2 0 1\n\n0 1 2\n1 2 0\n2 0 1\n";
    EXPECT_EQ(invoke({"mols", "check", path("bad.txt")}).code, kVerificationFailed);
    std::ofstream(path("latin.txt")) << "3 1\n0 1 2\n0 2 1\n2 0 1\n";
    EXPECT_EQ(invoke({"mols", "check", path("latin.txt")}).code, kVerificationFailed);
    std::ofstream(path("garbage.txt")) << "3 1\n0 1 x\n";
    EXPECT_EQ(invoke({"mols", "check", path("garbage.txt")}).code, kSchema);
}

TEST_F(CliTest, ConstructWithMolsFile) {
    ASSERT_EQ(invoke({"mols", "gen", "--x", "3", "--out", path("m.txt")}).code, kOk);
    const auto c = invoke({"construct", "--d", "7", "--k", "9", "--variant", "mols", "--mols-file",
                           path("m.txt"), "--out", path("f.json")});
    ASSERT_EQ(c.code, kOk) << c.err;
    EXPECT_NE(c.out.find("bases=4"), std::string::npos);
    EXPECT_EQ(invoke({"verify", path("f.json"), "--pairs-only"}).code, kOk);
}

TEST_F(CliTest, WithIdentityIsRejectedAsDuplicate) {
    const auto c = invoke({"construct", "--d", "3", "--with-identity", "--out", path("f.json")});
    EXPECT_EQ(c.code, kOk) << c.err;
    const auto j = nlohmann::json::parse(slurp(path("f.json")));
    EXPECT_EQ(j.at("generators").size(), 4u);
}

TEST_F(CliTest, OutputIsDeterministicOutsideHeader) {
    ASSERT_EQ(invoke({"construct", "--d", "15", "--out", path("a.json")}).code, kOk);
    fs::rename(path("a.json"), path("b.json"));
    ASSERT_EQ(invoke({"construct", "--d", "15", "--out", path("a.json")}).code, kOk);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    auto r1 = nlohmann::json::parse(invoke({"verify", path("a.json"), "--json"}).out);
    auto r2 = nlohmann::json::parse(invoke({"verify", path("b.json"), "--json"}).out);
    r1.erase("header");
    r2.erase("header");
    EXPECT_EQ(r1.dump(), r2.dump());
}

TEST(CliBound, TableAndJson) {
    const auto b = invoke({"bound", "--d", "9", "--k", "676", "--json"});
    ASSERT_EQ(b.code, kOk) << b.err;
    EXPECT_EQ(nlohmann::json::parse(b.out).at("combined"), 6);
    const auto t = invoke({"bound", "--d", "9", "--k-range", "2..10"});
    EXPECT_EQ(t.code, kOk) << t.err;
    EXPECT_EQ(invoke({"bound", "--d", "6", "--k", "4"}).code, kUsage);
}

TEST(CliGauss, DimensionAndReferenceModes) {
    EXPECT_EQ(invoke({"gauss", "--d", "21"}).code, kOk);
    EXPECT_EQ(invoke({"gauss", "--q", "13", "--c", "2", "--order", "4"}).code, kOk);
    EXPECT_EQ(invoke({"gauss", "--d", "4"}).code, kUsage);
}

}  // namespace
}  // namespace mumeb::cli
