// Copyright 2026 The robustnet Authors
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_util.hpp"

namespace robustnet {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("robustnet_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Outcome Exec(const std::string& args) const {
    const std::string err = Path("stderr.txt");
    const std::string cmd = std::string(ROBUSTNET_CLI) + " " + args + " 2>" + err;
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = Slurp(err);
    return r;
  }

  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, DesignReportsToyCost) {
  const Outcome r = Exec("design " + testing::DataPath("toy2x5") + " --out " + Path("d.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total cost: 6\n"), std::string::npos) << r.out;
  const std::string doc = Slurp(Path("d.json"));
  EXPECT_NE(doc.find("\"total_reported\": 6"), std::string::npos);
}

TEST_F(Cli, LegacyCostsMore) {
  const Outcome r = Exec("design " + testing::DataPath("toy2x5") + " --algorithm legacy");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total cost: 16\n"), std::string::npos) << r.out;
}

TEST_F(Cli, NoFailureOnly) {
  const Outcome r =
      Exec("design " + testing::DataPath("toy2x5") + " --no-failure-only");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total cost: 3\n"), std::string::npos) << r.out;
}

TEST_F(Cli, EmptyDemandCostsZero) {
  std::string text = Slurp(testing::DataPath("toy2x5"));
  const size_t at = text.find("\"demands\"");
  const size_t end = text.find(']', at);
  text.replace(at, end - at + 1, "\"demands\": []");
  Write("empty.json", text);
  const Outcome r = Exec("design " + Path("empty.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total cost: 0\n"), std::string::npos) << r.out;
}

TEST_F(Cli, TransientCsv) {
  ASSERT_EQ(Exec("design " + testing::DataPath("toy2x5") + " --out " + Path("d.json")).code, 0);
  const Outcome r = Exec("transient " + testing::DataPath("toy2x5") + " " + Path("d.json") +
                     " --out " + Path("t.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = Slurp(Path("t.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 14);
  EXPECT_EQ(csv.rfind("scenario_kind,scenario_id,offered,delivered,fraction\n", 0), 0u);
  EXPECT_NE(csv.find("NoFailure,,0.800000,0.800000,1.000000"), std::string::npos) << csv;
  EXPECT_NE(csv.find("SpanCut,O1-O2,0.800000,0.000000,0.000000"), std::string::npos)
      << csv;
}

TEST_F(Cli, TransientMissingDesign) {
  const Outcome r = Exec("transient " + testing::DataPath("toy2x5") + " " + Path("nope.json") +
                     " --out " + Path("t.csv"));
  EXPECT_NE(r.code, 0);
  EXPECT_FALSE(fs::exists(Path("t.csv")));
  EXPECT_TRUE(r.out.empty()) << r.out;
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, MalformedInputNamesLocation) {
  Write("bad.json", "{\n  \"ip_nodes\": [\"A\"\n}");
  Outcome r = Exec("design " + Path("bad.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.json:3:"), std::string::npos) << r.err;

  std::string text = Slurp(testing::DataPath("toy2x5"));
  text.replace(text.find("\"miles\": 450"), 12, "\"miles\": -4");
  Write("neg.json", text);
  r = Exec("design " + Path("neg.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("span N1-O1"), std::string::npos) << r.err;
}

TEST_F(Cli, InfeasibleExitCode) {
  Write("bridge.json", R"({
    "ip_nodes": ["A", "B"], "optical_nodes": [],
    "routers": [{"id": "RA", "home": "A"}, {"id": "RB", "home": "B"}],
    "spans": [{"u": "A", "v": "B", "miles": 100}],
    "demands": [{"src": "A", "dst": "B", "units": 1}]})");
  const Outcome r = Exec("design " + Path("bridge.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("SpanCut(A-B)"), std::string::npos) << r.err;
}

TEST_F(Cli, UnknownAlgorithmIsUsageError) {
  EXPECT_EQ(Exec("design " + testing::DataPath("toy2x5") + " --algorithm magic").code, 2);
}

TEST_F(Cli, CompareListsAllAlgorithms) {
  const Outcome r = Exec("compare " + testing::DataPath("toy2x5") + " --out " + Path("c.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = Slurp(Path("c.csv"));
  for (const char* a : {"optimal", "simple", "greedy", "legacy"}) {
    EXPECT_NE(csv.find(std::string("\n") + a + ","), std::string::npos) << a;
  }
}

TEST_F(Cli, ExportLp) {
  const Outcome r = Exec("export-lp " + testing::DataPath("toy2x5") + " --out " + Path("m.lp"));
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string lp = Slurp(Path("m.lp"));
  EXPECT_NE(lp.find("Minimize"), std::string::npos);
  EXPECT_NE(lp.find("General"), std::string::npos);
}

TEST_F(Cli, DesignOutputIsDeterministic) {
  ASSERT_EQ(Exec("design " + testing::DataPath("grid3x3") + " --out " + Path("a.json")).code, 0);
  ASSERT_EQ(Exec("design " + testing::DataPath("grid3x3") + " --out " + Path("b.json")).code, 0);
  EXPECT_EQ(Slurp(Path("a.json")), Slurp(Path("b.json")));
}

}  // namespace
}  // namespace robustnet
