// Copyright 2026 The redchar Authors.
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

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"

namespace redchar {
namespace {

using json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "redchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, ChartabVerify) {
  const Result r = run({"chartab", "--q", "3", "--verify"});
  EXPECT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["version"], 1);
  EXPECT_TRUE(j["verify"]["ok"].get<bool>());
  EXPECT_EQ(j["tables"].size(), 3u);
  EXPECT_EQ(j["entries"], "printed");
}

TEST(Cli, ChartabOracleCorrectedHasNoUndefined) {
  const Result r = run({"chartab", "--q", "3", "--oracle-correct"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("undefined"), std::string::npos);
  const Result p = run({"chartab", "--q", "3"});
  EXPECT_NE(p.out.find("undefined"), std::string::npos);
}

TEST(Cli, ChartabCsv) {
  const Result r = run({"chartab", "--q", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("cases 1-3,1_SO4,zeta,", 0), 0u);
  EXPECT_NE(r.out.find("\ncases 4-6,"), std::string::npos);
  EXPECT_NE(r.out.find("\ncases 7-9,"), std::string::npos);
}

TEST(Cli, StabilityListsTwoStablePairs) {
  const Result r = run({"stability", "--q", "3", "--packet", "2x2"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  ASSERT_EQ(j["loci"].size(), 1u);
  EXPECT_EQ(j["loci"][0]["stable_pairs"],
            json::array({"(+,-)", "(-,+)"}));
  EXPECT_EQ(j["loci"][0]["candidates"][0]["witness"]["class_a"],
            "c2(1)xc2(1,1)");
  const Result su =
      run({"stability", "--q", "3", "--packet", "2x2", "--locus", "su"});
  EXPECT_EQ(su.parsed()["loci"][0]["stable_pairs"],
            json::array({"(+,+)", "(-,-)"}));
}

TEST(Cli, UsageAndPreconditionErrors) {
  EXPECT_EQ(run({"sl3", "--q", "5", "--triple-scan"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"chartab", "--q", "9"}).code, 2);
  EXPECT_EQ(run({"chartab", "--q", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"green", "--q", "3", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"stability", "--q", "3"}).code, 2);
  EXPECT_EQ(run({"stability", "--q", "3", "--packet", "3x3"}).code, 2);
  EXPECT_EQ(run({"decompose", "--q", "3", "--rep", "nope"}).code, 2);
  EXPECT_EQ(run({"chartab", "--q", "11"}).code, 2);  // budget
  const Result e = run({"sl3", "--q", "5", "--fusion"});
  EXPECT_EQ(json::parse(e.err)["error"], "precondition");
}

TEST(Cli, BudgetExceeded) {
  const Result r = run({"verify-all", "--q", "5", "--budget", "1e-9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"], "budget");
  // The budget does not leak into later runs.
  EXPECT_EQ(run({"green", "--q", "3"}).code, 0);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ClassesWithOracle) {
  const Result r = run({"classes", "--q", "3", "--oracle"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["num_classes"], 20);
  const json& row = j["classes"][0];
  for (const char* k : {"label", "representative", "size", "lemma_item",
                        "lemma_count", "oracle_count"}) {
    EXPECT_TRUE(row.contains(k)) << k;
  }
  EXPECT_EQ(j["reconcile"]["flagged"], json::array({"12b", "16"}));
  const Result c = run({"classes", "--q", "3", "--format", "csv"});
  EXPECT_EQ(c.out.rfind("label,representative,size,lemma_item,lemma_count,"
                        "oracle_count\n",
                        0),
            0u);
}

TEST(Cli, DecomposeAgainstBoth) {
  const Result a =
      run({"decompose", "--q", "3", "--rep", "R_1", "--against", "appendix"});
  const Result o =
      run({"decompose", "--q", "3", "--rep", "R_1", "--against", "oracle"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(a.parsed()["multiplicities"].size(), 4u);
  EXPECT_EQ(a.parsed()["multiplicities"]["St_SO4"], 1);
  // Same multiset; oracle order may differ.
  json am = a.parsed()["multiplicities"], om = o.parsed()["multiplicities"];
  EXPECT_EQ(am, om);
  const Result p = run({"decompose", "--q", "5", "--rep", "mackey_sum_beta"});
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(p.parsed()["multiplicities"]["omega_princ+"], 2);
}

TEST(Cli, Green) {
  const Result r = run({"green", "--q", "5", "--identity", "omega"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_TRUE(j["identities"]["ok"].get<bool>());
  EXPECT_EQ(j["g_sgn"]["c2(1)xc2(1,D)"], -1);
}

TEST(Cli, Sl3) {
  const Result r =
      run({"sl3", "--q", "7", "--triple-scan", "--labels", "--fusion"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["triple_scan"]["num_passing"], 6);
  EXPECT_EQ(j["fusion"]["orbit_size"], 38304);
  EXPECT_EQ(j["labels"]["classes"][1]["label_of_inverse"], 1);
}

TEST(Cli, Parahoric) {
  const Result r = run({"parahoric", "--q", "3", "--rep", "pi_eta2_beta+",
                        "--n-invariants", "--pin"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["n_invariants"]["dimension"], 3);
  EXPECT_TRUE(j["pin"]["agree"].get<bool>());
  EXPECT_EQ(run({"parahoric", "--q", "3"}).code, 2);
}

TEST(Cli, TextFormat) {
  const Result r = run({"green", "--q", "3", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("version: 1\ncommand: green\n", 0), 0u);
}

TEST(Cli, VerifyAllIsDeterministic) {
  const Result a = run({"verify-all", "--q", "3", "--seed", "7"});
  const Result b = run({"verify-all", "--q", "3", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.parsed()["sl3"]["skipped"], "q is not 1 mod 3");
  const Result c = run({"verify-all", "--q", "7"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(c.parsed()["sl3"]["ok"].get<bool>());
}

}  // namespace
}  // namespace redchar
