// Copyright 2026 The Monoscope Authors
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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "io.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/oracles.hpp"

namespace monoscope::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"monoscope"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MONOSCOPE_TEST_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = (std::filesystem::temp_directory_path() /
             ("monoscope_cli_" + std::to_string(counter_++) + ".json"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

TEST(CliOrder, Examples) {
  Result r = cli({"order", data("remark13.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "order: inf\n");
  r = cli({"order", data("rot_pi2_36.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.starts_with("order: 2, witness length 3")) << r.out;
  r = cli({"order", data("empty.json")});
  EXPECT_EQ(r.out, "order: inf\n");
}

TEST(CliOrder, Formats) {
  Result r = cli({"order", data("rot_pi2_36.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["witness"]["indices"].size(), 3u);
  EXPECT_LT(j["witness"]["sum"].get<double>(), 0.0);
  r = cli({"order", data("remark13.json"), "--format", "csv"});
  EXPECT_EQ(r.out, "order,witness_length,witness,sum\ninf,,,\n");
}

TEST(CliEval, Examples) {
  Result r = cli({"eval", data("identity_grid_half.json"), "phi", "--n", "1", "--at", "1;0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: 0.25")) << r.out;
  r = cli({"eval", data("identity_grid_tenth.json"), "antideriv", "--base", "0", "--at", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: 0.45")) << r.out;
  r = cli({"eval", data("remark13_plus.json"), "chi", "--n", "2", "--at", "3;0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: inf")) << r.out;
}

TEST(CliEval, JsonRowsAndChains) {
  Result r = cli({"eval", data("identity_grid_half.json"), "phi", "--n", "2", "--at", "1;0", "--at",
                  "0.5;0.5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1]["value"], 0.25);
  EXPECT_EQ(rows[0]["chain"].size(), 2u);
  r = cli({"eval", data("remark13.json"), "psi", "--at", "2.5;2.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: 12.5")) << r.out;
}

TEST(CliEval, QueriesFile) {
  const TempFile q(R"([{"x": [1], "y": [0]}, [[0], [1]]])");
  const Result r = cli({"eval", data("identity_grid_half.json"), "phi", "--queries", q.path(), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.starts_with("x,y,value,chain\n"));
  EXPECT_TRUE(contains(r.out, "1,0,0.25,"));
  EXPECT_TRUE(contains(r.out, "0,1,0.25,"));
}

TEST(CliRelated, Examples) {
  Result r = cli({"related", data("remark13.json"), "--n", "inf", "--at", "1;1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "related: yes")) << r.out;
  r = cli({"related", data("remark13_plus.json"), "--n", "3", "--at", "0;0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "related: no")) << r.out;
  EXPECT_TRUE(contains(r.out, "margin: -0.36")) << r.out;
  r = cli({"related", data("identity_grid_tenth.json"), "--n", "2", "--at", "0.3;0.3"});
  EXPECT_TRUE(contains(r.out, "related: yes")) << r.out;
}

TEST(CliOracle, Examples) {
  Result r = cli({"oracle", R"({"kind": "rotation", "theta": "pi/6"})", "chi", "--n", "2", "--at", "1,0;0,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double th = std::numbers::pi / 6;
  const double dx = 0 - std::cos(th);
  const double dy = 1 - std::sin(th);
  std::ostringstream want;
  want.precision(12);
  want << std::cos(th) * (dx * dx + dy * dy);
  EXPECT_TRUE(contains(r.out, "value: " + want.str())) << r.out << " vs " << want.str();

  r = cli({"oracle", R"({"kind": "identity", "dim": 2})", "phi", "--n", "inf", "--at", "1,0;0,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: 1\n")) << r.out;

  r = cli({"oracle", R"({"kind": "skew", "matrix": [[0, -1], [1, 0]]})", "order"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "order: 2\n");
}

TEST(CliOracle, CrossCheckSandwich) {
  const Result r = cli({"oracle", R"({"kind": "identity", "dim": 1, "sample": {"grid_points": 9}})", "phi",
                        "--n", "2", "--at", "0.3;0.9", "--cross-check", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GE(rows[0]["gap"].get<double>(), 0.0);
}

TEST(CliOracle, SampleRoundTrip) {
  const std::string desc = R"({"kind": "rotation", "theta": 0.7, "sample": {"angles": 13, "radii": [0.5, 1.25]}})";
  const Result r = cli({"oracle", desc, "sample"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const FiniteOperator written = operator_from_json(json::parse(r.out));
  EXPECT_EQ(written, sample_graph(oracle_from_json(json::parse(desc)), sample_spec_from_json(json::parse(desc))));
  const TempFile file(r.out);
  EXPECT_EQ(read_operator_file(file.path()), written);
  EXPECT_EQ(operator_to_json(written), json::parse(r.out));
}

TEST(CliIo, OperatorRoundTripWithPairing) {
  const FiniteOperator op(PairingSpace(2, 1, Matrix(2, 1, {0.1, -3.7})),
                          {{{1.0 / 3, 2}, {std::sqrt(2.0)}}, {{-0.25, 1e-17}, {7}}});
  const FiniteOperator back = operator_from_json(json::parse(operator_to_json(op).dump()));
  EXPECT_EQ(back, op);
}

TEST(CliIo, AngleAndQueryParsing) {
  EXPECT_DOUBLE_EQ(parse_angle("pi/6"), std::numbers::pi / 6);
  EXPECT_DOUBLE_EQ(parse_angle("-3pi/4"), -3 * std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("2*pi/3"), 2 * std::numbers::pi / 3);
  EXPECT_DOUBLE_EQ(parse_angle(0.5), 0.5);
  EXPECT_THROW(parse_angle("tau"), InputError);
  const GraphPair q = parse_inline_query("1,2;3,-4.5");
  EXPECT_EQ(q.x, (Vector{1, 2}));
  EXPECT_EQ(q.y, (Vector{3, -4.5}));
  EXPECT_THROW(parse_inline_query("1,2"), InputError);
  EXPECT_TRUE(parse_inline_query("1,2", true).y.empty());
}

TEST(CliReplicate, AllCasesPass) {
  const Result r = cli({"replicate", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_FALSE(contains(r.out, "FAIL"));
  EXPECT_TRUE(contains(r.out, "remark13: 3/3 checks passed"));
  EXPECT_TRUE(contains(r.out, "example43: "));
  EXPECT_TRUE(contains(r.out, "kt: "));
}

TEST(CliReplicate, DeterministicUnderSeed) {
  const Result a = cli({"replicate", "kt", "--seed", "7"});
  const Result b = cli({"replicate", "kt", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kExitOk);
  const Result c = cli({"replicate", "example38", "--seed", "8", "--format", "json"});
  EXPECT_EQ(c.out, cli({"replicate", "example38", "--seed", "8", "--format", "json"}).out);
}

TEST(CliExitCodes, Contract) {
  const TempFile bad("{\"d1\": 1, \"points\": [");
  EXPECT_EQ(cli({"order", bad.path()}).code, kExitInputError);
  EXPECT_EQ(cli({"order", "/nonexistent/op.json"}).code, kExitInputError);
  EXPECT_EQ(cli({"eval", data("remark13.json"), "phi", "--at", "1,2;3"}).code, kExitInputError);
  EXPECT_EQ(cli({"eval", data("remark13.json"), "phi", "--n", "0", "--at", "1;1"}).code, kExitInputError);
  EXPECT_EQ(cli({"eval", data("remark13.json"), "nope", "--at", "1;1"}).code, kExitInputError);
  EXPECT_EQ(cli({"eval", data("remark13.json"), "phi", "--tol", "-1", "--at", "1;1"}).code, kExitInputError);
  EXPECT_EQ(cli({"replicate", "example99"}).code, kExitInputError);
  EXPECT_EQ(cli({}).code, kExitInputError);
  EXPECT_EQ(cli({"eval", data("rot_pi2_36.json"), "psi", "--n", "inf", "--at", "0,0;0,0"}).code, kExitImproper);
  EXPECT_EQ(cli({"oracle", R"({"kind": "skew", "matrix": [[0, -1], [1, 0]]})", "chi", "--at", "1,0;0,1"}).code,
            kExitUnsupportedOracle);
  EXPECT_EQ(cli({"oracle", R"({"kind": "hyperbolic"})", "order"}).code, kExitUnsupportedOracle);
  EXPECT_EQ(cli({"oracle", R"({"kind": "skew", "matrix": [[1, 0], [0, 1]]})", "order"}).code, kExitInputError);
}

TEST(CliExitCodes, HelpIsSuccess) {
  const Result r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "replicate"));
}

}  // namespace
}  // namespace monoscope::cli
