// Copyright 2026 The weillab Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weillab/cli/cli.hpp"
#include "weillab/error.hpp"

namespace weillab::cli {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "weillab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

nlohmann::json classify_json(std::vector<std::string> args) {
  args.insert(args.begin(), "classify");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(CliClassify, Label) {
  const auto j = classify_json({"--label", "2.2.a_ab"});
  EXPECT_EQ(j["class_kind"], "Outside");
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["b"], -1);
  EXPECT_TRUE(j["genus3_exists"].is_null());
}

TEST(CliClassify, Coefficients) {
  const auto j = classify_json({"--q", "7", "--a", "0", "--b", "-12"});
  EXPECT_EQ(j["class_kind"], "PirrB");
  EXPECT_EQ(j["shape2_K"], "e4f1");
  EXPECT_EQ(j["genus3_exists"], true);
  EXPECT_EQ(j["K_over_Kplus_ramified"], true);
  EXPECT_EQ(j["b_case"], "b=2-2q");
  EXPECT_EQ(j["label"], "2.7.a_am");
}

TEST(CliClassify, SpecialThree) {
  const auto j = classify_json({"--q", "3", "--a", "0", "--b", "-6"});
  EXPECT_EQ(j["class_kind"], "SpecialQ3");
  EXPECT_EQ(j["genus3_exists"], true);
  EXPECT_TRUE(j["deg4_polarisation"].is_null());
  EXPECT_NE(j["notes"].get<std::string>().find("y^4+xz^3+2x^3z"), std::string::npos);
}

TEST(CliClassify, FieldOrder) {
  const CliRun r = run({"classify", "--q", "8", "--a", "1", "--b", "-7"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, std::vector<std::string>(kColumns.begin(), kColumns.end()));
}

TEST(CliClassify, ExitCodes) {
  CliRun r = run({"classify", "--q", "6", "--a", "0", "--b", "-6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotPrimePower"), std::string::npos);
  EXPECT_EQ(lines(r.err).size(), 1U);

  EXPECT_EQ(run({"classify", "--q", "4", "--a", "0", "--b", "9"}).code, 1);
  EXPECT_EQ(run({"classify", "--label", "2.2.zz"}).code, 1);
  EXPECT_EQ(run({"classify", "--q", "2", "--a", "0"}).code, 1);
  EXPECT_EQ(run({"classify", "--q", "2", "--a", "0", "--b", "-1", "--label", "2.2.a_ab"}).code, 1);
  EXPECT_EQ(run({"classify"}).code, 1);
  EXPECT_EQ(run({"classify", "--q", "x"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliEnumerate, CsvAtSeven) {
  const CliRun r = run({"enumerate", "--q-min", "7", "--q-max", "7", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0], csv_header());
  EXPECT_EQ(record_from_csv(rows[1]).b, -13);
  EXPECT_EQ(record_from_csv(rows[2]).b, -12);
  EXPECT_EQ(record_from_csv(rows[3]).b, -7);
  EXPECT_EQ(r.err, "summary: classes=3 PirrA=1 PirrB=2 SpecialQ2=0 SpecialQ3=0 genus3=1 no-genus3=2\n");
}

TEST(CliEnumerate, OnlyNoGenus3) {
  const CliRun r = run({"enumerate", "--q-min", "2", "--q-max", "3", "--only-no-genus3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  bool has_q2 = false;
  bool has_q3 = false;
  for (const auto& line : lines(r.out)) {
    const auto rec = record_from_json(line);
    EXPECT_EQ(rec.genus3_exists, false);
    has_q2 |= rec.class_kind == "SpecialQ2";
    has_q3 |= rec.class_kind == "SpecialQ3";
  }
  EXPECT_TRUE(has_q2);
  EXPECT_FALSE(has_q3);
}

TEST(CliEnumerate, TableEndsWithSummary) {
  const CliRun r = run({"enumerate", "--q-min", "2", "--q-max", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_GE(rows.size(), 3U);
  EXPECT_EQ(rows.front(), table_header());
  EXPECT_EQ(rows.back().rfind("summary: ", 0), 0U);
}

TEST(CliEnumerate, BadRanges) {
  EXPECT_EQ(run({"enumerate", "--q-min", "3", "--q-max", "2"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--q-min", "1", "--q-max", "2"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--q-min", "2", "--q-max", "3", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--q-min", "2", "--q-max", "2000000"}).code, 1);
}

TEST(CliEnumerate, DeterministicAcrossThreads) {
  const CliRun one = run({"enumerate", "--q-min", "2", "--q-max", "600", "--format", "csv", "--threads", "1"});
  const CliRun four = run({"enumerate", "--q-min", "2", "--q-max", "600", "--format", "csv", "--threads", "4"});
  const CliRun again = run({"enumerate", "--q-min", "2", "--q-max", "600", "--format", "csv", "--threads", "4"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(four.out, again.out);
  EXPECT_EQ(one.err, four.err);
}

TEST(CliEnumerate, SortedByQAB) {
  const auto recs = enumerate_records(2, 300, 3);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_LT(std::make_tuple(recs[i - 1].q, recs[i - 1].a, recs[i - 1].b),
              std::make_tuple(recs[i].q, recs[i].a, recs[i].b));
  }
}

TEST(CliEnumerate, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "weillab_cli_test_output.csv";
  const CliRun r = run({"enumerate", "--q-min", "7", "--q-max", "9", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const CliRun direct = run({"enumerate", "--q-min", "7", "--q-max", "9", "--format", "csv"});
  EXPECT_EQ(ss.str(), direct.out);
  std::filesystem::remove(path);
}

TEST(CliRecords, CsvAndJsonRoundTrip) {
  const auto recs = enumerate_records(2, 128, 2);
  ASSERT_FALSE(recs.empty());
  for (const auto& rec : recs) {
    EXPECT_EQ(record_from_csv(to_csv_row(rec)), rec) << rec.label;
    EXPECT_EQ(record_from_json(to_json(rec)), rec) << rec.label;
    EXPECT_EQ(record_from_json(to_json(rec, 2)), rec) << rec.label;
  }
}

TEST(CliRecords, CsvQuoting) {
  EXPECT_EQ(split_csv_row(R"(a,"b,c","d""e",)"), (std::vector<std::string>{"a", "b,c", "d\"e", ""}));
  ClassRecord rec = make_record(make_weil_quartic(2, 0, -4));
  rec.notes = "x, \"y\"";
  EXPECT_EQ(record_from_csv(to_csv_row(rec)), rec);
  EXPECT_THROW(record_from_csv("1,2,3"), Error);
}

TEST(CliBounds, Families) {
  CliRun r = run({"bounds", "--q", "11", "--a", "2", "--pa", "3", "--family", "general"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lo"], 8);
  EXPECT_EQ(j["hi"], 20);

  j = nlohmann::json::parse(run({"bounds", "--q", "4", "--family", "wres"}).out);
  EXPECT_EQ(j["lo"], 1);
  EXPECT_EQ(j["hi"], 9);

  j = nlohmann::json::parse(run({"bounds", "--q", "11", "--family", "serre", "--g", "3"}).out);
  EXPECT_EQ(j["lo"], 0);
  EXPECT_EQ(j["hi"], 30);
  EXPECT_EQ(j["raw_lo"], -6);

  j = nlohmann::json::parse(run({"bounds", "--q", "8", "--family", "nonpp", "--b", "-7"}).out);
  EXPECT_EQ(j["family"], "nonpp-exact");
  EXPECT_EQ(j["hi"], 18);

  EXPECT_EQ(run({"bounds", "--q", "11", "--family", "general"}).code, 1);
  EXPECT_EQ(run({"bounds", "--q", "11", "--family", "serre"}).code, 1);
  EXPECT_EQ(run({"bounds", "--q", "11", "--family", "wres", "--g", "3"}).code, 1);
  EXPECT_EQ(run({"bounds", "--q", "12", "--family", "wres"}).code, 1);
  EXPECT_EQ(run({"bounds", "--q", "11", "--family", "hasse"}).code, 1);
}

TEST(CliLabel, EncodeDecode) {
  CliRun r = run({"label", "--encode", "13,0,-11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.13.a_al\n");
  r = run({"label", "--decode", "2.2.a_ab"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q=2 a=0 b=-1\n");
  EXPECT_EQ(run({"label", "--decode", "2.2.zz"}).code, 1);
  EXPECT_EQ(run({"label", "--encode", "13,0"}).code, 1);
  EXPECT_EQ(run({"label"}).code, 1);
}

TEST(SafeBound, Resolution) {
  EXPECT_EQ(resolve_safe_bound(std::nullopt, nullptr), kDefaultSafeBound);
  EXPECT_EQ(resolve_safe_bound(std::nullopt, "5000"), 5000);
  EXPECT_EQ(resolve_safe_bound(100, "5000"), 100);
  EXPECT_THROW(resolve_safe_bound(std::nullopt, "lots"), Error);
  EXPECT_THROW(resolve_safe_bound(kMaxQ + 1, nullptr), Error);
}

TEST(SafeBound, FlagAndEnvironment) {
  EXPECT_EQ(run({"--safe-bound", "10", "classify", "--q", "11", "--a", "0", "--b", "-21"}).code, 1);
  EXPECT_EQ(run({"classify", "--q", "11", "--a", "0", "--b", "-21", "--safe-bound", "11"}).code, 0);
  ::setenv("WEILLAB_SAFE_BOUND", "10", 1);
  EXPECT_EQ(run({"classify", "--q", "11", "--a", "0", "--b", "-21"}).code, 1);
  EXPECT_EQ(run({"classify", "--q", "11", "--a", "0", "--b", "-21", "--safe-bound", "20"}).code, 0);
  ::unsetenv("WEILLAB_SAFE_BOUND");
  EXPECT_EQ(run({"classify", "--q", "11", "--a", "0", "--b", "-21"}).code, 0);
}

TEST(PrimePowersInRange, Sieve) {
  EXPECT_EQ(prime_powers_in_range(2, 16), (std::vector<i64>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}));
  EXPECT_EQ(prime_powers_in_range(24, 32), (std::vector<i64>{25, 27, 29, 31, 32}));
  EXPECT_TRUE(prime_powers_in_range(24, 24).empty());
  EXPECT_EQ(prime_powers_in_range(2, 10000).size(), 1280U);
}

}  // namespace
}  // namespace weillab::cli
