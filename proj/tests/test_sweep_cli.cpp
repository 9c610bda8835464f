// Copyright 2026 The trigsum Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "trigsum/cli.hpp"
#include "trigsum/error.hpp"
#include "trigsum/sweep.hpp"

namespace trigsum {
namespace {

using Json = nlohmann::json;

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

SweepConfig config_for(std::vector<std::string> ids, const std::string& k, BackendKind kind) {
  SweepConfig c;
  c.identities = std::move(ids);
  c.k_selector = k;
  c.ks = parse_k_selector(k);
  c.backend.kind = kind;
  return c;
}

std::string strip_timestamp(const std::string& report) {
  std::string first = report.substr(0, report.find('\n'));
  const size_t pos = first.find("\"timestamp\"");
  return first.substr(0, pos) + report.substr(report.find('\n'));
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Selectors, KSelector) {
  EXPECT_EQ(parse_k_selector("7"), std::vector<long>{7});
  EXPECT_EQ(parse_k_selector("9,3,5,3"), (std::vector<long>{3, 5, 9}));
  EXPECT_EQ(parse_k_selector("3..7"), (std::vector<long>{3, 4, 5, 6, 7}));
  EXPECT_EQ(parse_k_selector("3..11:4"), (std::vector<long>{3, 7, 11}));
  EXPECT_THROW(parse_k_selector("9..3"), Error);
  EXPECT_THROW(parse_k_selector("0..3"), Error);
  EXPECT_THROW(parse_k_selector("x"), Error);
  EXPECT_THROW(parse_k_selector(""), Error);
}

TEST(Selectors, IdentitySelector) {
  EXPECT_TRUE(parse_identity_selector("all").empty());
  EXPECT_EQ(parse_identity_selector("bz_cot,stern_tan2"),
            (std::vector<std::string>{"bz_cot", "stern_tan2"}));
  EXPECT_THROW(parse_identity_selector("bz_cot,bogus"), Error);
}

TEST(Config, Validation) {
  SweepConfig c = config_for({}, "7", BackendKind::kFloat);
  c.backend.precision_bits = 32;
  EXPECT_THROW(c.validate(), Error);
  c.backend.precision_bits = 64;
  EXPECT_NO_THROW(c.validate());
  c.ks.clear();
  EXPECT_THROW(c.validate(), Error);
}

TEST(RunSweep, SternRowsAllPass) {
  const Report r = run_sweep(config_for({"stern_tan2"}, "3..21:2", BackendKind::kExact));
  EXPECT_EQ(r.rows.size(), 10u);
  EXPECT_EQ(r.summary.pass, 10);
  EXPECT_EQ(exit_code(r), 0);
  std::ostringstream out;
  emit_report(r, out);
  EXPECT_EQ(parse_lines(out.str()).size(), 12u);
}

TEST(RunSweep, BzCotMarksModuliWithoutCharacter) {
  const Report r = run_sweep(config_for({"bz_cot"}, "7..47", BackendKind::kFloat));
  EXPECT_EQ(r.rows.size(), 41u);
  for (const auto& row : r.rows) {
    const long k = *row.params.k;
    const bool expected = k % 4 == 3 && is_squarefree(k);
    EXPECT_EQ(row.verdict, expected ? Verdict::kPass : Verdict::kNotApplicable) << "k=" << k;
  }
  EXPECT_EQ(r.summary.fail, 0);
  EXPECT_EQ(r.summary.pass + r.summary.not_applicable, 41);
}

TEST(RunSweep, WholeCatalogAtSeven) {
  const Report r = run_sweep(config_for({}, "7", BackendKind::kFloat));
  EXPECT_EQ(r.summary.fail, 0);
  EXPECT_GT(r.summary.pass, 100);
  EXPECT_EQ(exit_code(r), 0);
}

TEST(RunSweep, DeterministicAcrossJobs) {
  SweepConfig c = config_for({"eisenstein_cot_sin", "bz_cot_cos", "binom_alt"}, "5..15",
                             BackendKind::kFloat);
  c.jobs = 1;
  std::ostringstream one, four;
  emit_report(run_sweep(c), one);
  c.jobs = 4;
  Report r4 = run_sweep(c);
  r4.config.jobs = 1;
  emit_report(r4, four);
  EXPECT_EQ(strip_timestamp(one.str()), strip_timestamp(four.str()));
}

TEST(RunSweep, ProbesDoNotFailTheRun) {
  SweepConfig c = config_for({"char_sin"}, "9,21", BackendKind::kFloat);
  c.include_imprimitive_probes = true;
  const Report r = run_sweep(c);
  EXPECT_GT(r.summary.probe_fail + r.summary.probe_pass, 0);
  EXPECT_EQ(r.summary.fail, 0);
  EXPECT_EQ(exit_code(r), 0);
  long tally = r.summary.pass + r.summary.fail + r.summary.not_applicable + r.summary.probe_pass +
               r.summary.probe_fail + r.summary.probe_not_applicable;
  EXPECT_EQ(tally, static_cast<long>(r.rows.size()));
}

TEST(RunSweep, FailingRowGivesNonzeroExit) {
  Report r = run_sweep(config_for({"cot2_sum"}, "9", BackendKind::kFloat));
  EXPECT_EQ(exit_code(r), 0);
  r.rows.front().verdict = Verdict::kFail;
  r.summary = summarize(r.rows);
  EXPECT_EQ(r.summary.fail, 1);
  EXPECT_EQ(exit_code(r), 1);
}

TEST(EmitReport, EmptySweepHasHeaderAndSummary) {
  Report r;
  std::ostringstream out;
  emit_report(r, out);
  const auto lines = parse_lines(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["type"], "header");
  EXPECT_EQ(lines[1]["type"], "summary");
}

TEST(EmitReport, FileOutputAndFailure) {
  const auto path = std::filesystem::temp_directory_path() / "trigsum_report_test.jsonl";
  const Report r = run_sweep(config_for({"stern_tan2"}, "7", BackendKind::kExact));
  emit_report(r, path.string());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_lines(text.str()).size(), 3u);
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(r, std::string("/nonexistent-dir/report.jsonl")), Error);
}

TEST(Cli, VerifyOneRow) {
  const CliRun r = run_cli({"verify", "--identity", "stern_tan2", "--k", "7", "--backend", "exact"});
  EXPECT_EQ(r.code, 0);
  const auto lines = parse_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1]["verdict"], "pass");
  EXPECT_EQ(lines[1]["residual"], "0");
}

TEST(Cli, NotApplicableIsNotFailure) {
  const CliRun r = run_cli({"verify", "--identity", "bz_cot", "--k", "9"});
  EXPECT_EQ(r.code, 0);
  const auto lines = parse_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1]["verdict"], "not_applicable");
  EXPECT_EQ(lines[1]["reason"], "no real primitive odd character mod 9");
}

TEST(Cli, FailingToleranceExitsOne) {
  const CliRun r = run_cli({"verify", "--identity", "tan4_sum", "--k", "99", "--precision", "64",
                            "--tolerance", "1e-300"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ClassNumber) {
  const CliRun r = run_cli({"classnum", "--k", "23"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h(-23) = 3"), std::string::npos);
  EXPECT_EQ(run_cli({"classnum", "--k", "9"}).code, 2);
}

TEST(Cli, ListAndCharacters) {
  const CliRun list = run_cli({"list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("char_sin2_over_sin4"), std::string::npos);
  const CliRun chars = run_cli({"characters", "--k", "9"});
  EXPECT_EQ(chars.code, 0);
  EXPECT_NE(chars.out.find("characters mod 9 (6)"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--backend", "quantum"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--identity", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--k", "5..3"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--precision", "32"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "trigsum_config_test.json";
  {
    std::ofstream cfg(path);
    cfg << R"({"identity": ["stern_tan2"], "k": "3..9:2", "backend": "exact"})";
  }
  const CliRun from_file = run_cli({"verify", "--config", path.string()});
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(parse_lines(from_file.out).size(), 6u);
  const CliRun overridden = run_cli({"verify", "--config", path.string(), "--k", "11"});
  EXPECT_EQ(parse_lines(overridden.out).size(), 3u);
  {
    std::ofstream cfg(path);
    cfg << R"({"colour": "blue"})";
  }
  EXPECT_EQ(run_cli({"verify", "--config", path.string()}).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"verify", "--config", "/nonexistent/config.json"}).code, 2);
}

}  // namespace
}  // namespace trigsum
