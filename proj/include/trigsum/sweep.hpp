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
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigsum/identities.hpp"

namespace trigsum {

struct SweepConfig {
  /// Catalog ids; empty means the whole catalog.
  std::vector<std::string> identities;
  /// Selected k values, ascending and distinct.
  std::vector<long> ks;
  /// The k selector as written by the user, echoed in the report header.
  std::string k_selector;
  BackendSpec backend;
  /// Tolerance as written by the user, echoed in the report header.
  std::string tolerance_text;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned jobs = 0;
  /// Output path; empty or "-" writes to standard output.
  std::string report_path;
  bool include_imprimitive_probes = false;

  /// Throws Error(kInvalidArgument) describing the first problem found.
  void validate() const;
};

/// Parses "7", "3,5,7", "3..21" or "3..21:2".
std::vector<long> parse_k_selector(std::string_view text);
/// Parses "all" or a comma-separated id list, checking each id.
std::vector<std::string> parse_identity_selector(std::string_view text);

struct ReportSummary {
  long pass = 0;
  long fail = 0;
  long not_applicable = 0;
  long probe_pass = 0;
  long probe_fail = 0;
  long probe_not_applicable = 0;
  std::optional<BigFloat> max_residual;
};

struct Report {
  std::string tool = "trigsum";
  std::string version = TRIGSUM_VERSION;
  std::string timestamp;
  SweepConfig config;
  std::vector<CheckResult> rows;
  ReportSummary summary;
};

Report run_sweep(const SweepConfig& config);

/// Tallies rows; probe rows are counted apart from the primary verdicts.
ReportSummary summarize(const std::vector<CheckResult>& rows);

/// 0 when no primary row failed, 1 otherwise.
int exit_code(const Report& report);

/// JSON lines: header, one line per row, summary.
void emit_report(const Report& report, std::ostream& out);
/// Writes to a file, or standard output for "" and "-". Throws Error(kIo).
void emit_report(const Report& report, const std::string& path);

std::string_view to_string(SweepTag tag);

}  // namespace trigsum
