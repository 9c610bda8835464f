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
#include "trigsum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "trigsum/error.hpp"

namespace trigsum {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kDisplayDigits = 15;

long parse_long(std::string_view s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorCode::kInvalidArgument, "not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Cell {
  const IdentityRecord* record;
  long k;
};

std::vector<CheckResult> run_cell(const Cell& cell, const SweepConfig& config) {
  std::vector<CheckResult> rows;
  const IdentityRecord& r = *cell.record;
  if (!r.k_independent) {
    if (auto ok = r.applicable_for_k(cell.k); !ok) {
      CheckResult na;
      na.id = r.id;
      na.params.k = cell.k;
      na.backend = config.backend.descriptor();
      na.reason = ok.reason;
      rows.push_back(std::move(na));
    }
  }
  for (const auto& [params, tag] : r.sweep_domain(cell.k, config.include_imprimitive_probes))
    rows.push_back(check(r.id, params, config.backend, tag));
  return rows;
}

Json params_json(const IdentityParams& p) {
  Json j = Json::object();
  if (p.k) j["k"] = *p.k;
  if (p.a) j["a"] = *p.a;
  if (p.b) j["b"] = *p.b;
  if (p.x) j["x_turns"] = p.x->get_str();
  if (p.character_index) j["chi"] = *p.character_index;
  return j;
}

Json complex_json(const ApproxComplex& z) {
  return Json{{"re", z.real().to_string()}, {"im", z.imag().to_string()}};
}

Json row_json(const CheckResult& r) {
  Json j;
  j["type"] = "row";
  j["id"] = r.id;
  j["params"] = params_json(r.params);
  j["tag"] = to_string(r.tag);
  j["backend"] = r.backend;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict != Verdict::kNotApplicable || r.lhs) {
    j["i_power"] = r.i_power;
    if (r.field_order > 0) j["field_order"] = r.field_order;
  }
  if (r.lhs) {
    j["lhs"] = complex_json(*r.lhs);
    j["lhs_display"] = r.lhs->to_string(kDisplayDigits);
  }
  if (r.rhs) {
    j["rhs"] = complex_json(*r.rhs);
    j["rhs_display"] = r.rhs->to_string(kDisplayDigits);
  }
  if (!r.lhs_exact.empty()) j["lhs_exact"] = r.lhs_exact;
  if (!r.rhs_exact.empty()) j["rhs_exact"] = r.rhs_exact;
  if (r.residual) {
    j["residual"] = r.residual->to_string();
    j["residual_display"] = r.residual->to_string(6);
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json header_json(const Report& report) {
  const SweepConfig& c = report.config;
  Json config;
  config["identities"] = c.identities.empty() ? Json("all") : Json(c.identities);
  config["k"] = c.k_selector;
  config["backend"] = c.backend.kind == BackendKind::kExact ? "exact" : "float";
  config["precision"] = c.backend.precision_bits;
  config["tolerance"] = c.backend.kind == BackendKind::kExact
                            ? Json("0")
                            : Json(c.tolerance_text.empty()
                                       ? c.backend.active_tolerance().to_string(kDisplayDigits)
                                       : c.tolerance_text);
  config["probe_imprimitive"] = c.include_imprimitive_probes;
  Json j;
  j["type"] = "header";
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["config"] = std::move(config);
  j["timestamp"] = report.timestamp;
  return j;
}

Json summary_json(const ReportSummary& s, size_t rows) {
  Json j;
  j["type"] = "summary";
  j["rows"] = rows;
  j["pass"] = s.pass;
  j["fail"] = s.fail;
  j["not_applicable"] = s.not_applicable;
  j["probe_pass"] = s.probe_pass;
  j["probe_fail"] = s.probe_fail;
  j["probe_not_applicable"] = s.probe_not_applicable;
  j["max_residual"] = s.max_residual ? Json(s.max_residual->to_string()) : Json(nullptr);
  return j;
}

}  // namespace

std::string_view to_string(SweepTag tag) {
  return tag == SweepTag::kImprimitiveProbe ? "imprimitive_probe" : "primitive_only";
}

std::vector<long> parse_k_selector(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kInvalidArgument, "empty k selector");
  std::vector<long> ks;
  for (auto item : split(text, ',')) {
    const size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      ks.push_back(parse_long(item));
      continue;
    }
    std::string_view upper = item.substr(dots + 2);
    long step = 1;
    if (const size_t colon = upper.find(':'); colon != std::string_view::npos) {
      step = parse_long(upper.substr(colon + 1));
      upper = upper.substr(0, colon);
    }
    const long lo = parse_long(item.substr(0, dots));
    const long hi = parse_long(upper);
    if (step < 1) throw Error(ErrorCode::kInvalidArgument, "k range step must be positive");
    if (lo > hi)
      throw Error(ErrorCode::kInvalidArgument, "k range bounds out of order: " + std::string(item));
    for (long k = lo; k <= hi; k += step) ks.push_back(k);
  }
  for (long k : ks)
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k values must be positive");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<std::string> parse_identity_selector(std::string_view text) {
  if (text == "all") return {};
  std::vector<std::string> ids;
  for (auto item : split(text, ',')) {
    const IdentityRecord& r = lookup(item);
    if (std::find(ids.begin(), ids.end(), r.id) == ids.end()) ids.push_back(r.id);
  }
  return ids;
}

void SweepConfig::validate() const {
  for (const auto& id : identities) lookup(id);
  if (ks.empty()) throw Error(ErrorCode::kInvalidArgument, "no k values selected");
  for (long k : ks)
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k values must be positive");
  if (backend.kind == BackendKind::kFloat && backend.precision_bits < 64)
    throw Error(ErrorCode::kInvalidArgument, "float backend precision must be at least 64 bits");
  if (backend.tolerance && backend.tolerance->sign() < 0)
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be nonnegative");
}

ReportSummary summarize(const std::vector<CheckResult>& rows) {
  ReportSummary s;
  for (const auto& r : rows) {
    const bool probe = r.tag == SweepTag::kImprimitiveProbe;
    switch (r.verdict) {
      case Verdict::kPass: ++(probe ? s.probe_pass : s.pass); break;
      case Verdict::kFail: ++(probe ? s.probe_fail : s.fail); break;
      case Verdict::kNotApplicable: ++(probe ? s.probe_not_applicable : s.not_applicable); break;
    }
    if (!probe && r.residual && (!s.max_residual || *s.max_residual < *r.residual))
      s.max_residual = *r.residual;
  }
  return s;
}

Report run_sweep(const SweepConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  report.timestamp = utc_timestamp();

  std::vector<const IdentityRecord*> records;
  for (const auto& r : catalog())
    if (config.identities.empty() ||
        std::find(config.identities.begin(), config.identities.end(), r.id) !=
            config.identities.end())
      records.push_back(&r);

  std::vector<Cell> cells;
  for (const auto* r : records) {
    if (r->k_independent) {
      cells.push_back({r, 0});
      continue;
    }
    for (long k : config.ks) cells.push_back({r, k});
  }

  std::vector<std::vector<CheckResult>> results(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cells[i], config);
  };
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<size_t>(jobs, std::max<size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& rows : results)
    for (auto& row : rows) report.rows.push_back(std::move(row));
  report.summary = summarize(report.rows);
  return report;
}

int exit_code(const Report& report) { return report.summary.fail > 0 ? 1 : 0; }

void emit_report(const Report& report, std::ostream& out) {
  out << header_json(report).dump() << '\n';
  for (const auto& row : report.rows) out << row_json(row).dump() << '\n';
  out << summary_json(report.summary, report.rows.size()).dump() << '\n';
  if (!out) throw Error(ErrorCode::kIo, "failed writing report");
}

void emit_report(const Report& report, const std::string& path) {
  if (path.empty() || path == "-") {
    emit_report(report, std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kIo, "cannot open report file: " + path);
  emit_report(report, file);
}

}  // namespace trigsum
