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
#include "trigsum/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "trigsum/characters.hpp"
#include "trigsum/error.hpp"
#include "trigsum/sweep.hpp"

namespace trigsum {
namespace {

struct VerifyOptions {
  std::string identity = "all";
  std::string k = "3..101";
  std::string backend = "float";
  long precision = 256;
  std::string tolerance;
  unsigned jobs = 0;
  std::string report;
  bool probes = false;
  std::string config_path;
};

std::string json_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) out += (out.empty() ? "" : ",") + json_text(item);
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported config value: " + v.dump());
}

// Values from the file fill every option the command line left unset.
void apply_config_file(VerifyOptions& o, const CLI::App& verify) {
  std::ifstream in(o.config_path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config file: " + o.config_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed config file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "config file must hold an object");
  auto unset = [&verify](const char* flag) { return verify.count(flag) == 0; };
  for (const auto& [key, value] : j.items()) {
    if (key == "identity" || key == "identities") {
      if (unset("--identity")) o.identity = json_text(value);
    } else if (key == "k") {
      if (unset("--k")) o.k = json_text(value);
    } else if (key == "backend") {
      if (unset("--backend")) o.backend = value.get<std::string>();
    } else if (key == "precision") {
      if (unset("--precision")) o.precision = value.get<long>();
    } else if (key == "tolerance") {
      if (unset("--tolerance")) o.tolerance = json_text(value);
    } else if (key == "jobs") {
      if (unset("--jobs")) o.jobs = value.get<unsigned>();
    } else if (key == "report") {
      if (unset("--report")) o.report = value.get<std::string>();
    } else if (key == "probe_imprimitive") {
      if (unset("--probe-imprimitive")) o.probes = value.get<bool>();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown config key: " + key);
    }
  }
}

SweepConfig to_sweep_config(const VerifyOptions& o) {
  SweepConfig c;
  c.identities = parse_identity_selector(o.identity);
  c.k_selector = o.k;
  c.ks = parse_k_selector(o.k);
  if (o.backend == "exact") {
    c.backend.kind = BackendKind::kExact;
  } else if (o.backend == "float") {
    c.backend.kind = BackendKind::kFloat;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "backend must be float or exact");
  }
  c.backend.precision_bits = o.precision;
  if (c.backend.kind == BackendKind::kFloat && o.precision < 64)
    throw Error(ErrorCode::kInvalidArgument, "float backend precision must be at least 64 bits");
  if (!o.tolerance.empty()) {
    c.tolerance_text = o.tolerance;
    try {
      c.backend.tolerance = BigFloat::from_string(o.tolerance, o.precision);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "invalid tolerance: " + o.tolerance);
    }
  }
  c.jobs = o.jobs;
  c.report_path = o.report;
  c.include_imprimitive_probes = o.probes;
  c.validate();
  return c;
}

void print_catalog(std::ostream& out) {
  for (const auto& r : catalog()) {
    out << r.id << "\n  " << r.statement << "\n  hypotheses: " << r.hypotheses
        << "\n  anchor: " << r.anchor << "\n";
  }
}

void print_characters(long k, std::ostream& out) {
  const auto chars = enumerate_characters(k);
  out << "characters mod " << k << " (" << chars.size() << ")\n";
  out << std::left << std::setw(6) << "index" << std::setw(7) << "order" << std::setw(10)
      << "conductor" << std::setw(8) << "parity" << std::setw(6) << "real" << std::setw(11)
      << "principal" << std::setw(10) << "primitive" << "values (exponent of w_order, - for 0)\n";
  for (size_t i = 0; i < chars.size(); ++i) {
    const Character& chi = chars[i];
    std::ostringstream values;
    for (long n = 0; n < k; ++n) {
      const long e = chi.exponent(n);
      values << (n ? " " : "") << (e < 0 ? std::string("-") : std::to_string(e));
    }
    out << std::setw(6) << i << std::setw(7) << chi.order() << std::setw(10) << chi.conductor()
        << std::setw(8) << (chi.is_odd() ? "odd" : "even") << std::setw(6)
        << (chi.is_real() ? "yes" : "no") << std::setw(11) << (chi.is_principal() ? "yes" : "no")
        << std::setw(10) << (chi.is_primitive() ? "yes" : "no") << values.str() << "\n";
  }
}

void print_class_number(long k, std::ostream& out) {
  const ClassNumberResult r = class_number(k);
  out << "k = " << k << "\n";
  out << "h(-" << k << ") = " << r.h << "\n";
  out << "  -(1/k) sum_{j<k} j chi(j)                 = " << r.via_weighted_sum.get_str() << "\n";
  out << "  (2 - chi(2))^{-1} sum_{j<=(k-1)/2} chi(j) = " << r.via_half_sum.get_str() << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify trigonometric sum identities over cyclotomic fields and high-precision floats",
               "trigsum"};
  app.set_version_flag("--version", std::string(TRIGSUM_VERSION));
  app.require_subcommand(1);

  VerifyOptions v;
  CLI::App* verify = app.add_subcommand("verify", "check catalog identities over a sweep");
  verify->add_option("--identity", v.identity, "id[,id...] or all");
  verify->add_option("--k", v.k, "n[,n...], a..b or a..b:step");
  verify->add_option("--backend", v.backend, "float or exact")
      ->check(CLI::IsMember({"float", "exact"}));
  verify->add_option("--precision", v.precision, "float precision in bits");
  verify->add_option("--tolerance", v.tolerance, "acceptance threshold (default 2^-(precision/2))");
  verify->add_option("--jobs", v.jobs, "worker threads (default: hardware concurrency)");
  verify->add_option("--report", v.report, "JSON-lines report path (default stdout)");
  verify->add_flag("--probe-imprimitive", v.probes, "also probe imprimitive characters");
  verify->add_option("--config", v.config_path, "JSON config file; flags take precedence");

  app.add_subcommand("list", "print the identity catalog");
  long char_k = 0;
  CLI::App* chars = app.add_subcommand("characters", "classify the characters mod k");
  chars->add_option("--k", char_k, "modulus")->required()->check(CLI::PositiveNumber);
  long class_k = 0;
  CLI::App* classnum = app.add_subcommand("classnum", "h(-k) by both character-sum formulas");
  classnum->add_option("--k", class_k, "modulus")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(e.what()) + "\n"
                                                            : app.help("", CLI::AppFormatMode::All));
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (app.got_subcommand("list")) {
      print_catalog(out);
      return 0;
    }
    if (app.got_subcommand("characters")) {
      print_characters(char_k, out);
      return 0;
    }
    if (app.got_subcommand("classnum")) {
      print_class_number(class_k, out);
      return 0;
    }
    if (!v.config_path.empty()) apply_config_file(v, *verify);
    const SweepConfig config = to_sweep_config(v);
    const Report report = run_sweep(config);
    if (config.report_path.empty() || config.report_path == "-") {
      emit_report(report, out);
    } else {
      emit_report(report, config.report_path);
    }
    return exit_code(report);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config value: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace trigsum
