/*
 * Copyright 2026 The sumnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "sumnet/sumnet.h"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

struct StringDeleter {
  void operator()(char* s) const { sumnet_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct NetworkDeleter {
  void operator()(sumnet_network* n) const { sumnet_network_free(n); }
};
using NetworkHandle = std::unique_ptr<sumnet_network, NetworkDeleter>;

struct FieldDeleter {
  void operator()(sumnet_field* f) const { sumnet_field_free(f); }
};
using FieldHandle = std::unique_ptr<sumnet_field, FieldDeleter>;

struct VerdictDeleter {
  void operator()(sumnet_verdict* v) const { sumnet_verdict_free(v); }
};
using VerdictHandle = std::unique_ptr<sumnet_verdict, VerdictDeleter>;

int report_error() {
  std::cerr << "error: " << sumnet_last_error() << "\n";
  return kExitError;
}

NetworkHandle load_network(const std::string& expr, const std::string& file) {
  sumnet_network* net = nullptr;
  const sumnet_status status = file.empty() ? sumnet_network_from_expr(expr.c_str(), &net)
                                            : sumnet_network_from_file(file.c_str(), &net);
  if (status != SUMNET_OK) return nullptr;
  return NetworkHandle(net);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return bool(out);
}

struct SearchFlags {
  std::string field = "2^1";
  std::string mode = "full";
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  std::uint32_t jobs = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--field", field, "Field designation p^k")->capture_default_str();
    cmd->add_option("--mode", mode, "Search mode: full or normalized")
        ->check(CLI::IsMember({"full", "normalized"}))
        ->capture_default_str();
    cmd->add_option("--budget", budget, "Maximum coefficient assignments to enumerate")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for randomized verification trials")
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "Search worker threads (result is identical for any count)")
        ->capture_default_str();
  }

  sumnet_search_mode mode_value() const {
    return mode == "normalized" ? SUMNET_MODE_NORMALIZED : SUMNET_MODE_FULL;
  }
};

int run_gen(const std::string& expr, const std::string& out_path) {
  NetworkHandle net = load_network(expr, "");
  if (!net) return report_error();
  CString json;
  {
    char* raw = nullptr;
    if (sumnet_network_to_json(net.get(), &raw) != SUMNET_OK) return report_error();
    json.reset(raw);
  }
  const std::string counts = std::string(sumnet_network_name(net.get())) + ": " +
                             std::to_string(sumnet_network_node_count(net.get())) + " nodes, " +
                             std::to_string(sumnet_network_edge_count(net.get())) + " edges";
  if (out_path.empty()) {
    std::cerr << counts << "\n";
    std::cout << json.get();
  } else {
    if (!write_file(out_path, json.get())) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitError;
    }
    std::cout << counts << "\n" << "wrote " << out_path << "\n";
  }
  return 0;
}

int run_dot(const std::string& expr, const std::string& file, const std::string& out_path) {
  NetworkHandle net = load_network(expr, file);
  if (!net) return report_error();
  char* raw = nullptr;
  if (sumnet_network_to_dot(net.get(), &raw) != SUMNET_OK) return report_error();
  CString dot(raw);
  if (out_path.empty()) {
    std::cout << dot.get();
  } else if (!write_file(out_path, dot.get())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitError;
  } else {
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int run_charset(const std::string& expr) {
  char* raw = nullptr;
  if (sumnet_charset_format(expr.c_str(), &raw) != SUMNET_OK) return report_error();
  CString text(raw);
  std::cout << text.get() << "\n";
  return 0;
}

int run_check(const std::string& expr, const std::string& file, const SearchFlags& flags,
              const std::string& out_path, bool as_json) {
  NetworkHandle net = load_network(expr, file);
  if (!net) return report_error();

  FieldHandle field;
  {
    sumnet_field* raw = nullptr;
    if (sumnet_field_parse(flags.field.c_str(), &raw) != SUMNET_OK) return report_error();
    field.reset(raw);
  }

  sumnet_verdict* raw_verdict = nullptr;
  const sumnet_status status =
      sumnet_feasibility_check(net.get(), field.get(), flags.mode_value(), flags.budget,
                               flags.jobs, flags.seed, &raw_verdict);
  if (status != SUMNET_OK) return report_error();
  VerdictHandle verdict(raw_verdict);

  const bool feasible = sumnet_verdict_feasible(verdict.get()) != 0;

  if (as_json) {
    char* raw = nullptr;
    if (sumnet_verdict_to_json(verdict.get(), &raw) != SUMNET_OK) return report_error();
    CString json(raw);
    std::cout << json.get();
  } else {
    char* raw_space = nullptr;
    if (sumnet_verdict_space_size(verdict.get(), &raw_space) != SUMNET_OK) return report_error();
    CString space(raw_space);
    std::cout << "network: " << sumnet_network_name(net.get()) << " ("
              << sumnet_network_node_count(net.get()) << " nodes, "
              << sumnet_network_edge_count(net.get()) << " edges)\n"
              << "field: " << flags.field << "\n"
              << "mode: " << flags.mode << "\n"
              << "search space: " << space.get() << "\n"
              << "verdict: " << (feasible ? "feasible" : "infeasible") << "\n"
              << "assignments examined: " << sumnet_verdict_assignments_examined(verdict.get())
              << "\n";
  }

  if (feasible && !out_path.empty()) {
    char* raw = nullptr;
    if (sumnet_verdict_witness_json(verdict.get(), &raw) != SUMNET_OK) return report_error();
    CString witness(raw);
    if (!write_file(out_path, witness.get())) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitError;
    }
    if (!as_json) std::cout << "witness: " << out_path << "\n";
  }
  return feasible ? kExitFeasible : kExitInfeasible;
}

int run_xval(const std::string& expr, const std::string& fields, const SearchFlags& flags) {
  char* raw = nullptr;
  int all_agree = 0;
  const sumnet_status status =
      sumnet_cross_validate(expr.c_str(), fields.c_str(), flags.mode_value(), flags.budget,
                            flags.jobs, flags.seed, &raw, &all_agree);
  if (status != SUMNET_OK) return report_error();
  CString report(raw);
  std::cout << report.get();
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-network linear coding toolkit"};
  app.set_version_flag("--version", sumnet_version());
  app.require_subcommand(1);

  std::string expr, network_file, out_path, fields_csv;
  bool as_json = false;
  SearchFlags flags;

  CLI::App* gen = app.add_subcommand("gen", "Build a network from an expression and write it");
  gen->add_option("expr", expr, "Construction expression, e.g. S(3), K(2,3), X(S(4),K(2,3))")
      ->required();
  gen->add_option("--out", out_path, "Output network file (stdout when omitted)");

  CLI::App* check = app.add_subcommand("check", "Decide sum-feasibility by exhaustive search");
  check->add_option("expr", expr, "Construction expression");
  check->add_option("--network", network_file, "Network file instead of an expression")
      ->excludes("expr");
  flags.attach(check);
  check->add_option("--out", out_path, "Write the witness code file here when feasible");
  check->add_flag("--json", as_json, "Print the verdict document instead of text");

  CLI::App* charset = app.add_subcommand("charset", "Print the analytic characteristic set");
  charset->add_option("expr", expr, "Construction expression")->required();

  CLI::App* xval = app.add_subcommand("xval", "Cross-validate the oracle against the analysis");
  xval->add_option("expr", expr, "Construction expression")->required();
  xval->add_option("--fields", fields_csv, "Comma-separated field designations")->required();
  flags.attach(xval);

  CLI::App* dot = app.add_subcommand("dot", "Export a network as a Graphviz document");
  dot->add_option("expr", expr, "Construction expression");
  dot->add_option("--network", network_file, "Network file instead of an expression")
      ->excludes("expr");
  dot->add_option("--out", out_path, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;  // help/version exit cleanly
  }

  if (gen->parsed()) return run_gen(expr, out_path);
  if (check->parsed()) {
    if (expr.empty() == network_file.empty()) {
      std::cerr << "error: give exactly one of an expression or --network\n";
      return kExitError;
    }
    return run_check(expr, network_file, flags, out_path, as_json);
  }
  if (charset->parsed()) return run_charset(expr);
  if (xval->parsed()) return run_xval(expr, fields_csv, flags);
  if (dot->parsed()) {
    if (expr.empty() == network_file.empty()) {
      std::cerr << "error: give exactly one of an expression or --network\n";
      return kExitError;
    }
    return run_dot(expr, network_file, out_path);
  }
  return kExitError;
}
