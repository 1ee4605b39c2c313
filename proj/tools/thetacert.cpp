//
// Copyright 2026 The thetacert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// thetacert command-line front end.
//
// Exit codes: 0 success / certified, 1 verification failed or inconclusive
// (or an evaluation error), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetacert/modular.hpp"
#include "thetacert/report_json.hpp"
#include "thetacert/scanner.hpp"
#include "thetacert/suites.hpp"
#include "thetacert/theta.hpp"

namespace {

using namespace thetacert;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_precision() {
  if (const char* env = std::getenv("THETACERT_PRECISION")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 53 && v <= 1u << 20) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring THETACERT_PRECISION='" << env << "'\n";
  }
  return 128;
}

EvalConfig make_config(unsigned precision) {
  EvalConfig cfg;
  cfg.precision_bits = precision;
  // Keep the relative tail tolerance a fixed margin below the working precision.
  cfg.tail_tolerance_log2 = 28 - static_cast<long>(precision);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Enclosure parse_positive(const std::string& text, const char* what, unsigned prec) {
  Enclosure v(prec);
  try {
    v = Enclosure::from_decimal(text, prec);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a decimal number, got '" + text + "'");
  }
  if (!v.is_positive()) throw UsageError(std::string(what) + " must be positive, got '" + text + "'");
  return v;
}

void write_json(const std::string& path, const ReportDocument& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << nlohmann::json(doc).dump(2) << "\n";
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string function;
  std::string y;
  int order = 0;
  unsigned precision = 0;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& args) {
  const EvalConfig cfg = make_config(args.precision);
  const Enclosure y = parse_positive(args.y, "--y", cfg.precision_bits);
  ReportDocument doc;
  doc.command = "eval " + args.function;
  doc.config = ConfigEcho::from(cfg);
  doc.started_at = utc_timestamp();

  Enclosure value(cfg.precision_bits);
  std::string label;
  if (args.function == "theta2" || args.function == "theta4") {
    const DerivativeOrder nu(args.order);
    value = args.function == "theta2" ? theta2_series(y, nu, cfg) : theta4(y, nu, cfg);
    label = args.function + (args.order > 0 ? "^(" + std::to_string(args.order) + ")" : "");
  } else {
    const int order = static_cast<int>(args.function.size()) - 1;  // f, f', f''
    if (args.order != 0) throw UsageError("--order applies to theta2 / theta4 only");
    value = f_eval(y, order, cfg);
    label = args.function;
  }
  label += "(" + args.y + ")";
  doc.finished_at = utc_timestamp();

  if (args.format == "json") {
    doc.values.push_back(ValueRecord{label, DecimalEnclosure::from(value, doc.decimal_digits), {}, {}});
    doc.summarize();
    std::cout << nlohmann::json(doc).dump(2) << "\n";
  } else {
    std::cout << label << " in [" << value.lo_string(40) << ", " << value.hi_string(40) << "]\n";
  }
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::vector<std::string> interval;
  std::string target;
  unsigned precision = 0;
  std::string json_path;
};

int cmd_verify(const VerifyArgs& args) {
  const EvalConfig cfg = make_config(args.precision);
  SuiteOptions options;
  if (!args.interval.empty()) {
    if (args.interval.size() != 2) throw UsageError("--interval takes two values");
    parse_positive(args.interval[0], "interval start", cfg.precision_bits);
    parse_positive(args.interval[1], "interval end", cfg.precision_bits);
    options.interval = std::make_pair(args.interval[0], args.interval[1]);
  }
  if (!args.target.empty()) options.target = args.target == "positive" ? Sign::positive : Sign::negative;

  std::vector<std::string_view> suites;
  if (args.suite == "all") {
    suites.assign(kSuiteNames.begin(), kSuiteNames.end());
  } else {
    suites.push_back(args.suite);
  }

  ReportDocument doc;
  doc.command = "verify " + args.suite;
  doc.config = ConfigEcho::from(cfg);
  doc.started_at = utc_timestamp();
  Status overall = Status::certified;
  std::size_t suites_certified = 0;
  for (std::string_view name : suites) {
    SuiteResult result;
    try {
      result = run_suite(name, cfg, options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    const Status s = result.status();
    overall = worst(overall, s);
    if (s == Status::certified) ++suites_certified;
    std::cout << std::left << std::setw(12) << name << " " << std::setw(13) << to_string(s)
              << std::fixed << std::setprecision(2) << result.seconds << " s";
    std::size_t boxes = 0;
    for (const auto& r : result.reports) boxes += r.boxes_examined;
    std::cout << "  (" << boxes << " boxes)\n";
    for (const auto& r : result.reports) {
      if (!r.certified()) std::cout << "    " << r.first_problem() << "\n";
      doc.reports.push_back(ReportRecord::from(r, doc.decimal_digits));
    }
    for (const auto& v : result.values) {
      std::cout << "    " << v.name << " = " << v.value.to_enclosure(cfg.precision_bits).to_string(15);
      if (v.printed) {
        std::cout << "  printed " << *v.printed << (*v.matches_printed ? " (matches)" : " (differs)");
      }
      std::cout << "\n";
      doc.values.push_back(v);
    }
  }
  doc.finished_at = utc_timestamp();
  doc.summarize();
  std::cout << "summary: " << suites_certified << "/" << suites.size() << " suites certified; reports: "
            << doc.summary.certified << " certified, " << doc.summary.inconclusive << " inconclusive, "
            << doc.summary.failed << " failed\n";
  if (!args.json_path.empty()) write_json(args.json_path, doc);
  return overall == Status::certified ? kExitOk : kExitFailure;
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
  std::string a;
  std::vector<std::string> interval;
  int resolution = 64;
  unsigned precision = 0;
  std::string csv_path;
};

void write_csv(std::ostream& out, const ScanResult& r) {
  out << "y,f_a2_lo,f_a2_hi\n";
  for (const auto& row : r.rows) {
    out << std::setprecision(17) << row.y << ",";
    if (row.value) {
      out << row.value->lo_string(20) << "," << row.value->hi_string(20) << "\n";
    } else {
      out << "nan,nan\n";
    }
  }
}

int cmd_scan(const ScanArgs& args) {
  const EvalConfig cfg = make_config(args.precision);
  ExponentQuery q;
  try {
    q.a = Rational::parse(args.a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!args.interval.empty()) {
    if (args.interval.size() != 2) throw UsageError("--interval takes two values");
    try {
      q.lo = std::stod(args.interval[0]);
      q.hi = std::stod(args.interval[1]);
    } catch (const std::exception&) {
      throw UsageError("--interval values must be decimal numbers");
    }
  }
  q.resolution = args.resolution;
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const ScanResult r = scan_exponent(q, cfg);
  if (args.csv_path.empty()) {
    write_csv(std::cout, r);
  } else {
    std::ofstream out(args.csv_path);
    if (!out) throw std::runtime_error("cannot write " + args.csv_path);
    write_csv(out, r);
    std::cout << "wrote " << r.rows.size() << " rows to " << args.csv_path << "\n";
  }
  if (r.witness) {
    std::cout << "witness: y in [" << r.witness->y.lo_string(20) << ", " << r.witness->y.hi_string(20)
              << "], f_a'' in [" << r.witness->value.lo_string(20) << ", "
              << r.witness->value.hi_string(20) << "]\n";
  } else {
    std::cout << "no witness (this does not prove convexity)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified evaluation and verification for theta-function log-derivatives"};
  app.require_subcommand(1);
  const unsigned precision = default_precision();

  EvalArgs eval_args;
  eval_args.precision = precision;
  auto* eval = app.add_subcommand("eval", "Print an enclosure of theta2, theta4, f, f' or f''");
  eval->add_option("function", eval_args.function, "theta2 | theta4 | f | f' | f''")
      ->required()
      ->check(CLI::IsMember({"theta2", "theta4", "f", "f'", "f''"}));
  eval->add_option("--y", eval_args.y, "Argument (decimal, > 0)")->required();
  eval->add_option("--order", eval_args.order, "Derivative order for theta2/theta4")->check(CLI::Range(0, 3));
  eval->add_option("--precision", eval_args.precision, "Working precision in bits")->check(CLI::Range(53u, 1u << 20));
  eval->add_option("--format", eval_args.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  verify_args.precision = precision;
  std::vector<std::string> suite_choices(kSuiteNames.begin(), kSuiteNames.end());
  suite_choices.emplace_back("all");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_args.suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--interval", verify_args.interval, "Interval a b")->expected(2);
  verify->add_option("--target-sign", verify_args.target, "positive | negative")
      ->check(CLI::IsMember({"positive", "negative"}));
  verify->add_option("--precision", verify_args.precision, "Working precision in bits")->check(CLI::Range(53u, 1u << 20));
  verify->add_option("--json", verify_args.json_path, "Write a JSON report to this path");

  ScanArgs scan_args;
  scan_args.precision = precision;
  auto* scan = app.add_subcommand("scan", "Search for non-convexity of y^a theta4'/theta4");
  scan->add_option("--a", scan_args.a, "Exponent (decimal or p/q)")->required();
  scan->add_option("--interval", scan_args.interval, "Interval lo hi")->expected(2);
  scan->add_option("--resolution", scan_args.resolution, "Grid cells (>= 8)");
  scan->add_option("--precision", scan_args.precision, "Working precision in bits")->check(CLI::Range(53u, 1u << 20));
  scan->add_option("--csv", scan_args.csv_path, "Write the grid to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args);
    if (*verify) return cmd_verify(verify_args);
    return cmd_scan(scan_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
