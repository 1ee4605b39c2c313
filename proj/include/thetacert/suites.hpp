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

#ifndef THETACERT_SUITES_HPP
#define THETACERT_SUITES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetacert/certify.hpp"
#include "thetacert/report.hpp"
#include "thetacert/report_json.hpp"

namespace thetacert {

/// Suite names in declaration order; "all" runs every one of them.
inline constexpr std::array<std::string_view, 8> kSuiteNames = {
    "lemma1", "modular", "g-chain", "large-y", "small-y", "greek", "convexity", "decreasing"};

struct SuiteOptions {
  /// Decimal endpoints overriding the suite's default interval (only used by
  /// modular, convexity and decreasing).
  std::optional<std::pair<std::string, std::string>> interval;
  /// Overrides the target sign of the convexity / decreasing certification.
  std::optional<Sign> target;
};

struct SuiteResult {
  std::string name;
  std::vector<CertificationReport> reports;
  std::vector<ValueRecord> values;
  double seconds = 0.0;

  [[nodiscard]] Status status() const;
};

/// The six constants with the printed decimals they are compared against.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kPrintedGreek = {{
    {"alpha", "1984.32"},
    {"beta", "631.718"},
    {"gamma", "1985.41"},
    {"delta", "631.798"},
    {"epsilon", "1.01719"},
    {"zeta", "0.0799451"},
}};

/// Throws std::invalid_argument for an unknown suite name. "all" is not
/// accepted here; run each name of kSuiteNames instead.
SuiteResult run_suite(std::string_view name, const EvalConfig& cfg, const SuiteOptions& options = {});

bool is_suite_name(std::string_view name);

}  // namespace thetacert

#endif  // THETACERT_SUITES_HPP
