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

#ifndef THETACERT_REPORT_JSON_HPP
#define THETACERT_REPORT_JSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "thetacert/report.hpp"

namespace thetacert {

// Serialized form of reports. Enclosures become pairs of decimal strings,
// lo rounded down and hi rounded up, so the printed interval still contains
// the value. Records keep the strings verbatim: parsing and re-serializing a
// document reproduces them exactly. See docs/report-schema.md.

inline constexpr const char* kReportSchemaVersion = "1.0";

struct DecimalEnclosure {
  std::string lo;
  std::string hi;

  static DecimalEnclosure from(const Enclosure& e, int digits);
  /// Outward conversion back to binary.
  [[nodiscard]] Enclosure to_enclosure(unsigned precision_bits) const;
  friend bool operator==(const DecimalEnclosure&, const DecimalEnclosure&) = default;
};

struct CheckRecord {
  std::string name;
  std::string status;
  std::string detail;
  std::optional<DecimalEnclosure> value;
};

struct WitnessRecord {
  DecimalEnclosure y;
  DecimalEnclosure value;
  std::string context;

  static WitnessRecord from(const Witness& w, int digits);
};

struct ReportRecord {
  std::string id;
  std::string quantity;
  DecimalEnclosure interval;
  std::string status;
  std::size_t boxes_examined = 0;
  unsigned precision_bits = 0;
  std::optional<DecimalEnclosure> min_margin;
  std::optional<WitnessRecord> witness;
  std::optional<DecimalEnclosure> deepest_box;
  std::vector<CheckRecord> checks;
  std::vector<ReportRecord> children;
  std::vector<std::string> depends_on;

  static ReportRecord from(const CertificationReport& r, int digits);
};

/// A named numeric result, optionally compared with a printed decimal.
struct ValueRecord {
  std::string name;
  DecimalEnclosure value;
  std::optional<std::string> printed;
  std::optional<bool> matches_printed;
};

struct ConfigEcho {
  unsigned precision_bits = 128;
  long tail_tolerance_log2 = -100;
  std::size_t max_terms = 0;

  static ConfigEcho from(const EvalConfig& cfg);
};

struct Summary {
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  std::size_t failed = 0;
  std::string status = "certified";
};

struct ReportDocument {
  std::string schema_version = kReportSchemaVersion;
  std::string command;
  ConfigEcho config;
  int decimal_digits = 40;
  std::string started_at;
  std::string finished_at;
  std::vector<ReportRecord> reports;
  std::vector<ValueRecord> values;
  std::vector<WitnessRecord> witnesses;
  Summary summary;

  /// Recomputes `summary` from the top-level reports.
  void summarize();
};

void to_json(nlohmann::json& j, const DecimalEnclosure& v);
void from_json(const nlohmann::json& j, DecimalEnclosure& v);
void to_json(nlohmann::json& j, const CheckRecord& v);
void from_json(const nlohmann::json& j, CheckRecord& v);
void to_json(nlohmann::json& j, const WitnessRecord& v);
void from_json(const nlohmann::json& j, WitnessRecord& v);
void to_json(nlohmann::json& j, const ReportRecord& v);
void from_json(const nlohmann::json& j, ReportRecord& v);
void to_json(nlohmann::json& j, const ValueRecord& v);
void from_json(const nlohmann::json& j, ValueRecord& v);
void to_json(nlohmann::json& j, const ConfigEcho& v);
void from_json(const nlohmann::json& j, ConfigEcho& v);
void to_json(nlohmann::json& j, const Summary& v);
void from_json(const nlohmann::json& j, Summary& v);
void to_json(nlohmann::json& j, const ReportDocument& v);
void from_json(const nlohmann::json& j, ReportDocument& v);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace thetacert

#endif  // THETACERT_REPORT_JSON_HPP
