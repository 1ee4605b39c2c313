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

#include "thetacert/report_json.hpp"

#include <chrono>
#include <ctime>

namespace thetacert {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->get<T>();
  }
}

std::optional<DecimalEnclosure> decimal(const std::optional<Enclosure>& e, int digits) {
  if (!e) return std::nullopt;
  return DecimalEnclosure::from(*e, digits);
}

}  // namespace

DecimalEnclosure DecimalEnclosure::from(const Enclosure& e, int digits) {
  return {e.lo_string(digits), e.hi_string(digits)};
}

Enclosure DecimalEnclosure::to_enclosure(unsigned precision_bits) const {
  return Enclosure::from_decimal_bounds(lo, hi, precision_bits);
}

WitnessRecord WitnessRecord::from(const Witness& w, int digits) {
  return {DecimalEnclosure::from(w.y, digits), DecimalEnclosure::from(w.value, digits), w.context};
}

ReportRecord ReportRecord::from(const CertificationReport& r, int digits) {
  ReportRecord out;
  out.id = r.id;
  out.quantity = r.quantity;
  out.interval = DecimalEnclosure::from(r.interval, digits);
  out.status = std::string(to_string(r.status));
  out.boxes_examined = r.boxes_examined;
  out.precision_bits = r.precision_bits;
  out.min_margin = decimal(r.min_margin, digits);
  if (r.witness) out.witness = WitnessRecord::from(*r.witness, digits);
  out.deepest_box = decimal(r.deepest_box, digits);
  for (const Check& c : r.checks) {
    out.checks.push_back({c.name, std::string(to_string(c.status)), c.detail, decimal(c.value, digits)});
  }
  for (const auto& child : r.children) out.children.push_back(from(child, digits));
  out.depends_on = r.depends_on;
  return out;
}

ConfigEcho ConfigEcho::from(const EvalConfig& cfg) {
  return {cfg.precision_bits, cfg.tail_tolerance_log2, cfg.max_terms};
}

void ReportDocument::summarize() {
  summary = Summary{};
  for (const auto& r : reports) {
    if (r.status == "certified") {
      ++summary.certified;
    } else if (r.status == "failed") {
      ++summary.failed;
    } else {
      ++summary.inconclusive;
    }
  }
  summary.status = summary.failed > 0 ? "failed" : summary.inconclusive > 0 ? "inconclusive" : "certified";
}

void to_json(json& j, const DecimalEnclosure& v) { j = json{{"lo", v.lo}, {"hi", v.hi}}; }
void from_json(const json& j, DecimalEnclosure& v) {
  j.at("lo").get_to(v.lo);
  j.at("hi").get_to(v.hi);
}

void to_json(json& j, const CheckRecord& v) {
  j = json{{"name", v.name}, {"status", v.status}, {"detail", v.detail}};
  put_optional(j, "value", v.value);
}
void from_json(const json& j, CheckRecord& v) {
  j.at("name").get_to(v.name);
  j.at("status").get_to(v.status);
  j.at("detail").get_to(v.detail);
  get_optional(j, "value", v.value);
}

void to_json(json& j, const WitnessRecord& v) {
  j = json{{"y", v.y}, {"value", v.value}, {"context", v.context}};
}
void from_json(const json& j, WitnessRecord& v) {
  j.at("y").get_to(v.y);
  j.at("value").get_to(v.value);
  j.at("context").get_to(v.context);
}

void to_json(json& j, const ReportRecord& v) {
  j = json{{"id", v.id},
           {"quantity", v.quantity},
           {"interval", v.interval},
           {"status", v.status},
           {"boxes_examined", v.boxes_examined},
           {"precision_bits", v.precision_bits},
           {"checks", v.checks},
           {"children", v.children},
           {"depends_on", v.depends_on}};
  put_optional(j, "min_margin", v.min_margin);
  put_optional(j, "witness", v.witness);
  put_optional(j, "deepest_box", v.deepest_box);
}
void from_json(const json& j, ReportRecord& v) {
  j.at("id").get_to(v.id);
  j.at("quantity").get_to(v.quantity);
  j.at("interval").get_to(v.interval);
  j.at("status").get_to(v.status);
  j.at("boxes_examined").get_to(v.boxes_examined);
  j.at("precision_bits").get_to(v.precision_bits);
  j.at("checks").get_to(v.checks);
  j.at("children").get_to(v.children);
  j.at("depends_on").get_to(v.depends_on);
  get_optional(j, "min_margin", v.min_margin);
  get_optional(j, "witness", v.witness);
  get_optional(j, "deepest_box", v.deepest_box);
}

void to_json(json& j, const ValueRecord& v) {
  j = json{{"name", v.name}, {"value", v.value}};
  put_optional(j, "printed", v.printed);
  put_optional(j, "matches_printed", v.matches_printed);
}
void from_json(const json& j, ValueRecord& v) {
  j.at("name").get_to(v.name);
  j.at("value").get_to(v.value);
  get_optional(j, "printed", v.printed);
  get_optional(j, "matches_printed", v.matches_printed);
}

void to_json(json& j, const ConfigEcho& v) {
  j = json{{"precision_bits", v.precision_bits},
           {"tail_tolerance_log2", v.tail_tolerance_log2},
           {"max_terms", v.max_terms}};
}
void from_json(const json& j, ConfigEcho& v) {
  j.at("precision_bits").get_to(v.precision_bits);
  j.at("tail_tolerance_log2").get_to(v.tail_tolerance_log2);
  j.at("max_terms").get_to(v.max_terms);
}

void to_json(json& j, const Summary& v) {
  j = json{{"certified", v.certified}, {"inconclusive", v.inconclusive}, {"failed", v.failed},
           {"status", v.status}};
}
void from_json(const json& j, Summary& v) {
  j.at("certified").get_to(v.certified);
  j.at("inconclusive").get_to(v.inconclusive);
  j.at("failed").get_to(v.failed);
  j.at("status").get_to(v.status);
}

void to_json(json& j, const ReportDocument& v) {
  j = json{{"schema_version", v.schema_version},
           {"command", v.command},
           {"config", v.config},
           {"decimal_digits", v.decimal_digits},
           {"started_at", v.started_at},
           {"finished_at", v.finished_at},
           {"reports", v.reports},
           {"values", v.values},
           {"witnesses", v.witnesses},
           {"summary", v.summary}};
}
void from_json(const json& j, ReportDocument& v) {
  j.at("schema_version").get_to(v.schema_version);
  j.at("command").get_to(v.command);
  j.at("config").get_to(v.config);
  j.at("decimal_digits").get_to(v.decimal_digits);
  j.at("started_at").get_to(v.started_at);
  j.at("finished_at").get_to(v.finished_at);
  j.at("reports").get_to(v.reports);
  j.at("values").get_to(v.values);
  j.at("witnesses").get_to(v.witnesses);
  j.at("summary").get_to(v.summary);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace thetacert
