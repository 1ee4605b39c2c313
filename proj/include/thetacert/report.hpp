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

#ifndef THETACERT_REPORT_HPP
#define THETACERT_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetacert/enclosure.hpp"

namespace thetacert {

/// Outcome of a verification. Ordered by severity: a composite report takes
/// the worst status of its parts.
enum class Status { certified, inconclusive, failed };

std::string_view to_string(Status status);
Status worst(Status a, Status b);

/// A point together with a strictly signed enclosure of some quantity.
struct Witness {
  Enclosure y;
  Enclosure value;
  std::string context;

  /// value.hi < 0 or value.lo > 0.
  [[nodiscard]] bool strict() const { return value.is_negative() || value.is_positive(); }
};

/// A single named step of a verification chain.
struct Check {
  std::string name;
  Status status = Status::certified;
  std::string detail;
  std::optional<Enclosure> value;
};

/// Result of a certification run. A certified sign report is a proof that
/// the quantity keeps the target sign on every leaf box of the subdivision.
struct CertificationReport {
  std::string id;
  std::string quantity;
  Enclosure interval;
  Status status = Status::certified;
  std::size_t boxes_examined = 0;
  unsigned precision_bits = 0;
  /// Smallest certified distance from zero over the leaf boxes.
  std::optional<Enclosure> min_margin;
  /// Set when status == failed.
  std::optional<Witness> witness;
  /// Set when status == inconclusive.
  std::optional<Enclosure> deepest_box;
  std::vector<Check> checks;
  std::vector<CertificationReport> children;
  /// Ids of other reports whose conclusions this one relies on.
  std::vector<std::string> depends_on;

  [[nodiscard]] bool certified() const { return status == Status::certified; }

  void add_check(std::string name, Status status, std::string detail = {},
                 std::optional<Enclosure> value = std::nullopt);
  /// Records `condition` as a certified check, otherwise as `on_false`.
  void require(std::string name, bool condition, std::string detail = {},
               std::optional<Enclosure> value = std::nullopt,
               Status on_false = Status::failed);
  void add_child(CertificationReport child);

  /// Depth-first search for the first failing or inconclusive leaf; returns
  /// a one-line description.
  [[nodiscard]] std::string first_problem() const;
};

/// Status from a strict comparison lhs < rhs of two enclosures: certified if
/// certain, failed if certainly lhs >= rhs, inconclusive otherwise.
Status strict_less(const Enclosure& lhs, const Enclosure& rhs);

}  // namespace thetacert

#endif  // THETACERT_REPORT_HPP
