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

#include "thetacert/report.hpp"

#include <algorithm>
#include <utility>

namespace thetacert {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::certified:
      return "certified";
    case Status::inconclusive:
      return "inconclusive";
    case Status::failed:
      return "failed";
  }
  return "unknown";
}

Status worst(Status a, Status b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

void CertificationReport::add_check(std::string name, Status s, std::string detail,
                                    std::optional<Enclosure> value) {
  status = worst(status, s);
  checks.push_back(Check{std::move(name), s, std::move(detail), std::move(value)});
}

void CertificationReport::require(std::string name, bool condition, std::string detail,
                                  std::optional<Enclosure> value, Status on_false) {
  add_check(std::move(name), condition ? Status::certified : on_false, std::move(detail),
            std::move(value));
}

void CertificationReport::add_child(CertificationReport child) {
  status = worst(status, child.status);
  boxes_examined += child.boxes_examined;
  children.push_back(std::move(child));
}

std::string CertificationReport::first_problem() const {
  if (status == Status::certified) return {};
  for (const auto& c : checks) {
    if (c.status != Status::certified) {
      return id + ": " + c.name + " " + std::string(to_string(c.status)) +
             (c.detail.empty() ? "" : " (" + c.detail + ")");
    }
  }
  for (const auto& child : children) {
    if (child.status != Status::certified) return child.first_problem();
  }
  std::string msg = id + ": " + std::string(to_string(status));
  if (witness) msg += " witness y=" + witness->y.to_string(12) + " value=" + witness->value.to_string(12);
  if (deepest_box) msg += " deepest box " + deepest_box->to_string(12);
  return msg;
}

Status strict_less(const Enclosure& lhs, const Enclosure& rhs) {
  if (certainly_lt(lhs, rhs)) return Status::certified;
  if (mpfr_greaterequal_p(lhs.lo(), rhs.hi()) != 0) return Status::failed;
  return Status::inconclusive;
}

}  // namespace thetacert
