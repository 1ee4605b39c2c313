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

#ifndef THETACERT_SCANNER_HPP
#define THETACERT_SCANNER_HPP

#include <optional>
#include <vector>

#include "thetacert/enclosure.hpp"
#include "thetacert/report.hpp"

namespace thetacert {

/// Second derivative of f_a(y) = y^a theta4'(y) / theta4(y). With
/// L = theta4'/theta4:
///   f_a'' = a(a-1) y^{a-2} L + 2a y^{a-1} L' + y^a L''.
Enclosure f_a_second(const Rational& a, const Enclosure& y, const EvalConfig& cfg);

struct ExponentQuery {
  Rational a{21, 10};
  double lo = 0.05;
  double hi = 5.0;
  /// Number of log-spaced cells; f_a'' is sampled at their midpoints.
  int resolution = 64;

  /// Throws std::invalid_argument unless 0 < lo < hi and resolution >= 8.
  void validate() const;
};

struct ScanRow {
  double y;
  std::optional<Enclosure> value;  // empty when evaluation failed
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<Witness> witness;
};

/// Grid scan followed by golden-section refinement (at most 40 steps)
/// around the smallest midpoint. A witness is returned only for a strictly
/// negative enclosure, which disproves convexity of f_a. No witness proves
/// nothing.
ScanResult scan_exponent(const ExponentQuery& q, const EvalConfig& cfg);

inline std::optional<Witness> find_nonconvex_witness(const ExponentQuery& q, const EvalConfig& cfg) {
  return scan_exponent(q, cfg).witness;
}

}  // namespace thetacert

#endif  // THETACERT_SCANNER_HPP
