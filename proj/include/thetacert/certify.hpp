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

#ifndef THETACERT_CERTIFY_HPP
#define THETACERT_CERTIFY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "thetacert/enclosure.hpp"
#include "thetacert/report.hpp"

namespace thetacert {

enum class Sign { positive, negative };

std::string_view to_string(Sign sign);

/// A real function evaluated on boxes: must return an enclosure of its image
/// over the whole box. May throw DomainError / ConvergenceError on boxes that
/// are too wide; the engine then subdivides.
using Quantity = std::function<Enclosure(const Enclosure& box, const EvalConfig& cfg)>;

struct SubdivisionPolicy {
  int max_depth = 60;
  /// Retry once at doubled precision before reporting inconclusive.
  bool escalate_precision = true;
  std::size_t max_boxes = 2'000'000;
};

/// Adaptive bisection sign certification of `fn` on [a.lo, b.hi].
///
/// Boxes are processed depth-first, left to right, so the report is a
/// deterministic function of the inputs. A box whose enclosure has the
/// target sign strictly is accepted; one with the strictly opposite sign
/// ends the run as failed with a point witness; anything else is bisected
/// until max_depth, where the run ends inconclusive.
CertificationReport certify_sign(std::string quantity, const Quantity& fn, const Enclosure& a,
                                 const Enclosure& b, Sign target, const EvalConfig& cfg,
                                 const SubdivisionPolicy& policy = {});

}  // namespace thetacert

#endif  // THETACERT_CERTIFY_HPP
