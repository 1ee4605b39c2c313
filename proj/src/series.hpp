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

#ifndef THETACERT_SRC_SERIES_HPP
#define THETACERT_SRC_SERIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "thetacert/enclosure.hpp"

namespace thetacert::detail {

/// [-b.hi, b.hi] for a non-negative bound b.
inline Enclosure symmetric(const Enclosure& bound) {
  const Enclosure up = bound.upper_point();
  return Enclosure::hull(-up, up);
}

/// Sums term(first), term(first + 1), ... and stops after index K once
/// tail(K) bounds |sum_{k > K} term(k)| below 2^tail_tolerance_log2 times the
/// largest term magnitude seen. The tail bound is then added as a symmetric
/// inflation, so the result encloses the full infinite sum.
///
/// tail(K) returns nullopt while no bound is available yet (for example
/// while the ratio majorant is still >= 1).
template <class TermFn, class TailFn>
Enclosure sum_with_tail(std::string_view what, long first, TermFn&& term, TailFn&& tail,
                        const EvalConfig& cfg) {
  const unsigned prec = cfg.precision_bits;
  Enclosure sum(prec);
  Enclosure scale(prec);
  for (long k = first;; ++k) {
    if (static_cast<std::size_t>(k - first) >= cfg.max_terms) {
      throw ConvergenceError(std::string(what) + ": tail bound not reached within " +
                             std::to_string(cfg.max_terms) + " terms");
    }
    const Enclosure t = term(k);
    sum += t;
    scale = Enclosure::hull(scale, abs(t));
    const std::optional<Enclosure> bound = tail(k);
    if (!bound) continue;
    const Enclosure threshold = ldexp(scale.upper_point(), cfg.tail_tolerance_log2);
    if (mpfr_lessequal_p(bound->hi(), threshold.hi()) != 0) {
      return sum + symmetric(*bound);
    }
  }
}

/// Majorant of a geometric tail: first / (1 - ratio), or nullopt unless the
/// ratio bound is certainly below one.
inline std::optional<Enclosure> geometric_tail(const Enclosure& first, const Enclosure& ratio) {
  if (mpfr_cmp_ui(ratio.hi(), 1) >= 0) return std::nullopt;
  return (first / (1 - ratio)).upper_point();
}

}  // namespace thetacert::detail

#endif  // THETACERT_SRC_SERIES_HPP
