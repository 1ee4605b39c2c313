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

#ifndef THETACERT_ENVELOPES_HPP
#define THETACERT_ENVELOPES_HPP

#include <array>
#include <span>
#include <vector>

#include "thetacert/enclosure.hpp"
#include "thetacert/report.hpp"
#include "thetacert/theta.hpp"

namespace thetacert {

/// Inflation constants c_nu of the upper envelopes, as exact decimals.
struct EnvelopeConstants {
  std::array<Rational, 4> c = {{{1, 100000}, {3, 100000}, {8, 100000}, {3, 10000}}};

  [[nodiscard]] const Rational& operator[](DerivativeOrder nu) const {
    return c[static_cast<std::size_t>(nu.value())];
  }
  /// Every constant scaled by num/den (used to probe tightness).
  [[nodiscard]] EnvelopeConstants scaled(std::int64_t num, std::int64_t den) const;
};

// Two-term envelopes of (-1)^nu theta2^(nu) on [1, inf):
//
//   lower(y) = 2 pi^nu e^{-pi y/4} / 4^nu + 2 9^nu pi^nu e^{-9 pi y/4} / 4^nu
//   upper(y) = 2 pi^nu e^{-pi y/4} / 4^nu + 2 (1 + c_nu) 9^nu pi^nu e^{-9 pi y/4} / 4^nu
//
// Both require y.lo >= 1 and throw DomainError otherwise. Precision follows y.

Enclosure lower_envelope(const Enclosure& y, DerivativeOrder nu);
Enclosure upper_envelope(const Enclosure& y, DerivativeOrder nu,
                         const EnvelopeConstants& constants = {});

/// d/dy of an envelope; `inflation` is 0 for the lower envelope and c_nu for
/// the upper one.
Enclosure envelope_slope(const Enclosure& y, DerivativeOrder nu, const Rational& inflation);

/// Certifies 0 < lower(y) < (-1)^nu theta2^(nu)(y) < upper(y) at each grid
/// point. Precision is doubled per point (up to 8192 bits) while the
/// comparison is undecided; the gap near y = 100 is of relative size
/// e^{-6 pi y}.
CertificationReport verify_sandwich(std::span<const Enclosure> grid, DerivativeOrder nu,
                                    const EvalConfig& cfg, const EnvelopeConstants& constants = {});

/// `count` log-spaced points on [lo, hi] (endpoints included).
std::vector<Enclosure> log_grid(double lo, double hi, int count, unsigned precision_bits);

/// int_24^inf t^nu e^{-pi t y / 4} dt in closed form:
///   e^{-24 s} sum_{j=0}^{nu} nu!/(nu-j)! 24^{nu-j} / s^{j+1},  s = pi y / 4.
Enclosure tail_integral(DerivativeOrder nu, const Enclosure& y);

/// F(y) = e^{9 pi y/4} 9^{-nu} tail_integral(nu, y), the quantity that must
/// stay below c_nu, and its derivative in y.
Enclosure admissibility_factor(DerivativeOrder nu, const Enclosure& y);
Enclosure admissibility_factor_slope(DerivativeOrder nu, const Enclosure& y);

/// Certifies that c_nu bounds the omitted part of the theta2 series for all
/// y >= 1: F(1) < c_nu, F decreasing, plus the two intermediate comparisons
/// (odd-square subsum < linear sum from 25 < integral from 24) at y = 1.
CertificationReport check_c_admissible(DerivativeOrder nu, const EvalConfig& cfg,
                                       const EnvelopeConstants& constants = {});

/// All of the above for nu = 0..3 on the default 40-point grid over [1, 100].
CertificationReport verify_envelope_lemma(const EvalConfig& cfg,
                                          const EnvelopeConstants& constants = {});

}  // namespace thetacert

#endif  // THETACERT_ENVELOPES_HPP
