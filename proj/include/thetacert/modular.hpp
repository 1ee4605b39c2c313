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

#ifndef THETACERT_MODULAR_HPP
#define THETACERT_MODULAR_HPP

#include <array>

#include "thetacert/enclosure.hpp"
#include "thetacert/report.hpp"
#include "thetacert/theta.hpp"

namespace thetacert {

/// Coefficients c[nu][j] of
///   theta4^(nu)(y) = sum_j c[nu][j] y^{-1/2 - nu - j} theta2^(j)(1/y),
/// obtained by differentiating theta4(y) = y^{-1/2} theta2(1/y).
using ModularCoefficients = std::array<std::array<Rational, 4>, 4>;

inline constexpr ModularCoefficients kModularCoefficients = {{
    {{{1, 1}, {0, 1}, {0, 1}, {0, 1}}},
    {{{-1, 2}, {-1, 1}, {0, 1}, {0, 1}}},
    {{{3, 4}, {3, 1}, {1, 1}, {0, 1}}},
    {{{-15, 8}, {-45, 4}, {-15, 2}, {-1, 1}}},
}};

/// Below this argument theta4 and f are evaluated through the modular
/// relation (then 1/y > 5 and the theta2 series needs only a few terms).
inline constexpr double kModularThreshold = 0.2;

Enclosure theta4_via_modular(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg,
                             const ModularCoefficients& coefficients = kModularCoefficients);

/// theta4^(nu)(y) by the direct series for y >= 0.2, else via modularity.
Enclosure theta4(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg);

/// Phi^(j)(Y) for Phi(Y) = sum_{n>=0} e^{-pi Y n(n+1)}, so that
/// theta2(Y) = 2 e^{-pi Y / 4} Phi(Y). j in 0..3.
Enclosure phi_series(const Enclosure& big_y, int j, const EvalConfig& cfg);

/// f, f', f'' (order 0..2) through the modular relation. With Y = 1/y and
/// L = Phi'/Phi:
///   f   = pi/4 - y/2 - L(Y)
///   f'  = -1/2 + Y^2 L'(Y)
///   f'' = -(2 Y^3 L'(Y) + Y^4 L''(Y))
/// Every term is of size e^{-2 pi Y}, so no cancellation occurs for small y.
Enclosure f_modular(const Enclosure& y, int order, const EvalConfig& cfg);

/// f^(order)(y): Lambert series for y >= 0.2, modular form below.
Enclosure f_eval(const Enclosure& y, int order, const EvalConfig& cfg);

/// Samples `samples` log-spaced points of [a, b] and certifies that
/// theta4_via_modular and theta4_series intersect with combined width below
/// 2^width_log2 at each.
CertificationReport verify_modular_identity(const Enclosure& a, const Enclosure& b,
                                            DerivativeOrder nu, const EvalConfig& cfg,
                                            const ModularCoefficients& coefficients = kModularCoefficients,
                                            int samples = 10, long width_log2 = -80);

}  // namespace thetacert

#endif  // THETACERT_MODULAR_HPP
