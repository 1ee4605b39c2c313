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

#ifndef THETACERT_VERIFIER_HPP
#define THETACERT_VERIFIER_HPP

#include <span>
#include <stdexcept>
#include <string_view>

#include "thetacert/certify.hpp"
#include "thetacert/enclosure.hpp"
#include "thetacert/envelopes.hpp"
#include "thetacert/exppoly.hpp"
#include "thetacert/report.hpp"

namespace thetacert {

// ---------------------------------------------------------------------------
// Printed-value comparison

enum class DecimalRounding { truncated, nearest };

/// True when every point of `value` shows as `printed` (e.g. "55.5") with
/// the same number of decimals, under the given rounding convention.
bool matches_printed(const Enclosure& value, std::string_view printed,
                     DecimalRounding rounding = DecimalRounding::nearest);

// ---------------------------------------------------------------------------
// g(y) = A (E - 1)^2 + B pi y E (E - 1) + C pi^2 y^2 E (E + 1),  E = e^{pi y}

struct GCoefficients {
  long square = 2;
  long cross = -4;
  long quadratic = 1;
};

Enclosure g_eval(const Enclosure& y, const GCoefficients& k = {});
Enclosure g_prime(const Enclosure& y, const GCoefficients& k = {});
/// g'' obtained by differentiating g with coefficients `k`.
Enclosure g_second(const Enclosure& y, const GCoefficients& k = {});
/// The fixed six-term expansion of g'' for the default coefficients.
Enclosure g_second_display(const Enclosure& y);

/// Positivity of g on [1, inf): g'' > 0 beyond (1 + sqrt 3)/pi, g'(1) > 0,
/// g(1) > 0. Also checks that g'' from `k` agrees with the six-term
/// expansion and that g(1), g'(1) reproduce 55.5 and 3584.5.
CertificationReport verify_g_chain(const EvalConfig& cfg, const GCoefficients& k = {});

// ---------------------------------------------------------------------------
// Large-y termwise brackets

/// n pi y (E + 1) - 2 (E - 1),  E = e^{2 n pi y}.
Enclosure even_bracket(long n, const Enclosure& y);
/// t (E + 1) - 4 (E - 1),  t = (2n - 1) pi y,  E = e^{t}.
Enclosure odd_bracket(long n, const Enclosure& y);
/// E - 1 - n pi y E,  E = e^{2 n pi y}.
Enclosure decreasing_bracket_even(long n, const Enclosure& y);
/// 2 (E - 1) - t E,  t = (2n - 1) pi y,  E = e^{t}.
Enclosure decreasing_bracket_odd(long n, const Enclosure& y);

/// Requires a >= 2/pi (DomainError otherwise).
CertificationReport verify_even_terms_large_y(long n_max, const Enclosure& a, const Enclosure& b,
                                              const EvalConfig& cfg);
/// n = 2..n_max; requires a >= 1.
CertificationReport verify_odd_terms_large_y(long n_max, const Enclosure& a, const Enclosure& b,
                                             const EvalConfig& cfg);

/// Even terms on [2/pi, 30], odd terms on [1, 30] and the g chain.
CertificationReport verify_large_y_chain(const EvalConfig& cfg, long n_max = 50);

// ---------------------------------------------------------------------------
// Small-y route

class CancellationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bracket  e^{4 pi y}(alpha y - beta) - e^{2 pi y}(gamma y + delta) - (epsilon y + zeta)
/// of the envelope lower bound for h(1/y), after removing y^{9/2} e^{-27 pi y/4}.
struct GreekConstants {
  Enclosure alpha, beta, gamma, delta, epsilon, zeta;
  /// Coefficient of e^{6 pi y}, which must vanish.
  LinearCoeff leading;
  ExpPoly bracket;
};

/// Throws CancellationError when the e^{6 pi y} coefficient does not enclose
/// zero within 2^-80.
GreekConstants compute_greek_constants(const EvalConfig& cfg, const EnvelopeConstants& constants = {});

/// y^{9/2} e^{-27 pi y/4} times the collected bracket.
Enclosure greek_lower_bound(const Enclosure& y, const GreekConstants& greek);

/// e^{2 pi y}(533*1984 y - 534*632) - 2 y - 0.08
Enclosure small_y_final_bracket(const Enclosure& y);

CertificationReport verify_small_y_chain(const EvalConfig& cfg, const EnvelopeConstants& constants = {});

/// h(y) = f''(y) theta4(y)^3 from theta4 and its derivatives.
Enclosure h_direct(const Enclosure& y, const EvalConfig& cfg);
/// h(1/y) from theta2 and its derivatives at y.
Enclosure h_reciprocal(const Enclosure& y, const EvalConfig& cfg);

// ---------------------------------------------------------------------------
// Direct sign certification

enum class QuantityKind { f_second, f_prime, h_reciprocal, g_second, small_y_bracket };

std::string_view to_string(QuantityKind kind);

/// The modular route covers y <= kRouteOverlapHi, the Lambert route
/// y >= kRouteOverlapLo; f'' and f' are certified on both wherever they
/// intersect [a, b].
inline constexpr double kRouteOverlapLo = 0.8;
inline constexpr double kRouteOverlapHi = 1.25;

CertificationReport certify_quantity(QuantityKind kind, const Enclosure& a, const Enclosure& b,
                                     Sign target, const EvalConfig& cfg,
                                     const SubdivisionPolicy& policy = {});

inline CertificationReport certify_convexity(const Enclosure& a, const Enclosure& b, Sign target,
                                             const EvalConfig& cfg) {
  return certify_quantity(QuantityKind::f_second, a, b, target, cfg);
}

/// Termwise negativity of f' for y >= 2/pi. When every report in
/// `convexity` is certified, adds the conclusion f' < 0 on (0, inf) and
/// records their ids in depends_on; with none given the conclusion stays
/// inconclusive.
CertificationReport verify_decreasing_argument(const EvalConfig& cfg,
                                               std::span<const CertificationReport> convexity = {},
                                               long n_max = 50);

}  // namespace thetacert

#endif  // THETACERT_VERIFIER_HPP
