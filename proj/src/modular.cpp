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

#include "thetacert/modular.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "series.hpp"

namespace thetacert {

namespace {

bool below_threshold(const Enclosure& y) { return y.lo_double() < kModularThreshold; }

}  // namespace

Enclosure theta4_via_modular(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg,
                             const ModularCoefficients& coefficients) {
  detail::require_positive(y, "theta4_via_modular");
  const unsigned prec = cfg.precision_bits;
  const Enclosure inv = reciprocal(y.with_precision(std::max(prec, y.precision())));
  const int v = nu.value();
  Enclosure sum(prec);
  for (int j = 0; j <= v; ++j) {
    const Rational& c = coefficients[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
    if (c.num == 0) continue;
    // y^{-1/2 - nu - j} = y^{-(2 nu + 2 j + 1)/2}
    const Rational exponent{-(2 * v + 2 * j + 1), 2};
    sum += Enclosure::from_rational(c, prec) * pow(y, exponent) *
           theta2_series(inv, DerivativeOrder(j), cfg);
  }
  return sum;
}

Enclosure theta4(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg) {
  detail::require_positive(y, "theta4");
  return below_threshold(y) ? theta4_via_modular(y, nu, cfg) : theta4_series(y, nu, cfg);
}

Enclosure phi_series(const Enclosure& big_y, int j, const EvalConfig& cfg) {
  if (j < 0 || j > 3) throw std::invalid_argument("phi_series order must be 0..3");
  detail::require_positive(big_y, "phi_series");
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure signed_pi_pow = pow(-pi, static_cast<long>(j));
  const Enclosure pi_pow = pow(pi, static_cast<long>(j));
  const Enclosure y_lo = big_y.lower_point();

  auto term = [&](long n) -> Enclosure {
    if (n == 0) return Enclosure::point(j == 0 ? 1 : 0, prec);
    const long m = n * (n + 1);
    return signed_pi_pow * pow(Enclosure::point(m, prec), static_cast<long>(j)) * exp(-(pi * big_y) * m);
  };
  // Majorant ratio for n >= N+1: ((n+2)/n)^j e^{-2 pi Y (n+1)}
  //   <= ((N+3)/(N+1))^j e^{-2 pi Y (N+2)}.
  auto tail = [&](long big_n) -> std::optional<Enclosure> {
    const long next = big_n + 1;
    const Enclosure growth =
        pow(Enclosure::point(next + 2, prec) / Enclosure::point(next, prec), static_cast<long>(j));
    const Enclosure ratio = growth * exp(-(pi * y_lo) * (2 * (big_n + 2)));
    const long m = next * (next + 1);
    const Enclosure first = pi_pow * pow(Enclosure::point(m, prec), static_cast<long>(j)) * exp(-(pi * y_lo) * m);
    return detail::geometric_tail(first, ratio);
  };
  return detail::sum_with_tail("phi_series", 0, term, tail, cfg);
}

Enclosure f_modular(const Enclosure& y, int order, const EvalConfig& cfg) {
  if (order < 0 || order > 2) throw std::invalid_argument("f_modular order must be 0..2");
  detail::require_positive(y, "f_modular");
  const unsigned prec = cfg.precision_bits;
  const Enclosure big_y = reciprocal(y.with_precision(std::max(prec, y.precision())));
  const Enclosure p0 = phi_series(big_y, 0, cfg);
  const Enclosure l = phi_series(big_y, 1, cfg) / p0;
  if (order == 0) {
    return Enclosure::pi(prec) / 4 - y / 2 - l;
  }
  const Enclosure p2 = phi_series(big_y, 2, cfg) / p0;
  const Enclosure l1 = p2 - l * l;
  const Enclosure y2 = big_y * big_y;
  if (order == 1) {
    return y2 * l1 - Enclosure::from_rational({1, 2}, prec);
  }
  const Enclosure p3 = phi_series(big_y, 3, cfg) / p0;
  const Enclosure l2 = p3 - p2 * l * 3 + pow(l, 3L) * 2;
  return -(y2 * big_y * (l1 * 2 + big_y * l2));
}

Enclosure f_eval(const Enclosure& y, int order, const EvalConfig& cfg) {
  detail::require_positive(y, "f_eval");
  return below_threshold(y) ? f_modular(y, order, cfg) : lambert_series(y, order, cfg);
}

CertificationReport verify_modular_identity(const Enclosure& a, const Enclosure& b,
                                            DerivativeOrder nu, const EvalConfig& cfg,
                                            const ModularCoefficients& coefficients, int samples,
                                            long width_log2) {
  cfg.validate();
  detail::require_positive(a, "verify_modular_identity");
  CertificationReport report;
  report.quantity = "theta4^(" + std::to_string(nu.value()) + ") modular vs series";
  report.id = "modular:nu=" + std::to_string(nu.value()) + "[" + a.lo_string(6) + "," + b.hi_string(6) + "]";
  report.interval = Enclosure::hull(a, b);
  report.precision_bits = cfg.precision_bits;

  const double lo = a.lo_double();
  const double hi = b.hi_double();
  const int count = lo == hi ? 1 : std::max(samples, 2);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    // Endpoints are used exactly; interior points are log-spaced doubles.
    const Enclosure y = i == 0 ? a.with_precision(cfg.precision_bits)
                        : i == count - 1
                            ? b.with_precision(cfg.precision_bits)
                            : Enclosure::from_double(lo * std::pow(hi / lo, t), cfg.precision_bits);
    ++report.boxes_examined;
    const Enclosure via_modular = theta4_via_modular(y, nu, cfg, coefficients);
    const Enclosure via_series = theta4_series(y, nu, cfg);
    const std::string where = "y=" + y.to_string(8);
    if (!via_modular.overlaps(via_series)) {
      report.witness = Witness{y, via_modular - via_series, "modular minus series"};
      report.add_check("agreement at " + where, Status::failed,
                       "modular " + via_modular.to_string(12) + " vs series " + via_series.to_string(12));
      continue;
    }
    const Enclosure joint = Enclosure::hull(via_modular, via_series);
    report.require("agreement at " + where, joint.width_below_pow2(width_log2),
                   "combined width " + std::to_string(joint.width_double()), joint,
                   Status::inconclusive);
  }
  return report;
}

}  // namespace thetacert
