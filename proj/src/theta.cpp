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

#include "thetacert/theta.hpp"

#include <optional>
#include <string>

#include "series.hpp"

namespace thetacert {

namespace detail {

void require_positive(const Enclosure& y, const char* what) {
  if (!y.is_positive()) {
    throw DomainError(std::string(what) + " requires y > 0, got " + y.to_string(10));
  }
}

}  // namespace detail

Enclosure theta4_series(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg) {
  detail::require_positive(y, "theta4_series");
  const unsigned prec = cfg.precision_bits;
  const int v = nu.value();
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure signed_pi_pow = pow(-pi, static_cast<long>(v));
  const Enclosure pi_pow = pow(pi, static_cast<long>(v));
  const Enclosure y_lo = y.lower_point();

  auto term = [&](long k) -> Enclosure {
    if (k == 0) return Enclosure::point(v == 0 ? 1 : 0, prec);
    const long k2 = k * k;
    Enclosure t = signed_pi_pow * pow(Enclosure::point(k2, prec), static_cast<long>(v)) *
                  exp(-(pi * y) * k2) * 2;
    return (k % 2 == 0) ? t : -t;
  };
  // For k >= K+1 the majorant 2 pi^nu k^{2 nu} e^{-pi k^2 y} has ratio at most
  // ((K+2)/(K+1))^{2 nu} e^{-pi y (2K+3)}.
  auto tail = [&](long big_k) -> std::optional<Enclosure> {
    const long next = big_k + 1;
    const Enclosure growth =
        pow(Enclosure::point(next + 1, prec) / Enclosure::point(next, prec), 2L * v);
    const Enclosure ratio = growth * exp(-(pi * y_lo) * (2 * big_k + 3));
    const Enclosure first = pi_pow * pow(Enclosure::point(next * next, prec), static_cast<long>(v)) *
                            exp(-(pi * y_lo) * (next * next)) * 2;
    return detail::geometric_tail(first, ratio);
  };
  return detail::sum_with_tail("theta4_series", 0, term, tail, cfg);
}

Enclosure theta2_series(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg) {
  detail::require_positive(y, "theta2_series");
  const unsigned prec = cfg.precision_bits;
  const int v = nu.value();
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure signed_pi_pow = pow(-pi, static_cast<long>(v));
  const Enclosure pi_pow = pow(pi, static_cast<long>(v));
  const Enclosure y_lo = y.lower_point();

  // (n + 1/2)^2 = (2n+1)^2 / 4
  auto square = [&](long n) {
    return Enclosure::point((2 * n + 1) * (2 * n + 1), prec) / 4;
  };
  auto term = [&](long n) -> Enclosure {
    const Enclosure s = square(n);
    return signed_pi_pow * pow(s, static_cast<long>(v)) * exp(-(pi * y) * s) * 2;
  };
  // Ratio of consecutive majorants for n >= N+1 is at most
  // ((2N+5)/(2N+3))^{2 nu} e^{-2 pi y (N+2)}.
  auto tail = [&](long big_n) -> std::optional<Enclosure> {
    const Enclosure growth = pow(
        Enclosure::point(2 * big_n + 5, prec) / Enclosure::point(2 * big_n + 3, prec), 2L * v);
    const Enclosure ratio = growth * exp(-(pi * y_lo) * (2 * (big_n + 2)));
    const Enclosure s = square(big_n + 1);
    const Enclosure first = pi_pow * pow(s, static_cast<long>(v)) * exp(-(pi * y_lo) * s) * 2;
    return detail::geometric_tail(first, ratio);
  };
  return detail::sum_with_tail("theta2_series", 0, term, tail, cfg);
}

Enclosure theta4_product(const Enclosure& y, const EvalConfig& cfg) {
  detail::require_positive(y, "theta4_product");
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure q = exp(-(pi * y));
  const Enclosure q_max = exp(-(pi * y.lower_point()));
  const Enclosure one = Enclosure::point(1, prec);
  const Enclosure threshold = ldexp(one, cfg.tail_tolerance_log2);

  Enclosure product = one;
  for (long n = 1;; ++n) {
    if (static_cast<std::size_t>(n) > cfg.max_terms) {
      throw ConvergenceError("theta4_product: tail bound not reached within max_terms factors");
    }
    const Enclosure odd = 1 - pow(q, 2 * n - 1);
    product *= (1 - pow(q, 2 * n)) * odd * odd;

    // Omitted factors are (1 - x) with x in {q^{2m}, q^{2m-1}, q^{2m-1}},
    // m > n, all x <= q^{2n+1}. Since -log(1 - x) <= x / (1 - x), the log of
    // the omitted product lies in [-B, 0] with
    //   B = (q^{2n+2} + 2 q^{2n+1}) / ((1 - q^2)(1 - q^{2n+1})).
    const Enclosure x_max = pow(q_max, 2 * n + 1);
    const Enclosure sum_x = (pow(q_max, 2 * n + 2) + x_max * 2) / (1 - q_max * q_max);
    const Enclosure bound = (sum_x / (1 - x_max)).upper_point();
    if (mpfr_lessequal_p(bound.hi(), threshold.hi()) != 0) {
      const Enclosure omitted = Enclosure::hull(exp(-bound).lower_point(), one);
      return product * omitted;
    }
  }
}

Enclosure lambert_series(const Enclosure& y, int order, const EvalConfig& cfg) {
  if (order < 0 || order > 2) throw std::invalid_argument("lambert_series order must be 0..2");
  detail::require_positive(y, "lambert_series");
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure pi2 = pi * pi;
  const Enclosure pi3 = pi2 * pi;
  const Enclosure y2 = y * y;

  // Contribution of the exponential e^{m pi y}, written with q_m = e^{-m pi y}:
  //   1/(E - 1) = q_m/(1 - q_m),  E/(E - 1)^2 = q_m/(1 - q_m)^2,
  //   E(E + 1)/(E - 1)^3 = q_m (1 + q_m)/(1 - q_m)^3.
  auto part = [&](long m) -> Enclosure {
    const Enclosure qm = exp(-(pi * y) * m);
    const Enclosure one_minus = 1 - qm;
    const Enclosure inv = qm / one_minus;
    switch (order) {
      case 0:
        return y2 * pi * inv * (2 * m);
      case 1: {
        const Enclosure sq = qm / (one_minus * one_minus);
        return y * pi * inv * (4 * m) - y2 * pi2 * sq * (2 * m * m);
      }
      default: {
        const Enclosure sq = qm / (one_minus * one_minus);
        const Enclosure cube = qm * (1 + qm) / pow(one_minus, 3L);
        return pi * inv * (4 * m) - y * pi2 * sq * (8 * m * m) + y2 * pi3 * cube * (2 * m * m * m);
      }
    }
  };
  // n-th summand: the n pi / (e^{2n pi y} - 1) family carries weight 1/2
  // relative to the (2n-1) family once both are written in m.
  auto term = [&](long n) -> Enclosure { return part(2 * n) / 2 + part(2 * n - 1); };

  // |part(m)| <= q^m P(m) with q = e^{-pi y.lo}, P a polynomial of degree
  // order + 1 with non-negative coefficients; consecutive majorants for
  // m >= M + 1 have ratio at most ((M+2)/(M+1))^{order+1} q.
  const Enclosure q = exp(-(pi * y.lower_point()));
  const Enclosure y_max = y.upper_point();
  const Enclosure d = 1 - q;
  auto majorant_poly = [&](const Enclosure& m) -> Enclosure {
    switch (order) {
      case 0:
        return y_max * y_max * pi * m * 2 / d;
      case 1:
        return y_max * pi * m * 4 / d + y_max * y_max * pi2 * m * m * 2 / (d * d);
      default:
        return pi * m * 4 / d + y_max * pi2 * m * m * 8 / (d * d) +
               y_max * y_max * pi3 * m * m * m * 4 / pow(d, 3L);
    }
  };
  auto tail = [&](long big_n) -> std::optional<Enclosure> {
    const long big_m = 2 * big_n;
    const Enclosure next = Enclosure::point(big_m + 1, prec);
    const Enclosure growth = pow(Enclosure::point(big_m + 2, prec) / next, static_cast<long>(order + 1));
    const Enclosure first = pow(q, big_m + 1) * majorant_poly(next);
    return detail::geometric_tail(first, growth * q);
  };
  return detail::sum_with_tail("lambert_series", 1, term, tail, cfg);
}

}  // namespace thetacert
