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

#include "thetacert/envelopes.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "series.hpp"
#include "thetacert/certify.hpp"

namespace thetacert {

namespace {

constexpr unsigned kMaxSandwichBits = 8192;

void require_envelope_domain(const Enclosure& y, const char* what) {
  if (mpfr_cmp_ui(y.lo(), 1) < 0) {
    throw DomainError(std::string(what) + " requires y >= 1, got " + y.to_string(10));
  }
}

// 2 (pi/4)^nu e^{-pi y/4} and 2 (pi/4)^nu 9^nu e^{-9 pi y/4}.
struct EnvelopeTerms {
  Enclosure leading;
  Enclosure second;
};

EnvelopeTerms envelope_terms(const Enclosure& y, DerivativeOrder nu) {
  const unsigned prec = y.precision();
  const long v = nu.value();
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure scale = pow(pi / 4, v) * 2;
  const Enclosure quarter = pi * y / 4;
  return {scale * exp(-quarter), scale * pow(Enclosure::point(9, prec), v) * exp(-(quarter * 9))};
}

long falling_factorial(long n, long j) {
  long r = 1;
  for (long i = 0; i < j; ++i) r *= n - i;
  return r;
}

// a_j = nu!/(nu-j)! 24^{nu-j}
Enclosure integral_coefficient(long nu, long j, unsigned prec) {
  return pow(Enclosure::point(24, prec), nu - j) * falling_factorial(nu, j);
}

}  // namespace

EnvelopeConstants EnvelopeConstants::scaled(std::int64_t num, std::int64_t den) const {
  EnvelopeConstants out = *this;
  for (Rational& r : out.c) r = Rational{r.num * num, r.den * den}.reduced();
  return out;
}

Enclosure lower_envelope(const Enclosure& y, DerivativeOrder nu) {
  require_envelope_domain(y, "lower_envelope");
  const EnvelopeTerms t = envelope_terms(y, nu);
  return t.leading + t.second;
}

Enclosure upper_envelope(const Enclosure& y, DerivativeOrder nu, const EnvelopeConstants& constants) {
  require_envelope_domain(y, "upper_envelope");
  const EnvelopeTerms t = envelope_terms(y, nu);
  const Enclosure inflate = 1 + Enclosure::from_rational(constants[nu], y.precision());
  return t.leading + t.second * inflate;
}

Enclosure envelope_slope(const Enclosure& y, DerivativeOrder nu, const Rational& inflation) {
  require_envelope_domain(y, "envelope_slope");
  const EnvelopeTerms t = envelope_terms(y, nu);
  const Enclosure quarter_pi = Enclosure::pi(y.precision()) / 4;
  const Enclosure inflate = 1 + Enclosure::from_rational(inflation, y.precision());
  return -(quarter_pi * (t.leading + t.second * inflate * 9));
}

std::vector<Enclosure> log_grid(double lo, double hi, int count, unsigned precision_bits) {
  std::vector<Enclosure> grid;
  if (count <= 0) return grid;
  if (count == 1) {
    grid.push_back(Enclosure::from_double(lo, precision_bits));
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    const double v = i == 0 ? lo : i == count - 1 ? hi : lo * std::pow(hi / lo, t);
    grid.push_back(Enclosure::from_double(v, precision_bits));
  }
  return grid;
}

CertificationReport verify_sandwich(std::span<const Enclosure> grid, DerivativeOrder nu,
                                    const EvalConfig& cfg, const EnvelopeConstants& constants) {
  cfg.validate();
  CertificationReport report;
  report.quantity = "envelope sandwich nu=" + std::to_string(nu.value());
  report.id = "sandwich:nu=" + std::to_string(nu.value());
  report.precision_bits = cfg.precision_bits;
  if (!grid.empty()) report.interval = Enclosure::hull(grid.front(), grid.back());
  const long sign = nu.value() % 2 == 0 ? 1 : -1;

  for (const Enclosure& point : grid) {
    require_envelope_domain(point, "verify_sandwich");
    ++report.boxes_examined;
    EvalConfig c = cfg;
    Status status = Status::inconclusive;
    Enclosure gap_low(c.precision_bits);
    for (;;) {
      const Enclosure y = point.with_precision(c.precision_bits);
      const Enclosure value = theta2_series(y, nu, c) * sign;
      const Enclosure lo = lower_envelope(y, nu);
      const Enclosure hi = upper_envelope(y, nu, constants);
      status = worst(strict_less(Enclosure::point(0, c.precision_bits), lo),
                     worst(strict_less(lo, value), strict_less(value, hi)));
      gap_low = value - lo;
      if (status != Status::inconclusive || c.precision_bits * 2 > kMaxSandwichBits) break;
      c = c.escalated();
    }
    report.precision_bits = std::max(report.precision_bits, c.precision_bits);
    if (status == Status::failed && !report.witness) {
      report.witness = Witness{point, gap_low, "theta2 minus lower envelope"};
    }
    report.add_check("sandwich at y=" + point.to_string(8), status,
                     "decided at " + std::to_string(c.precision_bits) + " bits", gap_low);
  }
  return report;
}

Enclosure tail_integral(DerivativeOrder nu, const Enclosure& y) {
  require_envelope_domain(y, "tail_integral");
  const unsigned prec = y.precision();
  const long v = nu.value();
  const Enclosure s = Enclosure::pi(prec) * y / 4;
  Enclosure sum(prec);
  for (long j = 0; j <= v; ++j) {
    sum += integral_coefficient(v, j, prec) / pow(s, j + 1);
  }
  return exp(-(s * 24)) * sum;
}

Enclosure admissibility_factor(DerivativeOrder nu, const Enclosure& y) {
  detail::require_positive(y, "admissibility_factor");
  const unsigned prec = y.precision();
  const long v = nu.value();
  const Enclosure s = Enclosure::pi(prec) * y / 4;
  Enclosure sum(prec);
  for (long j = 0; j <= v; ++j) {
    sum += integral_coefficient(v, j, prec) / pow(s, j + 1);
  }
  return exp(-(s * 15)) * sum / pow(Enclosure::point(9, prec), v);
}

Enclosure admissibility_factor_slope(DerivativeOrder nu, const Enclosure& y) {
  detail::require_positive(y, "admissibility_factor_slope");
  const unsigned prec = y.precision();
  const long v = nu.value();
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure s = pi * y / 4;
  // d/ds [e^{-15 s} a_j s^{-(j+1)}] = -a_j e^{-15 s} (15 s^{-(j+1)} + (j+1) s^{-(j+2)})
  Enclosure sum(prec);
  for (long j = 0; j <= v; ++j) {
    const Enclosure a = integral_coefficient(v, j, prec);
    sum -= a * (Enclosure::point(15, prec) / pow(s, j + 1) + Enclosure::point(j + 1, prec) / pow(s, j + 2));
  }
  return pi / 4 * exp(-(s * 15)) * sum / pow(Enclosure::point(9, prec), v);
}

namespace {

// sum over odd n >= 5 of n^{2 nu} e^{-pi n^2 y / 4}
Enclosure odd_square_tail(long nu, const Enclosure& y, const EvalConfig& cfg) {
  const unsigned prec = cfg.precision_bits;
  const Enclosure quarter = Enclosure::pi(prec) * y / 4;
  auto at = [&](long n) {
    return pow(Enclosure::point(n, prec), 2 * nu) * exp(-(quarter * (n * n)));
  };
  auto term = [&](long i) { return at(2 * i + 5); };
  // For n >= m: ratio ((n+2)/n)^{2 nu} e^{-pi (n+1) y} <= ((m+2)/m)^{2 nu} e^{-pi (m+1) y}.
  auto tail = [&](long k) -> std::optional<Enclosure> {
    const long m = 2 * (k + 1) + 5;
    const Enclosure growth =
        pow(Enclosure::point(m + 2, prec) / Enclosure::point(m, prec), 2 * nu);
    return detail::geometric_tail(at(m), growth * exp(-(quarter * (4 * (m + 1)))));
  };
  return detail::sum_with_tail("odd_square_tail", 0, term, tail, cfg);
}

// sum over m >= 25 of m^nu e^{-pi m y / 4}
Enclosure linear_tail(long nu, const Enclosure& y, const EvalConfig& cfg) {
  const unsigned prec = cfg.precision_bits;
  const Enclosure quarter = Enclosure::pi(prec) * y / 4;
  auto at = [&](long m) { return pow(Enclosure::point(m, prec), nu) * exp(-(quarter * m)); };
  auto term = [&](long m) { return at(m); };
  auto tail = [&](long k) -> std::optional<Enclosure> {
    const long m = k + 1;
    const Enclosure growth = pow(Enclosure::point(m + 1, prec) / Enclosure::point(m, prec), nu);
    return detail::geometric_tail(at(m), growth * exp(-quarter));
  };
  return detail::sum_with_tail("linear_tail", 25, term, tail, cfg);
}

}  // namespace

CertificationReport check_c_admissible(DerivativeOrder nu, const EvalConfig& cfg,
                                       const EnvelopeConstants& constants) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const long v = nu.value();
  const std::string tag = "nu=" + std::to_string(v);
  CertificationReport report;
  report.quantity = "inflation constant " + tag;
  report.id = "admissible:" + tag;
  report.precision_bits = prec;
  const Enclosure one = Enclosure::point(1, prec);
  report.interval = Enclosure::hull(one, Enclosure::point(100, prec));
  const Enclosure c = Enclosure::from_rational(constants[nu], prec);

  const Enclosure factor = admissibility_factor(nu, one);
  report.add_check("factor(1) < c", strict_less(factor, c),
                   "factor " + factor.to_string(12) + ", c " + c.to_string(6), factor);

  // Every coefficient of dF/ds in the basis e^{-15 s} s^{-k} is -a_j * 15 or
  // -a_j * (j+1) with a_j > 0, so F is decreasing for all s > 0.
  bool all_negative = true;
  for (long j = 0; j <= v; ++j) {
    all_negative = all_negative && integral_coefficient(v, j, prec).is_positive();
  }
  report.require("factor decreasing (coefficient signs)", all_negative,
                 "all a_j = nu!/(nu-j)! 24^(nu-j) positive");
  CertificationReport slope = certify_sign(
      "admissibility slope " + tag,
      [nu](const Enclosure& y, const EvalConfig&) { return admissibility_factor_slope(nu, y); },
      one, Enclosure::point(100, prec), Sign::negative, cfg);
  report.add_child(std::move(slope));

  // t^nu e^{-pi t y/4} has derivative sign nu - pi t y / 4 < 0 once t > 4 nu / (pi y);
  // at y = 1 that threshold is below 24.
  const Enclosure turn = Enclosure::point(4 * v, prec) / Enclosure::pi(prec);
  report.add_check("integrand decreasing on [24, inf)",
                   strict_less(turn, Enclosure::point(24, prec)), "turning point " + turn.to_string(8),
                   turn);

  // Odd squares n^2 >= 25 are distinct integers >= 25, so the odd-square sum
  // is a subsum of the linear one; compared numerically as a cross-check.
  const Enclosure s_odd = odd_square_tail(v, one, cfg);
  const Enclosure s_lin = linear_tail(v, one, cfg);
  const Enclosure integral = tail_integral(nu, one);
  report.add_check("odd-square sum < linear sum", strict_less(s_odd, s_lin),
                   s_odd.to_string(10) + " vs " + s_lin.to_string(10), s_odd);
  report.add_check("linear sum < integral", strict_less(s_lin, integral),
                   s_lin.to_string(10) + " vs " + integral.to_string(10), s_lin);
  return report;
}

CertificationReport verify_envelope_lemma(const EvalConfig& cfg, const EnvelopeConstants& constants) {
  CertificationReport report;
  report.quantity = "theta2 envelopes";
  report.id = "lemma:envelopes";
  report.precision_bits = cfg.precision_bits;
  report.interval = Enclosure::hull(Enclosure::point(1, cfg.precision_bits),
                                    Enclosure::point(100, cfg.precision_bits));
  const std::vector<Enclosure> grid = log_grid(1.0, 100.0, 40, cfg.precision_bits);
  for (int v = 0; v <= 3; ++v) {
    const DerivativeOrder nu(v);
    report.add_child(check_c_admissible(nu, cfg, constants));
    report.add_child(verify_sandwich(grid, nu, cfg, constants));
  }
  return report;
}

}  // namespace thetacert
