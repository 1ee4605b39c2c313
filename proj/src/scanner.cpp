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

#include "thetacert/scanner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "thetacert/modular.hpp"

namespace thetacert {

Enclosure f_a_second(const Rational& a, const Enclosure& y, const EvalConfig& cfg) {
  detail::require_positive(y, "f_a_second");
  const unsigned prec = cfg.precision_bits;
  const Enclosure x = y.with_precision(std::max(prec, y.precision()));
  const Enclosure t0 = theta4(x, DerivativeOrder(0), cfg);
  const Enclosure r1 = theta4(x, DerivativeOrder(1), cfg) / t0;
  const Enclosure r2 = theta4(x, DerivativeOrder(2), cfg) / t0;
  const Enclosure r3 = theta4(x, DerivativeOrder(3), cfg) / t0;
  const Enclosure l1 = r2 - r1 * r1;
  const Enclosure l2 = r3 - 3 * r2 * r1 + 2 * pow(r1, 3L);

  const Enclosure ea = Enclosure::from_rational(a, prec);
  const Enclosure ya = pow(x, a);
  const Enclosure ya1 = pow(x, a - Rational{1, 1});
  const Enclosure ya2 = pow(x, a - Rational{2, 1});
  return ea * (ea - 1) * ya2 * r1 + 2 * ea * ya1 * l1 + ya * l2;
}

void ExponentQuery::validate() const {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("scan interval must satisfy 0 < lo < hi");
  }
  if (resolution < 8) throw std::invalid_argument("scan resolution must be at least 8");
  if (a.den == 0) throw std::invalid_argument("exponent denominator is zero");
}

namespace {

std::optional<Enclosure> try_eval(const Rational& a, double y, const EvalConfig& cfg) {
  try {
    return f_a_second(a, Enclosure::from_double(y, cfg.precision_bits), cfg);
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

double score(const std::optional<Enclosure>& v) { return v ? v->mid_double() : HUGE_VAL; }

}  // namespace

ScanResult scan_exponent(const ExponentQuery& q, const EvalConfig& cfg) {
  q.validate();
  cfg.validate();
  ScanResult result;
  const double span = std::log(q.hi / q.lo);
  for (int i = 0; i < q.resolution; ++i) {
    const double y = q.lo * std::exp((i + 0.5) / q.resolution * span);
    result.rows.push_back(ScanRow{y, try_eval(q.a, y, cfg)});
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (score(result.rows[i].value) < score(result.rows[best].value)) best = i;
  }
  const std::string context = "f_a'' with a=" + std::to_string(q.a.to_double());
  auto consider = [&](double y, const std::optional<Enclosure>& v) {
    if (!v || !v->is_negative()) return;
    if (!result.witness || certainly_lt(*v, result.witness->value)) {
      result.witness = Witness{Enclosure::from_double(y, cfg.precision_bits), *v, context};
    }
  };

  // Golden-section search on the neighbouring cells, in log y.
  double left = std::log(best == 0 ? q.lo : result.rows[best - 1].y);
  double right = std::log(best + 1 == result.rows.size() ? q.hi : result.rows[best + 1].y);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = right - ratio * (right - left);
  double d = left + ratio * (right - left);
  std::optional<Enclosure> fc = try_eval(q.a, std::exp(c), cfg);
  std::optional<Enclosure> fd = try_eval(q.a, std::exp(d), cfg);
  for (int step = 0; step < 40; ++step) {
    if (score(fc) < score(fd)) {
      right = d;
      d = c;
      fd = fc;
      c = right - ratio * (right - left);
      fc = try_eval(q.a, std::exp(c), cfg);
    } else {
      left = c;
      c = d;
      fc = fd;
      d = left + ratio * (right - left);
      fd = try_eval(q.a, std::exp(d), cfg);
    }
  }
  consider(std::exp(c), fc);
  consider(std::exp(d), fd);
  consider(result.rows[best].y, result.rows[best].value);
  return result;
}

}  // namespace thetacert
