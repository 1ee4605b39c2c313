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


#ifndef THETACERT_TESTS_FD_SUPPORT_HPP
#define THETACERT_TESTS_FD_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "thetacert/enclosure.hpp"
#include "thetacert/modular.hpp"
#include "thetacert/scanner.hpp"
#include "thetacert/theta.hpp"
#include "thetacert/verifier.hpp"

namespace fdcheck {

using thetacert::Enclosure;
using Fn = std::function<Enclosure(const Enclosure&)>;

inline constexpr long kStepLog2 = -20;
inline constexpr unsigned kPrecision = 192;

struct Outcome {
  std::string name;
  double y = 0;
  double error = 0;      // |central difference - derivative|
  double tolerance = 0;  // 10 h^2 |third derivative estimate|
  bool ok = false;
};

/// Compares the central difference of `f` at y with `df(y)`. The O(h^2)
/// tolerance uses a coarse (step 2^-6) second difference of `df` as the
/// estimate of f''' (floored at 1 to stay meaningful near its zeros).
inline Outcome central(const std::string& name, const Fn& f, const Fn& df, double y) {
  const Enclosure ye = Enclosure::from_double(y, kPrecision);
  const Enclosure h = ldexp(Enclosure::point(1, kPrecision), kStepLog2);
  const Enclosure diff = (f(ye + h) - f(ye - h)) / (2 * h);
  const Enclosure exact = df(ye);

  const Enclosure k = ldexp(Enclosure::point(1, kPrecision), -6);
  const Enclosure third = (df(ye + k) - 2 * df(ye) + df(ye - k)) / (k * k);
  const double m3 = std::max(std::fabs(third.mid_double()), 1.0);
  const double hd = std::ldexp(1.0, kStepLog2);

  Outcome out;
  out.name = name;
  out.y = y;
  out.error = std::fabs((diff - exact).mid_double()) + (diff - exact).width_double();
  out.tolerance = 10.0 * hd * hd * m3;
  out.ok = out.error < out.tolerance;
  return out;
}

/// Second central difference of `f` against `d2f`.
inline Outcome central_second(const std::string& name, const Fn& f, const Fn& d2f, double y) {
  const Enclosure ye = Enclosure::from_double(y, kPrecision);
  const Enclosure h = ldexp(Enclosure::point(1, kPrecision), kStepLog2);
  const Enclosure diff = (f(ye + h) - 2 * f(ye) + f(ye - h)) / (h * h);
  const Enclosure exact = d2f(ye);

  const Enclosure k = ldexp(Enclosure::point(1, kPrecision), -6);
  const Enclosure fourth = (d2f(ye + k) - 2 * d2f(ye) + d2f(ye - k)) / (k * k);
  const double m4 = std::max(std::fabs(fourth.mid_double()), 1.0);
  const double hd = std::ldexp(1.0, kStepLog2);

  Outcome out;
  out.name = name;
  out.y = y;
  out.error = std::fabs((diff - exact).mid_double()) + (diff - exact).width_double();
  out.tolerance = 10.0 * hd * hd * m4;
  out.ok = out.error < out.tolerance;
  return out;
}

inline thetacert::EvalConfig config() {
  thetacert::EvalConfig cfg;
  cfg.precision_bits = kPrecision;
  cfg.tail_tolerance_log2 = 28 - static_cast<long>(kPrecision);
  return cfg;
}

/// Every derivative formula of the library against a difference of the
/// order below.
inline std::vector<Outcome> run_all() {
  using namespace thetacert;
  const EvalConfig cfg = config();
  std::vector<Outcome> out;
  for (int nu = 0; nu < 3; ++nu) {
    const DerivativeOrder lo(nu);
    const DerivativeOrder up(nu + 1);
    for (double y : {0.5, 1.0, 2.0}) {
      out.push_back(central("theta4^(" + std::to_string(nu + 1) + ")",
                            [&](const Enclosure& t) { return theta4_series(t, lo, cfg); },
                            [&](const Enclosure& t) { return theta4_series(t, up, cfg); }, y));
      out.push_back(central("theta2^(" + std::to_string(nu + 1) + ")",
                            [&](const Enclosure& t) { return theta2_series(t, lo, cfg); },
                            [&](const Enclosure& t) { return theta2_series(t, up, cfg); }, y));
    }
  }
  // The modular route on its own side of the threshold.
  for (int nu = 0; nu < 3; ++nu) {
    const DerivativeOrder lo(nu);
    const DerivativeOrder up(nu + 1);
    out.push_back(central("theta4_modular^(" + std::to_string(nu + 1) + ")",
                          [&](const Enclosure& t) { return theta4_via_modular(t, lo, cfg); },
                          [&](const Enclosure& t) { return theta4_via_modular(t, up, cfg); }, 0.3));
  }
  for (double y : {0.5, 1.0, 2.0}) {
    out.push_back(central("f'", [&](const Enclosure& t) { return f_lambert(t, cfg); },
                          [&](const Enclosure& t) { return f_prime_lambert(t, cfg); }, y));
    out.push_back(central("f''", [&](const Enclosure& t) { return f_prime_lambert(t, cfg); },
                          [&](const Enclosure& t) { return f_second_lambert(t, cfg); }, y));
  }
  for (double y : {0.1, 0.3}) {
    out.push_back(central("f'_modular", [&](const Enclosure& t) { return f_modular(t, 0, cfg); },
                          [&](const Enclosure& t) { return f_modular(t, 1, cfg); }, y));
    out.push_back(central("f''_modular", [&](const Enclosure& t) { return f_modular(t, 1, cfg); },
                          [&](const Enclosure& t) { return f_modular(t, 2, cfg); }, y));
  }
  for (double y : {0.5, 1.0, 2.0}) {
    out.push_back(central("g'", [](const Enclosure& t) { return g_eval(t); },
                          [](const Enclosure& t) { return g_prime(t); }, y));
    out.push_back(central("g''", [](const Enclosure& t) { return g_prime(t); },
                          [](const Enclosure& t) { return g_second(t); }, y));
  }
  for (const char* a_text : {"2", "2.1", "3", "0"}) {
    const Rational a = Rational::parse(a_text);
    const auto f_a = [&](const Enclosure& t) {
      return pow(t, a) * theta4(t, DerivativeOrder(1), cfg) / theta4(t, DerivativeOrder(0), cfg);
    };
    for (double y : {0.15, 0.5, 1.0}) {
      out.push_back(central_second(std::string("f_a'' a=") + a_text, f_a,
                                   [&](const Enclosure& t) { return f_a_second(a, t, cfg); }, y));
    }
  }
  return out;
}

}  // namespace fdcheck

#endif  // THETACERT_TESTS_FD_SUPPORT_HPP
