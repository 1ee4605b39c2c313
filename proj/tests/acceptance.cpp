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


// Acceptance driver: one PASS/FAIL line per criterion. With a numeric
// argument only that criterion runs (each one is its own ctest entry).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fd_support.hpp"
#include "oracle_values.hpp"
#include "thetacert/envelopes.hpp"
#include "thetacert/modular.hpp"
#include "thetacert/scanner.hpp"
#include "thetacert/suites.hpp"
#include "thetacert/theta.hpp"
#include "thetacert/verifier.hpp"

using namespace thetacert;

namespace {

// Pinned tolerances and limits.
constexpr double kGreekWidth = 1e-8;
constexpr long kCrossWidthLog2 = -80;
constexpr double kWitnessRelTol = 0.10;
constexpr double kLimitSeconds[9] = {0, 5, 1, 10, 300, 120, 60, 60, 60};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

Enclosure at(double y) { return Enclosure::from_double(y, 128); }

void expect_certified(Outcome& o, const CertificationReport& r) {
  if (!r.certified()) o.fail(r.id + " " + std::string(to_string(r.status)) + ": " + r.first_problem());
}

void expect_failed(Outcome& o, const CertificationReport& r, const std::string& what) {
  if (r.status != Status::failed) o.fail("mutation not caught: " + what);
}

void criterion1(Outcome& o) {
  const auto suite = run_suite("greek", EvalConfig{});
  for (const auto& [name, printed] : kPrintedGreek) {
    const ValueRecord* v = nullptr;
    for (const auto& rec : suite.values) {
      if (rec.name == name) v = &rec;
    }
    if (v == nullptr) {
      o.fail(std::string(name) + " missing");
      continue;
    }
    const auto e = v->value.to_enclosure(128);
    if (!(e.width_double() < kGreekWidth)) o.fail(std::string(name) + " too wide");
    const bool shown = matches_printed(e, printed, DecimalRounding::nearest) ||
                       matches_printed(e, printed, DecimalRounding::truncated);
    if (!shown) o.fail(std::string(name) + " = " + e.to_string(12) + " does not show as " + std::string(printed));
  }
  for (const auto& r : suite.reports) expect_certified(o, r);
  if (o.pass) o.detail << "six constants match printed digits, widths < 1e-8";
}

void criterion2(Outcome& o) {
  const auto one = Enclosure::point(1, 256);
  const auto g1 = g_eval(one);
  const auto gp1 = g_prime(one);
  if (!matches_printed(g1, "55.5")) o.fail("g(1) = " + g1.to_string(12));
  if (!matches_printed(gp1, "3584.5")) o.fail("g'(1) = " + gp1.to_string(12));
  if (!oracle::agrees(g1, oracle::kG_1)) o.fail("g(1) misses the oracle");
  if (!oracle::agrees(gp1, oracle::kGPrime_1)) o.fail("g'(1) misses the oracle");
  if (o.pass) o.detail << "g(1) = " << g1.to_string(8) << ", g'(1) = " << gp1.to_string(9);
}

void criterion3(Outcome& o) {
  const EvalConfig cfg;
  const auto lemma = verify_envelope_lemma(cfg);
  expect_certified(o, lemma);
  const auto grid = log_grid(1, 100, 40, cfg.precision_bits);
  const EnvelopeConstants constants;
  for (int nu = 0; nu < 4; ++nu) {
    const auto r = verify_sandwich(grid, DerivativeOrder(nu), cfg);
    expect_certified(o, r);
    if (r.checks.size() != 40) o.fail("sandwich nu=" + std::to_string(nu) + " has " + std::to_string(r.checks.size()) + " points");
    const auto factor = admissibility_factor(DerivativeOrder(nu), at(1));
    const auto c = Enclosure::from_rational(constants[DerivativeOrder(nu)], 128);
    if (!certainly_lt(factor, c)) o.fail("factor nu=" + std::to_string(nu) + " not below c");
    expect_certified(o, check_c_admissible(DerivativeOrder(nu), cfg));
  }
  if (o.pass) o.detail << "40 points x 4 orders certified; factors below c_nu";
}

void criterion4(Outcome& o) {
  EvalConfig cfg;
  cfg.precision_bits = 128;
  const auto a = Enclosure::from_decimal("0.05", 128);
  const auto b = Enclosure::point(20, 128);
  for (const auto& [kind, sign] : {std::pair{QuantityKind::f_second, Sign::positive},
                                   std::pair{QuantityKind::f_prime, Sign::negative}}) {
    const auto r = certify_quantity(kind, a, b, sign, cfg);
    expect_certified(o, r);
    if (r.precision_bits != 128) o.fail(r.id + " precision " + std::to_string(r.precision_bits));
    if (r.children.size() != 2) {
      o.fail(r.id + " lacks two routes");
      continue;
    }
    // Modular route reaches 1.25, Lambert route starts at 0.8.
    const auto& modular = r.children[0];
    const auto& lambert = r.children[1];
    if (modular.interval.hi_double() < kRouteOverlapHi) o.fail("modular route stops short");
    if (lambert.interval.lo_double() > kRouteOverlapLo) o.fail("Lambert route starts late");
  }
  if (o.pass) o.detail << "f'' > 0 and f' < 0 on [0.05, 20], routes overlap on [0.8, 1.25]";
}

void criterion5(Outcome& o) {
  const EvalConfig cfg;
  const auto pi = Enclosure::pi(128);
  expect_certified(o, verify_even_terms_large_y(50, 2 / pi, at(30), cfg));
  expect_certified(o, verify_odd_terms_large_y(50, at(1), at(30), cfg));
  expect_certified(o, verify_g_chain(cfg));
  const auto small = verify_small_y_chain(cfg);
  expect_certified(o, small);
  const auto large = verify_large_y_chain(cfg);
  const std::vector<CertificationReport> convexity = {large, small};
  expect_certified(o, verify_decreasing_argument(cfg, convexity));

  // Mutations.
  GCoefficients flipped;
  flipped.cross = 4;
  expect_failed(o, verify_g_chain(cfg, flipped), "g cross term sign");
  expect_failed(o, certify_convexity(at(0.5), at(1), Sign::negative, cfg), "wrong-sign f''");
  auto broken = kModularCoefficients;
  broken[1][0] = Rational{1, 2};
  expect_failed(o, verify_modular_identity(at(0.5), at(2), DerivativeOrder(1), cfg, broken),
                "modular coefficient -1/2 -> +1/2");
  EnvelopeConstants zero;
  for (auto& c : zero.c) c = Rational{0, 1};
  const std::vector<Enclosure> one = {at(1)};
  for (int nu = 0; nu < 4; ++nu) {
    expect_failed(o, verify_sandwich(one, DerivativeOrder(nu), cfg, zero),
                  "c_nu -> 0 at nu=" + std::to_string(nu));
  }
  EnvelopeConstants tiny;
  tiny.c[0] = Rational{1, 10000000};
  expect_failed(o, check_c_admissible(DerivativeOrder(0), cfg, tiny), "c_0 = 1e-7");
  if (!even_bracket(1, at(0.1)).is_negative()) o.fail("even bracket below 2/pi not negative");
  if (!odd_bracket(2, at(0.4)).is_negative()) o.fail("odd bracket below 4/(3 pi) not negative");
  if (o.pass) o.detail << "chains certified, mutations caught";
}

void criterion6(Outcome& o) {
  const EvalConfig cfg;
  const auto a = Enclosure::from_decimal("0.2", 128);
  const auto b = Enclosure::point(5, 128);
  for (int nu = 0; nu < 4; ++nu) {
    const auto r = verify_modular_identity(a, b, DerivativeOrder(nu), cfg, kModularCoefficients, 10,
                                           kCrossWidthLog2);
    expect_certified(o, r);
  }
  for (int i = 0; i < 10; ++i) {
    const double y = 0.2 * std::pow(25.0, i / 9.0);
    const auto s = theta4_series(at(y), DerivativeOrder(0), cfg);
    const auto p = theta4_product(at(y), cfg);
    const auto m = theta4_via_modular(at(y), DerivativeOrder(0), cfg);
    if (!s.overlaps(p) || !s.overlaps(m) || !p.overlaps(m)) o.fail("theta4 routes disagree at " + std::to_string(y));
    const auto joint = Enclosure::hull(Enclosure::hull(s, p), m);
    if (!joint.width_below_pow2(kCrossWidthLog2)) o.fail("theta4 combined width at " + std::to_string(y));
  }
  for (int i = 0; i < 20; ++i) {
    const double y = 0.2 * std::pow(25.0, i / 19.0);
    const auto t = theta4_series(at(y), DerivativeOrder(0), cfg);
    const auto h = h_direct(at(y), cfg) / pow(t, 3L);
    if (!h.overlaps(f_second_lambert(at(y), cfg))) o.fail("h/theta4^3 vs f'' at " + std::to_string(y));
  }
  if (o.pass) o.detail << "series, product, modular agree below 2^-80; h route matches f''";
}

void criterion7(Outcome& o) {
  const EvalConfig cfg;
  ExponentQuery q;
  q.a = Rational{21, 10};
  const auto w = find_nonconvex_witness(q, cfg);
  if (!w) {
    o.fail("no witness for a = 2.1");
  } else {
    const double y = w->y.mid_double();
    if (!w->value.is_negative()) o.fail("witness not strictly negative");
    if (!(y > q.lo && y < q.hi)) o.fail("witness outside (0.05, 5)");
    if (std::fabs(y - oracle::kWitnessY_21) > kWitnessRelTol * oracle::kWitnessY_21) {
      o.fail("witness y = " + std::to_string(y) + " away from the oracle location");
    }
    if (o.pass) o.detail << "a=2.1 witness y=" << w->y.to_string(10) << " f_a''=" << w->value.to_string(8);
  }
  q.a = Rational{2, 1};
  if (find_nonconvex_witness(q, cfg)) o.fail("unexpected witness for a = 2");
  if (o.pass) o.detail << "; a=2 none";
}

void criterion8(Outcome& o) {
  std::size_t n = 0;
  for (const auto& r : fdcheck::run_all()) {
    ++n;
    if (!r.ok) {
      std::ostringstream s;
      s << r.name << " at y=" << r.y << " error " << r.error << " > " << r.tolerance;
      o.fail(s.str());
    }
  }
  if (o.pass) o.detail << n << " central-difference comparisons within 10 h^2 M";
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> kCriteria = {
    {"constant reproduction", criterion1},
    {"g checkpoints", criterion2},
    {"envelope sandwich", criterion3},
    {"sign certification at desk scale", criterion4},
    {"termwise chains and mutations", criterion5},
    {"cross-representation consistency", criterion6},
    {"exponent witness", criterion7},
    {"finite differences", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::fprintf(stderr, "usage: acceptance [1..%zu]\n", kCriteria.size());
    return 2;
  }
  int failures = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only != 0 && number != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      kCriteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kLimitSeconds[number]) {
      std::ostringstream s;
      s << "runtime " << secs << " s over " << kLimitSeconds[number] << " s";
      o.fail(s.str());
    }
    std::printf("criterion %d (%s): %s (%.2f s) %s\n", number, kCriteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
