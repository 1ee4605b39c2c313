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


#include "doctest.h"
#include "fd_support.hpp"
#include "oracle_values.hpp"
#include "thetacert/theta.hpp"

using namespace thetacert;

namespace {

Enclosure at(double y, unsigned prec = 128) { return Enclosure::from_double(y, prec); }

}  // namespace

TEST_CASE("theta4 series against the oracle") {
  const EvalConfig cfg;
  for (int nu = 0; nu < 4; ++nu) {
    CHECK(oracle::agrees(theta4_series(at(1), DerivativeOrder(nu), cfg), oracle::kTheta4_1[nu]));
    CHECK(oracle::agrees(theta4_series(at(0.5), DerivativeOrder(nu), cfg), oracle::kTheta4_05[nu]));
  }
  const auto t10 = theta4_series(at(10), DerivativeOrder(0), cfg);
  CHECK(oracle::agrees(t10, oracle::kTheta4_10_0));
  CHECK(certainly_lt(t10, Enclosure::point(1, 128)));
  CHECK(certainly_gt(t10, Enclosure::from_decimal("0.9999999999997", 128)));
  CHECK(oracle::agrees(theta4_series(at(10), DerivativeOrder(1), cfg), oracle::kTheta4_10_1, 1e-25));
  CHECK(oracle::agrees(theta4_series(at(2), DerivativeOrder(1), cfg), oracle::kTheta4_2_1));
}

TEST_CASE("theta4 product agrees with the series") {
  const EvalConfig cfg;
  for (double y : {0.5, 1.0, 2.0, 5.0}) {
    INFO("y = " << y);
    const auto s = theta4_series(at(y), DerivativeOrder(0), cfg);
    const auto p = theta4_product(at(y), cfg);
    CHECK(s.overlaps(p));
    CHECK(s.width_below_pow2(-90));
    CHECK(p.width_below_pow2(-90));
  }
}

TEST_CASE("theta2 against the oracle and its sign pattern") {
  const EvalConfig cfg;
  for (int nu = 0; nu < 4; ++nu) {
    CHECK(oracle::agrees(theta2_series(at(1), DerivativeOrder(nu), cfg), oracle::kTheta2_1[nu]));
    CHECK(oracle::agrees(theta2_series(at(2), DerivativeOrder(nu), cfg), oracle::kTheta2_2[nu]));
  }
  // Fixed point of y -> 1/y.
  CHECK(theta2_series(at(1), DerivativeOrder(0), cfg)
            .overlaps(theta4_series(at(1), DerivativeOrder(0), cfg)));
  CHECK(theta2_series(at(1), DerivativeOrder(1), cfg).is_negative());

  for (double y : {1.0, 1.7, 3.0, 7.5, 12.0, 20.0}) {
    for (int nu = 0; nu < 4; ++nu) {
      const auto v = theta2_series(at(y), DerivativeOrder(nu), cfg);
      INFO("y = " << y << " nu = " << nu);
      CHECK((nu % 2 == 0 ? v.is_positive() : v.is_negative()));
    }
  }
}

TEST_CASE("theta2 at 2 lies within its two-term bracket") {
  const EvalConfig cfg;
  const auto pi = Enclosure::pi(128);
  const auto lead = 2 * exp(-pi / 2);
  const auto next = 2 * exp(-9 * pi / 2) * Enclosure::from_decimal("1.001", 128);
  const auto v = theta2_series(at(2), DerivativeOrder(0), cfg);
  CHECK(certainly_gt(v, lead));
  CHECK(certainly_lt(v, lead + next));
}

TEST_CASE("Lambert series values") {
  const EvalConfig cfg;
  CHECK(oracle::agrees(f_lambert(at(1), cfg), oracle::kF_1));
  CHECK(oracle::agrees(f_lambert(at(2), cfg), oracle::kF_2));
  CHECK(oracle::agrees(f_prime_lambert(at(1), cfg), oracle::kFPrime_1));
  CHECK(oracle::agrees(f_second_lambert(at(1), cfg), oracle::kFSecond_1));
  CHECK(oracle::agrees(f_second_lambert(at(0.5), cfg), oracle::kFSecond_05));

  const auto f10 = f_lambert(at(10), cfg);
  CHECK(f10.is_positive());
  CHECK(certainly_lt(f10, Enclosure::from_decimal("1e-10", 128)));
  CHECK(oracle::agrees(f10, oracle::kF_10, 1e-25));

  const auto f2 = f_second_lambert(at(2), cfg);
  CHECK(f2.is_positive());
  CHECK(oracle::agrees(f2, oracle::kFSecond_2));
}

TEST_CASE("f is the scaled log-derivative of theta4") {
  const EvalConfig cfg;
  for (double y : {0.3, 1.0, 3.0}) {
    const auto ye = at(y);
    const auto ratio = ye * ye * theta4_series(ye, DerivativeOrder(1), cfg) /
                       theta4_series(ye, DerivativeOrder(0), cfg);
    INFO("y = " << y);
    CHECK(f_lambert(ye, cfg).overlaps(ratio));
  }
}

TEST_CASE("f decreases toward zero at large y") {
  const EvalConfig cfg;
  Enclosure prev = f_lambert(at(5), cfg);
  CHECK(prev.is_positive());
  for (double y : {10.0, 15.0, 20.0}) {
    const auto cur = f_lambert(at(y), cfg);
    CHECK(cur.is_positive());
    CHECK(certainly_lt(cur, prev));
    prev = cur;
  }
}

TEST_CASE("domain errors") {
  const EvalConfig cfg;
  CHECK_THROWS_AS(theta4_series(at(-1), DerivativeOrder(0), cfg), DomainError);
  CHECK_THROWS_AS(theta2_series(Enclosure::point(0, 128), DerivativeOrder(0), cfg), DomainError);
  CHECK_THROWS_AS(lambert_series(at(1), 3, cfg), std::invalid_argument);
  CHECK_THROWS_AS(DerivativeOrder(4), std::invalid_argument);
  CHECK_THROWS_AS(DerivativeOrder(-1), std::invalid_argument);
}

TEST_CASE("finite differences of the series") {
  // Step 2^-20, tolerance 10 h^2 times an estimate of the next derivative.
  for (const auto& o : fdcheck::run_all()) {
    if (o.name.rfind("theta", 0) != 0 && o.name.rfind("f'", 0) != 0 && o.name.rfind("f''", 0) != 0) {
      continue;
    }
    INFO(o.name << " at y=" << o.y << ": error " << o.error << " tolerance " << o.tolerance);
    CHECK(o.ok);
  }
}

TEST_CASE("theta4 finite difference at y=1 with the oracle bound") {
  // 10 h^2 |theta4^(3)(1)|, the third derivative taken from the oracle table.
  const auto cfg = fdcheck::config();
  const double h = std::ldexp(1.0, -20);
  const double bound = 10 * h * h * std::fabs(std::stod(oracle::kTheta4_1[3]));
  const auto o = fdcheck::central(
      "theta4", [&](const Enclosure& t) { return theta4_series(t, DerivativeOrder(0), cfg); },
      [&](const Enclosure& t) { return theta4_series(t, DerivativeOrder(1), cfg); }, 1.0);
  CHECK(o.error < bound);
}
