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


#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "thetacert/enclosure.hpp"

using namespace thetacert;

namespace {

Enclosure iv(double lo, double hi, unsigned prec = 128) {
  return Enclosure::hull(Enclosure::from_double(lo, prec), Enclosure::from_double(hi, prec));
}

// 2^(1 - prec) relative.
bool ulp_close(const Enclosure& e, double scale, int ulps) {
  return e.width_double() <= ulps * std::ldexp(scale, 1 - static_cast<int>(e.precision()));
}

}  // namespace

TEST_CASE("integer sum is tight") {
  const auto s = Enclosure::point(1, 128) + Enclosure::point(2, 128);
  CHECK(s.contains_decimal("3"));
  CHECK(ulp_close(s, 3.0, 2));
}

TEST_CASE("interval product and quotient") {
  const auto p = iv(-1, 1) * iv(-1, 1);
  CHECK(p.lo_double() == -1.0);
  CHECK(p.hi_double() == 1.0);

  const auto q = iv(1, 2) / Enclosure::point(4, 128);
  CHECK(q.contains_decimal("0.25"));
  CHECK(q.contains_decimal("0.5"));
  CHECK(q.lo_double() >= 0.25 - 1e-30);
  CHECK(q.hi_double() <= 0.5 + 1e-30);
}

TEST_CASE("division by an enclosure containing zero is an error") {
  CHECK_THROWS_AS(Enclosure::point(1, 128) / iv(-1, 1), DomainError);
  CHECK_THROWS_AS(Enclosure::point(1, 128) / Enclosure::point(0, 128), DomainError);
  CHECK_THROWS_AS(reciprocal(iv(0, 1)), DomainError);
}

TEST_CASE("exp, pi, pow") {
  CHECK(exp(Enclosure::point(0, 128)).contains_decimal("1"));
  const auto pi = Enclosure::pi(128);
  CHECK(pi.contains_decimal(oracle::kPi50));
  CHECK(pi.width_double() <= std::ldexp(4.0, 1 - 128));
  // The table value is truncated after 50 decimals.
  const auto table = Enclosure::from_decimal_bounds(oracle::kPi50, "3.14159265358979323846264338327950288419716939937511", 256);
  CHECK(table.contains(Enclosure::pi(256)));
  CHECK(pow(Enclosure::point(4, 128), Rational{1, 2}).contains_decimal("2"));
}

TEST_CASE("fractional power of a non-positive enclosure is an error") {
  CHECK_THROWS_AS(pow(iv(-1, 2), Rational{1, 2}), DomainError);
  CHECK_THROWS_AS(pow(Enclosure::point(0, 128), Rational{3, 2}), DomainError);
  CHECK_THROWS_AS(log(iv(0, 1)), DomainError);
}

TEST_CASE("malformed decimals are rejected") {
  CHECK_THROWS_AS(Enclosure::from_decimal("1.2.3", 128), std::invalid_argument);
  CHECK_THROWS_AS(Enclosure::from_decimal("", 128), std::invalid_argument);
  CHECK_THROWS_AS(Enclosure::from_decimal("abc", 128), std::invalid_argument);
  const auto tenth = Enclosure::from_decimal("0.1", 128);
  CHECK(!tenth.is_point());
  CHECK(tenth.contains_decimal("0.1"));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("2.1") == Rational{21, 10});
  CHECK(Rational::parse("-3") == Rational{-3, 1});
  CHECK(Rational::parse("7/4") == Rational{7, 4});
  CHECK(Rational::parse("0.00001").reduced() == Rational{1, 100000});
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("containment against 512-bit evaluation") {
  std::mt19937_64 rng(20260416);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  std::uniform_real_distribution<double> pos(0.01, 8.0);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    const double z = pos(rng);
    const auto at = [&](unsigned prec) {
      const auto ex = Enclosure::from_double(x, prec);
      const auto ez = Enclosure::from_double(z, prec);
      return std::vector<Enclosure>{ex + ez, ex - ez, ex * ez, ex / ez, exp(ex), log(ez), sqrt(ez),
                                    pow(ez, Rational{9, 2}), pow(ex, 3L)};
    };
    const auto coarse = at(256);
    const auto fine = at(512);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
      INFO("op " << k << " x=" << x << " z=" << z);
      CHECK(coarse[k].contains(fine[k].midpoint()));
    }
  }
}

TEST_CASE("more precision never widens beyond rounding slack") {
  const auto y = Enclosure::from_double(0.7, 128);
  const auto w128 = (exp(y) * Enclosure::pi(128) / 3).width_double();
  const auto y256 = y.with_precision(256);
  const auto w256 = (exp(y256) * Enclosure::pi(256) / 3).width_double();
  CHECK(w256 <= w128);
}

TEST_CASE("width-zero inputs stay within a few ulp") {
  const auto a = Enclosure::from_double(1.25, 128);
  const auto b = Enclosure::from_double(3.5, 128);
  CHECK(ulp_close(a + b, 4.75, 4));
  CHECK(ulp_close(a - b, 2.25, 4));
  CHECK(ulp_close(a * b, 4.375, 4));
  const auto c = Enclosure::from_decimal("0.3", 128).midpoint();
  const auto d = Enclosure::from_decimal("0.7", 128).midpoint();
  CHECK(ulp_close(c * d, 0.21, 4));
}

TEST_CASE("config validation and escalation") {
  EvalConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  const auto up = cfg.escalated();
  CHECK(up.precision_bits == 256);
  CHECK(up.tail_tolerance_log2 < cfg.tail_tolerance_log2);
  EvalConfig bad;
  bad.precision_bits = 32;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = EvalConfig{};
  bad.tail_tolerance_log2 = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("decimal endpoint strings round outward") {
  const auto e = Enclosure::from_decimal("0.1", 128);
  const auto back = Enclosure::from_decimal_bounds(e.lo_string(30), e.hi_string(30), 128);
  CHECK(back.contains(e));
}
