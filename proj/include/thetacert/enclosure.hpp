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

#ifndef THETACERT_ENCLOSURE_HPP
#define THETACERT_ENCLOSURE_HPP

#include <mpfr.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thetacert {

/// Raised when an argument lies outside the domain of an operation
/// (division by an enclosure containing zero, y <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a truncated series cannot meet its tail tolerance within
/// `EvalConfig::max_terms` terms.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation settings shared by every certified routine.
struct EvalConfig {
  unsigned precision_bits = 128;
  /// log2 of the tail tolerance: each truncated tail must stay below
  /// 2^tail_tolerance_log2 times the largest term magnitude of its series.
  long tail_tolerance_log2 = -100;
  std::size_t max_terms = 1'000'000;

  [[nodiscard]] double tail_tolerance() const;

  /// Throws std::invalid_argument unless precision_bits >= 53 and the
  /// tolerance is below one.
  void validate() const;

  /// Doubles the precision and tightens the tail tolerance accordingly.
  [[nodiscard]] EvalConfig escalated() const;
};

/// Exact rational number; used for exponents and decimal literals.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Parses "2.1", "-3", "0.00001", "7/4". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] Rational reduced() const;
  [[nodiscard]] bool is_integer() const { return reduced().den == 1; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, std::int64_t d);
  friend bool operator==(const Rational& a, const Rational& b);
};

/// A closed interval [lo, hi] of MPFR reals guaranteed to contain an exact
/// value. All arithmetic rounds outward, so containment survives every
/// operation. The precision of a result is the larger of its operands'.
class Enclosure {
 public:
  explicit Enclosure(unsigned precision_bits = 128);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure point(long value, unsigned precision_bits);
  /// Exact: every double is representable at >= 53 bits.
  static Enclosure from_double(double value, unsigned precision_bits);
  static Enclosure from_rational(const Rational& value, unsigned precision_bits);
  /// Outward-rounded enclosure of a decimal string such as "0.1" or
  /// "-1.5e-7". Throws std::invalid_argument on malformed input.
  static Enclosure from_decimal(std::string_view text, unsigned precision_bits);
  /// Interval from two decimal endpoint strings, lo rounded down and hi up.
  static Enclosure from_decimal_bounds(std::string_view lo, std::string_view hi,
                                       unsigned precision_bits);
  /// Smallest enclosure covering both arguments.
  static Enclosure hull(const Enclosure& a, const Enclosure& b);
  /// Enclosure of pi, cached per precision.
  static Enclosure pi(unsigned precision_bits);

  [[nodiscard]] unsigned precision() const { return precision_; }
  [[nodiscard]] mpfr_srcptr lo() const { return lo_; }
  [[nodiscard]] mpfr_srcptr hi() const { return hi_; }

  /// Endpoints as doubles, rounded outward.
  [[nodiscard]] double lo_double() const;
  [[nodiscard]] double hi_double() const;
  [[nodiscard]] double mid_double() const;
  /// Upper bound on hi - lo.
  [[nodiscard]] double width_double() const;
  /// True when hi - lo < 2^log2_bound.
  [[nodiscard]] bool width_below_pow2(long log2_bound) const;

  [[nodiscard]] bool is_positive() const;  // lo > 0
  [[nodiscard]] bool is_negative() const;  // hi < 0
  [[nodiscard]] bool is_point() const;
  [[nodiscard]] bool contains_zero() const;
  [[nodiscard]] bool contains(const Enclosure& inner) const;
  [[nodiscard]] bool contains_decimal(std::string_view text) const;
  [[nodiscard]] bool overlaps(const Enclosure& other) const;

  /// Exact midpoint rounded to nearest at this precision, clamped into
  /// [lo, hi]; returned as a width-zero enclosure.
  [[nodiscard]] Enclosure midpoint() const;
  [[nodiscard]] Enclosure lower_point() const;
  [[nodiscard]] Enclosure upper_point() const;
  /// Same interval widened to a new precision (exact).
  [[nodiscard]] Enclosure with_precision(unsigned precision_bits) const;
  /// Intersection; throws DomainError if disjoint.
  [[nodiscard]] Enclosure intersect(const Enclosure& other) const;

  /// Decimal endpoint strings with `digits` significant digits, lo rounded
  /// down and hi rounded up, in the form "d.ddde[+-]x".
  [[nodiscard]] std::string lo_string(int digits = 40) const;
  [[nodiscard]] std::string hi_string(int digits = 40) const;
  /// "[lo, hi]".
  [[nodiscard]] std::string to_string(int digits = 20) const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a);

  friend Enclosure operator+(const Enclosure& a, long b);
  friend Enclosure operator+(long a, const Enclosure& b) { return b + a; }
  friend Enclosure operator-(const Enclosure& a, long b);
  friend Enclosure operator-(long a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, long b);
  friend Enclosure operator*(long a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, long b);
  friend Enclosure operator/(long a, const Enclosure& b) { return point(a, b.precision()) / b; }

  Enclosure& operator+=(const Enclosure& b) { return *this = *this + b; }
  Enclosure& operator-=(const Enclosure& b) { return *this = *this - b; }
  Enclosure& operator*=(const Enclosure& b) { return *this = *this * b; }

  /// Certainly-less / certainly-greater comparisons.
  friend bool certainly_lt(const Enclosure& a, const Enclosure& b);
  friend bool certainly_gt(const Enclosure& a, const Enclosure& b);

 private:
  void set_bounds(mpfr_srcptr lo, mpfr_srcptr hi);

  unsigned precision_;
  mpfr_t lo_;
  mpfr_t hi_;

  friend Enclosure exp(const Enclosure& a);
  friend Enclosure log(const Enclosure& a);
  friend Enclosure sqrt(const Enclosure& a);
  friend Enclosure abs(const Enclosure& a);
  friend Enclosure pow(const Enclosure& a, long n);
  friend Enclosure pow(const Enclosure& a, const Rational& p);
  friend Enclosure reciprocal(const Enclosure& a);
  friend Enclosure ldexp(const Enclosure& a, long e);
};

Enclosure exp(const Enclosure& a);
/// Requires a.lo > 0.
Enclosure log(const Enclosure& a);
/// Requires a.lo >= 0.
Enclosure sqrt(const Enclosure& a);
Enclosure abs(const Enclosure& a);
/// Integer power; negative n requires a not containing zero.
Enclosure pow(const Enclosure& a, long n);
/// Rational power; a non-integer exponent requires a.lo > 0.
Enclosure pow(const Enclosure& a, const Rational& p);
/// Requires a not containing zero.
Enclosure reciprocal(const Enclosure& a);
/// a * 2^e, exact.
Enclosure ldexp(const Enclosure& a, long e);

}  // namespace thetacert

#endif  // THETACERT_ENCLOSURE_HPP
