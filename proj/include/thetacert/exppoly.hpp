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

#ifndef THETACERT_EXPPOLY_HPP
#define THETACERT_EXPPOLY_HPP

#include <map>
#include <stdexcept>

#include "thetacert/enclosure.hpp"

namespace thetacert {

/// Raised when an ExpPoly operation would produce a coefficient of degree 2
/// in y.
class DegreeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// a y + b
struct LinearCoeff {
  Enclosure a;
  Enclosure b;
};

/// Finite sum  sum_k (a_k y + b_k) e^{k pi y / 4}  with integer k.
///
/// Exponents combine exactly; coefficients use enclosure arithmetic. The
/// coefficients are kept at most linear in y: a product of two terms that
/// both carry y throws DegreeError.
class ExpPoly {
 public:
  explicit ExpPoly(unsigned precision_bits = 128) : precision_(precision_bits) {}

  /// Single term (a y + b) e^{k pi y / 4}.
  static ExpPoly term(int k, const Enclosure& a, const Enclosure& b);
  /// Constant-coefficient term c e^{k pi y / 4}.
  static ExpPoly term(int k, const Enclosure& c);

  [[nodiscard]] unsigned precision() const { return precision_; }
  [[nodiscard]] const std::map<int, LinearCoeff>& terms() const { return terms_; }
  /// Coefficient of e^{k pi y/4}; exact zeros when absent.
  [[nodiscard]] LinearCoeff coefficient(int k) const;
  /// Whether any coefficient has a y part that is not exactly zero.
  [[nodiscard]] bool has_linear_part() const;

  /// Multiplies every coefficient by y; throws DegreeError if one already
  /// has a y part.
  [[nodiscard]] ExpPoly multiply_by_y() const;
  /// Adds dk to every exponent, i.e. multiplies by e^{dk pi y / 4}.
  [[nodiscard]] ExpPoly shifted(int dk) const;
  [[nodiscard]] Enclosure evaluate(const Enclosure& y) const;

  friend ExpPoly operator+(const ExpPoly& p, const ExpPoly& q);
  friend ExpPoly operator-(const ExpPoly& p, const ExpPoly& q);
  friend ExpPoly operator*(const ExpPoly& p, const ExpPoly& q);
  friend ExpPoly operator*(const ExpPoly& p, const Enclosure& c);
  friend ExpPoly operator*(const Enclosure& c, const ExpPoly& p) { return p * c; }

 private:
  void accumulate(int k, const Enclosure& a, const Enclosure& b);

  unsigned precision_;
  std::map<int, LinearCoeff> terms_;
};

}  // namespace thetacert

#endif  // THETACERT_EXPPOLY_HPP
