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

#ifndef THETACERT_THETA_HPP
#define THETACERT_THETA_HPP

#include <stdexcept>
#include <string>

#include "thetacert/enclosure.hpp"

namespace thetacert {

enum class ThetaKind { theta2, theta4 };

/// Order of differentiation, restricted to 0..3.
class DerivativeOrder {
 public:
  constexpr explicit DerivativeOrder(int value) : value_(value) {
    if (value < 0 || value > 3) {
      throw std::invalid_argument("derivative order must lie in 0..3");
    }
  }
  [[nodiscard]] constexpr int value() const { return value_; }
  friend constexpr bool operator==(DerivativeOrder, DerivativeOrder) = default;

 private:
  int value_;
};

// All routines below take the argument y on the positive imaginary axis
// rotated to the real line, require y.lo > 0 (DomainError otherwise) and
// return enclosures whose truncation tails are certified and included.
//
//   theta4(y) = sum_k (-1)^k exp(-pi k^2 y)
//   theta2(y) = sum_n exp(-pi y (n + 1/2)^2)

/// nu-th derivative of theta4 by the termwise-differentiated series.
Enclosure theta4_series(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg);

/// theta4 by the product prod (1 - q^{2n}) (1 - q^{2n-1})^2, q = exp(-pi y).
Enclosure theta4_product(const Enclosure& y, const EvalConfig& cfg);

/// nu-th derivative of theta2; (-1)^nu theta2^(nu) > 0 for all y > 0.
Enclosure theta2_series(const Enclosure& y, DerivativeOrder nu, const EvalConfig& cfg);

/// f(y) = y^2 theta4'(y) / theta4(y) and its first two derivatives, from the
/// Lambert-type series obtained by differentiating log of the product form:
///
///   f   = 2 y^2 sum_n ( n pi / (e^{2n pi y} - 1) + (2n-1) pi / (e^{(2n-1) pi y} - 1) )
///
/// and its termwise derivatives. `order` is 0, 1 or 2.
Enclosure lambert_series(const Enclosure& y, int order, const EvalConfig& cfg);

inline Enclosure f_lambert(const Enclosure& y, const EvalConfig& cfg) {
  return lambert_series(y, 0, cfg);
}
inline Enclosure f_prime_lambert(const Enclosure& y, const EvalConfig& cfg) {
  return lambert_series(y, 1, cfg);
}
inline Enclosure f_second_lambert(const Enclosure& y, const EvalConfig& cfg) {
  return lambert_series(y, 2, cfg);
}

namespace detail {
void require_positive(const Enclosure& y, const char* what);
}

}  // namespace thetacert

#endif  // THETACERT_THETA_HPP
