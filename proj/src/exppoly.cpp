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

#include "thetacert/exppoly.hpp"

#include <algorithm>

namespace thetacert {

namespace {

bool exact_zero(const Enclosure& e) { return mpfr_zero_p(e.lo()) != 0 && mpfr_zero_p(e.hi()) != 0; }

}  // namespace

ExpPoly ExpPoly::term(int k, const Enclosure& a, const Enclosure& b) {
  ExpPoly p(std::max(a.precision(), b.precision()));
  p.accumulate(k, a, b);
  return p;
}

ExpPoly ExpPoly::term(int k, const Enclosure& c) {
  return term(k, Enclosure::point(0, c.precision()), c);
}

LinearCoeff ExpPoly::coefficient(int k) const {
  const auto it = terms_.find(k);
  if (it != terms_.end()) return it->second;
  return {Enclosure::point(0, precision_), Enclosure::point(0, precision_)};
}

bool ExpPoly::has_linear_part() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return !exact_zero(kv.second.a); });
}

void ExpPoly::accumulate(int k, const Enclosure& a, const Enclosure& b) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, LinearCoeff{a, b});
  } else {
    it->second.a += a;
    it->second.b += b;
  }
}

ExpPoly ExpPoly::multiply_by_y() const {
  if (has_linear_part()) throw DegreeError("ExpPoly::multiply_by_y would create a y^2 coefficient");
  ExpPoly out(precision_);
  for (const auto& [k, c] : terms_) out.accumulate(k, c.b, Enclosure::point(0, precision_));
  return out;
}

ExpPoly ExpPoly::shifted(int dk) const {
  ExpPoly out(precision_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k + dk, c);
  return out;
}

Enclosure ExpPoly::evaluate(const Enclosure& y) const {
  const Enclosure quarter_pi = Enclosure::pi(precision_) / 4;
  Enclosure sum(precision_);
  for (const auto& [k, c] : terms_) {
    sum += (c.a * y + c.b) * exp(quarter_pi * y * static_cast<long>(k));
  }
  return sum;
}

ExpPoly operator+(const ExpPoly& p, const ExpPoly& q) {
  ExpPoly out = p;
  out.precision_ = std::max(p.precision_, q.precision_);
  for (const auto& [k, c] : q.terms_) out.accumulate(k, c.a, c.b);
  return out;
}

ExpPoly operator-(const ExpPoly& p, const ExpPoly& q) { return p + q * Enclosure::point(-1, q.precision_); }

ExpPoly operator*(const ExpPoly& p, const ExpPoly& q) {
  if (p.has_linear_part() && q.has_linear_part()) {
    throw DegreeError("ExpPoly product would create a y^2 coefficient");
  }
  ExpPoly out(std::max(p.precision_, q.precision_));
  for (const auto& [kp, cp] : p.terms_) {
    for (const auto& [kq, cq] : q.terms_) {
      // (a1 y + b1)(a2 y + b2) with a1 a2 = 0
      out.accumulate(kp + kq, cp.a * cq.b + cp.b * cq.a, cp.b * cq.b);
    }
  }
  return out;
}

ExpPoly operator*(const ExpPoly& p, const Enclosure& c) {
  ExpPoly out(p.precision_);
  for (const auto& [k, v] : p.terms_) out.terms_.emplace(k, LinearCoeff{v.a * c, v.b * c});
  return out;
}

}  // namespace thetacert
