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

#include "thetacert/enclosure.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace thetacert {

namespace {

// RAII scratch register.
class Scratch {
 public:
  explicit Scratch(unsigned prec) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }  // NOLINT(google-explicit-constructor)

 private:
  mpfr_t v_;
};

unsigned joint_precision(const Enclosure& a, const Enclosure& b) {
  return std::max(a.precision(), b.precision());
}

std::string format_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), x, rnd);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string out;
  std::size_t i = 0;
  if (mantissa[0] == '-') {
    out.push_back('-');
    i = 1;
  }
  out.push_back(mantissa[i]);
  if (i + 1 < mantissa.size()) {
    out.push_back('.');
    out.append(mantissa, i + 1, std::string::npos);
  }
  const long e = static_cast<long>(exponent) - 1;
  out.push_back('e');
  out.push_back(e < 0 ? '-' : '+');
  out.append(std::to_string(std::labs(e)));
  return out;
}

void set_decimal(mpfr_ptr target, std::string_view text, mpfr_rnd_t rnd) {
  const std::string s(text);
  if (s.empty() || mpfr_set_str(target, s.c_str(), 10, rnd) != 0 || mpfr_nan_p(target)) {
    throw std::invalid_argument("malformed decimal: '" + s + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- EvalConfig

void EvalConfig::validate() const {
  if (precision_bits < 53) {
    throw std::invalid_argument("precision_bits must be at least 53");
  }
  if (tail_tolerance_log2 >= 0) {
    throw std::invalid_argument("tail tolerance must be below one");
  }
  if (max_terms == 0) {
    throw std::invalid_argument("max_terms must be positive");
  }
}

double EvalConfig::tail_tolerance() const {
  return std::ldexp(1.0, static_cast<int>(tail_tolerance_log2));
}

EvalConfig EvalConfig::escalated() const {
  EvalConfig next = *this;
  next.precision_bits = precision_bits * 2;
  next.tail_tolerance_log2 = tail_tolerance_log2 - static_cast<long>(precision_bits);
  return next;
}

// ------------------------------------------------------------------ Rational

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    return std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational n = parse(text.substr(0, slash));
    const Rational d = parse(text.substr(slash + 1));
    if (!n.is_integer() || !d.is_integer() || d.num == 0) throw fail();
    Rational r{n.num, d.num};
    if (r.den < 0) r = {-r.num, -r.den};
    return r.reduced();
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_dot = false;
  int digits = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) throw fail();
    if (++digits > 18) throw fail();
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
  }
  if (digits == 0) throw fail();
  return Rational{negative ? -num : num, den}.reduced();
}

Rational Rational::reduced() const {
  const std::int64_t g = std::gcd(num, den);
  if (g == 0) return *this;
  Rational r{num / g, den / g};
  if (r.den < 0) r = {-r.num, -r.den};
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational{a.num * b.den - b.num * a.den, a.den * b.den}.reduced();
}

Rational operator/(const Rational& a, std::int64_t d) {
  return Rational{a.num, a.den * d}.reduced();
}

bool operator==(const Rational& a, const Rational& b) {
  const Rational x = a.reduced();
  const Rational y = b.reduced();
  return x.num == y.num && x.den == y.den;
}

// ----------------------------------------------------------------- lifetime

Enclosure::Enclosure(unsigned precision_bits) : precision_(precision_bits) {
  mpfr_init2(lo_, static_cast<mpfr_prec_t>(precision_));
  mpfr_init2(hi_, static_cast<mpfr_prec_t>(precision_));
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) : precision_(other.precision_) {
  mpfr_init2(lo_, static_cast<mpfr_prec_t>(precision_));
  mpfr_init2(hi_, static_cast<mpfr_prec_t>(precision_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(lo_, static_cast<mpfr_prec_t>(precision_));
  mpfr_init2(hi_, static_cast<mpfr_prec_t>(precision_));
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(lo_, static_cast<mpfr_prec_t>(precision_));
    mpfr_set_prec(hi_, static_cast<mpfr_prec_t>(precision_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
  if (this != &other) {
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Enclosure::set_bounds(mpfr_srcptr lo, mpfr_srcptr hi) {
  mpfr_set(lo_, lo, MPFR_RNDD);
  mpfr_set(hi_, hi, MPFR_RNDU);
}

// ------------------------------------------------------------- construction

Enclosure Enclosure::point(long value, unsigned precision_bits) {
  Enclosure r(precision_bits);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::from_double(double value, unsigned precision_bits) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  Enclosure r(std::max(precision_bits, 53U));
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::from_rational(const Rational& value, unsigned precision_bits) {
  if (value.den == 0) throw DomainError("rational with zero denominator");
  Enclosure r(precision_bits);
  mpfr_set_si(r.lo_, static_cast<long>(value.num), MPFR_RNDD);
  mpfr_set_si(r.hi_, static_cast<long>(value.num), MPFR_RNDU);
  const Enclosure d = point(static_cast<long>(value.den), precision_bits);
  return r / d;
}

Enclosure Enclosure::from_decimal(std::string_view text, unsigned precision_bits) {
  return from_decimal_bounds(text, text, precision_bits);
}

Enclosure Enclosure::from_decimal_bounds(std::string_view lo, std::string_view hi,
                                         unsigned precision_bits) {
  Enclosure r(precision_bits);
  set_decimal(r.lo_, lo, MPFR_RNDD);
  set_decimal(r.hi_, hi, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) {
    throw std::invalid_argument("decimal bounds out of order");
  }
  return r;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  Enclosure r(joint_precision(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::pi(unsigned precision_bits) {
  static std::mutex mutex;
  static std::map<unsigned, Enclosure> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(precision_bits);
  if (it == cache.end()) {
    Enclosure r(precision_bits);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    it = cache.emplace(precision_bits, std::move(r)).first;
  }
  return it->second;
}

// ------------------------------------------------------------------ queries

double Enclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::mid_double() const {
  Scratch m(precision_ + 1);
  mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.get(), m, 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

double Enclosure::width_double() const {
  Scratch w(precision_);
  mpfr_sub(w.get(), hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

bool Enclosure::width_below_pow2(long log2_bound) const {
  Scratch w(precision_);
  mpfr_sub(w.get(), hi_, lo_, MPFR_RNDU);
  return mpfr_cmp_si_2exp(w.get(), 1, log2_bound) < 0;
}

bool Enclosure::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Enclosure::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool Enclosure::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) != 0 && mpfr_lessequal_p(inner.hi_, hi_) != 0;
}

bool Enclosure::contains_decimal(std::string_view text) const {
  return contains(from_decimal(text, std::max(precision_, 256U)));
}

bool Enclosure::overlaps(const Enclosure& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) != 0 && mpfr_lessequal_p(other.lo_, hi_) != 0;
}

Enclosure Enclosure::midpoint() const {
  Enclosure r(precision_);
  Scratch m(precision_);
  mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.get(), m, 1, MPFR_RNDN);
  if (mpfr_less_p(m.get(), lo_)) mpfr_set(m.get(), lo_, MPFR_RNDN);
  if (mpfr_greater_p(m.get(), hi_)) mpfr_set(m.get(), hi_, MPFR_RNDN);
  r.set_bounds(m.get(), m);
  return r;
}

Enclosure Enclosure::lower_point() const {
  Enclosure r(precision_);
  r.set_bounds(lo_, lo_);
  return r;
}

Enclosure Enclosure::upper_point() const {
  Enclosure r(precision_);
  r.set_bounds(hi_, hi_);
  return r;
}

Enclosure Enclosure::with_precision(unsigned precision_bits) const {
  Enclosure r(precision_bits);
  r.set_bounds(lo_, hi_);
  return r;
}

Enclosure Enclosure::intersect(const Enclosure& other) const {
  if (!overlaps(other)) throw DomainError("intersection of disjoint enclosures");
  Enclosure r(joint_precision(*this, other));
  mpfr_max(r.lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, hi_, other.hi_, MPFR_RNDU);
  return r;
}

std::string Enclosure::lo_string(int digits) const {
  return format_decimal(lo_, digits, MPFR_RNDD);
}

std::string Enclosure::hi_string(int digits) const {
  return format_decimal(hi_, digits, MPFR_RNDU);
}

std::string Enclosure::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

// --------------------------------------------------------------- arithmetic

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure r(joint_precision(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure r(joint_precision(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a) {
  Enclosure r(a.precision_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const unsigned prec = joint_precision(a, b);
  Enclosure r(prec);
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.hi_) <= 0 && mpfr_sgn(b.hi_) <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    return r;
  }
  Scratch t(prec);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_)) mpfr_set(r.lo_, t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_)) mpfr_set(r.hi_, t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Enclosure reciprocal(const Enclosure& a) {
  if (a.contains_zero()) {
    throw DomainError("division by an enclosure containing zero: " + a.to_string(10));
  }
  Enclosure r(a.precision_);
  mpfr_ui_div(r.lo_, 1, a.hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, a.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) {
    throw DomainError("division by an enclosure containing zero: " + b.to_string(10));
  }
  const unsigned prec = joint_precision(a, b);
  Enclosure r(prec);
  // Quotient endpoints come from the endpoint pairs, chosen by sign.
  const bool b_pos = b.is_positive();
  mpfr_srcptr lo_num = nullptr;
  mpfr_srcptr lo_den = nullptr;
  mpfr_srcptr hi_num = nullptr;
  mpfr_srcptr hi_den = nullptr;
  if (b_pos) {
    lo_num = a.lo_;
    lo_den = mpfr_sgn(a.lo_) >= 0 ? b.hi_ : b.lo_;
    hi_num = a.hi_;
    hi_den = mpfr_sgn(a.hi_) >= 0 ? b.lo_ : b.hi_;
  } else {
    lo_num = a.hi_;
    lo_den = mpfr_sgn(a.hi_) >= 0 ? b.hi_ : b.lo_;
    hi_num = a.lo_;
    hi_den = mpfr_sgn(a.lo_) >= 0 ? b.lo_ : b.hi_;
  }
  mpfr_div(r.lo_, lo_num, lo_den, MPFR_RNDD);
  mpfr_div(r.hi_, hi_num, hi_den, MPFR_RNDU);
  return r;
}

Enclosure operator+(const Enclosure& a, long b) {
  Enclosure r(a.precision_);
  mpfr_add_si(r.lo_, a.lo_, b, MPFR_RNDD);
  mpfr_add_si(r.hi_, a.hi_, b, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, long b) {
  Enclosure r(a.precision_);
  mpfr_sub_si(r.lo_, a.lo_, b, MPFR_RNDD);
  mpfr_sub_si(r.hi_, a.hi_, b, MPFR_RNDU);
  return r;
}

Enclosure operator-(long a, const Enclosure& b) {
  Enclosure r(b.precision_);
  mpfr_si_sub(r.lo_, a, b.hi_, MPFR_RNDD);
  mpfr_si_sub(r.hi_, a, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, long b) {
  Enclosure r(a.precision_);
  if (b >= 0) {
    mpfr_mul_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.hi_, b, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_, a.hi_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.lo_, b, MPFR_RNDU);
  }
  return r;
}

Enclosure operator*(long a, const Enclosure& b) { return b * a; }

Enclosure operator/(const Enclosure& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Enclosure r(a.precision_);
  if (b > 0) {
    mpfr_div_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_div_si(r.hi_, a.hi_, b, MPFR_RNDU);
  } else {
    mpfr_div_si(r.lo_, a.hi_, b, MPFR_RNDD);
    mpfr_div_si(r.hi_, a.lo_, b, MPFR_RNDU);
  }
  return r;
}

bool certainly_lt(const Enclosure& a, const Enclosure& b) {
  return mpfr_less_p(a.hi_, b.lo_) != 0;
}

bool certainly_gt(const Enclosure& a, const Enclosure& b) {
  return mpfr_greater_p(a.lo_, b.hi_) != 0;
}

// ------------------------------------------------------ elementary functions

Enclosure exp(const Enclosure& a) {
  Enclosure r(a.precision_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure log(const Enclosure& a) {
  if (!a.is_positive()) throw DomainError("log of a non-positive enclosure");
  Enclosure r(a.precision_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure sqrt(const Enclosure& a) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of a negative enclosure");
  Enclosure r(a.precision_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure abs(const Enclosure& a) {
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  Enclosure r(a.precision_);
  mpfr_set_zero(r.lo_, 1);
  if (mpfr_cmpabs(a.lo_, a.hi_) > 0) {
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  }
  return r;
}

Enclosure pow(const Enclosure& a, long n) {
  if (n == 0) return Enclosure::point(1, a.precision_);
  if (n < 0) return reciprocal(pow(a, -n));
  const auto un = static_cast<unsigned long>(n);
  Enclosure r(a.precision_);
  const bool even = (n % 2) == 0;
  if (mpfr_sgn(a.lo_) >= 0 || !even) {
    // Monotone increasing on the whole enclosure.
    mpfr_pow_ui(r.lo_, a.lo_, un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, un, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    mpfr_pow_ui(r.lo_, a.hi_, un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.lo_, un, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_srcptr big = mpfr_cmpabs(a.lo_, a.hi_) > 0 ? a.lo_ : a.hi_;
    mpfr_pow_ui(r.hi_, big, un, MPFR_RNDU);
  }
  return r;
}

Enclosure pow(const Enclosure& a, const Rational& p) {
  const Rational q = p.reduced();
  if (q.den == 1) return pow(a, static_cast<long>(q.num));
  if (!a.is_positive()) {
    throw DomainError("fractional power of a non-positive enclosure");
  }
  Enclosure root(a.precision_);
  const auto den = static_cast<unsigned long>(q.den);
  mpfr_rootn_ui(root.lo_, a.lo_, den, MPFR_RNDD);
  mpfr_rootn_ui(root.hi_, a.hi_, den, MPFR_RNDU);
  return pow(root, static_cast<long>(q.num));
}

Enclosure ldexp(const Enclosure& a, long e) {
  Enclosure r(a.precision_);
  mpfr_mul_2si(r.lo_, a.lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, a.hi_, e, MPFR_RNDU);
  return r;
}

}  // namespace thetacert
