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

#include "thetacert/verifier.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "thetacert/modular.hpp"
#include "thetacert/theta.hpp"

namespace thetacert {

namespace {

Enclosure at_precision(const Enclosure& y, const EvalConfig& cfg) {
  return y.with_precision(std::max(y.precision(), cfg.precision_bits));
}

std::string interval_tag(const Enclosure& a, const Enclosure& b) {
  return "[" + a.lo_string(8) + "," + b.hi_string(8) + "]";
}

std::string sign_tag(Sign s) { return s == Sign::positive ? ">0" : "<0"; }

CertificationReport composite(std::string id, std::string quantity, const Enclosure& a,
                              const Enclosure& b, const EvalConfig& cfg) {
  CertificationReport r;
  r.id = std::move(id);
  r.quantity = std::move(quantity);
  r.interval = Enclosure::hull(a, b);
  r.precision_bits = cfg.precision_bits;
  return r;
}

// Adds a closing check that restates the chain's conclusion with the
// status of everything recorded so far.
void conclude(CertificationReport& r, std::string statement) {
  const Status s = r.status;
  r.add_check("conclusion: " + std::move(statement), s,
              s == Status::certified ? "all preceding steps certified" : "not established");
}

}  // namespace

// ---------------------------------------------------------------------------

bool matches_printed(const Enclosure& value, std::string_view printed, DecimalRounding rounding) {
  std::string_view digits = printed;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  const auto dot = digits.find('.');
  const long places = dot == std::string_view::npos ? 0 : static_cast<long>(digits.size() - dot - 1);
  if (places > 18) throw std::invalid_argument("matches_printed: too many decimals");

  const unsigned prec = std::max(value.precision(), 128u);
  const Enclosure p = Enclosure::from_decimal(digits, prec);
  std::int64_t scale = 1;
  for (long i = 0; i < places; ++i) scale *= 10;
  const Enclosure ulp = Enclosure::from_rational({1, scale}, prec);
  const Enclosure v = negative ? -value : value;

  Enclosure lo = p;
  Enclosure hi = p + ulp;
  if (rounding == DecimalRounding::nearest) {
    lo = p - ulp / 2;
    hi = p + ulp / 2;
  }
  // Truncation toward zero of a magnitude: cell [p, p + ulp).
  return mpfr_greaterequal_p(v.lo(), lo.hi()) != 0 && certainly_lt(v, hi);
}

// ---------------------------------------------------------------------------
// g

Enclosure g_eval(const Enclosure& y, const GCoefficients& k) {
  const Enclosure pi = Enclosure::pi(y.precision());
  const Enclosure e = exp(pi * y);
  return (e - 1) * (e - 1) * k.square + pi * y * e * (e - 1) * k.cross +
         pi * pi * y * y * e * (e + 1) * k.quadratic;
}

Enclosure g_prime(const Enclosure& y, const GCoefficients& k) {
  const Enclosure pi = Enclosure::pi(y.precision());
  const Enclosure e = exp(pi * y);
  const Enclosure e2 = e * e;
  const Enclosure py = pi * y;
  return pi * (e - 1) * e * (2 * k.square) + pi * (e2 + 2 * py * e2 - e - py * e) * k.cross +
         pi * pi * (2 * y * e2 + 2 * py * y * e2 + 2 * y * e + py * y * e) * k.quadratic;
}

Enclosure g_second(const Enclosure& y, const GCoefficients& k) {
  const Enclosure pi = Enclosure::pi(y.precision());
  const Enclosure e = exp(pi * y);
  const Enclosure e2 = e * e;
  const Enclosure py = pi * y;
  const Enclosure sq = (4 * e2 - 2 * e) * k.square;
  const Enclosure cr = (4 * e2 + 4 * py * e2 - 2 * e - py * e) * k.cross;
  const Enclosure qu =
      (2 * e2 + 8 * py * e2 + 4 * py * py * e2 + 2 * e + 4 * py * e + py * py * e) * k.quadratic;
  return pi * pi * (sq + cr + qu);
}

Enclosure g_second_display(const Enclosure& y) {
  const Enclosure pi = Enclosure::pi(y.precision());
  const Enclosure pi2 = pi * pi;
  const Enclosure e = exp(pi * y);
  const Enclosure e2 = e * e;
  return 2 * e * pi2 + 2 * e2 * pi2 + 4 * e2 * pi * (-4 * pi + 2 * pi2 * y) +
         2 * e * pi * (4 * pi + 2 * pi2 * y) + 4 * e2 * pi2 * (2 - 4 * pi * y + pi2 * y * y) +
         e * pi2 * (-4 + 4 * pi * y + pi2 * y * y);
}

CertificationReport verify_g_chain(const EvalConfig& cfg, const GCoefficients& k) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const Enclosure one = Enclosure::point(1, prec);
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure root = (1 + sqrt(Enclosure::point(3, prec))) / pi;
  CertificationReport r =
      composite("chain:g", "g(y) = 2(E-1)^2 - 4 pi y E(E-1) + pi^2 y^2 E(E+1)", root,
                Enclosure::point(30, prec), cfg);

  for (const char* at : {"0.5", "1", "2", "5"}) {
    const Enclosure y = Enclosure::from_decimal(at, prec);
    const Enclosure derived = g_second(y, k);
    const Enclosure shown = g_second_display(y);
    r.require(std::string("g'' expansion at y=") + at, derived.overlaps(shown),
              derived.to_string(12) + " vs " + shown.to_string(12), derived);
  }

  // pi^3 y^2 - 2 pi^2 y - 2 pi = pi ((pi y - 1)^2 - 3): roots (1 +- sqrt 3)/pi.
  const Enclosure shifted = pi * root - 1;
  const Enclosure at_root = pi * (shifted * shifted - 3);
  r.require("quadratic vanishes at (1+sqrt3)/pi", at_root.contains_zero(), at_root.to_string(8), root);
  // The e^{2 pi y} terms of g'' regroup as 2 pi^2 + 4 pi (pi^3 y^2 - 2 pi^2 y - 2 pi).
  bool regrouped = true;
  for (long at : {0L, 1L, 2L}) {
    const Enclosure y = Enclosure::point(at, prec);
    const Enclosure lhs = 4 * pi * (-4 * pi + 2 * pi * pi * y) + 4 * pi * pi * (2 - 4 * pi * y + pi * pi * y * y);
    const Enclosure rhs = 4 * pi * (pi * pi * pi * y * y - 2 * pi * pi * y - 2 * pi);
    regrouped = regrouped && lhs.overlaps(rhs);
  }
  r.require("e^{2 pi y} terms regroup into the quadratic", regrouped, "checked at y = 0, 1, 2");

  // -4 + 4 pi y + pi^2 y^2 equals 1 at y = 1/pi and increases for y > 0.
  const Enclosure inv_pi = reciprocal(pi);
  const Enclosure last = -4 + 4 * pi * inv_pi + pi * pi * inv_pi * inv_pi;
  r.require("last term positive from y = 1/pi", last.is_positive() && last.contains_decimal("1"),
            last.to_string(8), last);

  r.add_child(certify_sign(
      "g''", [k](const Enclosure& y, const EvalConfig&) { return g_second(y, k); }, root, one,
      Sign::positive, cfg));
  r.add_child(certify_sign(
      "g''", [k](const Enclosure& y, const EvalConfig&) { return g_second(y, k); }, one,
      Enclosure::point(30, prec), Sign::positive, cfg));

  const Enclosure g1 = g_eval(one, k);
  const Enclosure gp1 = g_prime(one, k);
  r.require("g'(1) > 0", gp1.is_positive(), gp1.to_string(12), gp1);
  r.require("g(1) > 0", g1.is_positive(), g1.to_string(12), g1);
  r.require("g(1) shows as 55.5", matches_printed(g1, "55.5"), g1.to_string(12), g1);
  r.require("g'(1) shows as 3584.5", matches_printed(gp1, "3584.5"), gp1.to_string(12), gp1);
  conclude(r, "g'' > 0 on [(1+sqrt3)/pi, inf), so g' >= g'(1) > 0 and g >= g(1) > 0 on [1, inf)");
  return r;
}

// ---------------------------------------------------------------------------
// Termwise brackets

Enclosure even_bracket(long n, const Enclosure& y) {
  const Enclosure t = Enclosure::pi(y.precision()) * y * n;
  const Enclosure e = exp(t * 2);
  return t * (e + 1) - 2 * (e - 1);
}

Enclosure odd_bracket(long n, const Enclosure& y) {
  const Enclosure t = Enclosure::pi(y.precision()) * y * (2 * n - 1);
  const Enclosure e = exp(t);
  return t * (e + 1) - 4 * (e - 1);
}

Enclosure decreasing_bracket_even(long n, const Enclosure& y) {
  const Enclosure t = Enclosure::pi(y.precision()) * y * n;
  const Enclosure e = exp(t * 2);
  return e - 1 - t * e;
}

Enclosure decreasing_bracket_odd(long n, const Enclosure& y) {
  const Enclosure t = Enclosure::pi(y.precision()) * y * (2 * n - 1);
  const Enclosure e = exp(t);
  return 2 * (e - 1) - t * e;
}

CertificationReport verify_even_terms_large_y(long n_max, const Enclosure& a, const Enclosure& b,
                                              const EvalConfig& cfg) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure two_over_pi = Enclosure::point(2, prec) / pi;
  if (certainly_lt(a, two_over_pi)) {
    throw DomainError("verify_even_terms_large_y requires y >= 2/pi, got " + a.to_string(10));
  }
  CertificationReport r = composite("chain:even" + interval_tag(a, b),
                                    "n pi y (e^{2n pi y}+1) - 2 (e^{2n pi y}-1)", a, b, cfg);

  // t (E+1) - 2 (E-1) >= 2 (E+1) - 2 (E-1) = 4 whenever t = n pi y >= 2.
  const Enclosure boundary = even_bracket(1, two_over_pi);
  r.require("bracket at n=1, y=2/pi equals 4", boundary.contains_decimal("4") && boundary.is_positive(),
            boundary.to_string(12), boundary);
  r.add_check("n-uniform bound", Status::certified,
              "n pi y >= pi (2/pi) = 2 for n >= 1, so bracket >= 2(E+1) - 2(E-1) = 4");

  for (long n = 1; n <= n_max; ++n) {
    // (t - 2) + (t + 2) e^{-2t}: the bracket divided by E.
    auto scaled = [n](const Enclosure& y, const EvalConfig&) {
      const Enclosure t = Enclosure::pi(y.precision()) * y * n;
      return (t - 2) + (t + 2) * exp(-(t * 2));
    };
    r.add_child(certify_sign("even bracket n=" + std::to_string(n), scaled, a, b, Sign::positive, cfg));
  }
  conclude(r, "every even-index term is positive for y >= 2/pi");
  return r;
}

CertificationReport verify_odd_terms_large_y(long n_max, const Enclosure& a, const Enclosure& b,
                                             const EvalConfig& cfg) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  if (mpfr_cmp_ui(a.lo(), 1) < 0) {
    throw DomainError("verify_odd_terms_large_y requires y >= 1, got " + a.to_string(10));
  }
  CertificationReport r = composite("chain:odd" + interval_tag(a, b),
                                    "(2n-1) pi y (E+1) - 4 (E-1), n >= 2", a, b, cfg);
  const Enclosure corner = Enclosure::pi(prec) * 3 - 4;
  r.require("corner n=2, y=1: 3 pi - 4 > 0", corner.is_positive(), corner.to_string(12), corner);
  r.add_check("drop of positive summand", Status::certified,
              "t (E+1) - 4 (E-1) = (t-4) E + (t+4) > (t-4) E since t + 4 > 0");
  r.add_check("n-uniform bound", Status::certified,
              "t = (2n-1) pi y >= 3 pi for n >= 2, y >= 1, so (t-4) E >= (3 pi - 4) E > 0");

  for (long n = 2; n <= n_max; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    auto weakened = [n](const Enclosure& y, const EvalConfig&) {
      return Enclosure::pi(y.precision()) * y * (2 * n - 1) - 4;
    };
    auto scaled = [n](const Enclosure& y, const EvalConfig&) {
      const Enclosure t = Enclosure::pi(y.precision()) * y * (2 * n - 1);
      return (t - 4) + (t + 4) * exp(-t);
    };
    r.add_child(certify_sign("(2n-1) pi y - 4" + tag, weakened, a, b, Sign::positive, cfg));
    r.add_child(certify_sign("odd bracket" + tag, scaled, a, b, Sign::positive, cfg));
  }
  conclude(r, "every odd-index term with n >= 2 is positive for y >= 1");
  return r;
}

CertificationReport verify_large_y_chain(const EvalConfig& cfg, long n_max) {
  const unsigned prec = cfg.precision_bits;
  const Enclosure one = Enclosure::point(1, prec);
  const Enclosure cap = Enclosure::point(30, prec);
  CertificationReport r = composite("chain:large-y", "f'' > 0 on [1, inf) termwise", one, cap, cfg);
  r.add_child(verify_even_terms_large_y(n_max, Enclosure::point(2, prec) / Enclosure::pi(prec), cap, cfg));
  r.add_child(verify_odd_terms_large_y(n_max, one, cap, cfg));
  r.add_child(verify_g_chain(cfg));
  conclude(r, "every term of the Lambert form of f'' is positive, so f'' > 0 on [1, inf)");
  return r;
}

// ---------------------------------------------------------------------------
// Small-y route

GreekConstants compute_greek_constants(const EvalConfig& cfg, const EnvelopeConstants& constants) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);

  auto envelope = [&](long nu, bool upper) {
    const Enclosure s = pow(pi / 4, nu) * 2;
    Enclosure second = s * pow(Enclosure::point(9, prec), nu);
    if (upper) second *= 1 + Enclosure::from_rational(constants[DerivativeOrder(static_cast<int>(nu))], prec);
    return ExpPoly::term(-1, s) + ExpPoly::term(-9, second);
  };
  const ExpPoly lo0 = envelope(0, false), lo1 = envelope(1, false), lo3 = envelope(3, false);
  const ExpPoly up0 = envelope(0, true), up1 = envelope(1, true), up2 = envelope(2, true);

  const Enclosure two = Enclosure::point(2, prec);
  const Enclosure three = Enclosure::point(3, prec);
  const ExpPoly outer = lo1 * lo1 * lo0 * two - up2 * up0 * up0 * two;
  const ExpPoly inner = lo1 * lo1 * lo1 * two - up2 * up1 * up0 * three + lo3 * lo0 * lo0;
  const ExpPoly bracket = (outer + inner.multiply_by_y()).shifted(27);

  for (const auto& [k, c] : bracket.terms()) {
    if (k != 0 && k != 8 && k != 16 && k != 24) {
      throw CancellationError("unexpected exponent " + std::to_string(k) + " in envelope bracket");
    }
  }
  GreekConstants g{Enclosure(prec), Enclosure(prec), Enclosure(prec), Enclosure(prec),
                   Enclosure(prec), Enclosure(prec), bracket.coefficient(24), bracket};
  for (const Enclosure* c : {&g.leading.a, &g.leading.b}) {
    if (!c->contains_zero() || !c->width_below_pow2(-80)) {
      throw CancellationError("e^{6 pi y} coefficient does not cancel: " + c->to_string(12));
    }
  }
  const LinearCoeff c16 = bracket.coefficient(16);
  const LinearCoeff c8 = bracket.coefficient(8);
  const LinearCoeff c0 = bracket.coefficient(0);
  g.alpha = c16.a;
  g.beta = -c16.b;
  g.gamma = -c8.a;
  g.delta = -c8.b;
  g.epsilon = -c0.a;
  g.zeta = -c0.b;
  return g;
}

Enclosure greek_lower_bound(const Enclosure& y, const GreekConstants& greek) {
  const unsigned prec = std::max(y.precision(), greek.bracket.precision());
  const Enclosure pi = Enclosure::pi(prec);
  return pow(y, Rational{9, 2}) * exp(-(pi * y * 27 / 4)) * greek.bracket.evaluate(y);
}

Enclosure small_y_final_bracket(const Enclosure& y) {
  const unsigned prec = y.precision();
  const Enclosure e = exp(Enclosure::pi(prec) * y * 2);
  return e * (y * (533L * 1984L) - 534L * 632L) - y * 2 - Enclosure::from_decimal("0.08", prec);
}

Enclosure h_direct(const Enclosure& y, const EvalConfig& cfg) {
  detail::require_positive(y, "h_direct");
  const Enclosure x = at_precision(y, cfg);
  const Enclosure t0 = theta4(x, DerivativeOrder(0), cfg);
  const Enclosure t1 = theta4(x, DerivativeOrder(1), cfg);
  const Enclosure t2 = theta4(x, DerivativeOrder(2), cfg);
  const Enclosure t3 = theta4(x, DerivativeOrder(3), cfg);
  const Enclosure t00 = t0 * t0;
  const Enclosure y2 = x * x;
  return 2 * t1 * t00 + 4 * x * t2 * t00 + y2 * t3 * t00 - 4 * x * t1 * t1 * t0 -
         3 * y2 * t2 * t1 * t0 + 2 * y2 * t1 * t1 * t1;
}

Enclosure h_reciprocal(const Enclosure& y, const EvalConfig& cfg) {
  detail::require_positive(y, "h_reciprocal");
  const Enclosure x = at_precision(y, cfg);
  const Enclosure s0 = theta2_series(x, DerivativeOrder(0), cfg);
  const Enclosure s1 = theta2_series(x, DerivativeOrder(1), cfg);
  const Enclosure s2 = theta2_series(x, DerivativeOrder(2), cfg);
  const Enclosure s3 = theta2_series(x, DerivativeOrder(3), cfg);
  const Enclosure p9 = pow(x, Rational{9, 2});
  const Enclosure p11 = p9 * x;
  return 2 * p9 * s1 * s1 * s0 - 2 * p9 * s2 * s0 * s0 - 2 * p11 * s1 * s1 * s1 +
         3 * p11 * s2 * s1 * s0 - p11 * s3 * s0 * s0;
}

CertificationReport verify_small_y_chain(const EvalConfig& cfg, const EnvelopeConstants& constants) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const Enclosure one = Enclosure::point(1, prec);
  const Enclosure cap = Enclosure::point(30, prec);
  CertificationReport r = composite("chain:small-y", "h(1/y) > 0 on [1, inf)", one, cap, cfg);
  r.depends_on.push_back("lemma:envelopes");

  GreekConstants g;
  try {
    g = compute_greek_constants(cfg, constants);
  } catch (const CancellationError& e) {
    r.add_check("e^{6 pi y} cancellation", Status::failed, e.what());
    return r;
  }
  r.add_check("e^{6 pi y} cancellation", Status::certified,
              "y-part " + g.leading.a.to_string(6) + ", constant " + g.leading.b.to_string(6));

  auto p = [prec](const char* d) { return Enclosure::from_decimal(d, prec); };
  r.add_check("alpha > 1984", strict_less(p("1984"), g.alpha), g.alpha.to_string(12), g.alpha);
  r.add_check("beta < 632", strict_less(g.beta, p("632")), g.beta.to_string(12), g.beta);
  r.add_check("gamma < 1986", strict_less(g.gamma, p("1986")), g.gamma.to_string(12), g.gamma);
  r.add_check("delta < 632", strict_less(g.delta, p("632")), g.delta.to_string(12), g.delta);
  r.add_check("epsilon < 2", strict_less(g.epsilon, p("2")), g.epsilon.to_string(12), g.epsilon);
  r.add_check("zeta < 0.08", strict_less(g.zeta, p("0.08")), g.zeta.to_string(12), g.zeta);

  const Enclosure e2pi = exp(Enclosure::pi(prec) * 2);
  r.add_check("e^{2 pi} > 535", strict_less(p("535"), e2pi), e2pi.to_string(12), e2pi);
  r.require("1984 y - 632 > 0 for y >= 1", 1984 - 632 > 0, "1352 at y = 1, slope 1984");
  // 535 (1984 y - 632) - 1986 y - 632 - (533*1984 y - 534*632) = 1982 y - 1264
  const long slope = 535L * 1984 - 1986 - 533L * 1984;
  const long offset = -535L * 632 - 632 + 534L * 632;
  r.require("absorption: difference 1982 y - 1264 > 0 for y >= 1",
            slope == 1982 && offset == -1264 && slope + offset > 0,
            std::to_string(slope) + " y + (" + std::to_string(offset) + ")");
  r.require("533*1984 = 1057472 and 534*632 = 337488", 533L * 1984 == 1057472 && 534L * 632 == 337488);

  const Enclosure at_one = small_y_final_bracket(one);
  r.require("final bracket at y=1", at_one.is_positive(), at_one.to_string(12), at_one);
  r.add_child(certify_sign(
      "final bracket", [](const Enclosure& y, const EvalConfig&) { return small_y_final_bracket(y); },
      one, cap, Sign::positive, cfg));
  // For y >= 1: 1057472 y - 337488 >= 719984 y and 2 y + 0.08 <= 2.08 y, so the
  // bracket is at least y (719984 e^{2 pi y} - 2.08), increasing in y.
  const Enclosure tail = exp(Enclosure::pi(prec) * 60) * 719984 - p("2.08");
  r.require("y > 30: 719984 e^{2 pi y} - 2.08 > 0", tail.is_positive(), tail.to_string(8), tail);

  // The collected bound really is below h(1/y) at sample points.
  for (const Enclosure& y : log_grid(1.0, 10.0, 20, prec)) {
    EvalConfig c = cfg;
    Status s = Status::inconclusive;
    for (;;) {
      const Enclosure yy = y.with_precision(c.precision_bits);
      s = strict_less(greek_lower_bound(yy, compute_greek_constants(c, constants)), h_reciprocal(yy, c));
      if (s != Status::inconclusive || c.precision_bits >= 1024) break;
      c = c.escalated();
    }
    r.add_check("lower bound below h(1/y) at y=" + y.to_string(6), s,
                "decided at " + std::to_string(c.precision_bits) + " bits");
  }
  conclude(r, "h(1/y) > 0 for y >= 1, so h > 0 and f'' > 0 on (0, 1]");
  return r;
}

// ---------------------------------------------------------------------------
// Direct sign certification

std::string_view to_string(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::f_second:
      return "f''";
    case QuantityKind::f_prime:
      return "f'";
    case QuantityKind::h_reciprocal:
      return "h(1/y)";
    case QuantityKind::g_second:
      return "g''";
    case QuantityKind::small_y_bracket:
      return "final bracket";
  }
  return "unknown";
}

CertificationReport certify_quantity(QuantityKind kind, const Enclosure& a, const Enclosure& b,
                                     Sign target, const EvalConfig& cfg, const SubdivisionPolicy& policy) {
  const std::string name(to_string(kind));
  switch (kind) {
    case QuantityKind::h_reciprocal:
      // The five-term form cancels down to e^{-11 pi y/4} from terms of size
      // e^{-3 pi y/4}, so on boxes it is intersected with the equivalent
      // f''(1/y) y^{3/2} theta2(y)^3 taken through the stable modular route.
      return certify_sign(
          name,
          [](const Enclosure& y, const EvalConfig& c) {
            const Enclosure x = at_precision(y, c);
            const Enclosure stable = f_modular(reciprocal(x), 2, c) * pow(x, Rational{3, 2}) *
                                     pow(theta2_series(x, DerivativeOrder(0), c), 3L);
            return h_reciprocal(x, c).intersect(stable);
          },
          a, b, target, cfg, policy);
    case QuantityKind::g_second:
      return certify_sign(
          name, [](const Enclosure& y, const EvalConfig&) { return g_second(y); }, a, b, target, cfg,
          policy);
    case QuantityKind::small_y_bracket:
      return certify_sign(
          name, [](const Enclosure& y, const EvalConfig&) { return small_y_final_bracket(y); }, a,
          b, target, cfg, policy);
    case QuantityKind::f_second:
    case QuantityKind::f_prime:
      break;
  }
  const int order = kind == QuantityKind::f_second ? 2 : 1;
  const unsigned prec = cfg.precision_bits;
  CertificationReport r = composite("certify:" + name + sign_tag(target) + interval_tag(a, b),
                                    name + " by modular and Lambert routes", a, b, cfg);
  const Enclosure split_hi = Enclosure::from_decimal("1.25", prec);
  const Enclosure split_lo = Enclosure::from_decimal("0.8", prec);
  if (a.lo_double() < kRouteOverlapHi) {
    const Enclosure hi = b.hi_double() < kRouteOverlapHi ? b : split_hi;
    r.add_child(certify_sign(
        name + " (modular)",
        [order](const Enclosure& y, const EvalConfig& c) { return f_modular(y, order, c); }, a, hi,
        target, cfg, policy));
  }
  if (b.hi_double() > kRouteOverlapLo) {
    const Enclosure lo = a.lo_double() > kRouteOverlapLo ? a : split_lo;
    r.add_child(certify_sign(
        name + " (Lambert)",
        [order](const Enclosure& y, const EvalConfig& c) { return lambert_series(y, order, c); }, lo,
        b, target, cfg, policy));
  }
  for (const auto& child : r.children) {
    if (child.witness && !r.witness) r.witness = child.witness;
    if (child.deepest_box && !r.deepest_box) r.deepest_box = child.deepest_box;
    if (child.min_margin && (!r.min_margin || certainly_lt(*child.min_margin, *r.min_margin))) {
      r.min_margin = child.min_margin;
    }
  }
  return r;
}

CertificationReport verify_decreasing_argument(const EvalConfig& cfg,
                                               std::span<const CertificationReport> convexity,
                                               long n_max) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure two_over_pi = Enclosure::point(2, prec) / pi;
  const Enclosure cap = Enclosure::point(30, prec);
  CertificationReport r = composite("chain:decreasing", "f' < 0 on (0, inf)", two_over_pi, cap, cfg);

  const Enclosure b1 = decreasing_bracket_even(1, Enclosure::point(1, prec));
  r.require("bracket1 at n=1, y=1", b1.is_negative(), b1.to_string(12), b1);
  const Enclosure b2 = decreasing_bracket_odd(1, two_over_pi);
  r.require("bracket2 at n=1, y=2/pi equals -2", b2.is_negative() && b2.contains_decimal("-2"),
            b2.to_string(12), b2);
  r.add_check("n-uniform bound", Status::certified,
              "for y >= 2/pi: n pi y >= 2 gives (1 - n pi y) E - 1 <= -1, "
              "(2n-1) pi y >= 2 gives (2 - (2n-1) pi y) E - 2 <= -2");
  for (long n = 1; n <= n_max; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    r.add_child(certify_sign(
        "bracket1" + tag,
        [n](const Enclosure& y, const EvalConfig&) {
          const Enclosure t = Enclosure::pi(y.precision()) * y * n;
          return (1 - t) - exp(-(t * 2));
        },
        two_over_pi, cap, Sign::negative, cfg));
    r.add_child(certify_sign(
        "bracket2" + tag,
        [n](const Enclosure& y, const EvalConfig&) {
          const Enclosure t = Enclosure::pi(y.precision()) * y * (2 * n - 1);
          return (2 - t) - 2 * exp(-t);
        },
        two_over_pi, cap, Sign::negative, cfg));
  }

  if (convexity.empty()) {
    r.add_check("conclusion: f' < 0 on (0, inf)", Status::inconclusive,
                "no certified f'' > 0 report supplied");
    return r;
  }
  bool all = true;
  for (const auto& c : convexity) {
    r.depends_on.push_back(c.id);
    all = all && c.certified();
  }
  const Status s = worst(r.status, all ? Status::certified : Status::inconclusive);
  r.add_check("conclusion: f' < 0 on (0, inf)", s,
              "f'' > 0 makes f' increasing; an increasing function negative on [2/pi, inf) is "
              "negative everywhere");
  return r;
}

}  // namespace thetacert
