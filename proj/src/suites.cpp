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

#include "thetacert/suites.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "thetacert/envelopes.hpp"
#include "thetacert/modular.hpp"
#include "thetacert/verifier.hpp"

namespace thetacert {

namespace {

std::pair<Enclosure, Enclosure> interval_or(const SuiteOptions& o, const char* lo, const char* hi,
                                            unsigned prec) {
  const auto& [a, b] = o.interval ? *o.interval : std::pair<std::string, std::string>{lo, hi};
  const Enclosure ea = Enclosure::from_decimal(a, prec);
  const Enclosure eb = Enclosure::from_decimal(b, prec);
  if (!ea.is_positive()) throw DomainError("interval must lie in (0, inf)");
  if (!certainly_lt(ea, eb)) throw std::invalid_argument("interval must satisfy a < b");
  return {ea, eb};
}

CertificationReport greek_report(const EvalConfig& cfg, std::vector<ValueRecord>& values) {
  CertificationReport r;
  r.id = "greek:constants";
  r.quantity = "alpha..zeta of the envelope bracket";
  r.precision_bits = cfg.precision_bits;
  r.interval = Enclosure::hull(Enclosure::point(1, cfg.precision_bits), Enclosure::point(30, cfg.precision_bits));
  GreekConstants g;
  try {
    g = compute_greek_constants(cfg);
  } catch (const CancellationError& e) {
    r.add_check("e^{6 pi y} cancellation", Status::failed, e.what());
    return r;
  }
  r.add_check("e^{6 pi y} cancellation", Status::certified,
              "y-part " + g.leading.a.to_string(6) + ", constant " + g.leading.b.to_string(6));
  const std::array<const Enclosure*, 6> all = {&g.alpha, &g.beta, &g.gamma, &g.delta, &g.epsilon, &g.zeta};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string name(kPrintedGreek[i].first);
    const Enclosure& v = *all[i];
    r.require(name + " > 0", v.is_positive(), v.to_string(20), v);
    r.require(name + " width < 1e-8", v.width_double() < 1e-8, std::to_string(v.width_double()), v,
              Status::inconclusive);
    const std::string printed(kPrintedGreek[i].second);
    values.push_back(ValueRecord{name, DecimalEnclosure::from(v, 40), printed,
                                 matches_printed(v, printed, DecimalRounding::truncated)});
  }
  r.add_check("alpha < gamma", strict_less(g.alpha, g.gamma));
  r.add_check("beta < delta", strict_less(g.beta, g.delta));
  return r;
}

}  // namespace

Status SuiteResult::status() const {
  Status s = reports.empty() ? Status::inconclusive : Status::certified;
  for (const auto& r : reports) s = worst(s, r.status);
  return s;
}

bool is_suite_name(std::string_view name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

SuiteResult run_suite(std::string_view name, const EvalConfig& cfg, const SuiteOptions& options) {
  cfg.validate();
  const unsigned prec = cfg.precision_bits;
  const auto start = std::chrono::steady_clock::now();
  SuiteResult out;
  out.name = std::string(name);

  if (name == "lemma1") {
    out.reports.push_back(verify_envelope_lemma(cfg));
  } else if (name == "modular") {
    const auto [a, b] = interval_or(options, "0.2", "5", prec);
    for (int v = 0; v <= 3; ++v) out.reports.push_back(verify_modular_identity(a, b, DerivativeOrder(v), cfg));
  } else if (name == "g-chain") {
    out.reports.push_back(verify_g_chain(cfg));
  } else if (name == "large-y") {
    out.reports.push_back(verify_large_y_chain(cfg));
  } else if (name == "small-y") {
    out.reports.push_back(verify_small_y_chain(cfg));
  } else if (name == "greek") {
    out.reports.push_back(greek_report(cfg, out.values));
  } else if (name == "convexity") {
    const auto [a, b] = interval_or(options, "0.05", "20", prec);
    out.reports.push_back(certify_convexity(a, b, options.target.value_or(Sign::positive), cfg));
  } else if (name == "decreasing") {
    const auto [a, b] = interval_or(options, "0.05", "20", prec);
    const std::vector<CertificationReport> convexity = {verify_large_y_chain(cfg),
                                                        verify_small_y_chain(cfg)};
    out.reports.push_back(
        certify_quantity(QuantityKind::f_prime, a, b, options.target.value_or(Sign::negative), cfg));
    out.reports.push_back(verify_decreasing_argument(cfg, convexity));
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace thetacert
