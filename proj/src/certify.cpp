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

#include "thetacert/certify.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace thetacert {

std::string_view to_string(Sign sign) {
  return sign == Sign::positive ? "positive" : "negative";
}

namespace {

struct Box {
  Enclosure range;
  int depth;
};

std::optional<Enclosure> try_eval(const Quantity& fn, const Enclosure& box, const EvalConfig& cfg) {
  try {
    return fn(box, cfg);
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

bool has_sign(const Enclosure& v, Sign s) {
  return s == Sign::positive ? v.is_positive() : v.is_negative();
}

Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

CertificationReport run(std::string quantity, const Quantity& fn, const Enclosure& a,
                        const Enclosure& b, Sign target, const EvalConfig& cfg,
                        const SubdivisionPolicy& policy) {
  CertificationReport report;
  report.quantity = std::move(quantity);
  report.id = "sign:" + report.quantity + (target == Sign::positive ? ">0" : "<0") + "[" +
              a.lo_string(8) + "," + b.hi_string(8) + "]";
  report.interval = Enclosure::hull(a, b).with_precision(cfg.precision_bits);
  report.precision_bits = cfg.precision_bits;

  std::vector<Box> stack;
  stack.push_back(Box{report.interval, 0});
  while (!stack.empty()) {
    Box box = std::move(stack.back());
    stack.pop_back();
    if (++report.boxes_examined > policy.max_boxes) {
      report.status = Status::inconclusive;
      report.deepest_box = box.range;
      report.add_check("box budget", Status::inconclusive,
                       "exceeded " + std::to_string(policy.max_boxes) + " boxes");
      return report;
    }
    const std::optional<Enclosure> value = try_eval(fn, box.range, cfg);
    if (value && has_sign(*value, target)) {
      const Enclosure margin = target == Sign::positive ? value->lower_point() : -value->upper_point();
      if (!report.min_margin || certainly_lt(margin, *report.min_margin)) {
        report.min_margin = margin;
      }
      continue;
    }
    if (value && has_sign(*value, opposite(target))) {
      const Enclosure mid = box.range.midpoint();
      std::optional<Enclosure> at_mid = try_eval(fn, mid, cfg);
      Witness w{box.range, *value, report.quantity};
      if (at_mid && has_sign(*at_mid, opposite(target))) w = Witness{mid, *at_mid, report.quantity};
      report.status = Status::failed;
      report.witness = std::move(w);
      return report;
    }
    if (box.depth >= policy.max_depth) {
      report.status = Status::inconclusive;
      report.deepest_box = box.range;
      return report;
    }
    const Enclosure mid = box.range.midpoint();
    Box right{Enclosure::hull(mid, box.range.upper_point()), box.depth + 1};
    Box left{Enclosure::hull(box.range.lower_point(), mid), box.depth + 1};
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  return report;
}

}  // namespace

CertificationReport certify_sign(std::string quantity, const Quantity& fn, const Enclosure& a,
                                 const Enclosure& b, Sign target, const EvalConfig& cfg,
                                 const SubdivisionPolicy& policy) {
  cfg.validate();
  if (!a.is_positive()) {
    throw DomainError("certify_sign requires a > 0, got " + a.to_string(10));
  }
  CertificationReport report = run(quantity, fn, a, b, target, cfg, policy);
  if (report.status == Status::inconclusive && policy.escalate_precision) {
    const std::size_t spent = report.boxes_examined;
    report = run(std::move(quantity), fn, a, b, target, cfg.escalated(), policy);
    report.boxes_examined += spent;
    report.checks.insert(report.checks.begin(),
                         Check{"precision escalation", Status::certified,
                               "retried at " + std::to_string(report.precision_bits) + " bits",
                               std::nullopt});
  }
  return report;
}

}  // namespace thetacert
