// Copyright 2026 The Fennec Authors
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

#include "fennec/verify.hpp"

#include <algorithm>

namespace fennec {
namespace {

// Deliberately naive split recomputation: walk the classes, pay each in full
// until the money runs out, split the remainder by liability weights.
MoneyVec NaiveSplit(const Money& total, const Strategy& strategy,
                    const MoneyVec& liabilities) {
  MoneyVec out(liabilities.size(), Money(0));
  Money left = total;
  if (left < 0) left = 0;
  for (const auto& cls : strategy.classes) {
    Money class_total(0);
    for (int j : cls) class_total += liabilities[j];
    if (class_total == 0) continue;
    if (left >= class_total) {
      for (int j : cls) out[j] = liabilities[j];
      left -= class_total;
    } else {
      for (int j : cls) out[j] = left * liabilities[j] / class_total;
      left = 0;
    }
  }
  return out;
}

}  // namespace

VerificationReport VerifyClearing(const FinancialNetwork& net,
                                  const StrategyProfile& profile,
                                  const ClearingResult& result) {
  VerificationReport report;
  const int n = net.size();
  LiabilityMatrix lm = ResolveLiabilities(net, result.recovery);

  MoneyVec totals(n, Money(0)), inflow(n, Money(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      totals[i] += result.payments[i][j];
      inflow[j] += result.payments[i][j];
    }
  }

  // (c) bounds: 0 <= p_ij <= l_ij and p_ii == 0.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Money& p = result.payments[i][j];
      if (p < 0 || p > lm.l[i][j]) {
        report.violations.push_back(
            {"bounds", net.id(i) + "->" + net.id(j),
             p < 0 ? p : p - lm.l[i][j], "payment outside [0, liability]"});
      }
    }
  }

  // (a) per-firm fixed-point residuals.
  for (int i = 0; i < n; ++i) {
    const Money assets = net.external(i) + inflow[i];
    Money expected;
    if (assets >= lm.totals[i]) {
      expected = lm.totals[i];
    } else {
      expected = net.costs().alpha * net.external(i) +
                 net.costs().beta * inflow[i];
      if (expected < 0) expected = 0;
      if (expected > lm.totals[i]) expected = lm.totals[i];
    }
    if (totals[i] != expected) {
      report.violations.push_back({"fixed-point", net.id(i),
                                   totals[i] - expected,
                                   "total payment off the clearing value"});
    }
  }

  // (b) per-edge priority split residuals.
  for (int i = 0; i < n; ++i) {
    MoneyVec want = NaiveSplit(totals[i], profile.strategies[i], lm.l[i]);
    for (int j = 0; j < n; ++j) {
      if (result.payments[i][j] != want[j]) {
        report.violations.push_back({"split", net.id(i) + "->" + net.id(j),
                                     result.payments[i][j] - want[j],
                                     "payment breaks the priority split"});
      }
    }
  }

  // (d) properness: firms with positive outgoing payments must be reachable
  // from some firm with positive external assets along positive payments.
  {
    std::vector<char> reach(n, 0);
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
      if (net.external(i) > 0) {
        reach[i] = 1;
        queue.push_back(i);
      }
    }
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        if (!reach[j] && result.payments[i][j] > 0) {
          reach[j] = 1;
          queue.push_back(j);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!reach[i] && totals[i] > 0) {
        report.violations.push_back(
            {"properness", net.id(i), totals[i],
             "outgoing payments not originated from positive externals"});
      }
    }
  }

  // (e) recovery consistency.
  for (int i = 0; i < n; ++i) {
    const Money assets = net.external(i) + inflow[i];
    Money expected(1);
    if (assets < lm.totals[i] && lm.totals[i] > 0) {
      expected = totals[i] / lm.totals[i];
    }
    if (result.recovery[i] != expected) {
      report.violations.push_back({"recovery", net.id(i),
                                   result.recovery[i] - expected,
                                   "recovery rate inconsistent with payments"});
    }
  }

  // Default-set consistency against the stored result.
  {
    std::vector<int> defaults;
    for (int i = 0; i < n; ++i) {
      if (net.external(i) + inflow[i] < lm.totals[i]) defaults.push_back(i);
    }
    if (defaults != result.defaults) {
      report.violations.push_back(
          {"fixed-point", "*", Money(0), "default set mismatch"});
    }
  }
  return report;
}

}  // namespace fennec
