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

#include "fennec/strategy.hpp"

#include <algorithm>
#include <set>

namespace fennec {

bool StrategyLess(const Strategy& a, const Strategy& b) {
  return std::lexicographical_compare(a.classes.begin(), a.classes.end(),
                                      b.classes.begin(), b.classes.end());
}

Strategy ProportionalStrategy(const std::vector<int>& creditor_set) {
  Strategy s;
  if (!creditor_set.empty()) {
    s.classes.push_back(creditor_set);
    std::sort(s.classes[0].begin(), s.classes[0].end());
  }
  return s;
}

std::uint64_t OrderedBellNumber(int k) {
  std::vector<std::uint64_t> a(k + 1, 0);
  std::vector<std::vector<std::uint64_t>> choose(k + 1,
                                                 std::vector<std::uint64_t>(k + 1, 0));
  for (int i = 0; i <= k; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
    }
  }
  a[0] = 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) a[i] += choose[i][j] * a[i - j];
  }
  return a[k];
}

namespace {

// Surjections of `items` onto classes 0..m-1; each surjection is one ordered
// set partition with m priority classes.
void EnumerateRec(const std::vector<int>& items, std::vector<int>& assignment,
                  int pos, int m, int used, std::vector<Strategy>& out,
                  std::uint64_t cap) {
  const int remaining = static_cast<int>(items.size()) - pos;
  if (used + remaining < m) return;  // cannot fill all classes any more
  if (pos == static_cast<int>(items.size())) {
    Strategy s;
    s.classes.assign(m, {});
    for (std::size_t i = 0; i < items.size(); ++i) {
      s.classes[assignment[i]].push_back(items[i]);
    }
    out.push_back(std::move(s));
    if (out.size() > cap) {
      throw Error(ErrorCode::kStrategySpaceTooLarge,
                  "strategy space exceeds cap of " + std::to_string(cap));
    }
    return;
  }
  for (int c = 0; c < m; ++c) {
    assignment[pos] = c;
    bool fresh = true;
    for (int i = 0; i < pos; ++i) fresh &= (assignment[i] != c);
    EnumerateRec(items, assignment, pos + 1, m, used + (fresh ? 1 : 0), out,
                 cap);
  }
}

}  // namespace

std::vector<Strategy> EnumerateStrategies(const std::vector<int>& creditor_set,
                                          std::uint64_t cap) {
  std::vector<int> items = creditor_set;
  std::sort(items.begin(), items.end());
  std::vector<Strategy> out;
  if (items.empty()) {
    out.push_back(Strategy{});
    return out;
  }
  const int k = static_cast<int>(items.size());
  std::vector<int> assignment(items.size(), 0);
  for (int m = 1; m <= k; ++m) {
    EnumerateRec(items, assignment, 0, m, 0, out, cap);
  }
  std::sort(out.begin(), out.end(), StrategyLess);
  return out;
}

void ValidateStrategy(const FinancialNetwork& net, int firm,
                      const Strategy& strategy) {
  const std::vector<int>& expected = net.creditors(firm);
  std::set<int> seen;
  for (const auto& cls : strategy.classes) {
    if (cls.empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "empty priority class for firm '" + net.id(firm) + "'");
    }
    if (!std::is_sorted(cls.begin(), cls.end())) {
      throw Error(ErrorCode::kInvalidInput,
                  "priority class not in canonical order for firm '" +
                      net.id(firm) + "'");
    }
    for (int j : cls) {
      if (!seen.insert(j).second) {
        throw Error(ErrorCode::kInvalidInput,
                    "creditor listed twice in strategy of '" + net.id(firm) +
                        "'");
      }
    }
  }
  if (seen != std::set<int>(expected.begin(), expected.end())) {
    throw Error(ErrorCode::kInvalidInput,
                "strategy of '" + net.id(firm) +
                    "' must partition its creditor set");
  }
}

StrategyProfile ProportionalProfile(const FinancialNetwork& net) {
  StrategyProfile p;
  p.strategies.reserve(net.size());
  for (int i = 0; i < net.size(); ++i) {
    p.strategies.push_back(ProportionalStrategy(net.creditors(i)));
  }
  return p;
}

void ValidateProfile(const FinancialNetwork& net, const StrategyProfile& p) {
  if (static_cast<int>(p.strategies.size()) != net.size()) {
    throw Error(ErrorCode::kInvalidInput, "profile size mismatch");
  }
  for (int i = 0; i < net.size(); ++i) ValidateStrategy(net, i, p.strategies[i]);
}

}  // namespace fennec
