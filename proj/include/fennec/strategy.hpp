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

#ifndef FENNEC_STRATEGY_H_
#define FENNEC_STRATEGY_H_

#include <cstdint>
#include <vector>

#include "fennec/network.hpp"

namespace fennec {

// Priority-proportional strategy: an ordered partition of a firm's creditors
// into priority classes. Higher classes are repaid in full before lower ones;
// within a class, payments are proportional to liabilities. Classes are kept
// sorted ascending by firm index; a strategy is canonical iff every class is
// sorted and the classes exactly partition the creditor set.
struct Strategy {
  std::vector<std::vector<int>> classes;

  bool operator==(const Strategy& other) const = default;
};

// Canonical total order used for deterministic enumeration and tie-breaking:
// lexicographic on the sequence of classes, each class compared as its sorted
// firm-index sequence.
bool StrategyLess(const Strategy& a, const Strategy& b);

// The single-class strategy (all creditors tied): the proportional baseline.
Strategy ProportionalStrategy(const std::vector<int>& creditor_set);

// Every ordered set partition (weak order) of `creditor_set`, in canonical
// order. Count equals the ordered Bell number of the set size. Throws
// StrategySpaceTooLarge when the count exceeds `cap`.
std::vector<Strategy> EnumerateStrategies(const std::vector<int>& creditor_set,
                                          std::uint64_t cap = 1000000);

// Ordered Bell numbers a(k) via a(k) = sum_{j=1..k} C(k,j) a(k-j), a(0)=1.
std::uint64_t OrderedBellNumber(int k);

// Throws on malformed partitions (wrong creditor set, duplicates, empties).
void ValidateStrategy(const FinancialNetwork& net, int firm,
                      const Strategy& strategy);

// One strategy per firm, indexed by firm.
struct StrategyProfile {
  std::vector<Strategy> strategies;

  bool operator==(const StrategyProfile& other) const = default;
};

// Profile with every firm playing the single-class proportional strategy.
StrategyProfile ProportionalProfile(const FinancialNetwork& net);

void ValidateProfile(const FinancialNetwork& net, const StrategyProfile& p);

}  // namespace fennec

#endif  // FENNEC_STRATEGY_H_
