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

#ifndef FENNEC_FIXTURES_H_
#define FENNEC_FIXTURES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fennec/game.hpp"

namespace fennec {

// One documented data point for a fixture: the profile to clear and the
// values the solver must reproduce exactly.
struct Expectation {
  std::string label;
  StrategyProfile profile;
  UtilityMode mode = UtilityMode::kTotalAssets;
  std::optional<MoneyMatrix> payments;                 // full matrix
  std::vector<std::pair<int, Money>> utilities;        // per-firm checks
  std::optional<Money> social_welfare;
  std::string provenance;  // which documented value this reproduces
};

struct Fixture {
  std::string name;
  std::map<std::string, Money> params;
  FinancialNetwork network;
  std::vector<Expectation> expectations;
  std::string note;
};

// Programmatic constructors for the benchmark instances, parameterized by
// their free symbols (M, alpha, beta, epsilon, n, ell). Unknown names throw
// UnknownFixture; out-of-range parameters throw ParamOutOfRange.
Fixture MakeFixture(const std::string& name,
                    const std::map<std::string, Money>& params = {});

std::vector<std::string> FixtureNames();

// Runs the solver on every expectation and reports per-expectation failures;
// empty result means everything reproduced exactly.
std::vector<std::string> VerifyFixture(const Fixture& fixture);

}  // namespace fennec

#endif  // FENNEC_FIXTURES_H_
