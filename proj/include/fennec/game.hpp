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

#ifndef FENNEC_GAME_H_
#define FENNEC_GAME_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fennec/clearing.hpp"
#include "fennec/verify.hpp"

namespace fennec {

enum class UtilityMode { kTotalAssets, kEquity };

// Utilities are always evaluated at the maximal proper clearing payments of
// the profile (the equilibrium convention).
struct ProfileEvaluation {
  bool converged = false;
  ClearingResult clearing;
  MoneyVec utilities;
  Money social_welfare{0};
};

struct GameOptions {
  std::uint64_t strategy_cap = 1000000;  // per-firm ordered partitions
  std::uint64_t profile_cap = 1000000;   // profiles in exhaustive analysis
  CdsOptions cds;
  int jobs = 1;
};

ProfileEvaluation EvaluateProfile(const FinancialNetwork& net,
                                  const StrategyProfile& profile,
                                  UtilityMode mode, const CdsOptions& cds = {});

// Per-firm utilities of an already-computed clearing result.
MoneyVec UtilitiesAt(const FinancialNetwork& net, const ClearingResult& result,
                     UtilityMode mode);

// Utility of one firm at the profile's clearing. Throws NonConvergentProfile
// if the clearing does not converge.
Money Utility(const FinancialNetwork& net, const StrategyProfile& profile,
              int firm, UtilityMode mode, const CdsOptions& cds = {});

Money SocialWelfare(const FinancialNetwork& net, const StrategyProfile& profile,
                    UtilityMode mode, const CdsOptions& cds = {});

struct Deviation {
  int firm;
  Strategy strategy;
};

struct NashResult {
  bool is_nash = false;
  std::optional<Deviation> witness;  // first improving deviation, canonical order
};

NashResult IsNash(const FinancialNetwork& net, const StrategyProfile& profile,
                  UtilityMode mode, const GameOptions& options = {});

enum class StabilityNotion { kStrong, kSuperStrong };

struct CoalitionWitness {
  std::vector<int> firms;
  std::vector<Strategy> strategies;  // parallel to firms
};

struct StabilityResult {
  bool stable = false;
  std::optional<CoalitionWitness> witness;
};

// Coalitions are drawn from strategic firms (more than one strategy); a firm
// with a singleton strategy space can neither deviate nor free-ride.
//  - kStrong: no coalition of size <= max_coalition has a joint deviation
//    making all members strictly better off.
//  - kSuperStrong: none has a joint deviation making at least one member
//    strictly better and no member worse.
StabilityResult CoalitionStable(const FinancialNetwork& net,
                                const StrategyProfile& profile,
                                UtilityMode mode, StabilityNotion notion,
                                int max_coalition,
                                const GameOptions& options = {});

struct Ratio {
  bool defined = false;    // false when no equilibrium exists
  bool unbounded = false;  // welfare at the relevant equilibrium is zero
  Money value{0};
};

struct ProfileOutcome {
  StrategyProfile profile;
  bool converged = false;
  MoneyVec utilities;
  Money social_welfare{0};
  bool nash = false;
  // Filled only when coalition analysis is requested.
  std::optional<bool> strong;
  std::optional<bool> super_strong;
};

struct GameReport {
  UtilityMode mode = UtilityMode::kTotalAssets;
  std::uint64_t profiles_examined = 0;
  std::vector<ProfileOutcome> outcomes;       // canonical profile order
  std::vector<std::size_t> equilibria;        // indices into outcomes
  std::vector<std::size_t> nonconvergent;     // indices into outcomes
  bool has_opt = false;  // false iff no profile cleared
  std::size_t opt_index = 0;
  Money opt{0};
  Ratio poa;
  Ratio pos;
};

struct AnalyzeOptions : GameOptions {
  std::optional<StabilityNotion> coalition_check;
  int max_coalition = 2;
};

// Exhaustive analysis over the Cartesian product of per-firm strategy
// spaces: per-profile utilities and social welfare, the equilibrium set, OPT
// over profiles, and the efficiency ratios. Nonconvergent profiles are
// excluded from OPT/PoA/PoS and listed.
GameReport Analyze(const FinancialNetwork& net, UtilityMode mode,
                   const AnalyzeOptions& options = {});

// For alpha = beta = 1 only: computes maximal and minimal clearing payments
// and checks that every firm's equity agrees between the two.
bool EquityInvarianceCheck(const FinancialNetwork& net,
                           const StrategyProfile& profile);

// Per-firm strategy spaces used by Analyze (canonical order).
std::vector<std::vector<Strategy>> StrategySpaces(const FinancialNetwork& net,
                                                  std::uint64_t cap = 1000000);

}  // namespace fennec

#endif  // FENNEC_GAME_H_
