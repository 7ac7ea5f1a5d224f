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

#include "fennec/game.hpp"

#include <algorithm>
#include <thread>

namespace fennec {
namespace {

MoneyVec UtilitiesOf(const FinancialNetwork& net, const ClearingResult& clearing,
                     UtilityMode mode) {
  const int n = net.size();
  LiabilityMatrix lm = ResolveLiabilities(net, clearing.recovery);
  MoneyVec out(n, Money(0));
  for (int i = 0; i < n; ++i) {
    Money inflow(0);
    for (int j = 0; j < n; ++j) inflow += clearing.payments[j][i];
    const Money assets = net.external(i) + inflow;
    if (mode == UtilityMode::kTotalAssets) {
      out[i] = assets;
    } else {
      out[i] = std::max(Money(0), Money(assets - lm.totals[i]));
    }
  }
  return out;
}

}  // namespace

MoneyVec UtilitiesAt(const FinancialNetwork& net, const ClearingResult& result,
                     UtilityMode mode) {
  return UtilitiesOf(net, result, mode);
}

ProfileEvaluation EvaluateProfile(const FinancialNetwork& net,
                                  const StrategyProfile& profile,
                                  UtilityMode mode, const CdsOptions& cds) {
  ProfileEvaluation eval;
  eval.clearing = CdsClear(net, profile, cds);
  eval.converged = eval.clearing.converged;
  if (!eval.converged) return eval;
  eval.utilities = UtilitiesOf(net, eval.clearing, mode);
  for (const Money& u : eval.utilities) eval.social_welfare += u;
  return eval;
}

Money Utility(const FinancialNetwork& net, const StrategyProfile& profile,
              int firm, UtilityMode mode, const CdsOptions& cds) {
  ProfileEvaluation eval = EvaluateProfile(net, profile, mode, cds);
  if (!eval.converged) {
    throw Error(ErrorCode::kNonConvergentProfile,
                "clearing did not converge for the requested profile");
  }
  return eval.utilities[firm];
}

Money SocialWelfare(const FinancialNetwork& net, const StrategyProfile& profile,
                    UtilityMode mode, const CdsOptions& cds) {
  ProfileEvaluation eval = EvaluateProfile(net, profile, mode, cds);
  if (!eval.converged) {
    throw Error(ErrorCode::kNonConvergentProfile,
                "clearing did not converge for the requested profile");
  }
  return eval.social_welfare;
}

std::vector<std::vector<Strategy>> StrategySpaces(const FinancialNetwork& net,
                                                  std::uint64_t cap) {
  std::vector<std::vector<Strategy>> spaces;
  spaces.reserve(net.size());
  for (int i = 0; i < net.size(); ++i) {
    spaces.push_back(EnumerateStrategies(net.creditors(i), cap));
  }
  return spaces;
}

NashResult IsNash(const FinancialNetwork& net, const StrategyProfile& profile,
                  UtilityMode mode, const GameOptions& options) {
  ValidateProfile(net, profile);
  ProfileEvaluation base = EvaluateProfile(net, profile, mode, options.cds);
  if (!base.converged) {
    throw Error(ErrorCode::kNonConvergentProfile,
                "clearing did not converge for the base profile");
  }
  auto spaces = StrategySpaces(net, options.strategy_cap);
  NashResult result;
  for (int firm = 0; firm < net.size(); ++firm) {
    for (const Strategy& alt : spaces[firm]) {
      if (alt == profile.strategies[firm]) continue;
      StrategyProfile deviated = profile;
      deviated.strategies[firm] = alt;
      ProfileEvaluation eval = EvaluateProfile(net, deviated, mode, options.cds);
      if (!eval.converged) {
        throw Error(ErrorCode::kNonConvergentProfile,
                    "deviation of firm '" + net.id(firm) +
                        "' has no convergent clearing");
      }
      if (eval.utilities[firm] > base.utilities[firm]) {
        result.is_nash = false;
        result.witness = Deviation{firm, alt};
        return result;
      }
    }
  }
  result.is_nash = true;
  return result;
}

namespace {

// Enumerates joint deviations of `coalition` (indices into `spaces`) and
// reports the first blocking one under the given notion.
struct CoalitionScan {
  const FinancialNetwork& net;
  const std::vector<std::vector<Strategy>>& spaces;
  const StrategyProfile& profile;
  const MoneyVec& base_utilities;
  UtilityMode mode;
  StabilityNotion notion;
  const GameOptions& options;
  std::uint64_t budget;

  std::optional<CoalitionWitness> Scan(const std::vector<int>& coalition) {
    std::vector<std::size_t> pick(coalition.size(), 0);
    while (true) {
      bool same = true;
      for (std::size_t k = 0; k < coalition.size(); ++k) {
        same &= spaces[coalition[k]][pick[k]] ==
                profile.strategies[coalition[k]];
      }
      if (!same) {
        if (budget == 0) {
          throw Error(ErrorCode::kEnumerationCapExceeded,
                      "coalition deviation space exceeds the cap");
        }
        --budget;
        StrategyProfile deviated = profile;
        for (std::size_t k = 0; k < coalition.size(); ++k) {
          deviated.strategies[coalition[k]] = spaces[coalition[k]][pick[k]];
        }
        ProfileEvaluation eval =
            EvaluateProfile(net, deviated, mode, options.cds);
        if (eval.converged && Blocks(coalition, eval)) {
          CoalitionWitness w;
          w.firms = coalition;
          for (std::size_t k = 0; k < coalition.size(); ++k) {
            w.strategies.push_back(spaces[coalition[k]][pick[k]]);
          }
          return w;
        }
      }
      // next tuple
      std::size_t k = 0;
      for (; k < pick.size(); ++k) {
        if (++pick[k] < spaces[coalition[k]].size()) break;
        pick[k] = 0;
      }
      if (k == pick.size()) return std::nullopt;
    }
  }

  bool Blocks(const std::vector<int>& coalition,
              const ProfileEvaluation& eval) const {
    if (notion == StabilityNotion::kStrong) {
      for (int f : coalition) {
        if (eval.utilities[f] <= base_utilities[f]) return false;
      }
      return true;
    }
    bool someone_strictly_better = false;
    for (int f : coalition) {
      if (eval.utilities[f] < base_utilities[f]) return false;
      someone_strictly_better |= eval.utilities[f] > base_utilities[f];
    }
    return someone_strictly_better;
  }
};

}  // namespace

StabilityResult CoalitionStable(const FinancialNetwork& net,
                                const StrategyProfile& profile,
                                UtilityMode mode, StabilityNotion notion,
                                int max_coalition, const GameOptions& options) {
  ValidateProfile(net, profile);
  ProfileEvaluation base = EvaluateProfile(net, profile, mode, options.cds);
  if (!base.converged) {
    throw Error(ErrorCode::kNonConvergentProfile,
                "clearing did not converge for the base profile");
  }
  auto spaces = StrategySpaces(net, options.strategy_cap);
  std::vector<int> strategic;
  for (int i = 0; i < net.size(); ++i) {
    if (spaces[i].size() > 1) strategic.push_back(i);
  }
  CoalitionScan scan{net,  spaces,  profile,           base.utilities,
                     mode, notion,  options,           options.profile_cap};

  StabilityResult result;
  // Subsets of strategic firms up to the size bound, smallest first.
  const int m = static_cast<int>(strategic.size());
  for (int size = 1; size <= std::min(max_coalition, m); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<int> coalition(size);
      for (int i = 0; i < size; ++i) coalition[i] = strategic[idx[i]];
      if (auto witness = scan.Scan(coalition)) {
        result.stable = false;
        result.witness = std::move(witness);
        return result;
      }
      int k = size - 1;
      while (k >= 0 && idx[k] == m - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  result.stable = true;
  return result;
}

namespace {

struct ProfileGrid {
  std::vector<std::vector<Strategy>> spaces;
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 1;

  explicit ProfileGrid(const FinancialNetwork& net, std::uint64_t strategy_cap,
                       std::uint64_t profile_cap) {
    spaces = StrategySpaces(net, strategy_cap);
    for (const auto& s : spaces) {
      sizes.push_back(s.size());
      if (total > profile_cap / s.size() + 1) {
        throw Error(ErrorCode::kEnumerationCapExceeded,
                    "profile space exceeds the cap");
      }
      total *= s.size();
    }
    if (total > profile_cap) {
      throw Error(ErrorCode::kEnumerationCapExceeded,
                  "profile space exceeds the cap");
    }
  }

  StrategyProfile At(std::uint64_t index) const {
    StrategyProfile p;
    p.strategies.reserve(spaces.size());
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      p.strategies.push_back(spaces[i][index % sizes[i]]);
      index /= sizes[i];
    }
    return p;
  }

  // Index of a profile already expressed with canonical strategies.
  std::uint64_t IndexOf(const StrategyProfile& p) const {
    std::uint64_t index = 0;
    std::uint64_t mul = 1;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      auto it = std::find(spaces[i].begin(), spaces[i].end(), p.strategies[i]);
      index += mul * static_cast<std::uint64_t>(it - spaces[i].begin());
      mul *= sizes[i];
    }
    return index;
  }
};

}  // namespace

GameReport Analyze(const FinancialNetwork& net, UtilityMode mode,
                   const AnalyzeOptions& options) {
  ProfileGrid grid(net, options.strategy_cap, options.profile_cap);
  GameReport report;
  report.mode = mode;
  report.profiles_examined = grid.total;
  report.outcomes.resize(grid.total);

  const int jobs = std::max(1, options.jobs);
  auto evaluate_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ProfileOutcome& out = report.outcomes[idx];
      out.profile = grid.At(idx);
      ProfileEvaluation eval =
          EvaluateProfile(net, out.profile, mode, options.cds);
      out.converged = eval.converged;
      if (eval.converged) {
        out.utilities = std::move(eval.utilities);
        out.social_welfare = eval.social_welfare;
      }
    }
  };
  if (jobs == 1 || grid.total < 16) {
    evaluate_range(0, grid.total);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const std::uint64_t chunk = (grid.total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(grid.total, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, t, begin, end] {
        try {
          evaluate_range(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Nash check by lookup: every unilateral deviation is a grid neighbor.
  for (std::uint64_t idx = 0; idx < grid.total; ++idx) {
    ProfileOutcome& out = report.outcomes[idx];
    if (!out.converged) {
      report.nonconvergent.push_back(idx);
      continue;
    }
    bool nash = true;
    std::uint64_t stride = 1;
    for (std::size_t firm = 0; firm < grid.spaces.size() && nash; ++firm) {
      const std::uint64_t here = (idx / stride) % grid.sizes[firm];
      for (std::uint64_t alt = 0; alt < grid.sizes[firm] && nash; ++alt) {
        if (alt == here) continue;
        const std::uint64_t nidx = idx + (alt - here) * stride;
        const ProfileOutcome& neighbor = report.outcomes[nidx];
        if (!neighbor.converged) continue;  // excluded deviation
        if (neighbor.utilities[firm] > out.utilities[firm]) nash = false;
      }
      stride *= grid.sizes[firm];
    }
    out.nash = nash;
    if (nash) report.equilibria.push_back(idx);
  }

  // OPT over convergent profiles.
  for (std::uint64_t idx = 0; idx < grid.total; ++idx) {
    const ProfileOutcome& out = report.outcomes[idx];
    if (!out.converged) continue;
    if (!report.has_opt || out.social_welfare > report.opt) {
      report.opt = out.social_welfare;
      report.opt_index = idx;
      report.has_opt = true;
    }
  }

  if (!report.equilibria.empty()) {
    Money worst = report.outcomes[report.equilibria[0]].social_welfare;
    Money best = worst;
    for (std::size_t idx : report.equilibria) {
      worst = std::min(worst, report.outcomes[idx].social_welfare);
      best = std::max(best, report.outcomes[idx].social_welfare);
    }
    auto ratio = [&](const Money& denom) {
      Ratio r;
      r.defined = true;
      if (denom == 0) {
        r.unbounded = report.opt > 0;
        if (!r.unbounded) r.value = Money(1);  // 0/0: no welfare anywhere
      } else {
        r.value = report.opt / denom;
      }
      return r;
    };
    report.poa = ratio(worst);
    report.pos = ratio(best);
  }

  if (options.coalition_check) {
    // Every coalition deviation is a grid point; check by lookup.
    std::vector<int> strategic;
    for (std::size_t i = 0; i < grid.spaces.size(); ++i) {
      if (grid.sizes[i] > 1) strategic.push_back(static_cast<int>(i));
    }
    for (std::uint64_t idx = 0; idx < grid.total; ++idx) {
      ProfileOutcome& out = report.outcomes[idx];
      if (!out.converged) continue;
      GameOptions sub = options;
      StabilityResult st =
          CoalitionStable(net, out.profile, mode, *options.coalition_check,
                          options.max_coalition, sub);
      if (*options.coalition_check == StabilityNotion::kStrong) {
        out.strong = st.stable;
      } else {
        out.super_strong = st.stable;
      }
    }
  }
  return report;
}

bool EquityInvarianceCheck(const FinancialNetwork& net,
                           const StrategyProfile& profile) {
  if (net.costs().alpha != 1 || net.costs().beta != 1) {
    throw Error(ErrorCode::kPreconditionDefaultCosts,
                "equity invariance holds only without default costs");
  }
  ClearingResult maximal = McpClear(net, profile, ClearingDirection::kMaximal);
  ClearingResult minimal = McpClear(net, profile, ClearingDirection::kMinimal);
  MoneyVec eq_max = UtilitiesOf(net, maximal, UtilityMode::kEquity);
  MoneyVec eq_min = UtilitiesOf(net, minimal, UtilityMode::kEquity);
  return eq_max == eq_min;
}

}  // namespace fennec
