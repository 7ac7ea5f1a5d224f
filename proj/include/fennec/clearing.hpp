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

#ifndef FENNEC_CLEARING_H_
#define FENNEC_CLEARING_H_

#include <vector>

#include "fennec/liabilities.hpp"
#include "fennec/network.hpp"
#include "fennec/strategy.hpp"

namespace fennec {

enum class ClearingDirection { kMaximal, kMinimal };

struct ClearingResult {
  MoneyMatrix payments;        // p_ij
  MoneyVec totals;             // p_i = row sums
  std::vector<int> defaults;   // sorted firm indices with assets < L_i
  MoneyVec recovery;           // r_i = p_i / L_i for defaults with L_i > 0, else 1
  bool proper = true;
  bool converged = true;
  int rounds = 0;

  Money Inflow(int firm) const;
};

// Priority-proportional split of a total payment across one firm's creditors.
// Class m receives nothing until classes 1..m-1 are fully paid; the first
// unsaturated class splits the residual proportionally to liabilities. The
// result sums to min(max(total, 0), L_i); paying more than L_i ignores the
// excess.
MoneyVec PrioritySplit(const Money& total, const Strategy& strategy,
                       const MoneyVec& liability_row);

// Largest fixed point <= `start` of the default-set payment system
//   x_i = clamp_[0, L_i](alpha e_i + beta inflow_i(x)),  i in D,
// with firms outside D pinned at L_i. `start` must dominate the solution
// pointwise (start_i <= L_i and F(start) <= start); the decreasing iteration
// is solved exactly per affine regime. Throws NonFiniteRegime if the regime
// iteration exceeds its bound.
MoneyVec InnerFixedPoint(const FinancialNetwork& net, const LiabilityMatrix& lm,
                         const StrategyProfile& profile,
                         const std::vector<bool>& in_default,
                         const MoneyVec& start);

// Greatest clearing payments by the round-based scheme: start from full
// payment, grow the default set from effective-equity tests, re-solve, stop
// when the default set stabilizes. Payment vectors are asserted pointwise
// non-increasing and the default set non-decreasing across rounds.
struct RawMaximalResult {
  MoneyVec totals;
  std::vector<bool> in_default;
  int rounds = 0;
};
RawMaximalResult MaximalRaw(const FinancialNetwork& net,
                            const LiabilityMatrix& lm,
                            const StrategyProfile& profile);

// Breadth-first properness filter: marks firms reachable from positive
// externals along positive payments and zeroes all outgoing payments of
// unreached firms.
MoneyMatrix ProperFilter(const MoneyMatrix& payments,
                         const FinancialNetwork& net);

// Clearing on an already-resolved liability matrix.
//  - kMaximal: maximal proper clearing payments. Computed from below with
//    exact regime solving and joint lifting of mutually-solvent groups, then
//    filtered; the raw greatest payments are computed alongside and asserted
//    to dominate the result.
//  - kMinimal: least clearing fixed point (no filtering; proper by
//    construction). Used as a test oracle.
ClearingResult McpClearResolved(const FinancialNetwork& net,
                                const LiabilityMatrix& lm,
                                const StrategyProfile& profile,
                                ClearingDirection direction);

// Same, resolving CDS liabilities at all-ones recovery. Intended for
// CDS-free networks.
ClearingResult McpClear(const FinancialNetwork& net,
                        const StrategyProfile& profile,
                        ClearingDirection direction);

struct CdsOptions {
  int max_rounds = 10000;
};

// Outer loop over recovery rates: resolve liabilities, clear, recompute r,
// repeat until the implied liabilities stop changing or the round cap hits.
// Non-convergence is reported via converged = false on the last iterate.
ClearingResult CdsClear(const FinancialNetwork& net,
                        const StrategyProfile& profile,
                        const CdsOptions& options = {});

// The non-strategic baseline: CdsClear under the all-single-class profile.
ClearingResult ProportionalClear(const FinancialNetwork& net,
                                 const CdsOptions& options = {});

// Payment matrix for given totals under a profile (each row = split).
MoneyMatrix PaymentsFromTotals(const LiabilityMatrix& lm,
                               const StrategyProfile& profile,
                               const MoneyVec& totals);

}  // namespace fennec

#endif  // FENNEC_CLEARING_H_
