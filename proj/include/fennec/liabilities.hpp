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

#ifndef FENNEC_LIABILITIES_H_
#define FENNEC_LIABILITIES_H_

#include "fennec/network.hpp"

namespace fennec {

// Total liabilities in force under a recovery vector:
//   l_ij = l0_ij + sum_k (1 - r_k) * notional^k_ij.
struct LiabilityMatrix {
  MoneyMatrix l;      // n x n, l[i][j] >= 0, l[i][i] == 0
  MoneyVec totals;    // L_i = sum_j l[i][j]

  int size() const { return static_cast<int>(totals.size()); }
};

// Solvent firms conventionally carry r = 1. Entries outside [0,1] throw
// RecoveryOutOfRange.
LiabilityMatrix ResolveLiabilities(const FinancialNetwork& net,
                                   const MoneyVec& recovery);

// Convenience: all-ones recovery (CDS liabilities vanish).
LiabilityMatrix ResolveBase(const FinancialNetwork& net);

}  // namespace fennec

#endif  // FENNEC_LIABILITIES_H_
