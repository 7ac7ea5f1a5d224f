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

#include "fennec/liabilities.hpp"

namespace fennec {

LiabilityMatrix ResolveLiabilities(const FinancialNetwork& net,
                                   const MoneyVec& recovery) {
  if (static_cast<int>(recovery.size()) != net.size()) {
    throw Error(ErrorCode::kInvalidInput, "recovery vector size mismatch");
  }
  for (const Money& r : recovery) {
    if (r < 0 || r > 1) {
      throw Error(ErrorCode::kRecoveryOutOfRange,
                  "recovery rate out of [0,1]: " + MoneyToString(r));
    }
  }
  LiabilityMatrix out;
  out.l = net.BaseLiabilities();
  for (const Cds& c : net.cds()) {
    out.l[c.debtor][c.creditor] += (Money(1) - recovery[c.reference]) * c.notional;
  }
  out.totals.assign(net.size(), Money(0));
  for (int i = 0; i < net.size(); ++i) {
    for (int j = 0; j < net.size(); ++j) out.totals[i] += out.l[i][j];
  }
  return out;
}

LiabilityMatrix ResolveBase(const FinancialNetwork& net) {
  return ResolveLiabilities(net, MoneyVec(net.size(), Money(1)));
}

}  // namespace fennec
