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

#ifndef FENNEC_VERIFY_H_
#define FENNEC_VERIFY_H_

#include <string>
#include <vector>

#include "fennec/clearing.hpp"

namespace fennec {

// One violated condition, with its exact residual.
struct Violation {
  std::string kind;   // "fixed-point", "split", "bounds", "properness", "recovery"
  std::string where;  // firm or firm->creditor
  Money residual;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Independent re-check of a clearing result. Recomputes everything from the
// network, profile and the result's recovery vector without reusing any
// solver state: per-firm fixed-point residuals, per-edge priority split
// residuals, payment bounds, properness by reachability, and recovery
// consistency.
VerificationReport VerifyClearing(const FinancialNetwork& net,
                                  const StrategyProfile& profile,
                                  const ClearingResult& result);

}  // namespace fennec

#endif  // FENNEC_VERIFY_H_
