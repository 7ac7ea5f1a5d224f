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

#ifndef FENNEC_NETWORK_H_
#define FENNEC_NETWORK_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fennec/errors.hpp"
#include "fennec/money.hpp"

namespace fennec {

struct Firm {
  std::string id;
  Money external;  // may be negative
};

struct Debt {
  int debtor;
  int creditor;
  Money amount;  // > 0 after validation (zero entries are dropped)
};

// Conditional liability of `notional * (1 - r_reference)` from debtor to
// creditor, activated by the reference firm's default.
struct Cds {
  int debtor;
  int creditor;
  int reference;
  Money notional;  // > 0 after validation
};

struct DefaultCosts {
  Money alpha{1};  // usable fraction of external assets in default
  Money beta{1};   // usable fraction of incoming payments in default
};

// Raw, unvalidated description (e.g. straight from JSON).
struct RawNetwork {
  std::vector<std::pair<std::string, Money>> firms;
  std::vector<std::tuple<std::string, std::string, Money>> debts;
  // debtor, creditor, reference, notional
  std::vector<std::tuple<std::string, std::string, std::string, Money>> cds;
  DefaultCosts costs;
};

// Immutable after construction via ValidateNetwork.
class FinancialNetwork {
 public:
  int size() const { return static_cast<int>(firms_.size()); }
  const std::vector<Firm>& firms() const { return firms_; }
  const std::vector<Debt>& debts() const { return debts_; }
  const std::vector<Cds>& cds() const { return cds_; }
  const DefaultCosts& costs() const { return costs_; }
  const Money& external(int i) const { return firms_[i].external; }
  const std::string& id(int i) const { return firms_[i].id; }

  int IndexOf(const std::string& id) const;  // throws UnknownFirmId

  // Creditors of firm i under *potential* liabilities: any j with a positive
  // debt l0_ij or a positive CDS notional l^k_ij. Class membership therefore
  // never depends on recovery rates. Sorted ascending.
  const std::vector<int>& creditors(int i) const { return creditors_[i]; }

  bool has_cds() const { return !cds_.empty(); }
  bool has_negative_externals() const;

  // Debt-only liabilities l0 as a dense matrix.
  MoneyMatrix BaseLiabilities() const;

  friend FinancialNetwork ValidateNetwork(const RawNetwork& raw);

 private:
  std::vector<Firm> firms_;
  std::vector<Debt> debts_;
  std::vector<Cds> cds_;
  DefaultCosts costs_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> creditors_;
};

// Checks all invariants, merges duplicate debt edges by summation, drops
// zero-amount contracts, and freezes the creditor sets.
FinancialNetwork ValidateNetwork(const RawNetwork& raw);

// Result of the negative-assets rewrite: an equivalent network with
// non-negative externals plus an auxiliary sink firm, and the strategy-space
// restriction it imposes.
struct NegativeAssetsTransform {
  FinancialNetwork network;
  std::string sink_id;             // auxiliary firm, external 0, no creditors
  std::vector<std::string> restricted;  // firms that owe the sink; their
                                        // topmost priority class must be
                                        // exactly {sink_id}
};

// Adds an auxiliary firm t; every firm with e_i < 0 gets external 0 and a
// debt of |e_i| to t. All other firms and contracts are copied unchanged.
NegativeAssetsTransform TransformNegativeAssets(const FinancialNetwork& net);

}  // namespace fennec

#endif  // FENNEC_NETWORK_H_
