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

#include "fennec/network.hpp"

#include <algorithm>

namespace fennec {

int FinancialNetwork::IndexOf(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownFirmId, "unknown firm id: '" + id + "'");
  }
  return it->second;
}

bool FinancialNetwork::has_negative_externals() const {
  return std::any_of(firms_.begin(), firms_.end(),
                     [](const Firm& f) { return f.external < 0; });
}

MoneyMatrix FinancialNetwork::BaseLiabilities() const {
  MoneyMatrix l = ZeroMatrix(firms_.size());
  for (const Debt& d : debts_) l[d.debtor][d.creditor] += d.amount;
  return l;
}

FinancialNetwork ValidateNetwork(const RawNetwork& raw) {
  FinancialNetwork net;
  net.costs_ = raw.costs;
  if (raw.costs.alpha < 0 || raw.costs.alpha > 1 || raw.costs.beta < 0 ||
      raw.costs.beta > 1) {
    throw Error(ErrorCode::kDefaultCostOutOfRange,
                "default costs must lie in [0,1]: alpha=" +
                    MoneyToString(raw.costs.alpha) +
                    " beta=" + MoneyToString(raw.costs.beta));
  }

  for (const auto& [id, external] : raw.firms) {
    if (net.index_.count(id)) {
      throw Error(ErrorCode::kInvalidInput, "duplicate firm id: '" + id + "'");
    }
    net.index_[id] = static_cast<int>(net.firms_.size());
    net.firms_.push_back(Firm{id, external});
  }

  // Duplicate debt edges are merged by summation.
  std::map<std::pair<int, int>, Money> merged;
  for (const auto& [from, to, amount] : raw.debts) {
    int i = net.IndexOf(from);
    int j = net.IndexOf(to);
    if (i == j) {
      throw Error(ErrorCode::kSelfLoopDebt, "self-loop debt at '" + from + "'");
    }
    if (amount < 0) {
      throw Error(ErrorCode::kNegativeLiability,
                  "negative debt " + from + "->" + to + ": " +
                      MoneyToString(amount));
    }
    merged[{i, j}] += amount;
  }
  for (const auto& [edge, amount] : merged) {
    if (amount > 0) net.debts_.push_back(Debt{edge.first, edge.second, amount});
  }

  for (const auto& [from, to, ref, notional] : raw.cds) {
    int i = net.IndexOf(from);
    int j = net.IndexOf(to);
    int k = net.IndexOf(ref);
    if (i == j) {
      throw Error(ErrorCode::kSelfLoopDebt, "self-loop CDS at '" + from + "'");
    }
    if (k == i || k == j) {
      throw Error(ErrorCode::kCdsDegenerateReference,
                  "CDS reference '" + ref + "' coincides with a party");
    }
    if (notional < 0) {
      throw Error(ErrorCode::kNegativeLiability,
                  "negative CDS notional " + from + "->" + to + ": " +
                      MoneyToString(notional));
    }
    if (notional > 0) net.cds_.push_back(Cds{i, j, k, notional});
  }

  net.creditors_.assign(net.firms_.size(), {});
  std::vector<std::set<int>> creditor_sets(net.firms_.size());
  for (const Debt& d : net.debts_) creditor_sets[d.debtor].insert(d.creditor);
  for (const Cds& c : net.cds_) creditor_sets[c.debtor].insert(c.creditor);
  for (std::size_t i = 0; i < creditor_sets.size(); ++i) {
    net.creditors_[i].assign(creditor_sets[i].begin(), creditor_sets[i].end());
  }
  return net;
}

NegativeAssetsTransform TransformNegativeAssets(const FinancialNetwork& net) {
  std::string sink = "t";
  // Keep the conventional name unless taken.
  while (true) {
    bool clash = false;
    for (const Firm& f : net.firms()) clash |= (f.id == sink);
    if (!clash) break;
    sink += "_aux";
  }

  RawNetwork raw;
  raw.costs = net.costs();
  NegativeAssetsTransform out{FinancialNetwork{}, sink, {}};
  for (const Firm& f : net.firms()) {
    raw.firms.emplace_back(f.id, f.external < 0 ? Money(0) : f.external);
  }
  raw.firms.emplace_back(sink, Money(0));
  for (const Debt& d : net.debts()) {
    raw.debts.emplace_back(net.id(d.debtor), net.id(d.creditor), d.amount);
  }
  for (const Cds& c : net.cds()) {
    raw.cds.emplace_back(net.id(c.debtor), net.id(c.creditor),
                         net.id(c.reference), c.notional);
  }
  for (const Firm& f : net.firms()) {
    if (f.external < 0) {
      // Liabilities are nonnegative, so the new debt carries |e_i|.
      raw.debts.emplace_back(f.id, sink, Money(-f.external));
      out.restricted.push_back(f.id);
    }
  }
  out.network = ValidateNetwork(raw);
  return out;
}

}  // namespace fennec
