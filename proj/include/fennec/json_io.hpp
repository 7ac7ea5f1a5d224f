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

#ifndef FENNEC_JSON_IO_H_
#define FENNEC_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "fennec/game.hpp"

namespace fennec {

using Json = nlohmann::ordered_json;

// Network JSON:
//   {"firms":[{"id":"v1","external":"1"}],
//    "debts":[{"from":"v1","to":"v2","amount":"2"}],
//    "cds":[{"from":"v4","to":"v5","reference":"v3","notional":"1"}],
//    "default_costs":{"alpha":"1","beta":"1"}}
// Amounts are strings, either decimal ("1.5") or rational ("2/3").
RawNetwork ParseNetworkJson(const Json& j);
FinancialNetwork LoadNetwork(const std::string& path);
Json NetworkToJson(const FinancialNetwork& net);

// Profile JSON maps firm ids to priority classes in priority order:
//   {"v1": [["v2"],["v3"]]}
// Firms with at most one creditor may be omitted.
StrategyProfile ParseProfileJson(const FinancialNetwork& net, const Json& j);
Json ProfileToJson(const FinancialNetwork& net, const StrategyProfile& p);

Json ClearingResultToJson(const FinancialNetwork& net,
                          const ClearingResult& result);
// Payment matrix CSV: row = debtor, column = creditor, header row/column of
// firm ids, entries in canonical rational form.
std::string ClearingResultToCsv(const FinancialNetwork& net,
                                const ClearingResult& result);

Json GameReportToJson(const FinancialNetwork& net, const GameReport& report);
// Human-readable table: one row per profile with per-firm utilities, social
// welfare and equilibrium flags.
std::string GameReportToTable(const FinancialNetwork& net,
                              const GameReport& report);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& content);

}  // namespace fennec

#endif  // FENNEC_JSON_IO_H_
