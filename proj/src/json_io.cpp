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

#include "fennec/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fennec {
namespace {

Money AmountField(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("missing field '") + key + "'");
  }
  const Json& v = j.at(key);
  if (v.is_string()) return ParseMoney(v.get<std::string>());
  if (v.is_number_integer()) return Money(v.get<long long>());
  throw Error(ErrorCode::kInvalidInput,
              std::string("amount '") + key + "' must be a string");
}

std::string StringField(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

RawNetwork ParseNetworkJson(const Json& j) {
  RawNetwork raw;
  if (!j.is_object() || !j.contains("firms") || !j.at("firms").is_array()) {
    throw Error(ErrorCode::kInvalidInput, "network JSON needs a 'firms' array");
  }
  for (const Json& f : j.at("firms")) {
    raw.firms.emplace_back(StringField(f, "id"), AmountField(f, "external"));
  }
  if (j.contains("debts")) {
    for (const Json& d : j.at("debts")) {
      raw.debts.emplace_back(StringField(d, "from"), StringField(d, "to"),
                             AmountField(d, "amount"));
    }
  }
  if (j.contains("cds")) {
    for (const Json& c : j.at("cds")) {
      raw.cds.emplace_back(StringField(c, "from"), StringField(c, "to"),
                           StringField(c, "reference"),
                           AmountField(c, "notional"));
    }
  }
  if (j.contains("default_costs")) {
    raw.costs.alpha = AmountField(j.at("default_costs"), "alpha");
    raw.costs.beta = AmountField(j.at("default_costs"), "beta");
  }
  return raw;
}

FinancialNetwork LoadNetwork(const std::string& path) {
  Json j = Json::parse(ReadFile(path));
  return ValidateNetwork(ParseNetworkJson(j));
}

Json NetworkToJson(const FinancialNetwork& net) {
  Json j;
  j["firms"] = Json::array();
  for (const Firm& f : net.firms()) {
    j["firms"].push_back(
        {{"id", f.id}, {"external", MoneyToString(f.external)}});
  }
  j["debts"] = Json::array();
  for (const Debt& d : net.debts()) {
    j["debts"].push_back({{"from", net.id(d.debtor)},
                          {"to", net.id(d.creditor)},
                          {"amount", MoneyToString(d.amount)}});
  }
  j["cds"] = Json::array();
  for (const Cds& c : net.cds()) {
    j["cds"].push_back({{"from", net.id(c.debtor)},
                        {"to", net.id(c.creditor)},
                        {"reference", net.id(c.reference)},
                        {"notional", MoneyToString(c.notional)}});
  }
  j["default_costs"] = {{"alpha", MoneyToString(net.costs().alpha)},
                        {"beta", MoneyToString(net.costs().beta)}};
  return j;
}

StrategyProfile ParseProfileJson(const FinancialNetwork& net, const Json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidInput, "profile JSON must be an object");
  }
  StrategyProfile p;
  p.strategies.resize(net.size());
  std::vector<bool> given(net.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int firm = net.IndexOf(it.key());
    Strategy s;
    for (const Json& cls : it.value()) {
      std::vector<int> members;
      for (const Json& id : cls) members.push_back(net.IndexOf(id.get<std::string>()));
      std::sort(members.begin(), members.end());
      s.classes.push_back(std::move(members));
    }
    p.strategies[firm] = std::move(s);
    given[firm] = true;
  }
  for (int i = 0; i < net.size(); ++i) {
    if (!given[i]) {
      if (net.creditors(i).size() > 1) {
        throw Error(ErrorCode::kInvalidInput,
                    "profile misses multi-creditor firm '" + net.id(i) + "'");
      }
      p.strategies[i] = ProportionalStrategy(net.creditors(i));
    }
  }
  ValidateProfile(net, p);
  return p;
}

Json ProfileToJson(const FinancialNetwork& net, const StrategyProfile& p) {
  Json j = Json::object();
  for (int i = 0; i < net.size(); ++i) {
    if (net.creditors(i).empty()) continue;
    Json classes = Json::array();
    for (const auto& cls : p.strategies[i].classes) {
      Json members = Json::array();
      for (int m : cls) members.push_back(net.id(m));
      classes.push_back(members);
    }
    j[net.id(i)] = classes;
  }
  return j;
}

Json ClearingResultToJson(const FinancialNetwork& net,
                          const ClearingResult& result) {
  Json j;
  j["firms"] = Json::array();
  for (const Firm& f : net.firms()) j["firms"].push_back(f.id);
  j["payments"] = Json::array();
  for (const auto& row : result.payments) {
    Json r = Json::array();
    for (const Money& p : row) r.push_back(MoneyToString(p));
    j["payments"].push_back(r);
  }
  j["totals"] = Json::array();
  for (const Money& t : result.totals) j["totals"].push_back(MoneyToString(t));
  j["defaults"] = Json::array();
  for (int i : result.defaults) j["defaults"].push_back(net.id(i));
  j["recovery"] = Json::array();
  for (const Money& r : result.recovery) j["recovery"].push_back(MoneyToString(r));
  j["proper"] = result.proper;
  j["converged"] = result.converged;
  j["rounds"] = result.rounds;
  Money sw_assets(0), sw_equity(0);
  for (const Money& u : UtilitiesAt(net, result, UtilityMode::kTotalAssets)) {
    sw_assets += u;
  }
  for (const Money& u : UtilitiesAt(net, result, UtilityMode::kEquity)) {
    sw_equity += u;
  }
  j["social_welfare"] = {{"assets", MoneyToString(sw_assets)},
                         {"equity", MoneyToString(sw_equity)}};
  return j;
}

std::string ClearingResultToCsv(const FinancialNetwork& net,
                                const ClearingResult& result) {
  std::ostringstream out;
  out << "debtor";
  for (const Firm& f : net.firms()) out << "," << f.id;
  out << "\n";
  for (int i = 0; i < net.size(); ++i) {
    out << net.id(i);
    for (int j = 0; j < net.size(); ++j) {
      out << "," << MoneyToString(result.payments[i][j]);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

Json RatioToJson(const Ratio& r) {
  if (!r.defined) return nullptr;
  if (r.unbounded) return "unbounded";
  return MoneyToString(r.value);
}

}  // namespace

Json GameReportToJson(const FinancialNetwork& net, const GameReport& report) {
  Json j;
  j["utility"] = report.mode == UtilityMode::kTotalAssets ? "assets" : "equity";
  j["profiles_examined"] = report.profiles_examined;
  j["profiles"] = Json::array();
  for (const ProfileOutcome& out : report.outcomes) {
    Json o;
    o["profile"] = ProfileToJson(net, out.profile);
    o["converged"] = out.converged;
    if (out.converged) {
      Json u = Json::object();
      for (int i = 0; i < net.size(); ++i) {
        u[net.id(i)] = MoneyToString(out.utilities[i]);
      }
      o["utilities"] = u;
      o["social_welfare"] = MoneyToString(out.social_welfare);
      o["nash"] = out.nash;
      if (out.strong.has_value()) o["strong"] = *out.strong;
      if (out.super_strong.has_value()) o["super_strong"] = *out.super_strong;
    }
    j["profiles"].push_back(o);
  }
  j["equilibria"] = report.equilibria;
  j["nonconvergent"] = report.nonconvergent;
  if (report.has_opt) {
    j["opt"] = MoneyToString(report.opt);
    j["opt_profile"] = ProfileToJson(net, report.outcomes[report.opt_index].profile);
  }
  j["poa"] = RatioToJson(report.poa);
  j["pos"] = RatioToJson(report.pos);
  j["has_equilibrium"] = !report.equilibria.empty();
  return j;
}

namespace {

std::string ProfileShortText(const FinancialNetwork& net,
                             const StrategyProfile& p) {
  std::ostringstream out;
  bool first_firm = true;
  for (int i = 0; i < net.size(); ++i) {
    if (net.creditors(i).size() < 2) continue;
    if (!first_firm) out << " ";
    first_firm = false;
    out << net.id(i) << ":(";
    bool first_cls = true;
    for (const auto& cls : p.strategies[i].classes) {
      if (!first_cls) out << "|";
      first_cls = false;
      bool first_m = true;
      for (int m : cls) {
        if (!first_m) out << ",";
        first_m = false;
        out << net.id(m);
      }
    }
    out << ")";
  }
  if (first_firm) out << "(trivial)";
  return out.str();
}

}  // namespace

std::string GameReportToTable(const FinancialNetwork& net,
                              const GameReport& report) {
  std::ostringstream out;
  out << "profile";
  for (const Firm& f : net.firms()) out << "\tu(" << f.id << ")";
  out << "\tSW\tflags\n";
  for (const ProfileOutcome& o : report.outcomes) {
    out << ProfileShortText(net, o.profile);
    if (!o.converged) {
      out << "\t[nonconvergent]\n";
      continue;
    }
    for (const Money& u : o.utilities) out << "\t" << MoneyToString(u);
    out << "\t" << MoneyToString(o.social_welfare);
    out << "\t" << (o.nash ? "NE" : "-");
    if (o.strong.has_value()) out << (*o.strong ? ",strong" : ",not-strong");
    if (o.super_strong.has_value()) {
      out << (*o.super_strong ? ",super-strong" : ",not-super-strong");
    }
    out << "\n";
  }
  out << "profiles=" << report.profiles_examined
      << " equilibria=" << report.equilibria.size();
  if (report.has_opt) out << " OPT=" << MoneyToString(report.opt);
  auto ratio_text = [](const Ratio& r) -> std::string {
    if (!r.defined) return "undefined";
    if (r.unbounded) return "unbounded";
    return MoneyToString(r.value);
  };
  out << " PoA=" << ratio_text(report.poa) << " PoS=" << ratio_text(report.pos)
      << "\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput, "cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace fennec
