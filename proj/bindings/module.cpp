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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fennec/fixtures.hpp"
#include "fennec/json_io.hpp"

namespace py = pybind11;

namespace {

using namespace fennec;

// Rationals cross the boundary as canonical "p/q" strings; exactness is the
// whole point, so no floats on the interface.
std::string S(const Money& m) { return MoneyToString(m); }

FinancialNetwork NetworkFromJsonText(const std::string& text) {
  return ValidateNetwork(ParseNetworkJson(Json::parse(text)));
}

StrategyProfile ProfileFromJsonText(const FinancialNetwork& net,
                                    const std::string& text) {
  return ParseProfileJson(net, Json::parse(text));
}

std::vector<std::vector<std::string>> MatrixStrings(const MoneyMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const Money& v : row) r.push_back(S(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_fennec, m) {
  m.doc() = "clearing payments and equilibrium analysis for financial "
            "networks under priority-proportional strategies";

  py::register_exception<Error>(m, "FennecError");

  py::class_<FinancialNetwork>(m, "FinancialNetwork")
      .def("size", &FinancialNetwork::size)
      .def("id", &FinancialNetwork::id)
      .def("index_of", &FinancialNetwork::IndexOf)
      .def("creditors", &FinancialNetwork::creditors)
      .def("to_json", [](const FinancialNetwork& net) {
        return NetworkToJson(net).dump(2);
      });

  py::class_<StrategyProfile>(m, "StrategyProfile");

  py::class_<ClearingResult>(m, "ClearingResult")
      .def_property_readonly("payments",
                             [](const ClearingResult& r) {
                               return MatrixStrings(r.payments);
                             })
      .def_property_readonly("totals",
                             [](const ClearingResult& r) {
                               std::vector<std::string> out;
                               for (const Money& t : r.totals) out.push_back(S(t));
                               return out;
                             })
      .def_property_readonly("defaults",
                             [](const ClearingResult& r) { return r.defaults; })
      .def_property_readonly("recovery",
                             [](const ClearingResult& r) {
                               std::vector<std::string> out;
                               for (const Money& t : r.recovery) out.push_back(S(t));
                               return out;
                             })
      .def_readonly("converged", &ClearingResult::converged)
      .def_readonly("rounds", &ClearingResult::rounds);

  m.def("parse_network", &NetworkFromJsonText, py::arg("json_text"));
  m.def("parse_profile", &ProfileFromJsonText, py::arg("network"),
        py::arg("json_text"));
  m.def("proportional_profile", &ProportionalProfile);

  m.def(
      "clear",
      [](const FinancialNetwork& net, const StrategyProfile& profile,
         int max_rounds) {
        CdsOptions opts;
        opts.max_rounds = max_rounds;
        return CdsClear(net, profile, opts);
      },
      py::arg("network"), py::arg("profile"), py::arg("max_rounds") = 10000);
  m.def(
      "proportional_clear",
      [](const FinancialNetwork& net) { return ProportionalClear(net); },
      py::arg("network"));
  m.def(
      "social_welfare",
      [](const FinancialNetwork& net, const StrategyProfile& profile,
         const std::string& utility) {
        return S(SocialWelfare(net, profile,
                               utility == "equity" ? UtilityMode::kEquity
                                                   : UtilityMode::kTotalAssets));
      },
      py::arg("network"), py::arg("profile"), py::arg("utility") = "assets");
  m.def(
      "analyze",
      [](const FinancialNetwork& net, const std::string& utility) {
        GameReport report = Analyze(
            net, utility == "equity" ? UtilityMode::kEquity
                                     : UtilityMode::kTotalAssets);
        return GameReportToJson(net, report).dump(2);
      },
      py::arg("network"), py::arg("utility") = "assets");
  m.def(
      "make_fixture",
      [](const std::string& name,
         const std::map<std::string, std::string>& params) {
        std::map<std::string, Money> parsed;
        for (const auto& [key, value] : params) parsed[key] = ParseMoney(value);
        Fixture f = MakeFixture(name, parsed);
        return f.network;
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});
  m.def("fixture_names", &FixtureNames);
  m.def(
      "verify_fixture",
      [](const std::string& name,
         const std::map<std::string, std::string>& params) {
        std::map<std::string, Money> parsed;
        for (const auto& [key, value] : params) parsed[key] = ParseMoney(value);
        return VerifyFixture(MakeFixture(name, parsed));
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});
}
