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

#include "fennec/fixtures.hpp"

#include <algorithm>
#include <sstream>

namespace fennec {
namespace {

using Params = std::map<std::string, Money>;

Money Param(const Params& params, const std::string& key,
            const Money& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kParamOutOfRange, message);
}

struct NetSpec {
  std::vector<std::pair<std::string, Money>> firms;
  std::vector<std::tuple<std::string, std::string, Money>> debts;
  std::vector<std::tuple<std::string, std::string, std::string, Money>> cds;
  Money alpha{1};
  Money beta{1};
};

FinancialNetwork Build(const NetSpec& spec) {
  RawNetwork raw;
  raw.firms = spec.firms;
  raw.debts = spec.debts;
  raw.cds = spec.cds;
  raw.costs = DefaultCosts{spec.alpha, spec.beta};
  return ValidateNetwork(raw);
}

using ClassSpec = std::vector<std::vector<std::string>>;

StrategyProfile MakeProfile(const FinancialNetwork& net,
                            const std::map<std::string, ClassSpec>& given) {
  StrategyProfile p = ProportionalProfile(net);
  for (const auto& [firm, classes] : given) {
    Strategy s;
    for (const auto& cls : classes) {
      std::vector<int> members;
      for (const std::string& id : cls) members.push_back(net.IndexOf(id));
      std::sort(members.begin(), members.end());
      s.classes.push_back(std::move(members));
    }
    p.strategies[net.IndexOf(firm)] = std::move(s);
  }
  ValidateProfile(net, p);
  return p;
}

MoneyMatrix Mat(const FinancialNetwork& net,
                const std::vector<std::tuple<std::string, std::string, Money>>&
                    entries) {
  MoneyMatrix m = ZeroMatrix(net.size());
  for (const auto& [from, to, amount] : entries) {
    m[net.IndexOf(from)][net.IndexOf(to)] = amount;
  }
  return m;
}

std::vector<std::pair<int, Money>> Utils(
    const FinancialNetwork& net,
    const std::vector<std::pair<std::string, Money>>& entries) {
  std::vector<std::pair<int, Money>> out;
  for (const auto& [id, value] : entries) out.emplace_back(net.IndexOf(id), value);
  return out;
}

// ---------------------------------------------------------------------------

Fixture Example1(const Params& params) {
  Fixture f;
  f.name = "example1";
  f.note = "five-firm network with one CDS; only v1 is strategic";
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(1)}, {"v5", Money(0)}};
  spec.debts = {{"v1", "v2", Money(2)},
                {"v1", "v3", Money(1)},
                {"v2", "v1", Money(1)},
                {"v3", "v5", Money(1)}};
  spec.cds = {{"v4", "v5", "v3", Money(1)}};
  f.network = Build(spec);
  const auto& net = f.network;

  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(2)},
                           {"v2", "v1", Money(1)},
                           {"v4", "v5", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(2)}, {"v2", Money(2)},
                              {"v3", Money(0)}, {"v4", Money(1)},
                              {"v5", Money(1)}});
    e.social_welfare = Money(6);
    e.provenance = "worked example, priority case";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", Money(1)}, {"v3", "v5", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(1)}, {"v2", Money(0)},
                              {"v3", Money(1)}, {"v4", Money(1)},
                              {"v5", Money(1)}});
    e.social_welfare = Money(4);
    e.provenance = "worked example, reversed priority case";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v2,v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2", "v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(4, 3)},
                           {"v1", "v3", Money(2, 3)},
                           {"v2", "v1", Money(1)},
                           {"v3", "v5", Money(2, 3)},
                           {"v4", "v5", Money(1, 3)}});
    e.utilities = Utils(net, {{"v1", Money(2)}, {"v2", Money(4, 3)},
                              {"v3", Money(2, 3)}, {"v4", Money(1)},
                              {"v5", Money(1)}});
    e.social_welfare = Money(6);
    e.provenance = "worked example, proportional case";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture NoNashInstance(const Params& params) {
  Fixture f;
  f.name = "thm4-no-ne";
  f.note = "seven-firm game with no pure equilibrium; v1, v2, v3 strategic";
  const Money M = Param(params, "M", Money(600));
  Require(M > 60, "thm4-no-ne requires M > 60");
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(0)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(1)}, {"v5", Money(1)}, {"v6", Money(1)},
                {"v7", Money(1)}};
  spec.debts = {{"v1", "v6", Money(4)},     {"v1", "v7", Money(4)},
                {"v2", "v1", Money(6)},     {"v2", "v4", M},
                {"v3", "v1", Money(6)},     {"v3", "v5", M},
                {"v4", "v2", Money(2)},     {"v5", "v3", Money(2)},
                {"v6", "v2", Money(7, 2)},  {"v7", "v3", Money(7, 2)}};
  f.network = Build(spec);
  const auto& net = f.network;

  const Money eps = Money(6) / (M + 6);
  const Money one(1), two(2);
  const Money d1 = one - eps;   // 1 - eps
  const Money d2 = two - eps;   // 2 - eps

  const ClassSpec s1_opts[3] = {{{"v6"}, {"v7"}}, {{"v7"}, {"v6"}}, {{"v6", "v7"}}};
  const ClassSpec s2_opts[3] = {{{"v1"}, {"v4"}}, {{"v1", "v4"}}, {{"v4"}, {"v1"}}};
  const ClassSpec s3_opts[3] = {{{"v1"}, {"v5"}}, {{"v1", "v5"}}, {{"v5"}, {"v1"}}};
  const char* s1_names[3] = {"(v6|v7)", "(v7|v6)", "(v6,v7)"};
  const char* s2_names[3] = {"(v1|v4)", "(v1,v4)", "(v4|v1)"};
  const char* s3_names[3] = {"(v1|v5)", "(v1,v5)", "(v5|v1)"};

  // Utility triples (u1, u2, u3), indexed [s1][s2][s3]. One published cell
  // breaks the v2/v3 symmetry of the instance and is restored from its
  // mirror cell; see the fixture note.
  const Money h9(9), h45(9, 2), h35(7, 2), h3(3), h2(2), h5(5), h4(4);
  Money cells[3][3][3][3];
  auto set = [&](int a, int b, int c, Money u1, Money u2, Money u3) {
    cells[a][b][c][0] = u1;
    cells[a][b][c][1] = u2;
    cells[a][b][c][2] = u3;
  };
  // s1 = (v6|v7)
  set(0, 0, 0, h9, h45, h45);
  set(0, 0, 1, (h45 - eps) / d1, h45, h35 / d1);
  set(0, 0, 2, h45, h45, h35);
  set(0, 1, 0, h2 + 5 * eps / d1, h5 / d1, h2);
  set(0, 1, 1, 6 * eps / d1, (h3 + 3 * eps) / d1, h3);
  set(0, 1, 2, 3 * eps / d1, h3 / d1, h3);
  set(0, 2, 0, h2, h5, h2);
  set(0, 2, 1, 3 * eps, h3 + 3 * eps, h3);
  set(0, 2, 2, Money(0), h3, h3);
  // s1 = (v7|v6): the mirror block
  set(1, 0, 0, h9, h45, h45);
  set(1, 0, 1, h2 + 5 * eps / d1, h2, h5 / d1);
  set(1, 0, 2, h2, h2, h5);
  set(1, 1, 0, (h45 - eps) / d1, h35 / d1, h45);
  set(1, 1, 1, 6 * eps / d1, h3, (h3 + 3 * eps) / d1);
  set(1, 1, 2, 3 * eps, h3, h3 + 3 * eps);
  set(1, 2, 0, h45, h35, h45);
  set(1, 2, 1, 3 * eps / d1, h3, h3 / d1);
  set(1, 2, 2, Money(0), h3, h3);
  // s1 = (v6,v7)
  set(2, 0, 0, h9, h45, h45);
  set(2, 0, 1, (h4 + 6 * eps) / d1, (h4 + eps) / d1, h5 / d1);
  set(2, 0, 2, h4, h4, h5);
  set(2, 1, 0, (h4 + 6 * eps) / d1, h5 / d1, (h4 + eps) / d1);
  set(2, 1, 1, 6 * eps / d1, h3 / d1, h3 / d1);
  set(2, 1, 2, 6 * eps / d2, Money(6) / d2, Money(6) / d2);
  set(2, 2, 0, h4, h5, h4);
  set(2, 2, 1, 6 * eps / d2, Money(6) / d2, Money(6) / d2);
  set(2, 2, 2, Money(0), h3, h3);

  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        Expectation e;
        std::ostringstream label;
        label << "s1=" << s1_names[a] << " s2=" << s2_names[b]
              << " s3=" << s3_names[c];
        e.label = label.str();
        e.profile = MakeProfile(net, {{"v1", s1_opts[a]},
                                      {"v2", s2_opts[b]},
                                      {"v3", s3_opts[c]}});
        e.utilities = {{net.IndexOf("v1"), cells[a][b][c][0]},
                       {net.IndexOf("v2"), cells[a][b][c][1]},
                       {net.IndexOf("v3"), cells[a][b][c][2]}};
        e.provenance = "documented utility table, cell " + e.label;
        f.expectations.push_back(std::move(e));
      }
    }
  }
  f.note += "; the published (v6,v7)/(v1,v4)/(v5|v1) cell is restored from "
            "its mirror (v6,v7)/(v4|v1)/(v1,v5) for v2/v3 symmetry";
  return f;
}

Fixture ProportionalInefficiency(const Params& params) {
  Fixture f;
  f.name = "thm5-prop";
  f.note = "proportional payments waste welfare; strategic payments scale with M";
  const Money M = Param(params, "M", Money(100));
  Require(M >= 1, "thm5-prop requires M >= 1");
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(0)}, {"v3", Money(0)}};
  spec.debts = {{"v1", "v2", M}, {"v1", "v3", 2 * M}, {"v2", "v1", M}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "proportional";
    e.profile = ProportionalProfile(net);
    e.payments = Mat(net, {{"v1", "v2", Money(1, 2)},
                           {"v1", "v3", Money(1)},
                           {"v2", "v1", Money(1, 2)}});
    e.utilities = Utils(net, {{"v1", Money(3, 2)}, {"v2", Money(1, 2)},
                              {"v3", Money(1)}});
    e.social_welfare = Money(3);
    e.provenance = "documented proportional clearing of the 3-firm instance";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", M}, {"v1", "v3", Money(1)},
                           {"v2", "v1", M}});
    e.utilities = Utils(net, {{"v1", M + 1}, {"v2", M}, {"v3", Money(1)}});
    e.social_welfare = 2 * M + 2;
    e.provenance = "documented strategic clearing of the 3-firm instance";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture ProportionalPath(const Params& params) {
  Fixture f;
  f.name = "thm5-path";
  f.note = "acyclic chain showing the near-tight n/2 welfare loss";
  const Money M = Param(params, "M", Money(100));
  const Money n_param = Param(params, "n", Money(10));
  Require(M >= 1, "thm5-path requires M >= 1");
  Require(denominator(n_param) == 1 && n_param >= 4,
          "thm5-path requires integer n >= 4");
  const int n = static_cast<int>(numerator(n_param).convert_to<long long>());
  f.params["M"] = M;
  f.params["n"] = n_param;
  NetSpec spec;
  for (int i = 1; i <= n; ++i) {
    spec.firms.emplace_back("v" + std::to_string(i),
                            i == 1 ? Money(1) : Money(0));
  }
  spec.debts.push_back({"v1", "v2", M});
  spec.debts.push_back({"v1", "v3", Money(1)});
  for (int i = 3; i < n; ++i) {
    spec.debts.push_back(
        {"v" + std::to_string(i), "v" + std::to_string(i + 1), Money(1)});
  }
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "proportional";
    e.profile = ProportionalProfile(net);
    std::vector<std::tuple<std::string, std::string, Money>> entries = {
        {"v1", "v2", M / (M + 1)}, {"v1", "v3", Money(1) / (M + 1)}};
    for (int i = 3; i < n; ++i) {
      entries.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1),
                         Money(1) / (M + 1)});
    }
    e.payments = Mat(net, entries);
    e.social_welfare = Money(2) + Money(n - 3) / (M + 1);
    e.provenance = "documented proportional chain payments";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    std::vector<std::tuple<std::string, std::string, Money>> entries = {
        {"v1", "v3", Money(1)}};
    for (int i = 3; i < n; ++i) {
      entries.push_back(
          {"v" + std::to_string(i), "v" + std::to_string(i + 1), Money(1)});
    }
    e.payments = Mat(net, entries);
    e.social_welfare = Money(n - 1);
    e.provenance = "documented optimal chain payments";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

NetSpec AlphaInstanceSpec(const Money& label, const Money& M,
                          const Money& alpha, const Money& beta) {
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(0)}};
  spec.debts = {{"v1", "v2", 2 * label},
                {"v1", "v3", Money(1)},
                {"v2", "v1", label},
                {"v3", "v4", M},
                {"v4", "v3", M}};
  spec.alpha = alpha;
  spec.beta = beta;
  return spec;
}

Fixture ZeroCosts(const Params& params) {
  Fixture f;
  f.name = "thm6-zero-costs";
  f.note = "the alpha-instance run with both default costs at zero: every "
           "defaulting firm is frozen, so all profiles clear identically";
  const Money M = Param(params, "M", Money(100));
  Require(M >= 1, "thm6-zero-costs requires M >= 1");
  f.params["M"] = M;
  f.network = Build(AlphaInstanceSpec(Money(1, 2), M, Money(0), Money(0)));
  const auto& net = f.network;
  const char* labels[3] = {"s1=(v2|v3)", "s1=(v3|v2)", "s1=(v2,v3)"};
  const ClassSpec opts[3] = {{{"v2"}, {"v3"}}, {{"v3"}, {"v2"}}, {{"v2", "v3"}}};
  for (int k = 0; k < 3; ++k) {
    Expectation e;
    e.label = labels[k];
    e.profile = MakeProfile(net, {{"v1", opts[k]}});
    e.payments = Mat(net, {});
    e.social_welfare = Money(1);
    e.provenance = "zero default costs freeze every defaulting firm";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture BetaInstance(const Params& params) {
  Fixture f;
  f.name = "thm7-beta";
  f.note = "unbounded stability gap for beta in (0,1); only v1 strategic";
  const Money beta = Param(params, "beta", Money(1, 2));
  const Money M = Param(params, "M", Money(100));
  Require(beta > 0 && beta < 1, "thm7-beta requires beta in (0,1)");
  Require(M >= 2, "thm7-beta requires M >= 2");
  f.params["beta"] = beta;
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(0)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(0)}, {"v5", Money(1)}};
  spec.debts = {{"v1", "v2", M},
                {"v1", "v3", M * M / (2 * beta)},
                {"v2", "v1", beta},
                {"v3", "v4", M},
                {"v4", "v3", M},
                {"v5", "v1", Money(1)}};
  spec.alpha = beta;
  spec.beta = beta;
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", beta * beta + beta},
                           {"v2", "v1", beta},
                           {"v5", "v1", Money(1)}});
    e.utilities = Utils(net, {{"v1", 1 + beta}, {"v2", beta + beta * beta},
                              {"v3", Money(0)}, {"v4", Money(0)},
                              {"v5", Money(1)}});
    e.social_welfare = 2 + beta * beta + 2 * beta;
    e.provenance = "documented equilibrium payments of the beta instance";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", beta},
                           {"v3", "v4", M},
                           {"v4", "v3", M},
                           {"v5", "v1", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(1)}, {"v2", Money(0)},
                              {"v3", beta + M}, {"v4", M}, {"v5", Money(1)}});
    e.social_welfare = 2 * M + 2 + beta;
    e.provenance = "documented optimum payments of the beta instance";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v2,v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2", "v3"}}}});
    e.utilities = Utils(
        net, {{"v1", 1 + 2 * beta * beta * beta /
                             (M + 2 * beta - 2 * beta * beta * beta)}});
    e.provenance = "documented proportional utility of the beta instance";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture AlphaInstance(const Params& params) {
  Fixture f;
  f.name = "thm7-alpha";
  f.note = "unbounded stability gap for alpha > 0, beta = 0; only v1 strategic";
  const Money alpha = Param(params, "alpha", Money(1, 2));
  const Money M = Param(params, "M", Money(100));
  Require(alpha > 0 && alpha <= 1, "thm7-alpha requires alpha in (0,1]");
  Require(M >= 1, "thm7-alpha requires M >= 1");
  f.params["alpha"] = alpha;
  f.params["M"] = M;
  f.network = Build(AlphaInstanceSpec(alpha, M, alpha, Money(0)));
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", alpha}, {"v2", "v1", alpha}});
    e.utilities = Utils(net, {{"v1", 1 + alpha}, {"v2", alpha},
                              {"v3", Money(0)}, {"v4", Money(0)}});
    e.social_welfare = 1 + 2 * alpha;
    e.provenance = "documented equilibrium payments of the alpha instance";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", alpha},
                           {"v3", "v4", M},
                           {"v4", "v3", M}});
    e.utilities = Utils(net, {{"v1", Money(1)}, {"v2", Money(0)},
                              {"v3", alpha + M}, {"v4", M}});
    e.social_welfare = 2 * M + 1 + alpha;
    e.provenance = "documented optimum payments of the alpha instance";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v2,v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2", "v3"}}}});
    e.utilities = Utils(net, {{"v1", Money(1)}});
    e.provenance = "documented proportional utility of the alpha instance";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture NegativeAssets(const Params& params) {
  Fixture f;
  f.name = "thm8-negative";
  f.note = "negative externals absorb payments; only v1 strategic";
  const Money M = Param(params, "M", Money(100));
  Require(M >= 1, "thm8-negative requires M >= 1");
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(3)}, {"v2", Money(-2)}, {"v3", Money(-2)},
                {"v4", Money(0)}};
  spec.debts = {{"v1", "v2", Money(3)},
                {"v1", "v3", Money(3)},
                {"v2", "v1", Money(1)},
                {"v3", "v4", M},
                {"v4", "v3", M}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(3)},
                           {"v1", "v3", Money(1)},
                           {"v2", "v1", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(4)}, {"v2", Money(1)},
                              {"v3", Money(-1)}, {"v4", Money(0)}});
    e.social_welfare = Money(4);
    e.provenance = "documented equilibrium payments with negative externals";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", Money(3)},
                           {"v3", "v4", M},
                           {"v4", "v3", M}});
    e.utilities = Utils(net, {{"v1", Money(3)}, {"v2", Money(-2)},
                              {"v3", M + 1}, {"v4", M}});
    e.social_welfare = 2 * M + 2;
    e.provenance = "documented optimum payments with negative externals";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture PoaInstance(const Params& params) {
  Fixture f;
  f.name = "thm9-poa";
  f.note = "every profile is an equilibrium yet welfare differs by M+1";
  const Money M = Param(params, "M", Money(100));
  Require(M >= 1, "thm9-poa requires M >= 1");
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(0)}};
  spec.debts = {{"v1", "v2", Money(1)},
                {"v1", "v3", Money(1)},
                {"v3", "v4", M},
                {"v4", "v3", M}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(1)}, {"v2", Money(1)},
                              {"v3", Money(0)}, {"v4", Money(0)}});
    e.social_welfare = Money(2);
    e.provenance = "documented worst-equilibrium payments";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", Money(1)},
                           {"v3", "v4", M},
                           {"v4", "v3", M}});
    e.utilities = Utils(net, {{"v1", Money(1)}, {"v2", Money(0)},
                              {"v3", M + 1}, {"v4", M}});
    e.social_welfare = 2 * M + 2;
    e.provenance = "documented best-equilibrium payments";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture DefaultCostBeta(const Params& params) {
  Fixture f;
  f.name = "thm10-beta";
  f.note = "equity game with beta in (0,1); only v2 strategic";
  const Money beta = Param(params, "beta", Money(1, 2));
  Require(beta > 0 && beta < 1, "thm10-beta requires beta in (0,1)");
  f.params["beta"] = beta;
  const Money b2 = beta * beta;
  NetSpec spec;
  spec.firms = {{"v1", 1 / b2 - 1}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(0)}};
  spec.debts = {{"v1", "v2", 1 / b2 - 1},
                {"v2", "v3", 1 / beta},
                {"v2", "v4", 1 / b2},
                {"v3", "v2", Money(1)},
                {"v4", "v3", 1 / b2}};
  spec.alpha = beta;
  spec.beta = beta;
  f.network = Build(spec);
  const auto& net = f.network;
  const Money denom = b2 + beta + 1;
  {
    Expectation e;
    e.label = "s2=(v4|v3)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(net, {{"v2", {{"v4"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", 1 / b2 - 1},
                           {"v2", "v4", (1 + beta) / (beta * denom)},
                           {"v3", "v2", beta * (1 + beta) / denom},
                           {"v4", "v3", (1 + beta) / denom}});
    e.social_welfare = Money(0);
    e.provenance = "documented cycle payments for the worst equity profile";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s2=(v3|v4)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(net, {{"v2", {{"v3"}, {"v4"}}}});
    e.payments = Mat(net, {{"v1", "v2", 1 / b2 - 1},
                           {"v2", "v3", 1 / beta},
                           {"v3", "v2", Money(1)}});
    e.utilities = Utils(net, {{"v3", 1 / beta - 1}});
    e.social_welfare = 1 / beta - 1;
    e.provenance = "documented payments for the best equity profile";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture DefaultCostAlphaOrBetaOne(const Params& params) {
  Fixture f;
  f.name = "thm10-alpha-or-beta1";
  f.note = "equity game for beta = 0 (alpha in (0,1]) or beta = 1 "
           "(alpha in (0,1)); only v2 strategic";
  const Money alpha = Param(params, "alpha", Money(1, 2));
  const Money beta = Param(params, "beta", Money(1));
  const Money M = Param(params, "M", Money(100));
  Require(M >= 1, "thm10-alpha-or-beta1 requires M >= 1");
  Require((beta == 0 && alpha > 0 && alpha <= 1) ||
              (beta == 1 && alpha > 0 && alpha < 1),
          "thm10-alpha-or-beta1 requires beta=0 with alpha in (0,1], or "
          "beta=1 with alpha in (0,1)");
  f.params["alpha"] = alpha;
  f.params["beta"] = beta;
  f.params["M"] = M;
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(1)}, {"v3", M},
                {"v4", Money(0)}, {"v5", Money(0)}, {"v6", Money(0)}};
  spec.debts = {{"v1", "v2", Money(2)},
                {"v2", "v3", Money(2)},
                {"v2", "v6", Money(2)},
                {"v3", "v4", M + 2 * alpha},
                {"v4", "v5", M + 2 * alpha}};
  spec.alpha = alpha;
  spec.beta = beta;
  f.network = Build(spec);
  const auto& net = f.network;
  if (beta == 1) {
    {
      Expectation e;
      e.label = "s2=(v3|v6)";
      e.mode = UtilityMode::kEquity;
      e.profile = MakeProfile(net, {{"v2", {{"v3"}, {"v6"}}}});
      e.utilities = Utils(net, {{"v5", M + 2 * alpha}, {"v6", Money(0)}});
      e.social_welfare = M + 2 * alpha;
      e.provenance = "documented best equity profile, beta = 1";
      f.expectations.push_back(std::move(e));
    }
    {
      Expectation e;
      e.label = "s2=(v6|v3)";
      e.mode = UtilityMode::kEquity;
      e.profile = MakeProfile(net, {{"v2", {{"v6"}, {"v3"}}}});
      e.utilities = Utils(net, {{"v5", alpha * M}, {"v6", 2 * alpha}});
      e.social_welfare = alpha * M + 2 * alpha;
      e.provenance = "documented worst equity profile, beta = 1";
      f.expectations.push_back(std::move(e));
    }
  } else {
    {
      Expectation e;
      e.label = "s2=(v6|v3)";
      e.mode = UtilityMode::kEquity;
      e.profile = MakeProfile(net, {{"v2", {{"v6"}, {"v3"}}}});
      e.utilities = Utils(net, {{"v6", alpha}});
      e.social_welfare = alpha;
      e.provenance = "documented best equity profile, beta = 0";
      f.expectations.push_back(std::move(e));
    }
    {
      Expectation e;
      e.label = "s2=(v3|v6)";
      e.mode = UtilityMode::kEquity;
      e.profile = MakeProfile(net, {{"v2", {{"v3"}, {"v6"}}}});
      e.social_welfare = Money(0);
      e.provenance = "documented zero-equity profile, beta = 0";
      f.expectations.push_back(std::move(e));
    }
  }
  return f;
}

Fixture TransformExample(const Params& params) {
  Fixture f;
  f.name = "thm13-transform";
  f.note = "input instance for the negative-assets rewrite; the transform "
           "adds sink t with a debt of 1 from v2";
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(-1)}, {"v3", Money(0)}};
  spec.debts = {{"v1", "v2", Money(1)}, {"v1", "v3", Money(1)}};
  f.network = Build(spec);
  return f;
}

Fixture EquityNegative(const Params& params) {
  Fixture f;
  f.name = "thm16-negative";
  f.note = "equity game with a negative external; every profile is an "
           "equilibrium, welfare ranges over [0, 1]";
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(-1)}, {"v3", Money(0)}};
  spec.debts = {{"v1", "v2", Money(1)}, {"v1", "v3", Money(1)}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(net, {{"v1", {{"v2"}, {"v3"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(1)}});
    e.social_welfare = Money(0);
    e.provenance = "documented zero-welfare equilibrium payments";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(net, {{"v1", {{"v3"}, {"v2"}}}});
    e.payments = Mat(net, {{"v1", "v3", Money(1)}});
    e.utilities = Utils(net, {{"v3", Money(1)}});
    e.social_welfare = Money(1);
    e.provenance = "documented optimum payments";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture SuperStrong(const Params& params) {
  Fixture f;
  f.name = "thm17-superstrong";
  f.note = "coalition of v1 and v2 pins welfare at epsilon while the best "
           "equilibrium reaches 1 - epsilon";
  const Money eps = Param(params, "epsilon", Money(1, 10));
  Require(eps > 0 && eps < Money(1, 2),
          "thm17-superstrong requires epsilon in (0, 1/2)");
  f.params["epsilon"] = eps;
  NetSpec spec;
  spec.firms = {{"v1", Money(1)}, {"v2", Money(1)}, {"v3", Money(-1)},
                {"v4", Money(-1)}};
  spec.debts = {{"v1", "v2", Money(1)},
                {"v1", "v3", Money(2)},
                {"v2", "v1", 1 - eps},
                {"v2", "v4", Money(1)}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3) s2=(v1|v4)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(
        net, {{"v1", {{"v2"}, {"v3"}}}, {"v2", {{"v1"}, {"v4"}}}});
    e.payments = Mat(net, {{"v1", "v2", Money(1)},
                           {"v1", "v3", 1 - eps},
                           {"v2", "v1", 1 - eps},
                           {"v2", "v4", Money(1)}});
    e.utilities = Utils(net, {{"v1", Money(0)}, {"v2", eps},
                              {"v3", Money(0)}, {"v4", Money(0)}});
    e.social_welfare = eps;
    e.provenance = "documented mutually-prioritized payments";
    f.expectations.push_back(std::move(e));
  }
  {
    Expectation e;
    e.label = "s1=(v3|v2) s2=(v1|v4)";
    e.mode = UtilityMode::kEquity;
    e.profile = MakeProfile(
        net, {{"v1", {{"v3"}, {"v2"}}}, {"v2", {{"v1"}, {"v4"}}}});
    e.payments = Mat(net, {{"v1", "v3", 2 - eps},
                           {"v2", "v1", 1 - eps},
                           {"v2", "v4", eps}});
    e.utilities = Utils(net, {{"v3", 1 - eps}});
    e.social_welfare = 1 - eps;
    e.provenance = "documented best-equilibrium payments";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

Fixture FootnoteCycle(const Params& params) {
  Fixture f;
  f.name = "footnote-cycle";
  f.note = "two-firm cycle with spokes and zero externals: raw maximal "
           "payments circulate ell while the proper payments are zero";
  const Money ell = Param(params, "ell", Money(1));
  Require(ell > 0, "footnote-cycle requires ell > 0");
  f.params["ell"] = ell;
  NetSpec spec;
  spec.firms = {{"v1", Money(0)}, {"v2", Money(0)}, {"v3", Money(0)},
                {"v4", Money(0)}};
  spec.debts = {{"v1", "v2", ell},
                {"v1", "v3", ell},
                {"v2", "v1", ell},
                {"v2", "v4", ell}};
  f.network = Build(spec);
  const auto& net = f.network;
  {
    Expectation e;
    e.label = "s1=(v2|v3) s2=(v1|v4)";
    e.profile = MakeProfile(
        net, {{"v1", {{"v2"}, {"v3"}}}, {"v2", {{"v1"}, {"v4"}}}});
    e.payments = Mat(net, {});
    e.social_welfare = Money(0);
    e.provenance = "documented ambiguity cycle: all proper payments vanish";
    f.expectations.push_back(std::move(e));
  }
  return f;
}

}  // namespace

Fixture MakeFixture(const std::string& name, const Params& params) {
  if (name == "example1") return Example1(params);
  if (name == "thm4-no-ne") return NoNashInstance(params);
  if (name == "thm5-prop") return ProportionalInefficiency(params);
  if (name == "thm5-path") return ProportionalPath(params);
  if (name == "thm6-zero-costs") return ZeroCosts(params);
  if (name == "thm7-beta") return BetaInstance(params);
  if (name == "thm7-alpha") return AlphaInstance(params);
  if (name == "thm8-negative") return NegativeAssets(params);
  if (name == "thm9-poa") return PoaInstance(params);
  if (name == "thm10-beta") return DefaultCostBeta(params);
  if (name == "thm10-alpha-or-beta1") return DefaultCostAlphaOrBetaOne(params);
  if (name == "thm13-transform") return TransformExample(params);
  if (name == "thm16-negative") return EquityNegative(params);
  if (name == "thm17-superstrong") return SuperStrong(params);
  if (name == "footnote-cycle") return FootnoteCycle(params);
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> FixtureNames() {
  return {"example1",        "thm4-no-ne",     "thm5-prop",
          "thm5-path",       "thm6-zero-costs", "thm7-beta",
          "thm7-alpha",      "thm8-negative",  "thm9-poa",
          "thm10-beta",      "thm10-alpha-or-beta1", "thm13-transform",
          "thm16-negative",  "thm17-superstrong", "footnote-cycle"};
}

std::vector<std::string> VerifyFixture(const Fixture& fixture) {
  std::vector<std::string> failures;
  for (const Expectation& e : fixture.expectations) {
    ProfileEvaluation eval =
        EvaluateProfile(fixture.network, e.profile, e.mode);
    if (!eval.converged) {
      failures.push_back(e.label + ": clearing did not converge");
      continue;
    }
    if (e.payments.has_value() && eval.clearing.payments != *e.payments) {
      failures.push_back(e.label + ": payment matrix mismatch");
    }
    for (const auto& [firm, value] : e.utilities) {
      if (eval.utilities[firm] != value) {
        failures.push_back(e.label + ": utility of " +
                           fixture.network.id(firm) + " is " +
                           MoneyToString(eval.utilities[firm]) +
                           ", expected " + MoneyToString(value));
      }
    }
    if (e.social_welfare.has_value() &&
        eval.social_welfare != *e.social_welfare) {
      failures.push_back(e.label + ": social welfare is " +
                         MoneyToString(eval.social_welfare) + ", expected " +
                         MoneyToString(*e.social_welfare));
    }
    VerificationReport report =
        VerifyClearing(fixture.network, e.profile, eval.clearing);
    for (const Violation& v : report.violations) {
      failures.push_back(e.label + ": " + v.kind + " violation at " + v.where);
    }
  }
  return failures;
}

}  // namespace fennec
