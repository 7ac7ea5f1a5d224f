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

#include <doctest.h>

#include "fennec/fixtures.hpp"
#include "fennec/game.hpp"

using namespace fennec;

TEST_CASE("utilities at the worked example") {
  Fixture f = MakeFixture("example1");
  const auto& net = f.network;
  const StrategyProfile& s1 = f.expectations[0].profile;
  CHECK(Utility(net, s1, net.IndexOf("v1"), UtilityMode::kTotalAssets) ==
        Money(2));
  CHECK(SocialWelfare(net, s1, UtilityMode::kTotalAssets) == Money(6));
  SUBCASE("defaulting firms have zero equity") {
    CHECK(Utility(net, s1, net.IndexOf("v3"), UtilityMode::kEquity) == Money(0));
    CHECK(Utility(net, s1, net.IndexOf("v1"), UtilityMode::kEquity) == Money(0));
  }
}

TEST_CASE("the worked example's equilibrium set over s1") {
  Fixture f = MakeFixture("example1");
  const auto& net = f.network;
  CHECK(IsNash(net, f.expectations[0].profile, UtilityMode::kTotalAssets)
            .is_nash);  // (v2|v3)
  CHECK(IsNash(net, f.expectations[2].profile, UtilityMode::kTotalAssets)
            .is_nash);  // (v2,v3)
  NashResult no = IsNash(net, f.expectations[1].profile,
                         UtilityMode::kTotalAssets);  // (v3|v2)
  CHECK_FALSE(no.is_nash);
  REQUIRE(no.witness.has_value());
  CHECK(no.witness->firm == net.IndexOf("v1"));
}

TEST_CASE("equity mode makes every profile an equilibrium") {
  Fixture f = MakeFixture("example1");
  for (const Expectation& e : f.expectations) {
    CHECK(IsNash(f.network, e.profile, UtilityMode::kEquity).is_nash);
  }
}

TEST_CASE("singleton coalitions coincide with the Nash check") {
  Fixture f = MakeFixture("example1");
  const auto& net = f.network;
  for (const Expectation& e : f.expectations) {
    NashResult nash = IsNash(net, e.profile, UtilityMode::kTotalAssets);
    StabilityResult strong = CoalitionStable(
        net, e.profile, UtilityMode::kTotalAssets, StabilityNotion::kStrong, 1);
    StabilityResult super =
        CoalitionStable(net, e.profile, UtilityMode::kTotalAssets,
                        StabilityNotion::kSuperStrong, 1);
    CHECK(strong.stable == nash.is_nash);
    CHECK(super.stable == nash.is_nash);
  }
}

TEST_CASE("analysis of the unbounded-anarchy instance") {
  const Money M(100);
  Fixture f = MakeFixture("thm9-poa", {{"M", M}});
  GameReport report = Analyze(f.network, UtilityMode::kTotalAssets);
  CHECK(report.profiles_examined == 3);
  CHECK(report.equilibria.size() == 3);  // every profile is an equilibrium
  CHECK(report.opt == 2 * M + 2);
  REQUIRE(report.poa.defined);
  CHECK_FALSE(report.poa.unbounded);
  CHECK(report.poa.value == M + 1);
  CHECK(report.pos.value == Money(1));
}

TEST_CASE("report consistency invariants") {
  Fixture f = MakeFixture("thm9-poa", {{"M", Money(10)}});
  GameReport report = Analyze(f.network, UtilityMode::kTotalAssets);
  CHECK(report.outcomes[report.opt_index].social_welfare == report.opt);
  for (std::size_t idx : report.equilibria) {
    CHECK(IsNash(f.network, report.outcomes[idx].profile,
                 UtilityMode::kTotalAssets)
              .is_nash);
    CHECK(report.outcomes[idx].social_welfare <= report.opt);
  }
  REQUIRE((report.poa.defined && report.pos.defined));
  CHECK(report.poa.value >= report.pos.value);
  CHECK(report.pos.value >= 1);
}

TEST_CASE("parallel analysis matches the sequential one") {
  Fixture f = MakeFixture("thm4-no-ne", {{"M", Money(600)}});
  AnalyzeOptions seq;
  AnalyzeOptions par;
  par.jobs = 4;
  GameReport a = Analyze(f.network, UtilityMode::kTotalAssets, seq);
  GameReport b = Analyze(f.network, UtilityMode::kTotalAssets, par);
  REQUIRE(a.outcomes.size() == b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].utilities == b.outcomes[i].utilities);
  }
  CHECK(a.equilibria == b.equilibria);
}

TEST_CASE("nonconvergent profiles are listed and excluded") {
  RawNetwork raw;
  raw.firms = {{"r", Money(0)}, {"x", Money(0)}, {"d", Money(1)},
               {"c", Money(0)}};
  raw.debts = {{"r", "x", Money(2)}, {"c", "r", Money(1)}};
  raw.cds = {{"d", "c", "r", Money(1)}};
  FinancialNetwork net = ValidateNetwork(raw);
  AnalyzeOptions options;
  options.cds.max_rounds = 25;
  GameReport report = Analyze(net, UtilityMode::kTotalAssets, options);
  CHECK(report.profiles_examined == 1);
  CHECK(report.nonconvergent == std::vector<std::size_t>{0});
  CHECK(report.equilibria.empty());
  CHECK_FALSE(report.has_opt);
  CHECK_FALSE(report.poa.defined);
}

TEST_CASE("equity anarchy is unbounded with negative externals") {
  Fixture f = MakeFixture("thm16-negative");
  GameReport report = Analyze(f.network, UtilityMode::kEquity);
  CHECK(report.equilibria.size() == report.outcomes.size());
  CHECK(report.opt == Money(1));
  REQUIRE(report.poa.defined);
  CHECK(report.poa.unbounded);
  REQUIRE(report.pos.defined);
  CHECK(report.pos.value == Money(1));
}

TEST_CASE("super-strong analysis of the coalition instance") {
  const Money eps(1, 10);
  Fixture f = MakeFixture("thm17-superstrong", {{"epsilon", eps}});
  const auto& net = f.network;
  const StrategyProfile mutual = f.expectations[0].profile;
  const StrategyProfile diverted = f.expectations[1].profile;

  SUBCASE("every profile is Nash") {
    GameReport report = Analyze(net, UtilityMode::kEquity);
    CHECK(report.equilibria.size() == report.outcomes.size());
    CHECK(report.opt == 1 - eps);
  }
  SUBCASE("the diverted profile is Nash but not super-strong") {
    CHECK(IsNash(net, diverted, UtilityMode::kEquity).is_nash);
    StabilityResult st = CoalitionStable(
        net, diverted, UtilityMode::kEquity, StabilityNotion::kSuperStrong, 2);
    CHECK_FALSE(st.stable);
    REQUIRE(st.witness.has_value());
    std::vector<int> expected{net.IndexOf("v1"), net.IndexOf("v2")};
    CHECK(st.witness->firms == expected);
  }
  SUBCASE("mutual prioritization is super-strong with welfare epsilon") {
    StabilityResult st = CoalitionStable(
        net, mutual, UtilityMode::kEquity, StabilityNotion::kSuperStrong, 2);
    CHECK(st.stable);
    CHECK(SocialWelfare(net, mutual, UtilityMode::kEquity) == eps);
  }
  SUBCASE("both are strong-stable (no all-strict coalition improvement)") {
    CHECK(CoalitionStable(net, mutual, UtilityMode::kEquity,
                          StabilityNotion::kStrong, 2)
              .stable);
    CHECK(CoalitionStable(net, diverted, UtilityMode::kEquity,
                          StabilityNotion::kStrong, 2)
              .stable);
  }
}

TEST_CASE("equity invariance between maximal and minimal payments") {
  SUBCASE("worked example restricted to debts") {
    Fixture f = MakeFixture("example1");
    CHECK(EquityInvarianceCheck(f.network, f.expectations[0].profile));
  }
  SUBCASE("ambiguity cycle: all equities zero at both extremes") {
    Fixture f = MakeFixture("footnote-cycle");
    CHECK(EquityInvarianceCheck(f.network, f.expectations[0].profile));
  }
  SUBCASE("acyclic network trivially") {
    RawNetwork raw;
    raw.firms = {{"a", Money(1)}, {"b", Money(0)}};
    raw.debts = {{"a", "b", Money(2)}};
    FinancialNetwork net = ValidateNetwork(raw);
    CHECK(EquityInvarianceCheck(net, ProportionalProfile(net)));
  }
  SUBCASE("default costs are rejected") {
    Fixture f = MakeFixture("thm7-alpha");
    try {
      EquityInvarianceCheck(f.network, f.expectations[0].profile);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kPreconditionDefaultCosts);
    }
  }
}

TEST_CASE("welfare identities") {
  SUBCASE("no default costs: equity welfare equals total externals") {
    Fixture f = MakeFixture("example1");
    for (const Expectation& e : f.expectations) {
      Money sum(0);
      for (const Firm& firm : f.network.firms()) sum += firm.external;
      CHECK(SocialWelfare(f.network, e.profile, UtilityMode::kEquity) == sum);
    }
  }
}
