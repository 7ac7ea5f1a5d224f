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
#include "fennec/liabilities.hpp"
#include "fennec/network.hpp"
#include "fennec/strategy.hpp"

using namespace fennec;

namespace {

RawNetwork SmallRaw() {
  RawNetwork raw;
  raw.firms = {{"v1", Money(1)}, {"v2", Money(0)}};
  raw.debts = {{"v1", "v2", Money(2)}};
  return raw;
}

}  // namespace

TEST_CASE("money parsing accepts rationals, decimals and integers") {
  CHECK(ParseMoney("2/3") == Money(2, 3));
  CHECK(ParseMoney("-1/4") == Money(-1, 4));
  CHECK(ParseMoney("1.5") == Money(3, 2));
  CHECK(ParseMoney("-0.25") == Money(-1, 4));
  CHECK(ParseMoney(" 7 ") == Money(7));
  CHECK(MoneyToString(ParseMoney("4/6")) == "2/3");
  CHECK(MoneyToString(Money(-3)) == "-3");
  CHECK_THROWS_AS(ParseMoney("1/0"), MoneyParseError);
  CHECK_THROWS_AS(ParseMoney("abc"), MoneyParseError);
  CHECK_THROWS_AS(ParseMoney(""), MoneyParseError);
}

TEST_CASE("network validation enforces the structural invariants") {
  CHECK_NOTHROW(ValidateNetwork(SmallRaw()));

  SUBCASE("self loop debt") {
    RawNetwork raw = SmallRaw();
    raw.debts.push_back({"v1", "v1", Money(1)});
    CHECK_THROWS_WITH_AS(ValidateNetwork(raw), doctest::Contains("self-loop"),
                         Error);
  }
  SUBCASE("negative liability") {
    RawNetwork raw = SmallRaw();
    raw.debts.push_back({"v2", "v1", Money(-1)});
    CHECK_THROWS_AS(ValidateNetwork(raw), Error);
  }
  SUBCASE("default cost out of range") {
    RawNetwork raw = SmallRaw();
    raw.costs.alpha = Money(3, 2);
    try {
      ValidateNetwork(raw);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDefaultCostOutOfRange);
    }
  }
  SUBCASE("unknown firm") {
    RawNetwork raw = SmallRaw();
    raw.debts.push_back({"v1", "nobody", Money(1)});
    try {
      ValidateNetwork(raw);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnknownFirmId);
    }
  }
  SUBCASE("degenerate CDS reference") {
    RawNetwork raw = SmallRaw();
    raw.cds.push_back({"v1", "v2", "v2", Money(1)});
    try {
      ValidateNetwork(raw);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kCdsDegenerateReference);
    }
  }
  SUBCASE("duplicate debts merge by summation") {
    RawNetwork raw = SmallRaw();
    raw.debts.push_back({"v1", "v2", Money(1, 2)});
    FinancialNetwork net = ValidateNetwork(raw);
    REQUIRE(net.debts().size() == 1);
    CHECK(net.debts()[0].amount == Money(5, 2));
  }
}

TEST_CASE("validation is structurally idempotent") {
  RawNetwork raw = SmallRaw();
  raw.debts.push_back({"v1", "v2", Money(1)});
  FinancialNetwork once = ValidateNetwork(raw);
  RawNetwork again;
  for (const Firm& f : once.firms()) again.firms.emplace_back(f.id, f.external);
  for (const Debt& d : once.debts()) {
    again.debts.emplace_back(once.id(d.debtor), once.id(d.creditor), d.amount);
  }
  again.costs = once.costs();
  FinancialNetwork twice = ValidateNetwork(again);
  CHECK(once.BaseLiabilities() == twice.BaseLiabilities());
  CHECK(once.size() == twice.size());
}

TEST_CASE("creditor sets come from potential liabilities") {
  RawNetwork raw;
  raw.firms = {{"a", Money(0)}, {"b", Money(0)}, {"c", Money(0)},
               {"d", Money(0)}};
  raw.debts = {{"a", "b", Money(1)}};
  raw.cds = {{"a", "c", "d", Money(2)}};
  FinancialNetwork net = ValidateNetwork(raw);
  // The CDS creditor belongs to the creditor set even though its activated
  // liability may be zero.
  CHECK(net.creditors(0) == std::vector<int>{1, 2});
  CHECK(net.creditors(1).empty());
}

TEST_CASE("liability resolution follows the recovery vector") {
  Fixture f = MakeFixture("example1");
  const auto& net = f.network;
  SUBCASE("all-ones recovery leaves only base debts") {
    LiabilityMatrix lm = ResolveBase(net);
    CHECK(lm.l == net.BaseLiabilities());
  }
  SUBCASE("defaulted reference activates the full notional") {
    MoneyVec r(net.size(), Money(1));
    r[net.IndexOf("v3")] = Money(0);
    LiabilityMatrix lm = ResolveLiabilities(net, r);
    CHECK(lm.l[net.IndexOf("v4")][net.IndexOf("v5")] == Money(1));
  }
  SUBCASE("partial recovery activates a partial notional") {
    MoneyVec r(net.size(), Money(1));
    r[net.IndexOf("v3")] = Money(2, 3);
    LiabilityMatrix lm = ResolveLiabilities(net, r);
    CHECK(lm.l[net.IndexOf("v4")][net.IndexOf("v5")] == Money(1, 3));
  }
  SUBCASE("recovery outside [0,1] is rejected") {
    MoneyVec r(net.size(), Money(1));
    r[0] = Money(2);
    CHECK_THROWS_AS(ResolveLiabilities(net, r), Error);
  }
}

TEST_CASE("strategy enumeration counts match the ordered Bell numbers") {
  CHECK(OrderedBellNumber(0) == 1);
  CHECK(OrderedBellNumber(1) == 1);
  CHECK(OrderedBellNumber(2) == 3);
  CHECK(OrderedBellNumber(3) == 13);
  CHECK(OrderedBellNumber(4) == 75);
  CHECK(OrderedBellNumber(5) == 541);
  CHECK(OrderedBellNumber(6) == 4683);
  for (int k = 0; k <= 6; ++k) {
    std::vector<int> creditors;
    for (int i = 0; i < k; ++i) creditors.push_back(i + 10);
    auto all = EnumerateStrategies(creditors);
    CHECK(all.size() == OrderedBellNumber(k));
    // canonical order, no duplicates
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(StrategyLess(all[i - 1], all[i]));
    }
  }
}

TEST_CASE("enumerating two creditors yields the three ordered partitions") {
  auto all = EnumerateStrategies({1, 2});
  REQUIRE(all.size() == 3);
  CHECK(all[0].classes == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(all[1].classes == std::vector<std::vector<int>>{{1, 2}});
  CHECK(all[2].classes == std::vector<std::vector<int>>{{2}, {1}});
}

TEST_CASE("the strategy-space cap triggers") {
  std::vector<int> creditors{1, 2, 3, 4, 5};
  try {
    EnumerateStrategies(creditors, 100);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kStrategySpaceTooLarge);
  }
}

TEST_CASE("negative-assets transform rewrites externals into sink debts") {
  RawNetwork raw;
  raw.firms = {{"v1", Money(3)}, {"v2", Money(-2)}, {"v3", Money(0)}};
  raw.debts = {{"v1", "v2", Money(1)}};
  FinancialNetwork net = ValidateNetwork(raw);
  NegativeAssetsTransform out = TransformNegativeAssets(net);
  const auto& tn = out.network;
  REQUIRE(tn.size() == 4);
  const int t = tn.IndexOf(out.sink_id);
  CHECK(tn.external(t) == 0);
  CHECK(tn.creditors(t).empty());
  for (int i = 0; i < tn.size(); ++i) CHECK(tn.external(i) >= 0);
  CHECK(tn.external(tn.IndexOf("v2")) == 0);
  CHECK(tn.BaseLiabilities()[tn.IndexOf("v2")][t] == Money(2));
  CHECK(out.restricted == std::vector<std::string>{"v2"});

  SUBCASE("total negative mass equals total new sink debt") {
    Money mass(0), debt(0);
    for (const Firm& f : net.firms()) {
      if (f.external < 0) mass += -f.external;
    }
    for (int i = 0; i < tn.size(); ++i) debt += tn.BaseLiabilities()[i][t];
    CHECK(mass == debt);
  }
  SUBCASE("no negative firms adds only the isolated sink") {
    RawNetwork pos;
    pos.firms = {{"a", Money(1)}, {"b", Money(0)}};
    pos.debts = {{"a", "b", Money(1)}};
    NegativeAssetsTransform id = TransformNegativeAssets(ValidateNetwork(pos));
    CHECK(id.network.size() == 3);
    CHECK(id.restricted.empty());
    CHECK(id.network.debts().size() == 1);
  }
}
