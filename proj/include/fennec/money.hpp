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

#ifndef FENNEC_MONEY_H_
#define FENNEC_MONEY_H_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fennec {

// All monetary quantities are exact rationals. boost::multiprecision keeps
// them in canonical form (reduced fraction, positive denominator), so
// equality is structural equality.
using Money = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using MoneyVec = std::vector<Money>;
using MoneyMatrix = std::vector<MoneyVec>;

// Parses "3", "-2", "p/q" (e.g. "2/3", "-1/4") or a plain decimal ("1.5",
// "-0.25") into an exact rational. Throws MoneyParseError on anything else.
Money ParseMoney(const std::string& text);

// Canonical form: "n" for integers, "p/q" in lowest terms otherwise.
std::string MoneyToString(const Money& value);

inline MoneyMatrix ZeroMatrix(std::size_t n) {
  return MoneyMatrix(n, MoneyVec(n, Money(0)));
}

struct MoneyParseError : std::runtime_error {
  explicit MoneyParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fennec

#endif  // FENNEC_MONEY_H_
