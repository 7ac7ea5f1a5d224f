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

#include "fennec/money.hpp"

#include <cctype>
#include <sstream>

namespace fennec {
namespace {

bool IsInteger(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Money ParseMoney(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw MoneyParseError("empty amount");
  s = s.substr(first, last - first + 1);

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!IsInteger(num) || !IsInteger(den)) {
      throw MoneyParseError("malformed rational: '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw MoneyParseError("zero denominator: '" + text + "'");
    return Money(BigInt(num), d);
  }

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!IsInteger(head) || frac.empty() || !IsInteger(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw MoneyParseError("malformed decimal: '" + text + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt whole(head);
    BigInt digits(frac);
    BigInt num = whole * scale + (negative ? -digits : digits);
    return Money(num, scale);
  }

  if (!IsInteger(s)) throw MoneyParseError("malformed amount: '" + text + "'");
  return Money(BigInt(s));
}

std::string MoneyToString(const Money& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << "/" << denominator(value);
  return out.str();
}

}  // namespace fennec
