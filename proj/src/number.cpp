// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cellforest/number.hpp"

#include <string>

namespace cellforest {

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  const auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    check_digits(s, true);
    r = Rational(Integer(s[0] == '+' ? s.substr(1) : s, 10));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    Integer d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r = Rational(Integer(num[0] == '+' ? num.substr(1) : num, 10), d);
    r.canonicalize();
  }
  return r;
}

Integer require_integer(const Rational& x, std::string_view what) {
  if (x.get_den() != 1) {
    throw std::domain_error(std::string(what) + ": expected an integer, got " + to_string(x));
  }
  return x.get_num();
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace cellforest
