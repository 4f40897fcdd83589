/*
 * Copyright 2026 The ucount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ucount/error.hpp"

namespace ucount {

// GMP keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;

/// Parses "<int>" or "<int>/<int>" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw Error(Errc::ParseError, "empty rational");
  s = s.substr(start);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  size_t slash = s.find('/');
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !t.empty() && t[0] == '-') i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
  mpz_class d(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace ucount
