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

#include <utility>
#include <vector>

#include "ucount/error.hpp"
#include "ucount/graph.hpp"
#include "ucount/rational.hpp"

namespace ucount {

/// Skew-symmetric elimination, two rows and columns per step.
inline Rational pfaffian(const SkewMatrix& A) {
  const int n = A.size();
  if (n % 2 == 1) return 0;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);

  Rational result = 1;
  for (int k = 0; k < n; k += 2) {
    int p = -1;
    for (int j = k + 1; j < n; ++j)
      if (M[k][j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return 0;
    if (p != k + 1) {
      std::swap(M[k + 1], M[p]);
      for (auto& row : M) std::swap(row[k + 1], row[p]);
      result = -result;
    }
    const Rational a = M[k][k + 1];
    result *= a;
    for (int i = k + 2; i < n; ++i) {
      if (M[k][i] == 0 && M[k + 1][i] == 0) continue;
      for (int j = i + 1; j < n; ++j) {
        Rational t = (M[k][i] * M[k + 1][j] - M[k + 1][i] * M[k][j]) / a;
        if (t == 0) continue;
        M[i][j] -= t;
        M[j][i] = -M[i][j];
      }
    }
  }
  return result;
}

namespace detail {

inline Rational pfaffian_expand(const SkewMatrix& A, std::vector<int>& idx) {
  if (idx.empty()) return 1;
  Rational total = 0;
  const int first = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for (size_t t = 0; t < rest.size(); ++t) {
    const Rational& a = A.at(first, rest[t]);
    if (a == 0) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 1);
    for (size_t s = 0; s < rest.size(); ++s)
      if (s != t) sub.push_back(rest[s]);
    Rational term = a * pfaffian_expand(A, sub);
    if (t % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace detail

/// Sum over all perfect matchings of the index set; oracle use only.
inline Rational pfaffian_by_definition(const SkewMatrix& A, int bound = 16) {
  if (A.size() > bound)
    throw Error(Errc::DimensionTooLargeForOracle, std::to_string(A.size()) + " > " + std::to_string(bound));
  if (A.size() % 2 == 1) return 0;
  std::vector<int> idx(A.size());
  for (int i = 0; i < A.size(); ++i) idx[i] = i;
  return detail::pfaffian_expand(A, idx);
}

/// Sign of the permutation (0 1 ... 2n-1) -> (i1 j1 i2 j2 ...), each pair
/// listed tail first. Indices are 0-based.
inline int matching_sign(const std::vector<std::pair<int, int>>& m) {
  const int n = 2 * static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::vector<char> seen(n, 0);
  for (size_t k = 0; k < m.size(); ++k) {
    perm[2 * k] = m[k].first;
    perm[2 * k + 1] = m[k].second;
  }
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) throw Error(Errc::MismatchedSupport, "matching endpoints are not 0..2n-1");
    seen[x] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  int parity = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

/// Fraction-free (Bareiss) determinant.
inline Rational determinant(std::vector<std::vector<Rational>> M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign == 1 ? M[n - 1][n - 1] : Rational(-M[n - 1][n - 1]);
}

inline Rational determinant(const SkewMatrix& A) {
  std::vector<std::vector<Rational>> M(A.size(), std::vector<Rational>(A.size()));
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j) M[i][j] = A.at(i, j);
  return determinant(std::move(M));
}

}  // namespace ucount
