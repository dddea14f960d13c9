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

// Independent brute-force oracles and random generators shared by the test
// binaries. Nothing here calls the library's elimination code.

#ifndef CELLFOREST_TESTS_ORACLES_HPP_
#define CELLFOREST_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace oracle {

using cellforest::Integer;
using cellforest::IntMatrix;
using cellforest::Rational;
using cellforest::RatMatrix;

// Leibniz expansion; fine up to 8 x 8.
template <class T>
T leibniz_det(const cellforest::Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, p[i]);
    if (inversions % 2) term = -term;
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// sigma_k as a sum of Leibniz principal minors.
template <class T>
T minor_sum(const cellforest::Matrix<T>& m, std::size_t k) {
  T total = 0;
  for (const auto& s : subsets(m.rows(), k)) total += leibniz_det(m.select(s, s));
  return total;
}

// Rank by Gaussian elimination over Q, written independently of the library.
inline std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo = -5, long hi = 5) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  IntMatrix symmetric(std::size_t n, long lo = -5, long hi = 5) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
    return m;
  }

  // Product of random elementary matrices; determinant +-1 by construction.
  IntMatrix unimodular(std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n == 0) return u;
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      switch (uniform(0, 2)) {
        case 0:
          if (i != j) u.add_col_multiple(i, j, Integer(uniform(-2, 2)));
          break;
        case 1:
          u.swap_cols(i, j);
          break;
        default:
          u.negate_col(i);
      }
    }
    return u;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle

#endif  // CELLFOREST_TESTS_ORACLES_HPP_
