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

#include "cellforest/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cellforest {

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> d(m.data().begin(), m.data().end());
  return RatMatrix(m.rows(), m.cols(), std::move(d));
}

IntMatrix to_integer_matrix(const RatMatrix& m, std::string_view what) {
  std::vector<Integer> d;
  d.reserve(m.data().size());
  for (const Rational& x : m.data()) d.push_back(require_integer(x, what));
  return IntMatrix(m.rows(), m.cols(), std::move(d));
}

std::optional<SmallMatrix> to_small(const IntMatrix& m) {
  std::vector<SmallInt> d;
  d.reserve(m.data().size());
  for (const Integer& x : m.data()) {
    if (!fits_small(x)) return std::nullopt;
    d.emplace_back(static_cast<std::int64_t>(x.get_si()));
  }
  return SmallMatrix(m.rows(), m.cols(), std::move(d));
}

IntMatrix to_big(const SmallMatrix& m) {
  std::vector<Integer> d;
  d.reserve(m.data().size());
  for (SmallInt x : m.data()) d.push_back(to_integer(x));
  return IntMatrix(m.rows(), m.cols(), std::move(d));
}

namespace {

template <class T>
std::string render(const Matrix<T>& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const T& x : m.data()) {
    cells.push_back(to_string(x));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  out << m.rows() << "x" << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) { return render(m); }
std::string to_string(const RatMatrix& m) { return render(m); }

}  // namespace cellforest
