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

// Finite oriented cell complexes with explicit integer attaching degrees.

#ifndef CELLFOREST_COMPLEX_HPP_
#define CELLFOREST_COMPLEX_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

struct Cell {
  std::string id;
  // (face id, incidence coefficient); faces have dimension one lower.
  std::vector<std::pair<std::string, Integer>> boundary;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Positive rational weight per cell id; cells not listed weigh 1.
struct WeightAssignment {
  std::map<std::string, Rational> values;

  Rational of(const std::string& id) const;
  bool empty() const { return values.empty(); }
  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

struct CellLocation {
  int dimension;
  std::size_t index;
};

class CellComplex {
 public:
  CellComplex() = default;
  // `cells[d]` lists the d-cells in basis order. Builds the id index but does
  // not validate; see validate().
  CellComplex(std::string name, int dimension, std::vector<std::vector<Cell>> cells,
              WeightAssignment weights = {});

  const std::string& name() const { return name_; }
  // -1 for the empty complex.
  int dimension() const { return dimension_; }
  std::size_t count(int d) const;
  const std::vector<Cell>& cells(int d) const;
  const Cell& cell(int d, std::size_t i) const { return cells_.at(d).at(i); }
  std::optional<CellLocation> find(std::string_view id) const;
  const WeightAssignment& weights() const { return weights_; }
  std::vector<std::size_t> counts() const;

  friend bool operator==(const CellComplex& a, const CellComplex& b) {
    return a.name_ == b.name_ && a.dimension_ == b.dimension_ && a.cells_ == b.cells_ &&
           a.weights_ == b.weights_;
  }

 private:
  std::string name_;
  int dimension_ = -1;
  std::vector<std::vector<Cell>> cells_;
  WeightAssignment weights_;
  std::unordered_map<std::string, CellLocation> index_;
};

// A set of d-cells, stored as sorted basis indices.
struct CellSubset {
  int dimension = 0;
  std::vector<std::size_t> members;

  static CellSubset from_ids(const CellComplex& x, int d, const std::vector<std::string>& ids);
  static CellSubset all(const CellComplex& x, int d);
  std::vector<std::string> ids(const CellComplex& x) const;
  CellSubset complement(const CellComplex& x) const;
  std::size_t size() const { return members.size(); }
  bool contains(std::size_t i) const;
  friend bool operator==(const CellSubset&, const CellSubset&) = default;
};

// Subcomplex given as a membership mask per dimension.
struct SubcomplexMask {
  std::vector<std::vector<bool>> member;

  static SubcomplexMask empty(const CellComplex& x);
  static SubcomplexMask full(const CellComplex& x);
  // All cells of dimension <= d (d = -1 gives the empty mask).
  static SubcomplexMask skeleton(const CellComplex& x, int d);
  // X^{(d-1)} together with the d-cells in v.
  static SubcomplexMask with_cells(const CellComplex& x, const CellSubset& v);
  bool contains(int d, std::size_t i) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct Violation {
  std::string cell;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Parses the JSON complex format and validates the result. Throws ParseError
// for malformed input and ValidationError for structural violations.
CellComplex parse_complex(std::string_view text);
CellComplex load_complex(const std::string& path);
std::string serialize(const CellComplex& x);

ValidationReport validate(const CellComplex& x);

// Rows: (d-1)-cells, columns: d-cells, both in basis order. d = 0 gives a
// 0 x n_0 matrix. Throws std::out_of_range unless 0 <= d <= dimension.
IntMatrix boundary_matrix(const CellComplex& x, int d);

// X^{(d-1)} together with the d-cells of v, in inherited order.
CellComplex subcomplex(const CellComplex& x, int d, const CellSubset& v);
CellComplex skeleton(const CellComplex& x, int d);
// Full simplex on x1..xn with lexicographic faces and alternating signs.
CellComplex standard_simplex(std::size_t n);

// Cells of the two complexes agree dimension by dimension (names and declared
// dimensions are ignored).
bool same_cells(const CellComplex& a, const CellComplex& b);

}  // namespace cellforest

#endif  // CELLFOREST_COMPLEX_HPP_
