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

// Spanning forests, augmented forests, coforests and their weights.
//
// Notation at dimension d: A = boundary_matrix(X, d), b_{d-1} = rank A,
// z_d = n_d - b_{d-1}, b_d = rank of the next boundary map.

#ifndef CELLFOREST_FORESTS_HPP_
#define CELLFOREST_FORESTS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cellforest/complex.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

enum class ForestKind {
  spanning_forest,  // |W| = b_{d-1}, columns of A on W independent
  augmented,        // |W| = b_{d-1} + k, rank A[:, W] = b_{d-1}
  size,             // |W| = m, columns independent
  coforest,         // |W| = b_d, rows of the next boundary map on W independent
  reduced,          // |W| = b_d - k, rows independent
};

struct ForestClass {
  ForestKind kind;
  std::size_t param = 0;  // k or m; unused for the plain kinds
  std::string label() const;
  friend bool operator==(const ForestClass&, const ForestClass&) = default;
};

// Parses "forest", "augmented", "coforest", "reduced", "size".
ForestKind parse_forest_kind(const std::string& name);

struct ForestParameters {
  std::size_t cells = 0;       // n_d
  std::size_t rank_below = 0;  // b_{d-1}
  std::size_t cycles = 0;      // z_d
  std::size_t rank_above = 0;  // b_d
};

ForestParameters forest_parameters(const CellComplex& x, int d);

// Every kind that applies to W, including the degenerate readings (a
// spanning forest is also 0-augmented and a forest of its size).
std::vector<ForestClass> classify(const CellComplex& x, int d, const CellSubset& w);

// Streams every qualifying subset once, in lexicographic order of basis
// indices. Throws std::out_of_range for a parameter outside its range.
void enumerate_forests(const CellComplex& x, int d, ForestKind kind, std::size_t param,
                       const std::function<void(std::span<const std::size_t>)>& visit);
std::size_t count_forests(const CellComplex& x, int d, ForestKind kind, std::size_t param);

struct WeightParts {
  Integer direct;        // Gram determinant computed from the basis rows
  Integer second_route;  // torsion or relative-order formula
  // Cycle side.
  std::optional<Integer> torsion_ratio;  // t_{d-1}(X_W) / t_{d-1}(X)
  std::optional<Integer> gram_factor;    // det(B[W]^t B[W]) or det(B'[W]^t B'[W])
  // Boundary side.
  std::optional<Integer> u;
  std::optional<Integer> v;
  std::optional<Rational> f;  // v / u
  std::optional<CellSubset> containing_coforest;
  std::optional<bool> f_checked_against_second_coforest;
};

struct ForestCertificate {
  CellSubset subset;
  ForestClass kind;
  std::optional<Integer> weight;  // absent until a weight is attached
  std::optional<WeightParts> parts;
};

// Weight of a k-augmented spanning forest against the cycle basis z, by the
// direct Gram determinant and by the torsion-ratio formula. Throws
// std::invalid_argument if W is not augmented and std::logic_error if the two
// computations disagree or the torsion ratio is not an integer.
ForestCertificate cycle_weight(const CellComplex& x, int d, const CellSubset& w,
                               const LatticeBasis& z);

// Weight of a k-reduced spanning coforest against the boundary basis b, by the
// direct Gram determinant and by the relative-order formula through a
// containing coforest. Same error behavior as cycle_weight.
ForestCertificate boundary_weight(const CellComplex& x, int d, const CellSubset& w,
                                  const LatticeBasis& b);

// det(A[W, V])^2 for d-cells V and (d-1)-cells W, checked against the squared
// order of H_{d-1}(X_V, X^{(d-2)} u W^c) when nonzero.
Integer kirchhoff_pair_weight(const CellComplex& x, int d, const CellSubset& v,
                              const CellSubset& w);

// Reusable weight evaluators; the verifiers call these in tight loops.
class CycleWeigher {
 public:
  CycleWeigher(const CellComplex& x, int d, const LatticeBasis& z);
  // Returns nullopt when W is not an augmented spanning forest.
  std::optional<WeightParts> weigh(std::span<const std::size_t> w) const;

 private:
  IntMatrix a_;
  IntMatrix z_;
  std::vector<std::size_t> pivot_rows_;
  IntMatrix pivot_adjugate_;
  Integer pivot_det_;
  std::size_t rank_below_;
  Integer torsion_;
};

class BoundaryWeigher {
 public:
  BoundaryWeigher(const CellComplex& x, int d, const LatticeBasis& b);
  std::optional<WeightParts> weigh(std::span<const std::size_t> w) const;

 private:
  std::vector<std::size_t> complete(std::span<const std::size_t> w, bool reverse) const;
  // f = v / u for W inside the coforest V.
  Rational f_ratio(std::span<const std::size_t> w, const std::vector<std::size_t>& v,
                   const IntMatrix& kernel, Integer* u_out, Integer* v_out) const;

  const CellComplex& x_;
  int d_;
  IntMatrix next_;  // boundary map into dimension d
  IntMatrix b_;
  std::size_t rank_above_;
};

}  // namespace cellforest

#endif  // CELLFOREST_FORESTS_HPP_
