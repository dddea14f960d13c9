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

// Closed-form spectra for simplices: the reduced incidence matrix, the
// Laplacian of the face opposite x1, and the mesh matrix in the basis
// Phi(s) = boundary(x1 * s), optionally with vertex weights.

#ifndef CELLFOREST_KALAI_HPP_
#define CELLFOREST_KALAI_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellforest/exact_linalg.hpp"
#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"
#include "cellforest/report.hpp"

namespace cellforest {

enum class KalaiKind { incidence, laplacian, mesh };

KalaiKind parse_kalai_kind(const std::string& name);
std::string to_string(KalaiKind kind);

using VertexWeights = std::vector<Rational>;  // a_1..a_n

struct SpectrumSummary {
  std::vector<std::pair<Rational, std::size_t>> eigenvalues;  // distinct values

  std::size_t dimension() const;
  // prod (t - value)^multiplicity
  RatPolynomial characteristic_polynomial() const;
};

std::string to_string(const SpectrumSummary& s);

// Rows: (k-1)-simplices of the face opposite x1; columns: k-simplices of
// the (n-1)-simplex. n >= 2, 1 <= k <= n-1.
IntMatrix reduced_incidence(std::size_t n, std::size_t k);

// Columns boundary(x1 * s) for the (k-1)-simplices s opposite x1, as
// (k-1)-chains of the (n-1)-simplex.
IntMatrix phi_basis(std::size_t n, std::size_t k);

// The matrix whose spectrum is tabulated, in a square-root-free similarity
// class when weights are given.
RatMatrix kalai_matrix(std::size_t n, std::size_t k, KalaiKind kind,
                       const std::optional<VertexWeights>& weights = std::nullopt);

SpectrumSummary predicted_spectrum(std::size_t n, std::size_t k, KalaiKind kind,
                                   const std::optional<VertexWeights>& weights = std::nullopt);

// Checks the prediction without eigenvalues: the annihilating polynomial,
// trace, determinant, the full characteristic polynomial and multiplicity
// bookkeeping. n <= 9.
VerificationReport verify_kalai(std::size_t n, std::size_t k, KalaiKind kind,
                                const std::optional<VertexWeights>& weights = std::nullopt);

// det of the Phi mesh matrix against the forest sum of cycle weights on the
// (k-1)-skeleton of the (n-1)-simplex, using Phi as the cycle basis. Throws
// std::out_of_range when the candidate count exceeds `max_subsets`.
VerificationReport kalai_forest_check(std::size_t n, std::size_t k,
                                      std::size_t max_subsets = 200000);

}  // namespace cellforest

#endif  // CELLFOREST_KALAI_HPP_
