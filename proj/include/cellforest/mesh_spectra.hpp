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

// Mesh matrices, Laplacians, geometric bases and the forest-sum verifiers.

#ifndef CELLFOREST_MESH_SPECTRA_HPP_
#define CELLFOREST_MESH_SPECTRA_HPP_

#include <optional>
#include <string>

#include "cellforest/complex.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/matrix.hpp"
#include "cellforest/report.hpp"

namespace cellforest {

enum class MeshKind { cycles, boundaries, laplacian, weighted_laplacian };

std::string to_string(MeshKind kind);

struct MeshMatrix {
  MeshKind kind = MeshKind::cycles;
  int dimension = 0;
  RatMatrix matrix;
  std::string provenance;
};

// Gram matrix of the basis columns.
MeshMatrix mesh_matrix_cycles(const CellComplex& x, int d, const LatticeBasis& z,
                              std::string provenance = "canonical integral");
MeshMatrix mesh_matrix_boundaries(const CellComplex& x, int d, const LatticeBasis& b,
                                  std::string provenance = "canonical integral");
MeshMatrix mesh_matrix_from_basis(MeshKind kind, int d, const RatMatrix& basis,
                                  std::string provenance);

// K K^t for K = boundary_matrix(x, d), acting on (d-1)-chains. 1 <= d <= dim.
MeshMatrix combinatorial_laplacian(const CellComplex& x, int d);

// A W_d A^t W_{d-1}^{-1}; same characteristic polynomial as the symmetric
// weighted Laplacian without square roots.
MeshMatrix weighted_laplacian(const CellComplex& x, int d, const WeightAssignment& w);

// First spanning forest in cell order (the greedy one).
CellSubset greedy_spanning_forest(const CellComplex& x, int d);

// Column z(s) for each d-cell s outside V0, in cell order: the rational cycle
// supported on V0 + s with coefficient 1 on s.
RatMatrix geometric_cycle_basis(const CellComplex& x, int d, const CellSubset& v0);

// Columns are boundaries of the (d+1)-cells of V1, a (d+1)-spanning forest.
RatMatrix geometric_boundary_basis(const CellComplex& x, int d, const CellSubset& v1);

// Row k compares sigma_{z-k} of the cycle mesh matrix with the sum of the
// weights of the k-augmented spanning forests.
VerificationReport verify_theorem1(const CellComplex& x, int d, const LatticeBasis& z);
// Row k compares sigma_{b-k} of the boundary mesh matrix with the sum over
// k-reduced spanning coforests.
VerificationReport verify_theorem2(const CellComplex& x, int d, const LatticeBasis& b);
// Row m compares sigma_m of the Laplacian with the sum over forests V of size
// m and nonsingular m x m row selections W of det(A[W, V])^2.
VerificationReport verify_kirchhoff_lyons(const CellComplex& x, int d);
// Geometric-basis sums; V0 and V1 default to greedy forests.
VerificationReport verify_geometric_theorems(const CellComplex& x, int d,
                                             std::optional<CellSubset> v0 = std::nullopt,
                                             std::optional<CellSubset> v1 = std::nullopt);
// Row d compares the two routes to the squared homology covolume.
VerificationReport verify_covolume(const CellComplex& x);

}  // namespace cellforest

#endif  // CELLFOREST_MESH_SPECTRA_HPP_
