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

// Integral homology, lattice bases of cycles and boundaries, relative orders
// and covolumes.

#ifndef CELLFOREST_HOMOLOGY_HPP_
#define CELLFOREST_HOMOLOGY_HPP_

#include <cstddef>
#include <vector>

#include "cellforest/complex.hpp"
#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

struct HomologySummary {
  int dimension = 0;
  std::size_t betti = 0;
  std::vector<Integer> invariant_factors;  // entries > 1, divisibility chain
  Integer torsion_order = 1;
};

enum class LatticeKind { cycles, boundaries };

struct LatticeBasis {
  LatticeKind kind = LatticeKind::cycles;
  int dimension = 0;
  IntMatrix basis;  // n_d rows; columns are the generators

  std::size_t ambient() const { return basis.rows(); }
  std::size_t rank() const { return basis.cols(); }
};

HomologySummary homology_groups(const CellComplex& x, int d);
Integer torsion_order(const CellComplex& x, int d);

// Product of the invariant factors of an integer matrix; the torsion order of
// its cokernel.
Integer cokernel_torsion(const IntMatrix& a);

// Saturated kernel of the boundary map, Hermite-canonicalized.
LatticeBasis integral_cycle_basis(const CellComplex& x, int d);
// Image of the next boundary map, Hermite-canonicalized. d = dimension is
// accepted and yields no columns.
LatticeBasis integral_boundary_basis(const CellComplex& x, int d);

// Order of H_q(upper, lower; Z) for subcomplexes lower <= upper. Throws
// std::domain_error when the group is infinite and std::invalid_argument when
// the masks are not nested subcomplexes.
Integer relative_order(const CellComplex& x, const SubcomplexMask& upper,
                       const SubcomplexMask& lower, int q);

Integer covolume_squared(const LatticeBasis& l);

struct HomologyCovolume {
  int dimension = 0;
  Integer cycles_covolume_sq;      // covol^2 of Z_d
  Integer boundaries_covolume_sq;  // covol^2 of B_d
  Integer torsion;                 // t_d
  Integer saturation_index;        // [saturated B_d : B_d]
  Rational quotient_form;          // covol^2(Z) t^2 / covol^2(B)
  Rational projection_form;        // Gram of the harmonic projection of a homology lift
  IntMatrix homology_lift;         // integral cycles completing the saturated boundaries
};

// Both routes to the squared covolume of the image of Z_d in harmonic space.
HomologyCovolume homology_covolume(const CellComplex& x, int d);
// The common value; throws std::logic_error if the two routes disagree.
Rational homology_covolume_squared(const CellComplex& x, int d);

}  // namespace cellforest

#endif  // CELLFOREST_HOMOLOGY_HPP_
