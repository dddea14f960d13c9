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

// Squared Reidemeister-Franz torsion from torsion orders and from reduced
// Laplacian determinants with homology covolumes.

#ifndef CELLFOREST_RF_TORSION_HPP_
#define CELLFOREST_RF_TORSION_HPP_

#include <string>
#include <vector>

#include "cellforest/complex.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

// sigma_r(d_{i+1} d_{i+1}^t) with r = rank d_{i+1}, summed over principal
// minors; 1 when r = 0, including i = dimension.
Integer reduced_laplacian_det(const CellComplex& x, int i);

// (prod_i t_i^{(-1)^i})^2.
Rational rf_combinatorial(const CellComplex& x);
// prod_i (reduced_laplacian_det_i * H_i^2)^{(-1)^i}.
Rational rf_laplacian(const CellComplex& x);

struct TorsionFactor {
  int dimension = 0;
  Integer torsion;        // t_i
  Integer laplacian_det;  // reduced Laplacian determinant
  Rational covolume_sq;   // squared homology covolume
};

struct TorsionReport {
  std::string complex_name;
  int skeleton = 0;  // top dimension of the complex checked
  std::vector<TorsionFactor> factors;
  Rational lhs;  // rf_combinatorial
  Rational rhs;  // rf_laplacian
  bool pass = false;
};

struct RfVerification {
  std::vector<TorsionReport> cases;  // every proper skeleton, then X
  bool pass = false;
  double elapsed_ms = 0;
};

TorsionReport torsion_report(const CellComplex& x);
RfVerification verify_rf_identity(const CellComplex& x);

std::string to_json(const RfVerification& v, bool with_timing = false);
std::string to_table(const RfVerification& v, bool with_timing = false);

}  // namespace cellforest

#endif  // CELLFOREST_RF_TORSION_HPP_
