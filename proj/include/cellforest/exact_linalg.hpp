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

// Exact dense linear algebra over Z and Q.
//
// Integer routines first try an overflow-checked int64 path and fall back to
// GMP integers when any intermediate leaves the int64 range, so results are
// always exact.

#ifndef CELLFOREST_EXACT_LINALG_HPP_
#define CELLFOREST_EXACT_LINALG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

// U * A * V = D with U, V unimodular and D diagonal with a divisibility chain.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  // Nonzero diagonal entries of D, in order.
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Nonzero invariant factors only; cheaper than the full decomposition.
std::vector<Integer> invariant_factors(const IntMatrix& a);

// Column Hermite form of the lattice spanned by the columns of `a`: the
// returned columns are a basis of that lattice, in column echelon form with
// positive pivots and entries left of each pivot reduced into [0, pivot).
// Two generating sets of the same lattice give identical output.
IntMatrix column_hermite_basis(const IntMatrix& a);

// Basis of the integer kernel {x in Z^n : A x = 0}, as columns, canonicalized
// by column_hermite_basis. The lattice is saturated in Z^n.
IntMatrix kernel_basis(const IntMatrix& a);

// (L tensor Q) intersect Z^n for the lattice L spanned by the columns of `a`.
IntMatrix saturation_basis(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

// det(B^t B); 1 for a matrix with no columns.
Integer gram_det(const IntMatrix& b);
Rational gram_det(const RatMatrix& b);

// Exact inverse; throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& a);

// Unique x with A x = b when A has full column rank and b is in the column
// space; throws std::domain_error otherwise.
std::vector<Rational> solve_unique(const RatMatrix& a, const std::vector<Rational>& b);

// Coordinates of every column of `vectors` in the basis given by the columns
// of `basis` (full column rank). Throws when a column is outside the span, or
// when require_integral is set and a coordinate is fractional.
RatMatrix coordinates_in(const RatMatrix& basis, const RatMatrix& vectors);
IntMatrix integral_coordinates_in(const IntMatrix& basis, const IntMatrix& vectors);

template <class T>
struct Polynomial {
  // coefficients[i] multiplies t^i.
  std::vector<T> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  T coefficient(std::size_t i) const { return i < coefficients.size() ? coefficients[i] : T(0); }
  bool is_zero() const { return coefficients.empty(); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);

// det(t Id - M) by Faddeev-LeVerrier over Q. The 0x0 matrix gives 1.
RatPolynomial char_poly_rational(const RatMatrix& m);

// As char_poly_rational, but every coefficient must be an integer; throws
// std::domain_error otherwise.
IntPolynomial char_poly(const RatMatrix& m);
IntPolynomial char_poly(const IntMatrix& m);

// sigma_k(M) = sum over |I| = k of det(M_{I,I}).
Rational principal_minor_sum(const RatMatrix& m, std::size_t k);
Integer principal_minor_sum(const IntMatrix& m, std::size_t k);

// sigma_k read off a characteristic polynomial of degree n:
// (-1)^k times the coefficient of t^(n-k).
template <class T>
T elementary_symmetric(const Polynomial<T>& char_polynomial, std::size_t k) {
  const std::size_t n = char_polynomial.degree();
  if (k > n) return T(0);
  T c = char_polynomial.coefficient(n - k);
  if (k % 2 == 1) c = -c;
  return c;
}

}  // namespace cellforest

#endif  // CELLFOREST_EXACT_LINALG_HPP_
