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

#include "cellforest/homology.hpp"

#include <stdexcept>
#include <string>

#include "cellforest/exact_linalg.hpp"

namespace cellforest {
namespace {

void check_degree(const CellComplex& x, int d) {
  if (d < 0 || d > x.dimension()) {
    throw std::out_of_range("dimension " + std::to_string(d) + " outside 0.." +
                            std::to_string(x.dimension()));
  }
}

// Boundary map into degree d from degree d + 1; zero columns past the top.
IntMatrix next_boundary(const CellComplex& x, int d) {
  if (d + 1 > x.dimension()) return IntMatrix(x.count(d), 0);
  return boundary_matrix(x, d + 1);
}

}  // namespace

Integer cokernel_torsion(const IntMatrix& a) {
  Integer t = 1;
  for (const Integer& f : invariant_factors(a)) t *= f;
  return t;
}

HomologySummary homology_groups(const CellComplex& x, int d) {
  check_degree(x, d);
  HomologySummary h;
  h.dimension = d;
  const std::size_t r_in = rank(boundary_matrix(x, d));
  std::vector<Integer> factors = invariant_factors(next_boundary(x, d));
  h.betti = x.count(d) - r_in - factors.size();
  for (const Integer& f : factors)
    if (f > 1) {
      h.invariant_factors.push_back(f);
      h.torsion_order *= f;
    }
  return h;
}

Integer torsion_order(const CellComplex& x, int d) { return homology_groups(x, d).torsion_order; }

LatticeBasis integral_cycle_basis(const CellComplex& x, int d) {
  check_degree(x, d);
  return {LatticeKind::cycles, d, kernel_basis(boundary_matrix(x, d))};
}

LatticeBasis integral_boundary_basis(const CellComplex& x, int d) {
  check_degree(x, d);
  return {LatticeKind::boundaries, d, column_hermite_basis(next_boundary(x, d))};
}

Integer relative_order(const CellComplex& x, const SubcomplexMask& upper,
                       const SubcomplexMask& lower, int q) {
  const int top = x.dimension();
  auto closed = [&](const SubcomplexMask& m) {
    for (int d = 1; d <= top; ++d)
      for (std::size_t j = 0; j < x.count(d); ++j) {
        if (!m.contains(d, j)) continue;
        for (const auto& [face, coeff] : x.cell(d, j).boundary)
          if (coeff != 0 && !m.contains(d - 1, x.find(face)->index)) return false;
      }
    return true;
  };
  if (upper.member.size() != static_cast<std::size_t>(top + 1) ||
      lower.member.size() != static_cast<std::size_t>(top + 1)) {
    throw std::invalid_argument("relative_order: mask shape does not match the complex");
  }
  for (int d = 0; d <= top; ++d)
    for (std::size_t j = 0; j < x.count(d); ++j)
      if (lower.contains(d, j) && !upper.contains(d, j)) {
        throw std::invalid_argument("relative_order: lower is not contained in upper");
      }
  if (!closed(upper) || !closed(lower)) {
    throw std::invalid_argument("relative_order: mask is not a subcomplex");
  }

  // Relative chains in degree d: cells of upper not in lower.
  auto rel_cells = [&](int d) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < x.count(d); ++j)
      if (upper.contains(d, j) && !lower.contains(d, j)) out.push_back(j);
    return out;
  };
  auto rel_boundary = [&](int d) {
    const auto cols = rel_cells(d);
    if (d <= 0 || d > top) return IntMatrix(d <= 0 ? 0 : rel_cells(d - 1).size(), cols.size());
    return boundary_matrix(x, d).select(rel_cells(d - 1), cols);
  };
  const std::size_t n_q = rel_cells(q).size();
  const IntMatrix in = rel_boundary(q);
  const IntMatrix out = rel_boundary(q + 1);
  const std::size_t r_out = rank(out);
  if (rank(in) + r_out != n_q) throw std::domain_error("relative homology group is infinite");
  return cokernel_torsion(out);
}

Integer covolume_squared(const LatticeBasis& l) { return gram_det(l.basis); }

HomologyCovolume homology_covolume(const CellComplex& x, int d) {
  check_degree(x, d);
  HomologyCovolume h;
  h.dimension = d;
  const LatticeBasis z = integral_cycle_basis(x, d);
  const LatticeBasis b = integral_boundary_basis(x, d);
  h.cycles_covolume_sq = covolume_squared(z);
  h.boundaries_covolume_sq = covolume_squared(b);
  h.torsion = torsion_order(x, d);
  h.quotient_form = Rational(h.cycles_covolume_sq * h.torsion * h.torsion) /
                    Rational(h.boundaries_covolume_sq);
  h.quotient_form.canonicalize();

  // Saturate the boundaries, complete them to a basis of Z_d, and project the
  // complement onto the orthogonal complement of the boundaries.
  const IntMatrix sat = saturation_basis(b.basis);
  const IntMatrix p = integral_coordinates_in(z.basis, sat);
  h.saturation_index = abs(determinant(integral_coordinates_in(sat, b.basis)));
  const SmithDecomposition s = smith_normal_form(p);
  const IntMatrix u_inv = to_integer_matrix(inverse(to_rational(s.U)), "unimodular inverse");
  const IntMatrix completion = u_inv.col_range(p.cols(), u_inv.cols());
  h.homology_lift = column_hermite_basis(z.basis * completion);

  const RatMatrix g = to_rational(h.homology_lift);
  RatMatrix projected = g;
  if (b.rank() > 0) {
    const RatMatrix bq = to_rational(b.basis);
    const RatMatrix bt = bq.transpose();
    projected = g - bq * inverse(bt * bq) * (bt * g);
  }
  h.projection_form = gram_det(projected);
  return h;
}

Rational homology_covolume_squared(const CellComplex& x, int d) {
  HomologyCovolume h = homology_covolume(x, d);
  if (h.quotient_form != h.projection_form) {
    throw std::logic_error("homology covolume routes disagree in dimension " + std::to_string(d));
  }
  return h.quotient_form;
}

}  // namespace cellforest
