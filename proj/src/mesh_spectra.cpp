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

#include "cellforest/mesh_spectra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "cellforest/exact_linalg.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/rank_search.hpp"

namespace cellforest {
namespace {

void check_dimension(const CellComplex& x, int d, int lo) {
  if (d < lo || d > x.dimension()) {
    throw std::out_of_range("dimension " + std::to_string(d) + " outside " + std::to_string(lo) +
                            ".." + std::to_string(x.dimension()));
  }
}

RatMatrix gram(const RatMatrix& b) { return b.transpose() * b; }

std::string sigma_label(std::size_t j) { return "sigma_" + std::to_string(j); }

// Bitmask enumeration below is only sensible for small complements.
constexpr std::size_t kMaxMaskBits = 22;

// Pair-sum cross-checks against relative homology per row; each costs an SNF.
constexpr std::size_t kPairCrossChecks = 64;

// Sum of squared tracker pivots; word-sized pivots go through a 128-bit
// accumulator that spills into the big integer on overflow.
class SquareSum {
 public:
  void add(std::int64_t p) {
    const auto q = static_cast<unsigned __int128>(p < 0 ? -static_cast<__int128>(p) : p);
    if (__builtin_add_overflow(small_, q * q, &small_)) {
      spill();
      small_ = q * q;
    }
  }
  void add(const Integer& p) { big_ += p * p; }
  Integer total() {
    spill();
    return big_;
  }

 private:
  void spill() {
    const auto hi = static_cast<unsigned long>(small_ >> 64);
    const auto lo = static_cast<unsigned long>(small_);
    Integer h(hi);
    h <<= 64;
    big_ += h + Integer(lo);
    small_ = 0;
  }
  unsigned __int128 small_ = 0;
  Integer big_ = 0;
};

Integer square(std::int64_t p) {
  Integer q(static_cast<long>(p));
  return q * q;
}
Integer square(const Integer& p) { return p * p; }

}  // namespace

std::string to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::cycles:
      return "cycles";
    case MeshKind::boundaries:
      return "boundaries";
    case MeshKind::laplacian:
      return "laplacian";
    case MeshKind::weighted_laplacian:
      return "weighted_laplacian";
  }
  return "unknown";
}

MeshMatrix mesh_matrix_from_basis(MeshKind kind, int d, const RatMatrix& basis,
                                  std::string provenance) {
  return {kind, d, gram(basis), std::move(provenance)};
}

MeshMatrix mesh_matrix_cycles(const CellComplex& x, int d, const LatticeBasis& z,
                              std::string provenance) {
  if (z.kind != LatticeKind::cycles) throw std::invalid_argument("basis is not of cycles kind");
  if (z.basis.rows() != x.count(d)) throw std::invalid_argument("basis has the wrong ambient size");
  return mesh_matrix_from_basis(MeshKind::cycles, d, to_rational(z.basis), std::move(provenance));
}

MeshMatrix mesh_matrix_boundaries(const CellComplex& x, int d, const LatticeBasis& b,
                                  std::string provenance) {
  if (b.kind != LatticeKind::boundaries) {
    throw std::invalid_argument("basis is not of boundaries kind");
  }
  if (b.basis.rows() != x.count(d)) throw std::invalid_argument("basis has the wrong ambient size");
  return mesh_matrix_from_basis(MeshKind::boundaries, d, to_rational(b.basis),
                                std::move(provenance));
}

MeshMatrix combinatorial_laplacian(const CellComplex& x, int d) {
  check_dimension(x, d, 1);
  const IntMatrix k = boundary_matrix(x, d);
  return {MeshKind::laplacian, d, to_rational(k * k.transpose()), "cellular"};
}

MeshMatrix weighted_laplacian(const CellComplex& x, int d, const WeightAssignment& w) {
  check_dimension(x, d, 1);
  RatMatrix a = to_rational(boundary_matrix(x, d));
  RatMatrix aw = a;
  for (std::size_t j = 0; j < x.count(d); ++j) {
    const Rational wj = w.of(x.cell(d, j).id);
    if (wj <= 0) throw std::invalid_argument("weight of '" + x.cell(d, j).id + "' is not positive");
    for (std::size_t i = 0; i < aw.rows(); ++i) aw(i, j) *= wj;
  }
  RatMatrix m = aw * a.transpose();
  for (std::size_t j = 0; j < x.count(d - 1); ++j) {
    const Rational wj = w.of(x.cell(d - 1, j).id);
    if (wj <= 0) {
      throw std::invalid_argument("weight of '" + x.cell(d - 1, j).id + "' is not positive");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) /= wj;
  }
  return {MeshKind::weighted_laplacian, d, std::move(m), "cell weights"};
}

CellSubset greedy_spanning_forest(const CellComplex& x, int d) {
  check_dimension(x, d, 0);
  const IntMatrix a = boundary_matrix(x, d);
  CellSubset v{d, {}};
  for (std::size_t j = 0; j < x.count(d); ++j) {
    v.members.push_back(j);
    if (rank(a.select_cols(v.members)) < v.members.size()) v.members.pop_back();
  }
  return v;
}

RatMatrix geometric_cycle_basis(const CellComplex& x, int d, const CellSubset& v0) {
  check_dimension(x, d, 0);
  if (v0.dimension != d) throw std::invalid_argument("forest has the wrong dimension");
  const IntMatrix a = boundary_matrix(x, d);
  const std::size_t r = rank(a);
  const RatMatrix av = to_rational(a.select_cols(v0.members));
  if (v0.size() != r || rank(av) != r) {
    throw std::invalid_argument("V0 is not a spanning forest in dimension " + std::to_string(d));
  }
  const std::vector<std::size_t> others = v0.complement(x).members;
  RatMatrix g(x.count(d), others.size());
  for (std::size_t c = 0; c < others.size(); ++c) {
    std::vector<Rational> rhs(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rhs[i] = -Rational(a(i, others[c]));
    const std::vector<Rational> coeff = solve_unique(av, rhs);
    for (std::size_t j = 0; j < v0.size(); ++j) g(v0.members[j], c) = coeff[j];
    g(others[c], c) = 1;
  }
  return g;
}

RatMatrix geometric_boundary_basis(const CellComplex& x, int d, const CellSubset& v1) {
  check_dimension(x, d, 0);
  if (v1.dimension != d + 1) throw std::invalid_argument("V1 must consist of (d+1)-cells");
  if (d == x.dimension()) {
    if (v1.size() != 0) throw std::invalid_argument("no (d+1)-cells exist");
    return RatMatrix(x.count(d), 0);
  }
  const IntMatrix next = boundary_matrix(x, d + 1);
  const IntMatrix h = next.select_cols(v1.members);
  if (v1.size() != rank(next) || rank(h) != v1.size()) {
    throw std::invalid_argument("V1 is not a spanning forest in dimension " +
                                std::to_string(d + 1));
  }
  return to_rational(h);
}

VerificationReport verify_theorem1(const CellComplex& x, int d, const LatticeBasis& z) {
  Stopwatch clock;
  check_dimension(x, d, 0);
  VerificationReport report;
  report.theorem = "trent";
  report.dimension = d;
  const IntPolynomial cp = char_poly(mesh_matrix_cycles(x, d, z).matrix);
  const ForestParameters p = forest_parameters(x, d);
  const CycleWeigher weigher(x, d, z);
  Integer largest_ratio = 1;
  for (std::size_t k = 0; k <= p.cycles; ++k) {
    Integer sum = 0;
    std::size_t count = 0;
    enumerate_forests(x, d, ForestKind::augmented, k, [&](std::span<const std::size_t> w) {
      const auto parts = weigher.weigh(w);
      if (!parts) throw std::logic_error("enumerated subset is not an augmented forest");
      sum += parts->direct;
      largest_ratio = std::max(largest_ratio, *parts->torsion_ratio);
      ++count;
    });
    report.add_row(k, sigma_label(p.cycles - k), elementary_symmetric(cp, p.cycles - k), sum,
                   count);
  }
  report.notes.push_back("largest torsion ratio " + to_string(largest_ratio));
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_theorem2(const CellComplex& x, int d, const LatticeBasis& b) {
  Stopwatch clock;
  check_dimension(x, d, 0);
  VerificationReport report;
  report.theorem = "boundary";
  report.dimension = d;
  const IntPolynomial cp = char_poly(mesh_matrix_boundaries(x, d, b).matrix);
  const ForestParameters p = forest_parameters(x, d);
  const BoundaryWeigher weigher(x, d, b);
  std::size_t second_coforests = 0;
  for (std::size_t k = 0; k <= p.rank_above; ++k) {
    Integer sum = 0;
    std::size_t count = 0;
    enumerate_forests(x, d, ForestKind::reduced, k, [&](std::span<const std::size_t> w) {
      const auto parts = weigher.weigh(w);
      if (!parts) throw std::logic_error("enumerated subset is not a reduced coforest");
      sum += parts->direct;
      if (*parts->f_checked_against_second_coforest) ++second_coforests;
      ++count;
    });
    report.add_row(k, sigma_label(p.rank_above - k), elementary_symmetric(cp, p.rank_above - k),
                   sum, count);
  }
  report.notes.push_back("f(W) confirmed against a second containing coforest for " +
                         std::to_string(second_coforests) + " subsets");
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_kirchhoff_lyons(const CellComplex& x, int d) {
  Stopwatch clock;
  check_dimension(x, d, 1);
  VerificationReport report;
  report.theorem = "kirchhoff";
  report.dimension = d;
  const IntPolynomial cp = char_poly(combinatorial_laplacian(x, d).matrix);
  const IntMatrix a = boundary_matrix(x, d);
  const std::size_t b = rank(a);
  std::size_t cross_checks = 0;
  for (std::size_t m = 1; m <= b; ++m) {
    SquareSum sum;
    std::size_t pairs = 0, forests = 0;
    for_each_rank_subset(a.transpose(), m, m, [&](std::span<const std::size_t> v, const auto&) {
      const std::vector<std::size_t> vcells(v.begin(), v.end());
      const IntMatrix rows = a.select_cols(vcells);
      bool first = forests++ < kPairCrossChecks;
      for_each_rank_subset(rows, m, m, [&](std::span<const std::size_t> w, const auto& tracker) {
        sum.add(tracker.top_pivot());
        ++pairs;
        if (first) {
          first = false;
          const Integer sq = square(tracker.top_pivot());
          const CellSubset ws{d - 1, std::vector<std::size_t>(w.begin(), w.end())};
          if (kirchhoff_pair_weight(x, d, CellSubset{d, vcells}, ws) != sq) {
            throw std::logic_error("pair weight disagrees with the tracked minor");
          }
          ++cross_checks;
        }
      });
    });
    report.add_row(m, m == b ? "sigma_" + std::to_string(m) + " = product of nonzero eigenvalues"
                             : sigma_label(m),
                   elementary_symmetric(cp, m), sum.total(), pairs);
  }
  report.notes.push_back(std::to_string(cross_checks) +
                         " pair weights cross-checked against relative homology orders");
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_geometric_theorems(const CellComplex& x, int d,
                                             std::optional<CellSubset> v0,
                                             std::optional<CellSubset> v1) {
  Stopwatch clock;
  check_dimension(x, d, 0);
  VerificationReport report;
  report.theorem = "geometric";
  report.dimension = d;
  if (!v0) v0 = greedy_spanning_forest(x, d);
  if (!v1) v1 = d < x.dimension() ? greedy_spanning_forest(x, d + 1) : CellSubset{d + 1, {}};

  // Cycle side: sigma_k of the geometric mesh matrix against sums over
  // k-subsets U of the complement and spanning forests V inside V0 + U.
  {
    const RatMatrix g = geometric_cycle_basis(x, d, *v0);
    const RatPolynomial cp = char_poly_rational(gram(g));
    const IntMatrix a = boundary_matrix(x, d);
    const std::vector<std::size_t> others = v0->complement(x).members;
    const std::size_t z = others.size();
    if (z > kMaxMaskBits) throw std::out_of_range("too many cycles for the geometric check");
    std::vector<long> bit(x.count(d), -1);
    for (std::size_t i = 0; i < z; ++i) bit[others[i]] = static_cast<long>(i);

    const std::size_t masks = std::size_t{1} << z;
    std::vector<Integer> weight(masks, 0);  // sum of t(X_V)^2 with V - V0 = mask
    std::vector<std::size_t> count(masks, 0);
    Integer largest = 0;
    enumerate_forests(x, d, ForestKind::spanning_forest, 0, [&](std::span<const std::size_t> v) {
      std::size_t mask = 0;
      for (std::size_t c : v)
        if (bit[c] >= 0) mask |= std::size_t{1} << bit[c];
      const Integer t = cokernel_torsion(a.select_cols(v));
      weight[mask] += t * t;
      ++count[mask];
      largest = std::max(largest, t);
    });
    // Subset sums: weight[U] becomes the sum over all V inside V0 + U.
    for (std::size_t i = 0; i < z; ++i)
      for (std::size_t mask = 0; mask < masks; ++mask)
        if (mask >> i & 1) {
          weight[mask] += weight[mask ^ (std::size_t{1} << i)];
          count[mask] += count[mask ^ (std::size_t{1} << i)];
        }
    const Integer t0 = cokernel_torsion(a.select_cols(v0->members));
    std::vector<Rational> proof(z + 1, 0), statement(z + 1, 0);
    std::vector<std::size_t> certificates(z + 1, 0);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const auto k = static_cast<std::size_t>(std::popcount(mask));
      std::vector<std::size_t> cells = v0->members;
      for (std::size_t i = 0; i < z; ++i)
        if (mask >> i & 1) cells.push_back(others[i]);
      std::sort(cells.begin(), cells.end());
      const Integer tu = cokernel_torsion(a.select_cols(cells));
      proof[k] += Rational(weight[mask], t0 * t0);
      statement[k] += Rational(weight[mask], tu * tu);
      certificates[k] += count[mask];
    }
    bool statement_matches = true;
    for (std::size_t k = 0; k <= z; ++k) {
      proof[k].canonicalize();
      statement[k].canonicalize();
      const Rational lhs = elementary_symmetric(cp, k);
      auto& row = report.add_row(k, "cycles " + sigma_label(k), lhs, proof[k], certificates[k]);
      row.rhs_alternate = to_string(statement[k]);
      statement_matches = statement_matches && statement[k] == lhs;
    }
    report.notes.push_back("cycle side uses the V0 torsion denominator; the V0+U denominator " +
                           std::string(statement_matches ? "also matches" : "does not match") +
                           " on this complex");
    report.notes.push_back("largest forest torsion " + to_string(largest));
  }

  // Boundary side: basis = boundaries of the cells of V1.
  {
    const RatMatrix h = geometric_boundary_basis(x, d, *v1);
    const RatPolynomial cp = char_poly_rational(gram(h));
    const IntMatrix hi = to_integer_matrix(h, "boundary basis");
    const std::size_t b = hi.cols();
    std::size_t cross_checks = 0;
    for (std::size_t k = 0; k <= b; ++k) {
      Integer sum = 0;
      std::size_t pairs = 0;
      for_each_rank_subset(hi.transpose(), k, k, [&](std::span<const std::size_t> u, const auto&) {
        const std::vector<std::size_t> upos(u.begin(), u.end());
        bool first = true;
        for_each_rank_subset(hi.select_cols(upos), k, k,
                             [&](std::span<const std::size_t> y, const auto& tracker) {
                               const Integer det = tracker.abs_top_pivot();
                               const Integer sq = det * det;
                               sum += sq;
                               ++pairs;
                               if (first && k > 0) {
                                 first = false;
                                 std::vector<std::size_t> ucells;
                                 for (std::size_t i : upos) ucells.push_back(v1->members[i]);
                                 const CellSubset ys{d, std::vector<std::size_t>(y.begin(), y.end())};
                                 if (kirchhoff_pair_weight(x, d + 1, CellSubset{d + 1, ucells}, ys) !=
                                     sq) {
                                   throw std::logic_error("minor disagrees with relative order");
                                 }
                                 ++cross_checks;
                               }
                             });
      });
      report.add_row(k, "boundaries " + sigma_label(k), elementary_symmetric(cp, k), sum, pairs);
    }
    report.notes.push_back("boundary basis indexed by the cells of V1; " +
                           std::to_string(cross_checks) +
                           " squared minors cross-checked against relative homology orders");
  }
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_covolume(const CellComplex& x) {
  Stopwatch clock;
  VerificationReport report;
  report.theorem = "covolume";
  report.dimension = x.dimension();
  for (int d = 0; d <= x.dimension(); ++d) {
    const HomologyCovolume h = homology_covolume(x, d);
    report.add_row(static_cast<std::size_t>(d), "homology covolume^2 in dim " + std::to_string(d),
                   h.quotient_form, h.projection_form, h.homology_lift.cols());
  }
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cellforest
