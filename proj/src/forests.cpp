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

#include "cellforest/forests.hpp"

#include <algorithm>
#include <stdexcept>

#include "cellforest/exact_linalg.hpp"
#include "cellforest/rank_search.hpp"

namespace cellforest {
namespace {

IntMatrix boundary_into(const CellComplex& x, int d) {
  if (d + 1 > x.dimension()) return IntMatrix(x.count(d), 0);
  return boundary_matrix(x, d + 1);
}

void check_dimension(const CellComplex& x, int d) {
  if (d < 0 || d > x.dimension()) {
    throw std::out_of_range("dimension " + std::to_string(d) + " outside 0.." +
                            std::to_string(x.dimension()));
  }
}

void check_subset(const CellComplex& x, int d, const CellSubset& w) {
  if (w.dimension != d) throw std::invalid_argument("subset has the wrong dimension");
  for (std::size_t i : w.members)
    if (i >= x.count(d)) throw std::invalid_argument("subset member out of range");
}

std::vector<std::size_t> complement_of(std::span<const std::size_t> w, std::size_t n) {
  std::vector<std::size_t> c;
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p < w.size() && w[p] == i) {
      ++p;
      continue;
    }
    c.push_back(i);
  }
  return c;
}

Integer exact_quotient(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || a % b != 0) throw std::logic_error(std::string(what) + " is not an integer");
  return a / b;
}

}  // namespace

std::string ForestClass::label() const {
  switch (kind) {
    case ForestKind::spanning_forest:
      return "spanning_forest";
    case ForestKind::augmented:
      return "k_augmented(" + std::to_string(param) + ")";
    case ForestKind::size:
      return "forest_of_size(" + std::to_string(param) + ")";
    case ForestKind::coforest:
      return "spanning_coforest";
    case ForestKind::reduced:
      return "k_reduced_coforest(" + std::to_string(param) + ")";
  }
  return "unknown";
}

ForestKind parse_forest_kind(const std::string& name) {
  if (name == "forest") return ForestKind::spanning_forest;
  if (name == "augmented") return ForestKind::augmented;
  if (name == "size") return ForestKind::size;
  if (name == "coforest") return ForestKind::coforest;
  if (name == "reduced") return ForestKind::reduced;
  throw std::invalid_argument("unknown forest kind '" + name + "'");
}

ForestParameters forest_parameters(const CellComplex& x, int d) {
  check_dimension(x, d);
  ForestParameters p;
  p.cells = x.count(d);
  p.rank_below = rank(boundary_matrix(x, d));
  p.cycles = p.cells - p.rank_below;
  p.rank_above = rank(boundary_into(x, d));
  return p;
}

std::vector<ForestClass> classify(const CellComplex& x, int d, const CellSubset& w) {
  check_dimension(x, d);
  check_subset(x, d, w);
  const ForestParameters p = forest_parameters(x, d);
  const std::size_t s = w.size();
  const std::size_t r = rank(boundary_matrix(x, d).select_cols(w.members));
  const std::size_t rr = rank(boundary_into(x, d).select_rows(w.members));
  std::vector<ForestClass> out;
  if (s == p.rank_below && r == s) out.push_back({ForestKind::spanning_forest, 0});
  if (r == p.rank_below && s >= p.rank_below) out.push_back({ForestKind::augmented, s - r});
  if (r == s) out.push_back({ForestKind::size, s});
  if (rr == s) {
    if (s == p.rank_above) out.push_back({ForestKind::coforest, 0});
    out.push_back({ForestKind::reduced, p.rank_above - s});
  }
  return out;
}

void enumerate_forests(const CellComplex& x, int d, ForestKind kind, std::size_t param,
                       const std::function<void(std::span<const std::size_t>)>& visit) {
  check_dimension(x, d);
  const ForestParameters p = forest_parameters(x, d);
  std::size_t size = 0, target = 0;
  bool columns = true;
  switch (kind) {
    case ForestKind::spanning_forest:
      size = target = p.rank_below;
      break;
    case ForestKind::augmented:
      if (param > p.cycles) throw std::out_of_range("k exceeds z_d");
      size = p.rank_below + param;
      target = p.rank_below;
      break;
    case ForestKind::size:
      if (param > p.rank_below) throw std::out_of_range("m exceeds b_{d-1}");
      size = target = param;
      break;
    case ForestKind::coforest:
      size = target = p.rank_above;
      columns = false;
      break;
    case ForestKind::reduced:
      if (param > p.rank_above) throw std::out_of_range("k exceeds b_d");
      size = target = p.rank_above - param;
      columns = false;
      break;
  }
  const IntMatrix vectors =
      columns ? boundary_matrix(x, d).transpose() : boundary_into(x, d);
  for_each_rank_subset(vectors, size, target,
                       [&](std::span<const std::size_t> s, const auto&) { visit(s); });
}

std::size_t count_forests(const CellComplex& x, int d, ForestKind kind, std::size_t param) {
  std::size_t n = 0;
  enumerate_forests(x, d, kind, param, [&](std::span<const std::size_t>) { ++n; });
  return n;
}

// ---------------------------------------------------------------------------

CycleWeigher::CycleWeigher(const CellComplex& x, int d, const LatticeBasis& z)
    : a_(boundary_matrix(x, d)), z_(z.basis) {
  if (z.kind != LatticeKind::cycles || z.dimension != d) {
    throw std::invalid_argument("expected a cycle basis in dimension " + std::to_string(d));
  }
  if (z_.rows() != x.count(d)) throw std::invalid_argument("cycle basis has the wrong ambient size");
  rank_below_ = rank(a_);
  if (z_.cols() + rank_below_ != x.count(d) || !(a_ * z_).is_zero()) {
    throw std::invalid_argument("matrix is not a basis of the cycles");
  }
  torsion_ = cokernel_torsion(a_);
  // Any z independent rows of Z determine coordinates of lattice vectors.
  for (std::size_t i = 0; i < z_.rows() && pivot_rows_.size() < z_.cols(); ++i) {
    pivot_rows_.push_back(i);
    if (rank(z_.select_rows(pivot_rows_)) < pivot_rows_.size()) pivot_rows_.pop_back();
  }
  const IntMatrix zp = z_.select_rows(pivot_rows_);
  pivot_det_ = determinant(zp);
  pivot_adjugate_ =
      to_integer_matrix(Rational(pivot_det_) * inverse(to_rational(zp)), "adjugate");
}

std::optional<WeightParts> CycleWeigher::weigh(std::span<const std::size_t> w) const {
  const IntMatrix aw = a_.select_cols(w);
  if (rank(aw) != rank_below_ || w.size() < rank_below_) return std::nullopt;
  WeightParts parts;

  const IntMatrix u = z_.select_rows(complement_of(w, z_.rows()));
  parts.direct = determinant(u * u.transpose());

  const Integer tw = cokernel_torsion(aw);
  const Integer ratio = exact_quotient(tw, torsion_, "torsion ratio");
  if (ratio < 1) throw std::logic_error("torsion ratio is not positive");
  parts.torsion_ratio = ratio;

  // Integral basis of the cycles supported on W, in coordinates of Z.
  const IntMatrix kw = kernel_basis(aw);
  IntMatrix on_pivots(pivot_rows_.size(), kw.cols());
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r) {
    auto it = std::lower_bound(w.begin(), w.end(), pivot_rows_[r]);
    if (it == w.end() || *it != pivot_rows_[r]) continue;
    const auto local = static_cast<std::size_t>(it - w.begin());
    for (std::size_t j = 0; j < kw.cols(); ++j) on_pivots(r, j) = kw(local, j);
  }
  IntMatrix coords = pivot_adjugate_ * on_pivots;
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < coords.cols(); ++j)
      coords(i, j) = exact_quotient(coords(i, j), pivot_det_, "cycle coordinate");
  parts.gram_factor = gram_det(coords);
  parts.second_route = ratio * ratio * *parts.gram_factor;
  if (parts.second_route != parts.direct) {
    throw std::logic_error("cycle weight routes disagree: direct " + to_string(parts.direct) +
                           ", torsion formula " + to_string(parts.second_route));
  }
  if (parts.direct < 1) throw std::logic_error("cycle weight is not positive");
  return parts;
}

BoundaryWeigher::BoundaryWeigher(const CellComplex& x, int d, const LatticeBasis& b)
    : x_(x), d_(d), next_(boundary_into(x, d)), b_(b.basis) {
  if (b.kind != LatticeKind::boundaries || b.dimension != d) {
    throw std::invalid_argument("expected a boundary basis in dimension " + std::to_string(d));
  }
  rank_above_ = rank(next_);
  if (b_.rows() != x.count(d) || b_.cols() != rank_above_) {
    throw std::invalid_argument("boundary basis has the wrong shape");
  }
}

std::vector<std::size_t> BoundaryWeigher::complete(std::span<const std::size_t> w,
                                                   bool reverse) const {
  std::vector<std::size_t> v(w.begin(), w.end());
  const std::size_t n = next_.rows();
  for (std::size_t step = 0; step < n && v.size() < rank_above_; ++step) {
    const std::size_t i = reverse ? n - 1 - step : step;
    if (std::binary_search(w.begin(), w.end(), i)) continue;
    v.push_back(i);
    if (rank(next_.select_rows(v)) < v.size()) v.pop_back();
  }
  std::sort(v.begin(), v.end());
  return v;
}

Rational BoundaryWeigher::f_ratio(std::span<const std::size_t> w,
                                  const std::vector<std::size_t>& v, const IntMatrix& kernel,
                                  Integer* u_out, Integer* v_out) const {
  std::vector<std::size_t> extra;
  std::set_difference(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(extra));
  const Integer u = abs(determinant((b_ * kernel).select_rows(extra)));
  CellSubset vc = CellSubset{d_, v}.complement(x_);
  const Integer vv = relative_order(x_, SubcomplexMask::full(x_),
                                    SubcomplexMask::with_cells(x_, vc), d_);
  if (u == 0) throw std::logic_error("kernel restricted to the added cells is singular");
  if (u_out) *u_out = u;
  if (v_out) *v_out = vv;
  Rational f(vv, u);
  f.canonicalize();
  return f;
}

std::optional<WeightParts> BoundaryWeigher::weigh(std::span<const std::size_t> w) const {
  if (w.size() > rank_above_ || rank(next_.select_rows(w)) != w.size()) return std::nullopt;
  WeightParts parts;
  const IntMatrix bw = b_.select_rows(w);
  parts.direct = determinant(bw * bw.transpose());

  const IntMatrix kernel = kernel_basis(bw);
  parts.gram_factor = gram_det(kernel);
  const std::vector<std::size_t> v = complete(w, false);
  Integer u, vv;
  const Rational f = f_ratio(w, v, kernel, &u, &vv);
  parts.u = u;
  parts.v = vv;
  parts.f = f;
  parts.containing_coforest = CellSubset{d_, v};
  const Rational second = f * f * Rational(*parts.gram_factor);
  if (second.get_den() != 1) throw std::logic_error("relative-order weight is not an integer");
  parts.second_route = second.get_num();

  const std::vector<std::size_t> v2 = complete(w, true);
  parts.f_checked_against_second_coforest = v2 != v;
  if (v2 != v && f_ratio(w, v2, kernel, nullptr, nullptr) != f) {
    throw std::logic_error("f(W) depends on the containing coforest");
  }
  if (parts.second_route != parts.direct) {
    throw std::logic_error("boundary weight routes disagree: direct " + to_string(parts.direct) +
                           ", relative-order formula " + to_string(parts.second_route));
  }
  if (parts.direct < 1) throw std::logic_error("boundary weight is not positive");
  return parts;
}

ForestCertificate cycle_weight(const CellComplex& x, int d, const CellSubset& w,
                               const LatticeBasis& z) {
  check_dimension(x, d);
  check_subset(x, d, w);
  CycleWeigher weigher(x, d, z);
  auto parts = weigher.weigh(w.members);
  if (!parts) throw std::invalid_argument("subset is not an augmented spanning forest");
  const std::size_t k = w.size() - rank(boundary_matrix(x, d));
  return {w, {ForestKind::augmented, k}, parts->direct, parts};
}

ForestCertificate boundary_weight(const CellComplex& x, int d, const CellSubset& w,
                                  const LatticeBasis& b) {
  check_dimension(x, d);
  check_subset(x, d, w);
  BoundaryWeigher weigher(x, d, b);
  auto parts = weigher.weigh(w.members);
  if (!parts) throw std::invalid_argument("subset is not a reduced spanning coforest");
  const std::size_t k = b.basis.cols() - w.size();
  return {w, {ForestKind::reduced, k}, parts->direct, parts};
}

Integer kirchhoff_pair_weight(const CellComplex& x, int d, const CellSubset& v,
                              const CellSubset& w) {
  if (d < 1 || d > x.dimension()) throw std::out_of_range("dimension out of range");
  check_subset(x, d, v);
  check_subset(x, d - 1, w);
  if (v.size() != w.size()) throw std::invalid_argument("pair sizes differ");
  const Integer det = determinant(boundary_matrix(x, d).select(w.members, v.members));
  const Integer sq = det * det;
  if (sq != 0) {
    const Integer order =
        relative_order(x, SubcomplexMask::with_cells(x, v),
                       SubcomplexMask::with_cells(x, w.complement(x)), d - 1);
    if (order * order != sq) {
      throw std::logic_error("minor and relative homology order disagree");
    }
  }
  return sq;
}

}  // namespace cellforest
