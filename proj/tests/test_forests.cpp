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

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

#include "cellforest/exact_linalg.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/homology.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cellforest;

namespace {

std::vector<std::vector<std::size_t>> collect(const CellComplex& x, int d, ForestKind kind,
                                              std::size_t param = 0) {
  std::vector<std::vector<std::size_t>> out;
  enumerate_forests(x, d, kind, param,
                    [&](std::span<const std::size_t> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

IntMatrix next_boundary(const CellComplex& x, int d) {
  return d < x.dimension() ? boundary_matrix(x, d + 1) : IntMatrix(x.count(d), 0);
}

// Small corpus members where every subset can be listed.
const std::vector<std::string> kSmall = {"k3", "k4", "theta", "p2", "simplex3",
                                         "sphere2", "rp2", "moore2", "dunce"};

}  // namespace

TEST_CASE("classify: examples") {
  const CellComplex k3 = corpus::load("k3");
  auto two = classify(k3, 1, CellSubset::from_ids(k3, 1, {"e12", "e23"}));
  CHECK(std::find(two.begin(), two.end(), ForestClass{ForestKind::spanning_forest, 0}) != two.end());
  CHECK(std::find(two.begin(), two.end(), ForestClass{ForestKind::augmented, 0}) != two.end());

  auto all = classify(k3, 1, CellSubset::all(k3, 1));
  CHECK(all == std::vector<ForestClass>{{ForestKind::augmented, 1}});

  const CellComplex s3 = corpus::load("simplex3");
  auto t1 = classify(s3, 2, CellSubset{2, {0}});
  CHECK(std::find(t1.begin(), t1.end(), ForestClass{ForestKind::coforest, 0}) != t1.end());
  CHECK(std::find(t1.begin(), t1.end(), ForestClass{ForestKind::reduced, 0}) != t1.end());

  CHECK(ForestClass{ForestKind::augmented, 2}.label() == "k_augmented(2)");
  CHECK(parse_forest_kind("coforest") == ForestKind::coforest);
  CHECK_THROWS_AS(parse_forest_kind("tree"), std::invalid_argument);
}

TEST_CASE("enumerate: examples") {
  CHECK(count_forests(corpus::load("k3"), 1, ForestKind::spanning_forest, 0) == 3);
  CHECK(count_forests(corpus::load("k4"), 1, ForestKind::spanning_forest, 0) == 16);
  const CellComplex sphere = corpus::load("sphere2");
  auto f = collect(sphere, 2, ForestKind::spanning_forest);
  CHECK(f.size() == 4);
  for (const auto& s : f) CHECK(s.size() == 3);
  CHECK(std::is_sorted(f.begin(), f.end()));

  const CellComplex k3 = corpus::load("k3");
  CHECK(count_forests(k3, 1, ForestKind::augmented, 1) == 1);
  CHECK_THROWS_AS(count_forests(k3, 1, ForestKind::augmented, 2), std::out_of_range);
  CHECK_THROWS_AS(count_forests(k3, 1, ForestKind::size, 3), std::out_of_range);
  CHECK_THROWS_AS(count_forests(k3, 1, ForestKind::reduced, 1), std::out_of_range);
  // A graph has b_1 = 0, so the only coforest is empty.
  CHECK(collect(k3, 1, ForestKind::coforest) == std::vector<std::vector<std::size_t>>{{}});
}

TEST_CASE("enumerate agrees with brute force over all subsets") {
  for (const auto& name : kSmall) {
    const CellComplex x = corpus::load(name);
    for (int d = 0; d <= x.dimension(); ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const IntMatrix a = boundary_matrix(x, d);
      const IntMatrix nb = next_boundary(x, d);
      const ForestParameters p = forest_parameters(x, d);
      CHECK(p.rank_below == oracle::rational_rank(a));
      CHECK(p.rank_above == oracle::rational_rank(nb));
      for (std::size_t k = 0; k <= p.cycles; ++k) {
        std::vector<std::vector<std::size_t>> brute;
        for (const auto& s : oracle::subsets(p.cells, p.rank_below + k))
          if (oracle::rational_rank(a.select_cols(s)) == p.rank_below) brute.push_back(s);
        CHECK(collect(x, d, ForestKind::augmented, k) == brute);
      }
      for (std::size_t m = 0; m <= p.rank_below; ++m) {
        std::vector<std::vector<std::size_t>> brute;
        for (const auto& s : oracle::subsets(p.cells, m))
          if (oracle::rational_rank(a.select_cols(s)) == m) brute.push_back(s);
        CHECK(collect(x, d, ForestKind::size, m) == brute);
      }
      for (std::size_t k = 0; k <= p.rank_above; ++k) {
        std::vector<std::vector<std::size_t>> brute;
        for (const auto& s : oracle::subsets(p.cells, p.rank_above - k))
          if (oracle::rational_rank(nb.select_rows(s)) == s.size()) brute.push_back(s);
        CHECK(collect(x, d, ForestKind::reduced, k) == brute);
      }
    }
  }
}

TEST_CASE("cycle weights: examples") {
  const CellComplex sphere = corpus::load("sphere2");
  const LatticeBasis z2 = integral_cycle_basis(sphere, 2);
  for (const auto& s : collect(sphere, 2, ForestKind::spanning_forest)) {
    const ForestCertificate c = cycle_weight(sphere, 2, CellSubset{2, s}, z2);
    CHECK(*c.weight == 1);
    CHECK(*c.parts->torsion_ratio == 1);
  }

  const CellComplex k3 = corpus::load("k3");
  const ForestCertificate all =
      cycle_weight(k3, 1, CellSubset::all(k3, 1), integral_cycle_basis(k3, 1));
  CHECK(*all.weight == 1);
  CHECK(all.kind == ForestClass{ForestKind::augmented, 1});
  CHECK_THROWS_AS(cycle_weight(k3, 1, CellSubset{1, {0}}, integral_cycle_basis(k3, 1)),
                  std::invalid_argument);

  // The six-vertex projective plane sits inside the 2-skeleton of the 5-simplex.
  const CellComplex delta = corpus::load("delta5_2skel");
  std::ifstream in(corpus::path("rp2"));
  const auto doc = nlohmann::json::parse(in);
  std::vector<std::string> ids;
  for (const auto& cell : doc["cells"]["2"]) {
    std::string id = cell["id"];
    std::replace(id.begin(), id.end(), 'v', 'x');
    ids.push_back(id);
  }
  const CellSubset w = CellSubset::from_ids(delta, 2, ids);
  REQUIRE(w.size() == 10);
  const ForestCertificate c = cycle_weight(delta, 2, w, integral_cycle_basis(delta, 2));
  CHECK(*c.weight == 4);
  CHECK(*c.parts->torsion_ratio == 2);
  CHECK(c.kind == ForestClass{ForestKind::augmented, 0});
}

TEST_CASE("boundary weights: examples") {
  const CellComplex moore = corpus::load("moore2");
  const ForestCertificate c =
      boundary_weight(moore, 1, CellSubset::all(moore, 1), integral_boundary_basis(moore, 1));
  CHECK(*c.weight == 4);
  CHECK(*c.parts->v == 2);
  CHECK(*c.parts->u == 1);

  const CellComplex s3 = corpus::load("simplex3");
  const LatticeBasis b2 = integral_boundary_basis(s3, 2);
  for (std::size_t t = 0; t < s3.count(2); ++t)
    CHECK(*boundary_weight(s3, 2, CellSubset{2, {t}}, b2).weight == 1);

  const CellComplex k4 = corpus::load("k4");
  const ForestCertificate empty =
      boundary_weight(k4, 1, CellSubset{1, {}}, integral_boundary_basis(k4, 1));
  CHECK(*empty.weight == 1);
  CHECK_THROWS_AS(boundary_weight(k4, 1, CellSubset{1, {0}}, integral_boundary_basis(k4, 1)),
                  std::invalid_argument);
}

TEST_CASE("weights: both routes agree and match a Leibniz oracle") {
  for (const auto& name : kSmall) {
    const CellComplex x = corpus::load(name);
    for (int d = 0; d <= x.dimension(); ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const ForestParameters p = forest_parameters(x, d);
      const LatticeBasis z = integral_cycle_basis(x, d);
      const LatticeBasis b = integral_boundary_basis(x, d);
      CycleWeigher cw(x, d, z);
      BoundaryWeigher bw(x, d, b);
      for (std::size_t k = 0; k <= p.cycles; ++k) {
        enumerate_forests(x, d, ForestKind::augmented, k, [&](std::span<const std::size_t> s) {
          auto parts = cw.weigh(s);
          REQUIRE(parts);
          CHECK(parts->direct == parts->second_route);
          CHECK(*parts->torsion_ratio >= 1);
          std::vector<std::size_t> comp;
          for (std::size_t i = 0; i < p.cells; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) comp.push_back(i);
          const IntMatrix u = z.basis.select_rows(comp);
          if (u.rows() <= 7) CHECK(parts->direct == oracle::leibniz_det(u * u.transpose()));
        });
      }
      for (std::size_t k = 0; k <= p.rank_above; ++k) {
        enumerate_forests(x, d, ForestKind::reduced, k, [&](std::span<const std::size_t> s) {
          auto parts = bw.weigh(s);
          REQUIRE(parts);
          CHECK(parts->direct == parts->second_route);
          const IntMatrix r = b.basis.select_rows(s);
          if (r.rows() <= 7) CHECK(parts->direct == oracle::leibniz_det(r * r.transpose()));
        });
      }
    }
  }
}

TEST_CASE("torsion ratios are positive integers on the 5-simplex skeleton") {
  const CellComplex x = corpus::load("delta5_2skel");
  CycleWeigher cw(x, 2, integral_cycle_basis(x, 2));
  std::set<Integer> ratios;
  std::size_t seen = 0;
  enumerate_forests(x, 2, ForestKind::spanning_forest, 0, [&](std::span<const std::size_t> s) {
    if (seen++ % 97 != 0) return;
    auto parts = cw.weigh(s);
    REQUIRE(parts);
    CHECK(parts->direct == parts->second_route);
    ratios.insert(*parts->torsion_ratio);
  });
  CHECK(seen > 0);
  CHECK(*ratios.begin() >= 1);
}

TEST_CASE("cycle weights under a unimodular change of basis") {
  oracle::Random rng(17);
  for (const std::string name : {"k4", "theta", "rp2"}) {
    const CellComplex x = corpus::load(name);
    const int d = 1;
    LatticeBasis z = integral_cycle_basis(x, d);
    const CycleWeigher base(x, d, z);
    z.basis = z.basis * rng.unimodular(z.rank(), 12);
    const CycleWeigher moved(x, d, z);
    enumerate_forests(x, d, ForestKind::augmented, 0, [&](std::span<const std::size_t> s) {
      CHECK(base.weigh(s)->direct == moved.weigh(s)->direct);
    });
    // For k > 0 single weights move with the basis; the two routes must still agree.
    enumerate_forests(x, d, ForestKind::augmented, 1, [&](std::span<const std::size_t> s) {
      auto parts = moved.weigh(s);
      CHECK(parts->direct == parts->second_route);
    });
  }
}

TEST_CASE("complements of augmented forests are reduced coforests when H_d(Q) = 0") {
  std::size_t checked = 0;
  for (const auto& name : kSmall) {
    const CellComplex x = corpus::load(name);
    for (int d = 0; d <= x.dimension(); ++d) {
      const ForestParameters p = forest_parameters(x, d);
      if (p.cycles != p.rank_above) continue;
      ++checked;
      for (std::size_t k = 0; k <= p.cycles; ++k) {
        std::set<std::vector<std::size_t>> comps;
        for (const auto& s : collect(x, d, ForestKind::augmented, k))
          comps.insert(CellSubset{d, s}.complement(x).members);
        const auto reduced = collect(x, d, ForestKind::reduced, k);
        CHECK(comps == std::set<std::vector<std::size_t>>(reduced.begin(), reduced.end()));
      }
    }
  }
  CHECK(checked >= 5);
}

TEST_CASE("kirchhoff pair weights") {
  const CellComplex k3 = corpus::load("k3");
  CHECK(kirchhoff_pair_weight(k3, 1, CellSubset::from_ids(k3, 1, {"e12"}),
                              CellSubset::from_ids(k3, 0, {"v1"})) == 1);
  CHECK(kirchhoff_pair_weight(k3, 1, CellSubset::from_ids(k3, 1, {"e12"}),
                              CellSubset::from_ids(k3, 0, {"v3"})) == 0);
  CHECK_THROWS_AS(kirchhoff_pair_weight(k3, 1, CellSubset{1, {0}}, CellSubset{0, {0, 1}}),
                  std::invalid_argument);

  const CellComplex rp2 = corpus::load("rp2");
  const auto coforests = collect(rp2, 1, ForestKind::coforest);
  REQUIRE(!coforests.empty());
  const CellSubset all = CellSubset::all(rp2, 2);
  for (std::size_t i = 0; i < coforests.size(); i += 7) {
    const CellSubset w{1, coforests[i]};
    CHECK(kirchhoff_pair_weight(rp2, 2, all, w) == 4);
    const Integer order = relative_order(rp2, SubcomplexMask::full(rp2),
                                         SubcomplexMask::with_cells(rp2, w.complement(rp2)), 1);
    CHECK(order * order == 4);
  }
}
