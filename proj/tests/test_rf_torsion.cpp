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

#include "cellforest/exact_linalg.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/mesh_spectra.hpp"
#include "cellforest/rf_torsion.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace cellforest;

TEST_CASE("reduced Laplacian determinants: examples") {
  CHECK(reduced_laplacian_det(corpus::load("k3"), 0) == 9);
  CHECK(reduced_laplacian_det(corpus::load("p2"), 0) == 2);
  CHECK(reduced_laplacian_det(corpus::load("k3"), 1) == 1);
  CHECK(reduced_laplacian_det(corpus::load("k4"), 0) == 64);
  CHECK_THROWS_AS(reduced_laplacian_det(corpus::load("k3"), 2), std::out_of_range);
}

TEST_CASE("RF torsion: examples") {
  const CellComplex rp2 = corpus::load("rp2");
  CHECK(rf_combinatorial(rp2) == Rational(1, 4));
  CHECK(rf_laplacian(rp2) == Rational(1, 4));
  const TorsionReport r = torsion_report(rp2);
  REQUIRE(r.factors.size() == 3);
  CHECK(r.factors[0].laplacian_det == 7776);
  CHECK(r.factors[0].covolume_sq == Rational(1, 6));
  CHECK(r.factors[1].laplacian_det == 5184);
  CHECK(r.factors[1].torsion == 2);

  for (const std::string name : {"simplex3", "sphere2", "k4"}) {
    CHECK(rf_combinatorial(corpus::load(name)) == 1);
    CHECK(rf_laplacian(corpus::load(name)) == 1);
  }
  const CellComplex point = standard_simplex(1);
  CHECK(rf_combinatorial(point) == 1);
  CHECK(rf_laplacian(point) == 1);
  CHECK(verify_rf_identity(point).pass);
}

TEST_CASE("RF identity on every corpus complex and skeleton") {
  for (const auto& name : corpus::names()) {
    const CellComplex x = corpus::load(name);
    const RfVerification v = verify_rf_identity(x);
    CAPTURE(name);
    CHECK(v.pass);
    CHECK(v.cases.size() == static_cast<std::size_t>(x.dimension()) + 1);
    for (const auto& c : v.cases) CHECK(c.lhs > 0);
  }
}

TEST_CASE("reduced Laplacian determinant is the last nonzero sigma of the Laplacian") {
  for (const auto& name : corpus::names()) {
    const CellComplex x = corpus::load(name);
    for (int i = 0; i < x.dimension(); ++i) {
      const IntPolynomial cp = char_poly(combinatorial_laplacian(x, i + 1).matrix);
      Integer last = 1;
      for (std::size_t k = 0; k <= cp.degree(); ++k)
        if (elementary_symmetric(cp, k) != 0) last = elementary_symmetric(cp, k);
      CAPTURE(name);
      CHECK(reduced_laplacian_det(x, i) == last);
    }
  }
}

TEST_CASE("combinatorial side depends only on torsion orders") {
  for (const auto& name : corpus::names()) {
    const CellComplex x = corpus::load(name);
    Rational p = 1;
    for (int i = 0; i <= x.dimension(); ++i) {
      const HomologySummary h = homology_groups(x, i);
      Integer t = 1;
      for (const auto& f : h.invariant_factors) t *= f;
      p *= i % 2 ? Rational(1) / t : Rational(t);
    }
    CHECK(rf_combinatorial(x) == p * p);
  }
}

TEST_CASE("RF report JSON") {
  const auto j = nlohmann::json::parse(to_json(verify_rf_identity(corpus::load("rp2"))));
  CHECK(j["pass"] == true);
  CHECK(j["cases"].back()["lhs"] == "1/4");
  CHECK(j["cases"].back()["factors"][1]["torsion"] == "2");
}
