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

#include "cellforest/kalai.hpp"

#include "cellforest/complex.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cellforest;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      REQUIRE(m(i, j).get_den() == 1);
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

// Kernel dimension of M - lambda I by independent elimination.
std::size_t eigenspace_dimension(const IntMatrix& m, const Integer& lambda) {
  IntMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return m.rows() - oracle::rational_rank(shifted);
}

}  // namespace

TEST_CASE("reduced incidence: shapes and the (4,1) example") {
  IntMatrix i41 = reduced_incidence(4, 1);
  CHECK(i41.rows() == 3);
  CHECK(i41.cols() == 6);
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      IntMatrix i = reduced_incidence(n, k);
      CHECK(i.rows() == choose(n - 1, k));
      CHECK(i.cols() == choose(n, k + 1));
    }
  IntMatrix g = i41 * i41.transpose();
  // (t-1)(t-4)^2 = t^3 - 9t^2 + 24t - 16
  CHECK(char_poly(g).coefficients == std::vector<Integer>{-16, 24, -9, 1});
  CHECK_THROWS_AS(reduced_incidence(4, 0), std::out_of_range);
  CHECK_THROWS_AS(reduced_incidence(4, 4), std::out_of_range);
  CHECK_THROWS_AS(reduced_incidence(1, 1), std::out_of_range);
}

TEST_CASE("phi basis: small columns and i* Phi = identity") {
  // (3,1): x2 - x1 and x3 - x1
  CHECK(phi_basis(3, 1) == IntMatrix{{-1, -1}, {1, 0}, {0, 1}});
  // (3,2): <x2,x3> - <x1,x3> + <x1,x2>, rows x1x2, x1x3, x2x3
  CHECK(phi_basis(3, 2) == IntMatrix{{1}, {-1}, {1}});

  const CellComplex s = standard_simplex(5);
  IntMatrix phi = phi_basis(5, 2);
  std::vector<std::size_t> opposite;
  for (std::size_t i = 0; i < s.count(1); ++i)
    if (s.cell(1, i).id.rfind("x1x", 0) != 0) opposite.push_back(i);
  CHECK(phi.select_rows(opposite) == IntMatrix::identity(opposite.size()));
  CHECK((boundary_matrix(s, 1) * phi).is_zero());
}

TEST_CASE("predicted tables") {
  auto table = [](std::size_t n, std::size_t k, KalaiKind kind) {
    return to_string(predicted_spectrum(n, k, kind));
  };
  CHECK(table(4, 1, KalaiKind::incidence) == "{1:1, 4:2}");
  CHECK(table(4, 1, KalaiKind::laplacian) == "{0:1, 3:2}");
  CHECK(table(6, 3, KalaiKind::mesh) == "{6:6, 1:4}");
  // k = n-1 has no second block.
  CHECK(table(4, 3, KalaiKind::incidence) == "{1:1}");
  CHECK(parse_kalai_kind("mesh") == KalaiKind::mesh);
  CHECK_THROWS_AS(parse_kalai_kind("other"), std::invalid_argument);
}

TEST_CASE("worked verifications") {
  VerificationReport r = verify_kalai(4, 1, KalaiKind::incidence);
  CHECK(r.pass);
  CHECK(r.rows[1].lhs == "9");
  CHECK(r.rows[2].lhs == "16");
  RatMatrix m = kalai_matrix(4, 1, KalaiKind::incidence);
  RatMatrix a = m - RatMatrix::identity(3);
  RatMatrix b = m - Rational(4) * RatMatrix::identity(3);
  CHECK((a * b).is_zero());

  VerificationReport mesh = verify_kalai(6, 3, KalaiKind::mesh);
  CHECK(mesh.pass);
  CHECK(mesh.rows[2].lhs == "46656");
  CHECK(oracle::leibniz_det(to_integer(kalai_matrix(4, 2, KalaiKind::mesh))) == 16);
  CHECK_THROWS_AS(verify_kalai(10, 2, KalaiKind::mesh), std::out_of_range);
}

TEST_CASE("unweighted spectra for n up to 8, checked by eigenspace dimensions") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (KalaiKind kind : {KalaiKind::incidence, KalaiKind::laplacian, KalaiKind::mesh}) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        CHECK(verify_kalai(n, k, kind).pass);
        const IntMatrix m = to_integer(kalai_matrix(n, k, kind));
        CHECK(m == m.transpose());
        // Values written out independently of predicted_spectrum.
        const Integer low = kind == KalaiKind::incidence ? 1 : kind == KalaiKind::laplacian ? 0 : Integer(n);
        const Integer high = kind == KalaiKind::incidence ? Integer(n)
                             : kind == KalaiKind::laplacian ? Integer(n - 1)
                                                            : 1;
        if (n <= 7) {
          CHECK(eigenspace_dimension(m, low) == choose(n - 2, k - 1));
          CHECK(eigenspace_dimension(m, high) == choose(n - 2, k));
        }
      }
}

TEST_CASE("vertex weights") {
  const VertexWeights a{1, 2, 3, 4};
  for (std::size_t k = 1; k <= 3; ++k)
    for (KalaiKind kind : {KalaiKind::incidence, KalaiKind::laplacian, KalaiKind::mesh}) {
      CAPTURE(k);
      CAPTURE(to_string(kind));
      CHECK(verify_kalai(4, k, kind, a).pass);
    }
  CHECK(to_string(predicted_spectrum(4, 1, KalaiKind::incidence, a)) == "{1:1, 10:2}");
  CHECK(to_string(predicted_spectrum(4, 1, KalaiKind::laplacian, a)) == "{0:1, 9:2}");
  CHECK(to_string(predicted_spectrum(4, 1, KalaiKind::mesh, a)) == "{10:1, 1:2}");

  // Trace oracle for the weighted incidence matrix at (4,1): rows x2, x3, x4;
  // row xj collects a_j a_i / a_j over edges at xj, i.e. S - a_j.
  RatMatrix m = kalai_matrix(4, 1, KalaiKind::incidence, a);
  CHECK(m(0, 0) == 8);
  CHECK(m(1, 1) == 7);
  CHECK(m(2, 2) == 6);

  // Random positive weights.
  oracle::Random rng(41);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 6));
    VertexWeights w(n);
    for (auto& x : w) x = Rational(rng.uniform(1, 9), rng.uniform(1, 5));
    for (auto& x : w) x.canonicalize();
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
    for (KalaiKind kind : {KalaiKind::incidence, KalaiKind::laplacian, KalaiKind::mesh})
      CHECK(verify_kalai(n, k, kind, w).pass);
  }

  CHECK_THROWS_AS(verify_kalai(4, 1, KalaiKind::mesh, VertexWeights{1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_kalai(4, 1, KalaiKind::mesh, VertexWeights{1, 2, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("unit weights reproduce the unweighted tables") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (KalaiKind kind : {KalaiKind::incidence, KalaiKind::laplacian, KalaiKind::mesh}) {
        const VertexWeights ones(n, Rational(1));
        CHECK(kalai_matrix(n, k, kind, ones) == kalai_matrix(n, k, kind));
        CHECK(to_string(predicted_spectrum(n, k, kind, ones)) ==
              to_string(predicted_spectrum(n, k, kind)));
      }
}

TEST_CASE("printed weighted tables are reported in the notes") {
  VerificationReport r = verify_kalai(4, 1, KalaiKind::laplacian, VertexWeights{1, 2, 3, 4});
  REQUIRE(r.notes.size() == 2);
  CHECK(r.notes[1] == "printed weighted table {0:1, 6:2} does not match");
  // Symmetric weights in a_1 and a_n make the printed Laplacian table agree.
  VerificationReport s = verify_kalai(4, 1, KalaiKind::laplacian, VertexWeights{2, 1, 1, 2});
  CHECK(s.notes[1] == "printed weighted table {0:1, 4:2} matches");
}

TEST_CASE("mesh determinant equals the forest sum") {
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    VerificationReport r = kalai_forest_check(n, k);
    CHECK(r.pass);
    // n^{C(n-2,k-1)}
    Integer expected = 1;
    for (std::size_t i = 0; i < choose(n - 2, k - 1); ++i) expected *= static_cast<long>(n);
    CHECK(r.rows[0].lhs == to_string(expected));
  }
  CHECK_THROWS_AS(kalai_forest_check(7, 3), std::out_of_range);
  CHECK_THROWS_AS(kalai_forest_check(4, 1), std::out_of_range);
}
