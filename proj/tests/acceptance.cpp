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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "cellforest/complex.hpp"
#include "cellforest/exact_linalg.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/kalai.hpp"
#include "cellforest/mesh_spectra.hpp"
#include "cellforest/report.hpp"
#include "cellforest/rf_torsion.hpp"
#include "corpus.hpp"
#include "json.hpp"
#include "lemma_suite.hpp"
#include "oracles.hpp"

using namespace cellforest;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const VerificationRow* row_k(const VerificationReport& r, std::size_t k) {
  for (const auto& row : r.rows)
    if (row.k == k) return &row;
  return nullptr;
}

// Acyclic edge sets by union-find, without the library's linear algebra.
std::size_t count_spanning_trees(const CellComplex& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const Cell& e : g.cells(1)) {
    edges.emplace_back(g.find(e.boundary[0].first)->index, g.find(e.boundary[1].first)->index);
  }
  const std::size_t n = g.count(0);
  std::size_t trees = 0;
  for (const auto& s : oracle::subsets(edges.size(), n - 1)) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = root(parent[v]);
    };
    bool acyclic = true;
    for (std::size_t i : s) {
      const std::size_t a = root(edges[i].first), b = root(edges[i].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    trees += acyclic;
  }
  return trees;
}

Outcome trent_graph() {
  const CellComplex k4 = corpus::load("k4");
  const VerificationReport r = verify_theorem1(k4, 1, integral_cycle_basis(k4, 1));
  const std::size_t trees = count_spanning_trees(k4);
  const auto* row = row_k(r, 0);
  const bool ok = r.pass && row && row->lhs == "16" && row->rhs == "16" && trees == 16;
  return {ok, "det " + (row ? row->lhs : "?") + ", brute-force spanning trees " +
                  std::to_string(trees) + " of C(6,3) = 20 edge sets"};
}

Outcome kirchhoff_graph() {
  const CellComplex k4 = corpus::load("k4");
  const VerificationReport r = verify_kirchhoff_lyons(k4, 1);
  const auto* row = row_k(r, 3);
  const Integer sigma = elementary_symmetric(char_poly(boundary_matrix(k4, 1) * boundary_matrix(k4, 1).transpose()), 3);
  const bool ok = r.pass && row && row->lhs == "64" && row->rhs == "64" && sigma == 64 &&
                  sigma == 4 * 16;
  return {ok, "pair sum " + (row ? row->rhs : "?") + ", char poly sigma_3 " + to_string(sigma)};
}

Outcome sphere() {
  const CellComplex s = corpus::load("sphere2");
  const LatticeBasis z = integral_cycle_basis(s, 2);
  const Rational det = determinant(mesh_matrix_cycles(s, 2, z).matrix);
  std::size_t forests = 0;
  bool unit = true;
  enumerate_forests(s, 2, ForestKind::spanning_forest, 0, [&](std::span<const std::size_t> w) {
    ++forests;
    CellSubset sub{2, {w.begin(), w.end()}};
    unit = unit && *cycle_weight(s, 2, sub, z).weight == 1;
  });
  return {det == 4 && forests == 4 && unit,
          "mesh det " + to_string(det) + ", " + std::to_string(forests) +
              " spanning forests of weight 1"};
}

Outcome torsion_forest_sum() {
  const CellComplex delta = corpus::load("delta5_2skel");
  const LatticeBasis z = integral_cycle_basis(delta, 2);
  const VerificationReport r = verify_theorem1(delta, 2, z);
  const auto* row = row_k(r, 0);

  // One projective plane among the forests.
  std::ifstream in(corpus::path("rp2"));
  const auto doc = nlohmann::json::parse(in);
  std::vector<std::string> ids;
  for (const auto& cell : doc["cells"]["2"]) {
    std::string id = cell["id"];
    std::replace(id.begin(), id.end(), 'v', 'x');
    ids.push_back(id);
  }
  const ForestCertificate c = cycle_weight(delta, 2, CellSubset::from_ids(delta, 2, ids), z);

  const bool ok = row && row->lhs == "46656" && row->rhs == "46656" && r.pass &&
                  binomial(20, 10) == 184756 && *c.weight == 4;
  return {ok, "sigma row " + (row ? row->lhs : "?") + " = forest sum " + (row ? row->rhs : "?") +
                  " over " + (row ? std::to_string(row->certificates) : "?") +
                  " forests from C(20,10) candidates; an RP2 forest weighs " +
                  to_string(*c.weight)};
}

Outcome moore() {
  const CellComplex m = corpus::load("moore2");
  const LatticeBasis b = integral_boundary_basis(m, 1);
  const VerificationReport r = verify_theorem2(m, 1, b);
  const auto* row = row_k(r, 0);
  const Integer gram = gram_det(b.basis);
  const ForestCertificate c = boundary_weight(m, 1, CellSubset::all(m, 1), b);
  const bool ok = r.pass && row && row->lhs == "4" && gram == 4 && *c.parts->v == 2 &&
                  *c.parts->v * *c.parts->v == 4;
  return {ok, "det row " + (row ? row->lhs : "?") + ", Gram " + to_string(gram) + ", v = " +
                  to_string(*c.parts->v)};
}

Outcome property_suite() {
  std::size_t reports = 0, rows = 0;
  std::string failed;
  for (const auto& name : corpus::names()) {
    const CellComplex x = corpus::load(name);
    for (int d = 0; d <= x.dimension(); ++d) {
      std::vector<VerificationReport> rs;
      rs.push_back(verify_theorem1(x, d, integral_cycle_basis(x, d)));
      rs.push_back(verify_theorem2(x, d, integral_boundary_basis(x, d)));
      if (d >= 1) rs.push_back(verify_kirchhoff_lyons(x, d));
      rs.push_back(verify_geometric_theorems(x, d));
      for (const auto& r : rs) {
        ++reports;
        rows += r.rows.size();
        if (!r.pass && failed.empty()) failed = r.theorem + " on " + name + " dim " + std::to_string(d);
      }
    }
  }
  return {failed.empty(), std::to_string(reports) + " reports, " + std::to_string(rows) +
                              " coefficient rows" + (failed.empty() ? "" : ", first failure " + failed)};
}

Outcome rf() {
  std::string failed;
  Rational lhs, rhs;
  for (const auto& name : corpus::names()) {
    const CellComplex x = corpus::load(name);
    const RfVerification v = verify_rf_identity(x);
    if (!v.pass && failed.empty()) failed = name;
    if (name == "rp2") {
      lhs = v.cases.back().lhs;
      rhs = v.cases.back().rhs;
    }
  }
  const bool ok = failed.empty() && lhs == Rational(1, 4) && rhs == Rational(1, 4);
  return {ok, "all " + std::to_string(corpus::names().size()) + " complexes; RP2 " +
                  to_string(lhs) + " = " + to_string(rhs) +
                  (failed.empty() ? "" : ", failed on " + failed)};
}

Outcome kalai_tables() {
  std::size_t runs = 0;
  std::string failed;
  const KalaiKind kinds[] = {KalaiKind::incidence, KalaiKind::laplacian, KalaiKind::mesh};
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (KalaiKind kind : kinds) {
        ++runs;
        if (!verify_kalai(n, k, kind).pass && failed.empty())
          failed = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + to_string(kind);
      }
  const VertexWeights a{1, 2, 3, 4};
  for (std::size_t k = 1; k < 4; ++k)
    for (KalaiKind kind : kinds) {
      ++runs;
      if (!verify_kalai(4, k, kind, a).pass && failed.empty())
        failed = "weighted k=" + std::to_string(k) + " " + to_string(kind);
    }
  const bool incidence_a1 =
      to_string(predicted_spectrum(4, 1, KalaiKind::incidence, a)) == "{1:1, 10:2}";
  return {failed.empty() && incidence_a1,
          std::to_string(runs) + " tables" + (failed.empty() ? "" : ", failed " + failed)};
}

Outcome lemmas() {
  oracle::Random rng(2026);
  const lemma_suite::Tally tallies[] = {
      lemma_suite::cauchy_binet(rng, 200), lemma_suite::principal_minors(rng, 200),
      lemma_suite::complementary_minors(rng, 200), lemma_suite::schur_complement(rng, 200)};
  int trials = 0, failures = 0;
  std::string first;
  for (const auto& t : tallies) {
    trials += t.trials;
    failures += t.failures;
    if (first.empty()) first = t.first_failure;
  }
  return {failures == 0 && trials == 800,
          std::to_string(trials) + " trials, " + std::to_string(failures) + " failures" +
              (first.empty() ? "" : " (" + first + ")")};
}

Outcome covariance() {
  oracle::Random rng(10);
  int changes = 0;
  bool ok = true;
  for (const auto& [name, d] : std::vector<std::pair<std::string, int>>{{"k4", 1}, {"sphere2", 2}}) {
    const CellComplex x = corpus::load(name);
    const LatticeBasis z = integral_cycle_basis(x, d);
    const RatMatrix m = mesh_matrix_cycles(x, d, z).matrix;
    for (int t = 0; t < 20; ++t) {
      const IntMatrix u = rng.unimodular(z.rank(), 10);
      LatticeBasis moved = z;
      moved.basis = z.basis * u;
      const RatMatrix mu = mesh_matrix_cycles(x, d, moved).matrix;
      ok = ok && mu == to_rational(u.transpose()) * m * to_rational(u);
      ok = ok && determinant(mu) == determinant(m);
      ok = ok && verify_theorem1(x, d, moved).pass;
      ++changes;
    }
  }
  return {ok, std::to_string(changes) + " changes of basis on K4 and the tetrahedron boundary"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "spanning trees of K4", 1000, trent_graph},
      {2, "Kirchhoff sigma_3 of K4", 1000, kirchhoff_graph},
      {3, "tetrahedron boundary mesh", 1000, sphere},
      {4, "torsion-weighted forests of the 5-simplex 2-skeleton", 120000, torsion_forest_sum},
      {5, "Moore space boundary mesh", 1000, moore},
      {6, "full polynomial suite on the corpus", 300000, property_suite},
      {7, "torsion identity on the corpus", 5000, rf},
      {8, "simplex spectra", 30000, kalai_tables},
      {9, "determinant lemmas", 30000, lemmas},
      {10, "basis covariance", 30000, covariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Stopwatch clock;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = clock.elapsed_ms();
    const bool in_time = ms <= c.budget_ms;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << ": " << o.detail
              << " [" << static_cast<long>(ms) << " ms, budget "
              << static_cast<long>(c.budget_ms) << " ms" << (in_time ? "" : ", over budget")
              << "]" << std::endl;
  }
  return failures;
}
