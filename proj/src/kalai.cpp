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

#include <stdexcept>

#include "cellforest/complex.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/homology.hpp"

namespace cellforest {
namespace {

constexpr std::size_t kMaxN = 9;

void check_range(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::out_of_range("need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
  }
}

// Vertex numbers (1-based) of a standard simplex cell id such as "x1x3x4".
std::vector<std::size_t> vertices_of(const std::string& id) {
  std::vector<std::size_t> v;
  std::size_t pos = 0;
  while (pos < id.size()) {
    const std::size_t next = id.find('x', pos + 1);
    v.push_back(std::stoul(id.substr(pos + 1, next - pos - 1)));
    pos = next == std::string::npos ? id.size() : next;
  }
  return v;
}

struct Cells {
  std::vector<std::size_t> with_x1, without_x1;
  std::vector<std::vector<std::size_t>> vertices;
};

Cells split(const CellComplex& s, int dim) {
  Cells c;
  for (std::size_t i = 0; i < s.count(dim); ++i) {
    c.vertices.push_back(vertices_of(s.cell(dim, i).id));
    (c.vertices.back().front() == 1 ? c.with_x1 : c.without_x1).push_back(i);
  }
  return c;
}

VertexWeights resolve(std::size_t n, const std::optional<VertexWeights>& weights) {
  if (!weights) return VertexWeights(n, Rational(1));
  if (weights->size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " vertex weights, got " +
                                std::to_string(weights->size()));
  }
  for (const auto& a : *weights)
    if (a <= 0) throw std::invalid_argument("vertex weights must be positive");
  return *weights;
}

Rational face_weight(const std::vector<std::size_t>& verts, const VertexWeights& a) {
  Rational w = 1;
  for (std::size_t v : verts) w *= a[v - 1];
  return w;
}

// m * diag(w(f)) over the listed columns.
RatMatrix scale_cols(RatMatrix m, const Cells& c, const std::vector<std::size_t>& cols,
                     const VertexWeights& a, bool inverse) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Rational w = face_weight(c.vertices[cols[j]], a);
    if (inverse) w = 1 / w;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) *= w;
  }
  return m;
}

RatMatrix scale_rows(RatMatrix m, const Cells& c, const std::vector<std::size_t>& rows,
                     const VertexWeights& a, bool inverse) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational w = face_weight(c.vertices[rows[i]], a);
    if (inverse) w = 1 / w;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= w;
  }
  return m;
}

std::vector<std::size_t> all_of(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

RatPolynomial multiply(const RatPolynomial& p, const RatPolynomial& q) {
  RatPolynomial r;
  r.coefficients.assign(p.coefficients.size() + q.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    for (std::size_t j = 0; j < q.coefficients.size(); ++j)
      r.coefficients[i + j] += p.coefficients[i] * q.coefficients[j];
  return r;
}

SpectrumSummary make_spectrum(std::vector<std::pair<Rational, std::size_t>> entries) {
  SpectrumSummary s;
  for (auto& [value, mult] : entries) {
    if (mult == 0) continue;
    bool merged = false;
    for (auto& e : s.eigenvalues)
      if (e.first == value) {
        e.second += mult;
        merged = true;
      }
    if (!merged) s.eigenvalues.emplace_back(value, mult);
  }
  return s;
}

}  // namespace

KalaiKind parse_kalai_kind(const std::string& name) {
  if (name == "incidence") return KalaiKind::incidence;
  if (name == "laplacian") return KalaiKind::laplacian;
  if (name == "mesh") return KalaiKind::mesh;
  throw std::invalid_argument("unknown kind '" + name + "'");
}

std::string to_string(KalaiKind kind) {
  switch (kind) {
    case KalaiKind::incidence:
      return "incidence";
    case KalaiKind::laplacian:
      return "laplacian";
    case KalaiKind::mesh:
      return "mesh";
  }
  return "unknown";
}

std::size_t SpectrumSummary::dimension() const {
  std::size_t n = 0;
  for (const auto& e : eigenvalues) n += e.second;
  return n;
}

RatPolynomial SpectrumSummary::characteristic_polynomial() const {
  RatPolynomial p{{1}};
  for (const auto& [value, mult] : eigenvalues)
    for (std::size_t i = 0; i < mult; ++i) p = multiply(p, RatPolynomial{{-value, 1}});
  return p;
}

std::string to_string(const SpectrumSummary& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.eigenvalues[i].first) + ":" + std::to_string(s.eigenvalues[i].second);
  }
  return out + "}";
}

IntMatrix reduced_incidence(std::size_t n, std::size_t k) {
  check_range(n, k);
  const CellComplex s = standard_simplex(n);
  const Cells faces = split(s, static_cast<int>(k) - 1);
  return boundary_matrix(s, static_cast<int>(k))
      .select(faces.without_x1, all_of(s.count(static_cast<int>(k))));
}

IntMatrix phi_basis(std::size_t n, std::size_t k) {
  check_range(n, k);
  const CellComplex s = standard_simplex(n);
  const Cells top = split(s, static_cast<int>(k));
  // x1 * s for s in lexicographic order is again lexicographic.
  return boundary_matrix(s, static_cast<int>(k)).select_cols(top.with_x1);
}

RatMatrix kalai_matrix(std::size_t n, std::size_t k, KalaiKind kind,
                       const std::optional<VertexWeights>& weights) {
  check_range(n, k);
  const VertexWeights a = resolve(n, weights);
  const CellComplex s = standard_simplex(n);
  const int kk = static_cast<int>(k);
  const Cells top = split(s, kk);
  const Cells faces = split(s, kk - 1);
  const RatMatrix boundary = to_rational(boundary_matrix(s, kk));
  switch (kind) {
    case KalaiKind::incidence: {
      // I D(k, n-1) I^t D(k-1, n-2)^{-1}
      const std::vector<std::size_t> cols = all_of(s.count(kk));
      const RatMatrix i = boundary.select(faces.without_x1, cols);
      const RatMatrix m = scale_cols(i, top, cols, a, false) * i.transpose();
      return scale_cols(m, faces, faces.without_x1, a, true);
    }
    case KalaiKind::laplacian: {
      // Bd D(k, n-2) Bd^t D(k-1, n-2)^{-1} on the face opposite x1.
      const RatMatrix bd = boundary.select(faces.without_x1, top.without_x1);
      const RatMatrix m = scale_cols(bd, top, top.without_x1, a, false) * bd.transpose();
      return scale_cols(m, faces, faces.without_x1, a, true);
    }
    case KalaiKind::mesh: {
      // Phi^t D(k-1, n-1)^{-1} Phi D(k-1, n-2)
      const RatMatrix phi = boundary.select_cols(top.with_x1);
      const RatMatrix weighted =
          scale_rows(phi, faces, all_of(s.count(kk - 1)), a, true);
      const RatMatrix m = phi.transpose() * weighted;
      return scale_cols(m, faces, faces.without_x1, a, false);
    }
  }
  throw std::logic_error("unreachable");
}

SpectrumSummary predicted_spectrum(std::size_t n, std::size_t k, KalaiKind kind,
                                   const std::optional<VertexWeights>& weights) {
  check_range(n, k);
  const VertexWeights a = resolve(n, weights);
  Rational total = 0;
  for (const auto& x : a) total += x;
  const Rational a1 = a[0];
  const std::size_t low = binomial(n - 2, k - 1).get_ui();
  const std::size_t high = k <= n - 2 ? binomial(n - 2, k).get_ui() : 0;
  switch (kind) {
    case KalaiKind::incidence:
      return make_spectrum({{a1, low}, {total, high}});
    case KalaiKind::laplacian:
      return make_spectrum({{0, low}, {total - a1, high}});
    case KalaiKind::mesh: {
      Rational ratio = total / a1;
      ratio.canonicalize();
      return make_spectrum({{ratio, low}, {1, high}});
    }
  }
  throw std::logic_error("unreachable");
}

VerificationReport verify_kalai(std::size_t n, std::size_t k, KalaiKind kind,
                                const std::optional<VertexWeights>& weights) {
  Stopwatch clock;
  check_range(n, k);
  if (n > kMaxN) throw std::out_of_range("n above the supported size of " + std::to_string(kMaxN));
  VerificationReport report;
  report.theorem = "kalai-" + to_string(kind);
  report.dimension = static_cast<int>(k);

  const RatMatrix m = kalai_matrix(n, k, kind, weights);
  const SpectrumSummary predicted = predicted_spectrum(n, k, kind, weights);
  const std::size_t size = m.rows();

  // prod (M - lambda I) over distinct predicted values.
  RatMatrix annihilator = RatMatrix::identity(size);
  for (const auto& [value, mult] : predicted.eigenvalues) {
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < size; ++i) shifted(i, i) -= value;
    annihilator = annihilator * shifted;
  }
  std::size_t nonzero = 0;
  for (const auto& x : annihilator.data()) nonzero += x != 0;
  report.add_row(0, "annihilating polynomial: nonzero entries", Rational(nonzero), Rational(0),
                 predicted.eigenvalues.size());

  Rational trace = 0, trace_predicted = 0, det_predicted = 1;
  for (std::size_t i = 0; i < size; ++i) trace += m(i, i);
  for (const auto& [value, mult] : predicted.eigenvalues) {
    trace_predicted += value * mult;
    for (std::size_t i = 0; i < mult; ++i) det_predicted *= value;
  }
  report.add_row(1, "trace", trace, trace_predicted, 0);
  report.add_row(2, "det", determinant(m), det_predicted, 0);

  const RatPolynomial actual = char_poly_rational(m);
  const RatPolynomial expected = predicted.characteristic_polynomial();
  report.add_text_row(3, "characteristic polynomial", to_string(actual), to_string(expected),
                      actual == expected);
  report.add_row(4, "multiplicities sum to the size", Rational(predicted.dimension()),
                 Rational(size), 0);
  report.add_row(5, "C(n-2,k-1) + C(n-2,k) = C(n-1,k)",
                 Rational(binomial(n - 2, k - 1) + (k <= n - 2 ? binomial(n - 2, k) : Integer(0))),
                 Rational(binomial(n - 1, k)), 0);
  report.notes.push_back("predicted spectrum " + to_string(predicted));

  if (weights && kind != KalaiKind::incidence) {
    // The weighted tables as printed: a_1 (or 0) and the sum of a_1..a_{n-1}.
    Rational printed_sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) printed_sum += (*weights)[j];
    const std::size_t low = binomial(n - 2, k - 1).get_ui();
    const std::size_t high = k <= n - 2 ? binomial(n - 2, k).get_ui() : 0;
    const SpectrumSummary printed =
        kind == KalaiKind::laplacian ? make_spectrum({{0, low}, {printed_sum, high}})
                                     : make_spectrum({{(*weights)[0], low}, {printed_sum, high}});
    report.notes.push_back("printed weighted table " + to_string(printed) +
                           (printed.characteristic_polynomial() == actual ? " matches"
                                                                           : " does not match"));
  }
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport kalai_forest_check(std::size_t n, std::size_t k, std::size_t max_subsets) {
  Stopwatch clock;
  check_range(n, k);
  if (k < 2) throw std::out_of_range("k >= 2 needed for a nonempty boundary map");
  const Integer candidates = binomial(binomial(n, k).get_ui(), binomial(n - 1, k - 1).get_ui());
  if (candidates > max_subsets) {
    throw std::out_of_range("forest enumeration would visit " + to_string(candidates) +
                            " candidate subsets");
  }
  VerificationReport report;
  report.theorem = "kalai-forests";
  report.dimension = static_cast<int>(k) - 1;
  const int d = static_cast<int>(k) - 1;
  const CellComplex x = skeleton(standard_simplex(n), d);
  LatticeBasis phi{LatticeKind::cycles, d, phi_basis(n, k)};
  const CycleWeigher weigher(x, d, phi);
  Integer sum = 0;
  std::size_t count = 0;
  enumerate_forests(x, d, ForestKind::spanning_forest, 0, [&](std::span<const std::size_t> w) {
    sum += weigher.weigh(w)->direct;
    ++count;
  });
  const IntMatrix p = phi.basis;
  report.add_row(0, "det of the Phi mesh matrix", Rational(determinant(p.transpose() * p)),
                 Rational(sum), count);
  report.finish();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cellforest
