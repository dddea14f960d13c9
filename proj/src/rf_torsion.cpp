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

#include "cellforest/rf_torsion.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cellforest/exact_linalg.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/report.hpp"
#include "json.hpp"

namespace cellforest {
namespace {

Rational signed_power(const Rational& base, int i) {
  if (base == 0) throw std::domain_error("zero factor in torsion product");
  return i % 2 == 0 ? base : Rational(1) / base;
}

}  // namespace

Integer reduced_laplacian_det(const CellComplex& x, int i) {
  if (i < 0 || i > x.dimension()) throw std::out_of_range("dimension out of range");
  if (i == x.dimension()) return 1;
  const IntMatrix a = boundary_matrix(x, i + 1);
  const std::size_t r = rank(a);
  if (r == 0) return 1;
  return principal_minor_sum(IntMatrix(a * a.transpose()), r);
}

Rational rf_combinatorial(const CellComplex& x) {
  Rational p = 1;
  for (int i = 0; i <= x.dimension(); ++i) p *= signed_power(Rational(torsion_order(x, i)), i);
  return p * p;
}

Rational rf_laplacian(const CellComplex& x) {
  Rational p = 1;
  for (int i = 0; i <= x.dimension(); ++i) {
    p *= signed_power(Rational(reduced_laplacian_det(x, i)) * homology_covolume_squared(x, i), i);
  }
  return p;
}

TorsionReport torsion_report(const CellComplex& x) {
  TorsionReport r;
  r.complex_name = x.name();
  r.skeleton = x.dimension();
  for (int i = 0; i <= x.dimension(); ++i) {
    r.factors.push_back({i, torsion_order(x, i), reduced_laplacian_det(x, i),
                         homology_covolume_squared(x, i)});
  }
  r.lhs = rf_combinatorial(x);
  r.rhs = rf_laplacian(x);
  r.pass = r.lhs == r.rhs && r.lhs > 0;
  return r;
}

RfVerification verify_rf_identity(const CellComplex& x) {
  Stopwatch clock;
  RfVerification v;
  for (int d = 0; d < x.dimension(); ++d) v.cases.push_back(torsion_report(skeleton(x, d)));
  v.cases.push_back(torsion_report(x));
  v.pass = true;
  for (const auto& c : v.cases) v.pass = v.pass && c.pass;
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

std::string to_json(const RfVerification& v, bool with_timing) {
  nlohmann::ordered_json j;
  j["theorem"] = "rf";
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : v.cases) {
    nlohmann::ordered_json o;
    o["complex"] = c.complex_name;
    o["skeleton"] = c.skeleton;
    o["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : c.factors) {
      o["factors"].push_back({{"i", f.dimension},
                              {"torsion", to_string(f.torsion)},
                              {"laplacian_det", to_string(f.laplacian_det)},
                              {"covolume_sq", to_string(f.covolume_sq)}});
    }
    o["lhs"] = to_string(c.lhs);
    o["rhs"] = to_string(c.rhs);
    o["pass"] = c.pass;
    j["cases"].push_back(std::move(o));
  }
  j["pass"] = v.pass;
  if (with_timing) j["elapsed_ms"] = v.elapsed_ms;
  return j.dump(2);
}

std::string to_table(const RfVerification& v, bool with_timing) {
  std::ostringstream out;
  out << "rf: " << (v.pass ? "PASS" : "FAIL");
  if (with_timing) out << " in " << std::fixed << std::setprecision(1) << v.elapsed_ms << " ms";
  out << "\n";
  for (const auto& c : v.cases) {
    out << "skeleton " << c.skeleton << ": lhs " << to_string(c.lhs) << ", rhs "
        << to_string(c.rhs) << (c.pass ? "  ok" : "  MISMATCH") << "\n";
    for (const auto& f : c.factors) {
      out << "  i=" << f.dimension << "  t=" << to_string(f.torsion)
          << "  det=" << to_string(f.laplacian_det) << "  H^2=" << to_string(f.covolume_sq)
          << "\n";
    }
  }
  return out.str();
}

}  // namespace cellforest
