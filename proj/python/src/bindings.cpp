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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cellforest/cli.hpp"
#include "cellforest/complex.hpp"
#include "cellforest/exact_linalg.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/kalai.hpp"
#include "cellforest/mesh_spectra.hpp"
#include "cellforest/rf_torsion.hpp"

namespace py = pybind11;
using namespace cellforest;

namespace {

// Exact values cross the boundary as decimal or "p/q" strings.
std::vector<std::vector<std::string>> rows_of(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

LatticeBasis lattice(const CellComplex& x, int d, const std::string& which) {
  if (which == "cycles") return integral_cycle_basis(x, d);
  if (which == "boundaries") return integral_boundary_basis(x, d);
  throw std::invalid_argument("which must be 'cycles' or 'boundaries'");
}

VerificationReport verify(const CellComplex& x, const std::string& theorem, int d) {
  if (theorem == "trent") return verify_theorem1(x, d, integral_cycle_basis(x, d));
  if (theorem == "boundary") return verify_theorem2(x, d, integral_boundary_basis(x, d));
  if (theorem == "kirchhoff") return verify_kirchhoff_lyons(x, d);
  if (theorem == "geometric") return verify_geometric_theorems(x, d);
  if (theorem == "covolume") return verify_covolume(x);
  throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

}  // namespace

PYBIND11_MODULE(_cellforest, m) {
  m.doc() = "Exact forest, mesh and torsion computations on cell complexes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<CellComplex>(m, "Complex")
      .def_static("load", &load_complex, py::arg("path"))
      .def_static("parse", [](const std::string& text) { return parse_complex(text); },
                  py::arg("text"))
      .def_property_readonly("name", &CellComplex::name)
      .def_property_readonly("dimension", &CellComplex::dimension)
      .def("counts", &CellComplex::counts)
      .def("ids", [](const CellComplex& x, int d) {
        std::vector<std::string> ids;
        for (const Cell& c : x.cells(d)) ids.push_back(c.id);
        return ids;
      }, py::arg("d"))
      .def("to_json", [](const CellComplex& x) { return serialize(x); })
      .def("__repr__", [](const CellComplex& x) {
        std::ostringstream out;
        out << "<Complex '" << x.name() << "' dim " << x.dimension() << ">";
        return out.str();
      });

  m.def("homology", [](const CellComplex& x, int d) {
    const HomologySummary h = homology_groups(x, d);
    std::vector<std::string> factors;
    for (const auto& f : h.invariant_factors) factors.push_back(to_string(f));
    return std::make_tuple(h.betti, factors);
  }, py::arg("complex"), py::arg("d"), "(betti number, invariant factors > 1)");

  m.def("boundary_matrix", [](const CellComplex& x, int d) {
    return rows_of(to_rational(boundary_matrix(x, d)));
  }, py::arg("complex"), py::arg("d"));

  m.def("mesh_matrix", [](const CellComplex& x, int d, const std::string& which) {
    const LatticeBasis l = lattice(x, d, which);
    const MeshMatrix mm = which == "cycles" ? mesh_matrix_cycles(x, d, l)
                                            : mesh_matrix_boundaries(x, d, l);
    return rows_of(mm.matrix);
  }, py::arg("complex"), py::arg("d"), py::arg("which") = "cycles");

  m.def("laplacian_charpoly", [](const CellComplex& x, int d) {
    std::vector<std::string> out;
    for (const auto& c : char_poly_rational(combinatorial_laplacian(x, d).matrix).coefficients)
      out.push_back(to_string(c));
    return out;
  }, py::arg("complex"), py::arg("d"), "Coefficients from the constant term up.");

  m.def("count_forests", [](const CellComplex& x, int d, const std::string& kind,
                            std::size_t param) {
    return count_forests(x, d, parse_forest_kind(kind), param);
  }, py::arg("complex"), py::arg("d"), py::arg("kind") = "forest", py::arg("param") = 0);

  m.def("verify_json", [](const CellComplex& x, const std::string& theorem, int d) {
    py::gil_scoped_release release;
    return to_json(verify(x, theorem, d));
  }, py::arg("complex"), py::arg("theorem"), py::arg("d") = 0);

  m.def("rf_json", [](const CellComplex& x) { return to_json(verify_rf_identity(x)); },
        py::arg("complex"));

  m.def("kalai_json", [](std::size_t n, std::size_t k, const std::string& kind,
                         const std::optional<std::vector<std::string>>& weights) {
    std::optional<VertexWeights> a;
    if (weights) {
      a.emplace();
      for (const auto& w : *weights) a->push_back(parse_rational(w));
    }
    return to_json(verify_kalai(n, k, parse_kalai_kind(kind), a));
  }, py::arg("n"), py::arg("k"), py::arg("kind"), py::arg("weights") = std::nullopt);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv{"cellforest"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(argv, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
