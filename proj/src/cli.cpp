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

#include "cellforest/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cellforest/complex.hpp"
#include "cellforest/exact_linalg.hpp"
#include "cellforest/forests.hpp"
#include "cellforest/homology.hpp"
#include "cellforest/kalai.hpp"
#include "cellforest/mesh_spectra.hpp"
#include "cellforest/rf_torsion.hpp"
#include "json.hpp"

namespace cellforest::cli {
namespace {

using Json = nlohmann::ordered_json;

// Thrown for inputs that pass the parser but make no sense together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  bool timing = false;
  std::string file;
  std::string dim;
  std::string which;
  bool charpoly = false;
  std::string basis = "canonical";
  bool use_weights = false;
  std::string kind;
  std::size_t k = 0;
  std::size_t m = 0;
  bool with_weights = false;
  bool count_only = false;
  std::string theorem;
  std::string forest;
  std::string coforest;
  std::size_t n = 0;
  std::string weights;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_dim(const std::string& text) {
  try {
    std::size_t used = 0;
    const int d = std::stoi(text, &used);
    if (used == text.size()) return d;
  } catch (const std::exception&) {
  }
  throw UsageError("--dim expects an integer, got '" + text + "'");
}

int require_dim(const Options& o, const CellComplex& x, int low = 0) {
  if (o.dim.empty()) throw UsageError("--dim is required");
  const int d = parse_dim(o.dim);
  if (d < low || d > x.dimension()) {
    throw UsageError("--dim " + std::to_string(d) + " outside " + std::to_string(low) + ".." +
                     std::to_string(x.dimension()));
  }
  return d;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ids_json(const CellComplex& x, int d, std::span<const std::size_t> cells) {
  Json ids = Json::array();
  for (std::size_t i : cells) ids.push_back(x.cell(d, i).id);
  return ids;
}

Json charpoly_json(const RatPolynomial& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients) coefficients.push_back(to_string(c));
  return Json{{"text", to_string(p)}, {"coefficients", coefficients}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int validate() {
    const CellComplex x = load_complex(o_.file);
    const auto counts = x.counts();
    if (table()) {
      out_ << x.name() << ": valid, dimension " << x.dimension() << ", cells";
      for (auto c : counts) out_ << " " << c;
      out_ << "\n";
    } else {
      emit(Json{{"name", x.name()}, {"valid", true}, {"dimension", x.dimension()},
                {"cell_counts", counts}});
    }
    return kExitOk;
  }

  int homology() {
    const CellComplex x = load_complex(o_.file);
    int lo = 0, hi = x.dimension();
    if (!o_.dim.empty() && o_.dim != "all") lo = hi = require_dim(o_, x);
    Json groups = Json::array();
    for (int d = lo; d <= hi; ++d) {
      const HomologySummary h = homology_groups(x, d);
      std::vector<std::string> factors;
      for (const auto& f : h.invariant_factors) factors.push_back(to_string(f));
      if (table()) {
        std::vector<std::string> parts;
        if (h.betti) parts.push_back(h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti));
        for (const auto& f : factors) parts.push_back("Z/" + f);
        out_ << "H_" << d << " = " << (parts.empty() ? "0" : join(parts, " + ")) << "\n";
      }
      groups.push_back(Json{{"dimension", d},
                            {"betti", h.betti},
                            {"invariant_factors", factors},
                            {"torsion_order", to_string(h.torsion_order)}});
    }
    if (!table()) emit(Json{{"name", x.name()}, {"homology", groups}});
    return kExitOk;
  }

  int basis() {
    const CellComplex x = load_complex(o_.file);
    const int d = require_dim(o_, x);
    const LatticeBasis l = lattice(x, d);
    const RatMatrix m = to_rational(l.basis);
    if (table()) {
      out_ << o_.which << " basis, dim " << d << ", rank " << l.rank() << "\n" << to_string(m);
    } else {
      std::vector<std::size_t> all(x.count(d));
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      emit(Json{{"which", o_.which},
                {"dimension", d},
                {"rank", l.rank()},
                {"covolume_squared", to_string(covolume_squared(l))},
                {"rows", ids_json(x, d, all)},
                {"basis", matrix_json(m)}});
    }
    return kExitOk;
  }

  int mesh() {
    const CellComplex x = load_complex(o_.file);
    const int d = require_dim(o_, x);
    MeshMatrix mesh;
    if (o_.basis == "canonical") {
      const LatticeBasis l = lattice(x, d);
      mesh = l.kind == LatticeKind::cycles ? mesh_matrix_cycles(x, d, l)
                                           : mesh_matrix_boundaries(x, d, l);
    } else if (o_.basis.rfind("geometric", 0) == 0) {
      mesh = geometric_mesh(x, d);
    } else {
      throw UsageError("--basis expects canonical or geometric:<cells>");
    }
    return emit_matrix(mesh);
  }

  int laplacian() {
    const CellComplex x = load_complex(o_.file);
    const int d = require_dim(o_, x, 1);
    return emit_matrix(o_.use_weights ? weighted_laplacian(x, d, x.weights())
                                      : combinatorial_laplacian(x, d));
  }

  int forests() {
    const CellComplex x = load_complex(o_.file);
    const int d = require_dim(o_, x);
    const ForestKind kind = parse_forest_kind(o_.kind);
    const std::size_t param = kind == ForestKind::size ? o_.m : o_.k;
    const bool cycle_side = kind == ForestKind::spanning_forest || kind == ForestKind::augmented;
    if (o_.with_weights && kind == ForestKind::size) {
      throw UsageError("--with-weights applies to forest, augmented, coforest and reduced");
    }
    const ForestClass label{kind, param};
    if (o_.count_only) {
      const std::size_t count = count_forests(x, d, kind, param);
      if (table()) {
        out_ << label.label() << " at dim " << d << ": " << count << "\n";
      } else {
        emit(Json{{"kind", label.label()}, {"dimension", d}, {"count", count}});
      }
      return kExitOk;
    }
    std::optional<CycleWeigher> cycles;
    std::optional<BoundaryWeigher> boundaries;
    if (o_.with_weights) {
      if (cycle_side) {
        cycles.emplace(x, d, integral_cycle_basis(x, d));
      } else {
        boundaries.emplace(x, d, integral_boundary_basis(x, d));
      }
    }
    Json list = Json::array();
    std::size_t count = 0;
    Integer total = 0;
    enumerate_forests(x, d, kind, param, [&](std::span<const std::size_t> w) {
      ++count;
      Json entry{{"cells", ids_json(x, d, w)}};
      std::optional<WeightParts> parts;
      if (cycles) parts = cycles->weigh(w);
      if (boundaries) parts = boundaries->weigh(w);
      if (o_.with_weights) {
        if (!parts) throw std::logic_error("enumerated subset rejected by the weigher");
        total += parts->direct;
        entry["weight"] = to_string(parts->direct);
      }
      if (table()) {
        std::vector<std::string> ids = entry["cells"].get<std::vector<std::string>>();
        out_ << "{" << join(ids, ",") << "}";
        if (parts) out_ << "  weight " << to_string(parts->direct);
        out_ << "\n";
      } else {
        list.push_back(std::move(entry));
      }
    });
    if (table()) {
      out_ << count << " " << label.label() << (o_.with_weights ? ", weight sum " + to_string(total) : "")
           << "\n";
    } else {
      Json j{{"kind", label.label()}, {"dimension", d}, {"count", count}};
      if (o_.with_weights) j["weight_sum"] = to_string(total);
      j["forests"] = std::move(list);
      emit(j);
    }
    return kExitOk;
  }

  int verify() {
    const CellComplex x = load_complex(o_.file);
    if (o_.theorem == "rf") {
      const RfVerification v = verify_rf_identity(x);
      out_ << (table() ? to_table(v, o_.timing) : to_json(v, o_.timing) + "\n");
      return v.pass ? kExitOk : kExitMismatch;
    }
    if (o_.theorem == "covolume") return emit_report(verify_covolume(x));
    const int d = require_dim(o_, x, o_.theorem == "kirchhoff" ? 1 : 0);
    if (o_.theorem == "trent") return emit_report(verify_theorem1(x, d, integral_cycle_basis(x, d)));
    if (o_.theorem == "boundary") {
      return emit_report(verify_theorem2(x, d, integral_boundary_basis(x, d)));
    }
    if (o_.theorem == "kirchhoff") return emit_report(verify_kirchhoff_lyons(x, d));
    if (o_.theorem == "geometric") {
      std::optional<CellSubset> v0, v1;
      if (!o_.forest.empty()) v0 = CellSubset::from_ids(x, d, split_list(o_.forest));
      if (!o_.coforest.empty()) v1 = CellSubset::from_ids(x, d + 1, split_list(o_.coforest));
      return emit_report(verify_geometric_theorems(x, d, v0, v1));
    }
    throw UsageError("unknown theorem '" + o_.theorem + "'");
  }

  int kalai() {
    std::optional<VertexWeights> weights;
    if (!o_.weights.empty()) {
      weights.emplace();
      for (const auto& a : split_list(o_.weights)) weights->push_back(parse_rational(a));
    }
    return emit_report(verify_kalai(o_.n, o_.k, parse_kalai_kind(o_.kind), weights));
  }

 private:
  bool table() const { return o_.format == "table"; }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  int emit_report(const VerificationReport& r) {
    out_ << (table() ? to_table(r, o_.timing) : to_json(r, o_.timing) + "\n");
    return r.pass ? kExitOk : kExitMismatch;
  }

  LatticeBasis lattice(const CellComplex& x, int d) const {
    if (o_.which == "cycles") return integral_cycle_basis(x, d);
    if (o_.which == "boundaries") return integral_boundary_basis(x, d);
    throw UsageError("--which expects cycles or boundaries");
  }

  MeshMatrix geometric_mesh(const CellComplex& x, int d) const {
    const std::size_t colon = o_.basis.find(':');
    const std::vector<std::string> ids =
        colon == std::string::npos ? std::vector<std::string>{} : split_list(o_.basis.substr(colon + 1));
    if (o_.which == "cycles") {
      const CellSubset v0 =
          ids.empty() ? greedy_spanning_forest(x, d) : CellSubset::from_ids(x, d, ids);
      return mesh_matrix_from_basis(MeshKind::cycles, d, geometric_cycle_basis(x, d, v0),
                                    "geometric, V0 = {" + join(v0.ids(x), ",") + "}");
    }
    if (o_.which == "boundaries") {
      if (d + 1 > x.dimension()) {
        return mesh_matrix_from_basis(MeshKind::boundaries, d, RatMatrix(x.count(d), 0),
                                      "geometric, V1 = {}");
      }
      const CellSubset v1 =
          ids.empty() ? greedy_spanning_forest(x, d + 1) : CellSubset::from_ids(x, d + 1, ids);
      return mesh_matrix_from_basis(MeshKind::boundaries, d, geometric_boundary_basis(x, d, v1),
                                    "geometric, V1 = {" + join(v1.ids(x), ",") + "}");
    }
    throw UsageError("--which expects cycles or boundaries");
  }

  int emit_matrix(const MeshMatrix& mesh) {
    const Rational det = determinant(mesh.matrix);
    std::optional<RatPolynomial> poly;
    if (o_.charpoly) poly = char_poly_rational(mesh.matrix);
    if (table()) {
      out_ << to_string(mesh.kind) << " matrix, dim " << mesh.dimension;
      if (!mesh.provenance.empty()) out_ << " (" << mesh.provenance << ")";
      out_ << "\n";
      if (mesh.matrix.rows()) out_ << to_string(mesh.matrix);
      out_ << "det: " << to_string(det) << "\n";
      if (poly) out_ << "charpoly: " << to_string(*poly) << "\n";
    } else {
      Json j{{"kind", to_string(mesh.kind)},
             {"dimension", mesh.dimension},
             {"provenance", mesh.provenance},
             {"size", mesh.matrix.rows()},
             {"matrix", matrix_json(mesh.matrix)},
             {"det", to_string(det)}};
      if (poly) j["charpoly"] = charpoly_json(*poly);
      emit(j);
    }
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact forest, mesh and torsion computations on cell complexes", "cellforest"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "Include elapsed_ms in verification reports");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Complex in JSON form")->required();
  };
  auto* validate = app.add_subcommand("validate", "Parse and validate a complex");
  file_arg(validate);

  auto* homology = app.add_subcommand("homology", "Integral homology groups");
  file_arg(homology);
  homology->add_option("--dim", o.dim, "Dimension or 'all'")->default_str("all");

  auto* basis = app.add_subcommand("basis", "Canonical integral cycle or boundary basis");
  file_arg(basis);
  basis->add_option("--dim", o.dim)->required();
  basis->add_option("--which", o.which)->required()->check(CLI::IsMember({"cycles", "boundaries"}));

  auto* mesh = app.add_subcommand("mesh", "Mesh matrix of a cycle or boundary basis");
  file_arg(mesh);
  mesh->add_option("--dim", o.dim)->required();
  mesh->add_option("--which", o.which)->required()->check(CLI::IsMember({"cycles", "boundaries"}));
  mesh->add_flag("--charpoly", o.charpoly);
  mesh->add_option("--basis", o.basis, "canonical or geometric:<comma-separated cells>")
      ->capture_default_str();

  auto* laplacian = app.add_subcommand("laplacian", "Combinatorial Laplacian on (d-1)-chains");
  file_arg(laplacian);
  laplacian->add_option("--dim", o.dim)->required();
  laplacian->add_flag("--charpoly", o.charpoly);
  laplacian->add_flag("--use-weights", o.use_weights, "Use the cell weights of the complex");

  auto* forests = app.add_subcommand("forests", "Enumerate forests and coforests");
  file_arg(forests);
  forests->add_option("--dim", o.dim)->required();
  forests->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"forest", "augmented", "coforest", "reduced", "size"}));
  forests->add_option("--k", o.k, "Augmentation or reduction");
  forests->add_option("--m", o.m, "Size for --kind size");
  forests->add_flag("--with-weights", o.with_weights);
  forests->add_flag("--count-only", o.count_only);

  auto* verify = app.add_subcommand("verify", "Check a forest-sum identity exactly");
  file_arg(verify);
  verify->add_option("--theorem", o.theorem)
      ->required()
      ->check(CLI::IsMember({"trent", "boundary", "kirchhoff", "geometric", "covolume", "rf"}));
  verify->add_option("--dim", o.dim);
  verify->add_option("--forest", o.forest, "V0 for the geometric cycle basis");
  verify->add_option("--coforest-dim-plus-one", o.coforest,
                     "V1, (d+1)-cells for the geometric boundary basis");

  auto* kalai = app.add_subcommand("kalai", "Simplex spectra against the closed-form tables");
  kalai->add_option("--n", o.n)->required();
  kalai->add_option("--k", o.k)->required();
  kalai->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"incidence", "laplacian", "mesh"}));
  kalai->add_option("--weights", o.weights, "a1,a2,...");

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(o, out);
  try {
    if (*validate) return runner.validate();
    if (*homology) return runner.homology();
    if (*basis) return runner.basis();
    if (*mesh) return runner.mesh();
    if (*laplacian) return runner.laplacian();
    if (*forests) return runner.forests();
    if (*verify) return runner.verify();
    if (*kalai) return runner.kalai();
  } catch (const ValidationError& e) {
    err << "error: invalid complex\n" << e.report().summary() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Internal cross-checks disagreeing.
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cellforest::cli
