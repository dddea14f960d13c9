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

#include "cellforest/complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cellforest {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Rational WeightAssignment::of(const std::string& id) const {
  auto it = values.find(id);
  return it == values.end() ? Rational(1) : it->second;
}

CellComplex::CellComplex(std::string name, int dimension, std::vector<std::vector<Cell>> cells,
                         WeightAssignment weights)
    : name_(std::move(name)),
      dimension_(dimension),
      cells_(std::move(cells)),
      weights_(std::move(weights)) {
  if (dimension_ < -1) throw std::invalid_argument("dimension must be >= -1");
  if (cells_.size() > static_cast<std::size_t>(dimension_ + 1)) {
    throw std::invalid_argument("cells above the declared dimension");
  }
  cells_.resize(dimension_ + 1);
  for (int d = 0; d <= dimension_; ++d)
    for (std::size_t i = 0; i < cells_[d].size(); ++i)
      index_.emplace(cells_[d][i].id, CellLocation{d, i});
}

std::size_t CellComplex::count(int d) const {
  if (d < 0 || d > dimension_) return 0;
  return cells_[d].size();
}

const std::vector<Cell>& CellComplex::cells(int d) const {
  static const std::vector<Cell> kNone;
  if (d < 0 || d > dimension_) return kNone;
  return cells_[d];
}

std::optional<CellLocation> CellComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CellComplex::counts() const {
  std::vector<std::size_t> c;
  for (int d = 0; d <= dimension_; ++d) c.push_back(cells_[d].size());
  return c;
}

CellSubset CellSubset::from_ids(const CellComplex& x, int d, const std::vector<std::string>& ids) {
  CellSubset s{d, {}};
  for (const std::string& id : ids) {
    auto loc = x.find(id);
    if (!loc) throw std::invalid_argument("unknown cell id '" + id + "'");
    if (loc->dimension != d) {
      throw std::invalid_argument("cell '" + id + "' has dimension " +
                                  std::to_string(loc->dimension) + ", expected " +
                                  std::to_string(d));
    }
    s.members.push_back(loc->index);
  }
  std::sort(s.members.begin(), s.members.end());
  if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end()) {
    throw std::invalid_argument("repeated cell in subset");
  }
  return s;
}

CellSubset CellSubset::all(const CellComplex& x, int d) {
  CellSubset s{d, {}};
  for (std::size_t i = 0; i < x.count(d); ++i) s.members.push_back(i);
  return s;
}

std::vector<std::string> CellSubset::ids(const CellComplex& x) const {
  std::vector<std::string> out;
  for (std::size_t i : members) out.push_back(x.cell(dimension, i).id);
  return out;
}

CellSubset CellSubset::complement(const CellComplex& x) const {
  CellSubset c{dimension, {}};
  std::size_t p = 0;
  for (std::size_t i = 0; i < x.count(dimension); ++i) {
    if (p < members.size() && members[p] == i) {
      ++p;
      continue;
    }
    c.members.push_back(i);
  }
  return c;
}

bool CellSubset::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

SubcomplexMask SubcomplexMask::empty(const CellComplex& x) {
  SubcomplexMask m;
  for (int d = 0; d <= x.dimension(); ++d) m.member.emplace_back(x.count(d), false);
  return m;
}

SubcomplexMask SubcomplexMask::full(const CellComplex& x) { return skeleton(x, x.dimension()); }

SubcomplexMask SubcomplexMask::skeleton(const CellComplex& x, int d) {
  SubcomplexMask m = empty(x);
  for (int q = 0; q <= std::min(d, x.dimension()); ++q) m.member[q].assign(x.count(q), true);
  return m;
}

SubcomplexMask SubcomplexMask::with_cells(const CellComplex& x, const CellSubset& v) {
  SubcomplexMask m = skeleton(x, v.dimension - 1);
  for (std::size_t i : v.members) m.member.at(v.dimension).at(i) = true;
  return m;
}

bool SubcomplexMask::contains(int d, std::size_t i) const {
  if (d < 0 || static_cast<std::size_t>(d) >= member.size()) return false;
  return member[d][i];
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    out << (i ? "; " : "") << "cell '" << violations[i].cell << "': " << violations[i].message;
  }
  return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid complex: " + report.summary()), report_(std::move(report)) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Structural problems found after JSON parsing have no useful byte offset;
// they are reported at line 0.
[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 0, 0); }

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      fail("unknown key '" + it.key() + "' in " + where);
    }
  }
}

Rational weight_from_json(const json& v, const std::string& id) {
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      fail("weight of '" + id + "': " + e.what());
    }
  }
  fail("weight of '" + id + "' must be an integer or a \"p/q\" string");
}

}  // namespace

CellComplex parse_complex(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto p = msg.find("]: "); p != std::string::npos) msg = msg.substr(p + 3);
    throw ParseError(msg, line, col);
  }
  if (!doc.is_object()) fail("top level must be an object");
  reject_unknown_keys(doc, {"name", "dimension", "cells", "weights"}, "complex");
  if (!doc.contains("name") || !doc["name"].is_string()) fail("missing string 'name'");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    fail("missing integer 'dimension'");
  }
  const int dim = doc["dimension"].get<int>();
  if (dim < -1) fail("'dimension' must be >= -1");
  if (!doc.contains("cells") || !doc["cells"].is_object()) fail("missing object 'cells'");

  std::vector<std::vector<Cell>> cells(dim + 1);
  for (auto it = doc["cells"].begin(); it != doc["cells"].end(); ++it) {
    const std::string& key = it.key();
    int d = -1;
    if (key.empty() || key.size() > 4 ||
        !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail("cells key '" + key + "' is not a dimension");
    }
    d = std::stoi(key);
    if (d > dim) fail("cells of dimension " + key + " exceed declared dimension");
    if (!it.value().is_array()) fail("cells of dimension " + key + " must be an array");
    for (const json& c : it.value()) {
      if (!c.is_object()) fail("cell entries must be objects");
      reject_unknown_keys(c, {"id", "boundary"}, "cell");
      if (!c.contains("id") || !c["id"].is_string()) fail("cell without string 'id'");
      Cell cell{c["id"].get<std::string>(), {}};
      if (d == 0) {
        if (c.contains("boundary")) fail("0-cell '" + cell.id + "' must not have a boundary");
      } else {
        if (!c.contains("boundary") || !c["boundary"].is_array()) {
          fail("cell '" + cell.id + "' needs a 'boundary' array");
        }
        for (const json& term : c["boundary"]) {
          if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
              !term[1].is_number_integer()) {
            fail("boundary of '" + cell.id + "' must hold [face-id, integer] pairs");
          }
          cell.boundary.emplace_back(term[0].get<std::string>(), Integer(term[1].dump(), 10));
        }
      }
      cells[d].push_back(std::move(cell));
    }
  }

  WeightAssignment weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) fail("'weights' must be an object");
    for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it) {
      weights.values[it.key()] = weight_from_json(it.value(), it.key());
    }
  }

  // Duplicate ids would make the index ambiguous; catch them before building.
  std::set<std::string> seen;
  for (const auto& layer : cells)
    for (const Cell& c : layer)
      if (!seen.insert(c.id).second) {
        throw ValidationError(ValidationReport{{{c.id, "duplicate cell id"}}});
      }

  CellComplex x(doc["name"].get<std::string>(), dim, std::move(cells), std::move(weights));
  ValidationReport report = validate(x);
  if (!report.ok()) throw ValidationError(std::move(report));
  return x;
}

CellComplex load_complex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string serialize(const CellComplex& x) {
  ordered_json doc;
  doc["name"] = x.name();
  doc["dimension"] = x.dimension();
  ordered_json cells = ordered_json::object();
  for (int d = 0; d <= x.dimension(); ++d) {
    ordered_json layer = ordered_json::array();
    for (const Cell& c : x.cells(d)) {
      ordered_json cell;
      cell["id"] = c.id;
      if (d > 0) {
        ordered_json bd = ordered_json::array();
        for (const auto& [face, coeff] : c.boundary) {
          if (!fits_small(coeff)) throw std::overflow_error("coefficient exceeds 64 bits");
          bd.push_back(ordered_json::array({face, coeff.get_si()}));
        }
        cell["boundary"] = bd;
      }
      layer.push_back(cell);
    }
    cells[std::to_string(d)] = layer;
  }
  doc["cells"] = cells;
  if (!x.weights().empty()) {
    ordered_json w = ordered_json::object();
    for (const auto& [id, value] : x.weights().values) w[id] = to_string(value);
    doc["weights"] = w;
  }
  return doc.dump();
}

ValidationReport validate(const CellComplex& x) {
  ValidationReport r;
  std::set<std::string> seen;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const Cell& c : x.cells(d)) {
      if (!seen.insert(c.id).second) r.violations.push_back({c.id, "duplicate cell id"});
      std::set<std::string> faces;
      for (const auto& [face, coeff] : c.boundary) {
        if (!faces.insert(face).second) {
          r.violations.push_back({c.id, "face '" + face + "' repeated in boundary"});
        }
        auto loc = x.find(face);
        if (!loc) {
          r.violations.push_back({c.id, "boundary references missing cell '" + face + "'"});
        } else if (loc->dimension != d - 1) {
          r.violations.push_back({c.id, "boundary face '" + face + "' has dimension " +
                                            std::to_string(loc->dimension)});
        }
      }
    }
  }
  for (const auto& [id, w] : x.weights().values) {
    if (!x.find(id)) r.violations.push_back({id, "weight given for unknown cell"});
    if (w <= 0) r.violations.push_back({id, "weight must be positive, got " + to_string(w)});
  }
  if (!r.ok()) return r;

  for (int d = 2; d <= x.dimension(); ++d) {
    IntMatrix prod = boundary_matrix(x, d - 1) * boundary_matrix(x, d);
    for (std::size_t j = 0; j < prod.cols(); ++j)
      for (std::size_t i = 0; i < prod.rows(); ++i)
        if (prod(i, j) != 0) {
          r.violations.push_back({x.cell(d, j).id, "boundary of boundary has coefficient " +
                                                       to_string(prod(i, j)) + " on '" +
                                                       x.cell(d - 2, i).id + "'"});
        }
  }
  return r;
}

IntMatrix boundary_matrix(const CellComplex& x, int d) {
  if (d < 0 || d > x.dimension()) {
    throw std::out_of_range("boundary dimension " + std::to_string(d) + " outside 0.." +
                            std::to_string(x.dimension()));
  }
  IntMatrix m(x.count(d - 1), x.count(d));
  if (d == 0) return m;
  for (std::size_t j = 0; j < x.count(d); ++j) {
    for (const auto& [face, coeff] : x.cell(d, j).boundary) {
      auto loc = x.find(face);
      if (!loc || loc->dimension != d - 1) {
        throw std::invalid_argument("cell '" + x.cell(d, j).id + "' has an invalid face '" +
                                    face + "'");
      }
      m(loc->index, j) += coeff;
    }
  }
  return m;
}

namespace {

WeightAssignment restrict_weights(const CellComplex& x,
                                  const std::vector<std::vector<Cell>>& cells) {
  WeightAssignment w;
  for (const auto& layer : cells)
    for (const Cell& c : layer)
      if (auto it = x.weights().values.find(c.id); it != x.weights().values.end()) {
        w.values.insert(*it);
      }
  return w;
}

}  // namespace

CellComplex subcomplex(const CellComplex& x, int d, const CellSubset& v) {
  if (d < 0 || d > x.dimension()) throw std::out_of_range("subcomplex dimension out of range");
  if (v.dimension != d) throw std::invalid_argument("subset dimension does not match");
  std::vector<std::vector<Cell>> cells;
  for (int q = 0; q < d; ++q) cells.push_back(x.cells(q));
  cells.emplace_back();
  for (std::size_t i : v.members) {
    if (i >= x.count(d)) throw std::invalid_argument("subset member out of range");
    cells.back().push_back(x.cell(d, i));
  }
  WeightAssignment w = restrict_weights(x, cells);
  return CellComplex(x.name(), d, std::move(cells), std::move(w));
}

CellComplex skeleton(const CellComplex& x, int d) {
  if (d < 0 || d > x.dimension()) throw std::out_of_range("skeleton dimension out of range");
  std::vector<std::vector<Cell>> cells;
  for (int q = 0; q <= d; ++q) cells.push_back(x.cells(q));
  WeightAssignment w = restrict_weights(x, cells);
  return CellComplex(x.name(), d, std::move(cells), std::move(w));
}

CellComplex standard_simplex(std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard_simplex needs n >= 1");
  auto id_of = [](const std::vector<std::size_t>& verts) {
    std::string s;
    for (std::size_t v : verts) s += "x" + std::to_string(v + 1);
    return s;
  };
  std::vector<std::vector<Cell>> cells(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // k-element vertex sets in lexicographic order.
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
      Cell cell{id_of(c), {}};
      if (k > 1) {
        // Omitting position i carries sign (-1)^i; list faces in basis order,
        // which is decreasing i.
        for (std::size_t i = k; i-- > 0;) {
          std::vector<std::size_t> face = c;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          cell.boundary.emplace_back(id_of(face), Integer(i % 2 == 0 ? 1 : -1));
        }
      }
      cells[k - 1].push_back(std::move(cell));
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return CellComplex("simplex" + std::to_string(n), static_cast<int>(n) - 1, std::move(cells));
}

bool same_cells(const CellComplex& a, const CellComplex& b) {
  const int top = std::max(a.dimension(), b.dimension());
  for (int d = 0; d <= top; ++d)
    if (a.cells(d) != b.cells(d)) return false;
  return true;
}

}  // namespace cellforest
