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

#include "cellforest/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cellforest {

VerificationRow& VerificationReport::add_row(std::size_t k, std::string label,
                                             const Rational& lhs, const Rational& rhs,
                                             std::size_t certificates) {
  VerificationRow row;
  row.k = k;
  row.label = std::move(label);
  row.lhs = to_string(lhs);
  row.rhs = to_string(rhs);
  row.certificates = certificates;
  row.pass = lhs == rhs;
  rows.push_back(std::move(row));
  return rows.back();
}

VerificationRow& VerificationReport::add_text_row(std::size_t k, std::string label,
                                                  std::string lhs, std::string rhs, bool pass) {
  VerificationRow row;
  row.k = k;
  row.label = std::move(label);
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  row.pass = pass;
  rows.push_back(std::move(row));
  return rows.back();
}

void VerificationReport::finish() {
  pass = std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

std::string to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["dim"] = r.dimension;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["k"] = row.k;
    o["label"] = row.label;
    o["lhs"] = row.lhs;
    o["rhs"] = row.rhs;
    if (row.rhs_alternate) o["rhs_alternate"] = *row.rhs_alternate;
    o["certificates"] = row.certificates;
    o["pass"] = row.pass;
    j["rows"].push_back(std::move(o));
  }
  j["pass"] = r.pass;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2);
}

std::string to_table(const VerificationReport& r, bool with_timing) {
  std::size_t wl = 5, wr = 3, wb = 5;
  for (const auto& row : r.rows) {
    wl = std::max(wl, row.lhs.size());
    wr = std::max(wr, row.rhs.size());
    wb = std::max(wb, row.label.size());
  }
  std::ostringstream out;
  out << r.theorem << " (dim " << r.dimension << "): " << (r.pass ? "PASS" : "FAIL");
  if (with_timing) out << " in " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
  out << "\n";
  out << std::left << std::setw(4) << "k" << "  " << std::setw(static_cast<int>(wb)) << "label"
      << "  " << std::right << std::setw(static_cast<int>(wl)) << "lhs" << "  "
      << std::setw(static_cast<int>(wr)) << "rhs" << "  " << std::setw(12) << "certificates"
      << "  ok\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(4) << row.k << "  " << std::setw(static_cast<int>(wb))
        << row.label << "  " << std::right << std::setw(static_cast<int>(wl)) << row.lhs << "  "
        << std::setw(static_cast<int>(wr)) << row.rhs << "  " << std::setw(12) << row.certificates
        << "  " << (row.pass ? "yes" : "NO");
    if (row.rhs_alternate) out << "  (alternate " << *row.rhs_alternate << ")";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace cellforest
