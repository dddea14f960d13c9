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

// Verification reports shared by the theorem checkers.

#ifndef CELLFOREST_REPORT_HPP_
#define CELLFOREST_REPORT_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cellforest/number.hpp"

namespace cellforest {

struct VerificationRow {
  std::size_t k = 0;
  std::string label;
  std::string lhs;  // exact decimal or "p/q"
  std::string rhs;
  std::size_t certificates = 0;
  bool pass = false;
  std::optional<std::string> rhs_alternate;
};

struct VerificationReport {
  std::string theorem;
  int dimension = 0;
  std::vector<VerificationRow> rows;
  bool pass = true;
  double elapsed_ms = 0;
  std::vector<std::string> notes;

  VerificationRow& add_row(std::size_t k, std::string label, const Rational& lhs,
                           const Rational& rhs, std::size_t certificates);
  VerificationRow& add_text_row(std::size_t k, std::string label, std::string lhs,
                                std::string rhs, bool pass);
  // Sets `pass` from the rows.
  void finish();
};

std::string to_json(const VerificationReport& r, bool with_timing = false);
std::string to_table(const VerificationReport& r, bool with_timing = false);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cellforest

#endif  // CELLFOREST_REPORT_HPP_
