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

#ifndef CELLFOREST_TESTS_CORPUS_HPP_
#define CELLFOREST_TESTS_CORPUS_HPP_

#include <string>
#include <vector>

#include "cellforest/complex.hpp"

namespace corpus {

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "k3", "k4", "theta", "p2", "simplex3", "sphere2", "delta5_2skel", "rp2", "moore2", "dunce"};
  return kNames;
}

inline std::string path(const std::string& name) {
  return std::string(CELLFOREST_CORPUS_DIR) + "/" + name + ".json";
}

inline cellforest::CellComplex load(const std::string& name) {
  return cellforest::load_complex(path(name));
}

}  // namespace corpus

#endif  // CELLFOREST_TESTS_CORPUS_HPP_
