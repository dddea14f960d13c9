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

// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 usage, parse or validation error.

#ifndef CELLFOREST_CLI_HPP_
#define CELLFOREST_CLI_HPP_

#include <iostream>
#include <string>
#include <vector>

namespace cellforest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace cellforest::cli

#endif  // CELLFOREST_CLI_HPP_
