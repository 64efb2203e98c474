// Copyright 2026 The Monoscope Authors
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

#ifndef MONOSCOPE_TOOLS_REPLICATE_HPP_
#define MONOSCOPE_TOOLS_REPLICATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monoscope::cli {

struct Check {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

const std::vector<std::string>& replicate_cases();

// Throws InputError for an unknown case name.
std::vector<Check> run_replicate(std::string_view name, std::uint64_t seed);

}  // namespace monoscope::cli

#endif  // MONOSCOPE_TOOLS_REPLICATE_HPP_
