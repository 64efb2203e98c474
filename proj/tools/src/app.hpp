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

#ifndef MONOSCOPE_TOOLS_APP_HPP_
#define MONOSCOPE_TOOLS_APP_HPP_

#include <ostream>

namespace monoscope::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitReplicationFailed = 1,
  kExitInputError = 2,
  kExitImproper = 3,
  kExitUnsupportedOracle = 4,
};

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoscope::cli

#endif  // MONOSCOPE_TOOLS_APP_HPP_
