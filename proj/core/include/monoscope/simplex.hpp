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

#ifndef MONOSCOPE_SIMPLEX_HPP_
#define MONOSCOPE_SIMPLEX_HPP_

#include <cstddef>

#include "monoscope/matrix.hpp"

namespace monoscope {

struct SimplexOptions {
  double pivot_tol = 1e-11;
  // Phase-one residual (relative to 1 + max|b|) above which the program is
  // declared infeasible.
  double feasibility_tol = 1e-9;
  std::size_t max_iterations = 100000;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  Vector solution;
};

/// Dense two-phase primal simplex with Bland's rule for
///   minimize c^T x  subject to  A x = b, x >= 0.
/// Throws NumericalError when the iteration guard is exceeded.
LpResult solve_standard_form(const Matrix& a, const Vector& b, const Vector& c,
                             const SimplexOptions& options = {});

}  // namespace monoscope

#endif  // MONOSCOPE_SIMPLEX_HPP_
