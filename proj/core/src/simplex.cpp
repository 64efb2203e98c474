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

#include "monoscope/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "monoscope/errors.hpp"

namespace monoscope {
namespace {

class Tableau {
 public:
  // rows_[r] has n_cols + 1 entries, the last one being the right-hand side.
  std::vector<std::vector<double>> rows;
  std::vector<double> objective;  // reduced costs, last entry = -z
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows[r];
    const double inv = 1.0 / prow[c];
    for (double& v : prow) v *= inv;
    prow[c] = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i], prow, c);
    }
    eliminate(objective, prow, c);
    basis[r] = c;
  }

 private:
  static void eliminate(std::vector<double>& row, const std::vector<double>& prow,
                        std::size_t c) {
    const double f = row[c];
    if (f == 0.0) return;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    row[c] = 0.0;
  }
};

enum class RunOutcome { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column; ratio ties go to the row
// whose basic variable has the lowest index.
RunOutcome run(Tableau& t, std::size_t allowed_cols, const SimplexOptions& opt,
               std::size_t& iterations) {
  for (;;) {
    std::size_t enter = allowed_cols;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (t.objective[j] < -opt.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter == allowed_cols) return RunOutcome::kOptimal;

    std::size_t leave = t.rows.size();
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const double a = t.rows[r][enter];
      if (a <= opt.pivot_tol) continue;
      const double ratio = t.rows[r].back() / a;
      if (leave == t.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == t.rows.size()) return RunOutcome::kUnbounded;

    if (++iterations > opt.max_iterations) {
      throw NumericalError("simplex: iteration guard exceeded (" +
                           std::to_string(opt.max_iterations) + " pivots)");
    }
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_standard_form(const Matrix& a, const Vector& b, const Vector& c,
                             const SimplexOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) {
    throw InputError("solve_standard_form: inconsistent LP dimensions");
  }

  // Phase one: artificial variable per row, rows flipped so that b >= 0.
  Tableau t;
  const std::size_t cols = n + m;
  t.rows.assign(m, std::vector<double>(cols + 1, 0.0));
  t.basis.resize(m);
  double bmax = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.rows[r][j] = sign * a(r, j);
    t.rows[r][n + r] = 1.0;
    t.rows[r][cols] = sign * b[r];
    t.basis[r] = n + r;
    bmax = std::max(bmax, std::abs(b[r]));
  }
  t.objective.assign(cols + 1, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.objective[j] -= t.rows[r][j];
    t.objective[cols] -= t.rows[r][cols];
  }

  std::size_t iterations = 0;
  run(t, n, options, iterations);  // bounded below by zero
  const double infeasibility = -t.objective[cols];
  if (infeasibility > options.feasibility_tol * (1.0 + bmax)) {
    return {LpStatus::kInfeasible, 0.0, {}};
  }

  // Pivot remaining artificials out; rows where that is impossible are
  // linearly dependent on the others and are dropped.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::size_t col = n;
    double best = options.pivot_tol;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.rows[r][j]) > best) {
        best = std::abs(t.rows[r][j]);
        col = j;
      }
    }
    if (col < n) {
      t.pivot(r, col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  // Phase two.
  std::fill(t.objective.begin(), t.objective.end(), 0.0);
  for (std::size_t j = 0; j < n; ++j) t.objective[j] = c[j];
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double cb = c[t.basis[r]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= cols; ++j) t.objective[j] -= cb * t.rows[r][j];
  }
  if (run(t, n, options, iterations) == RunOutcome::kUnbounded) {
    return {LpStatus::kUnbounded, -std::numeric_limits<double>::infinity(), {}};
  }

  LpResult result;
  result.status = LpStatus::kOptimal;
  result.solution.assign(n, 0.0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    result.solution[t.basis[r]] = std::max(0.0, t.rows[r][cols]);
  }
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.solution[j];
  return result;
}

}  // namespace monoscope
