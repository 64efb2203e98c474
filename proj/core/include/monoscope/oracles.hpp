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

#ifndef MONOSCOPE_ORACLES_HPP_
#define MONOSCOPE_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monoscope/chain_order.hpp"
#include "monoscope/ext_real.hpp"
#include "monoscope/finite_operator.hpp"
#include "monoscope/matrix.hpp"

namespace monoscope {

// Graph-membership tolerance for the sharp indicator branches.
inline constexpr double kOracleGraphTol = 1e-9;
// Singular-value cutoff for the subspace tests of skew operators.
inline constexpr double kRankCutoff = 1e-10;

// y = x on R^d.
class IdentityOracle {
 public:
  explicit IdentityOracle(std::size_t dim);
  [[nodiscard]] std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
};

// Planar rotation by theta in [-pi, pi].
class RotationOracle {
 public:
  explicit RotationOracle(double theta);
  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] Vector apply(std::span<const double> x) const;

 private:
  double theta_;
};

// Normal cone of the convex hull of a vertex list.
class NormalConeOracle {
 public:
  explicit NormalConeOracle(std::vector<Vector> vertices);
  [[nodiscard]] std::size_t dim() const { return vertices_.front().size(); }
  [[nodiscard]] const std::vector<Vector>& vertices() const { return vertices_; }
  // Axis-aligned box (every interval counts).
  [[nodiscard]] bool is_box() const { return box_; }
  [[nodiscard]] const Vector& lower() const { return lo_; }
  [[nodiscard]] const Vector& upper() const { return hi_; }

  [[nodiscard]] bool contains(std::span<const double> x) const;
  [[nodiscard]] double support(std::span<const double> y) const;
  // y in the range of N_C; boxes only.
  [[nodiscard]] bool in_range(std::span<const double> y) const;

 private:
  std::vector<Vector> vertices_;
  Vector lo_;
  Vector hi_;
  bool box_ = false;
};

// x -> A x on a subspace S = span(U), A^T = -A. Without a basis S = R^d.
class SkewLinearOracle {
 public:
  explicit SkewLinearOracle(Matrix a, std::optional<Matrix> domain_basis = std::nullopt);
  [[nodiscard]] std::size_t dim() const { return a_.rows(); }
  [[nodiscard]] const Matrix& matrix() const { return a_; }
  // d x k, orthonormal columns.
  [[nodiscard]] const Matrix& basis() const { return u_; }
  [[nodiscard]] bool has_explicit_basis() const { return explicit_basis_; }

 private:
  Matrix a_;
  Matrix u_;
  bool explicit_basis_ = false;
};

using AnalyticOracle =
    std::variant<IdentityOracle, RotationOracle, NormalConeOracle, SkewLinearOracle>;

std::size_t oracle_dim(const AnalyticOracle& o);
std::string oracle_kind(const AnalyticOracle& o);

ExtReal oracle_phi(const AnalyticOracle& o, ChainOrder n, const GraphPair& q);
// n >= 2.
ExtReal oracle_chi(const AnalyticOracle& o, ChainOrder n, const GraphPair& q);
ChainOrder oracle_order(const AnalyticOracle& o);

struct SampleSpec {
  // Identity / skew: grid_points per axis over [lo, hi].
  double lo = -2.0;
  double hi = 2.0;
  std::size_t grid_points = 41;
  // Rotation: angles per circle.
  std::vector<double> radii{1.0};
  std::size_t angles = 36;
  // Normal cone: lengths of the outward rays at the vertices.
  std::vector<double> magnitudes{1.0};
};

FiniteOperator sample_graph(const AnalyticOracle& o, const SampleSpec& spec = {});

}  // namespace monoscope

#endif  // MONOSCOPE_ORACLES_HPP_
