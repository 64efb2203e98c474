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

#include "monoscope/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <set>
#include <tuple>

#include "monoscope/errors.hpp"
#include "monoscope/simplex.hpp"

namespace monoscope {
namespace {

constexpr double kPi = std::numbers::pi;
// |theta| this close to a branch boundary counts as on it.
constexpr double kThetaBoundaryTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_finite(std::span<const double> v, const char* what) {
  for (double e : v) {
    if (!std::isfinite(e)) throw InputError(std::string(what) + ": non-finite coordinate");
  }
}

void check_query_dims(const GraphPair& q, std::size_t d) {
  if (q.x.size() != d || q.y.size() != d) {
    throw InputError("oracle query has dimension (" + std::to_string(q.x.size()) + ", " +
                     std::to_string(q.y.size()) + "), expected " + std::to_string(d));
  }
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double max_singular_value(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

bool near_boundary(double theta, double bound) {
  return std::abs(std::abs(theta) - bound) <= kThetaBoundaryTol;
}

double dist2(std::span<const double> a, std::span<const double> b) {
  return squared_norm(subtract(a, b));
}

bool on_rotation_graph(const RotationOracle& r, const GraphPair& q) {
  return std::sqrt(dist2(q.y, r.apply(q.x))) <= kOracleGraphTol;
}

Vector grid_axis(const SampleSpec& spec) {
  if (spec.grid_points == 0) throw InputError("sample: grid_points must be >= 1");
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || spec.lo > spec.hi) {
    throw InputError("sample: need finite lo <= hi");
  }
  Vector axis(spec.grid_points);
  const double n1 = static_cast<double>(spec.grid_points - 1);
  for (std::size_t k = 0; k < spec.grid_points; ++k) {
    axis[k] = spec.grid_points == 1
                  ? spec.lo
                  : spec.lo + (spec.hi - spec.lo) * static_cast<double>(k) / n1;
  }
  return axis;
}

// Cartesian power axis^dim in lexicographic order.
std::vector<Vector> grid(const Vector& axis, std::size_t dim) {
  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    Vector p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = axis[idx[i]];
    out.push_back(std::move(p));
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++idx[i] < axis.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (dim == 0) return out;
  }
}

// --- identity -------------------------------------------------------------

ExtReal phi_of(const IdentityOracle& o, ChainOrder n, const GraphPair& q) {
  check_query_dims(q, o.dim());
  if (n.is_infinite()) return ExtReal(0.5 * squared_norm(q.x) + 0.5 * squared_norm(q.y));
  const auto k = static_cast<double>(n.value());
  return ExtReal(k / (2.0 * (k + 1.0)) * dist2(q.x, q.y) + dot(q.x, q.y));
}

ExtReal chi_of(const IdentityOracle& o, ChainOrder n, const GraphPair& q) {
  check_query_dims(q, o.dim());
  if (n.is_infinite()) return ExtReal(0.5 * squared_norm(q.x) + 0.5 * squared_norm(q.y));
  const auto k = static_cast<double>(n.value());
  return ExtReal(k / (2.0 * (k - 1.0)) * dist2(q.x, q.y) + dot(q.x, q.y));
}

// --- rotation -------------------------------------------------------------

ExtReal phi_of(const RotationOracle& o, ChainOrder n, const GraphPair& q) {
  check_query_dims(q, 2);
  const double t = o.theta();
  if (n.is_infinite()) {
    if (t == 0.0) return ExtReal(0.5 * squared_norm(q.x) + 0.5 * squared_norm(q.y));
    return ExtReal::plus_infinity();
  }
  const auto k = static_cast<double>(n.value());
  const double r2 = dist2(q.y, o.apply(q.x));
  const double c = dot(q.x, q.y);
  if (t == 0.0) return ExtReal(k / (2.0 * (k + 1.0)) * r2 + c);
  const double bound = kPi / (k + 1.0);
  if (near_boundary(t, bound)) {
    return on_rotation_graph(o, q) ? ExtReal(c) : ExtReal::plus_infinity();
  }
  if (std::abs(t) < bound) {
    return ExtReal(std::sin(k * t) / (2.0 * std::sin((k + 1.0) * t)) * r2 + c);
  }
  return ExtReal::plus_infinity();
}

ExtReal chi_of(const RotationOracle& o, ChainOrder n, const GraphPair& q) {
  check_query_dims(q, 2);
  const double t = o.theta();
  if (n.is_infinite()) {
    if (t == 0.0) return ExtReal(0.5 * squared_norm(q.x) + 0.5 * squared_norm(q.y));
    return ExtReal::minus_infinity();
  }
  const auto k = static_cast<double>(n.value());
  const double r2 = dist2(q.y, o.apply(q.x));
  const double c = dot(q.x, q.y);
  if (n.value() == 2) return ExtReal(std::cos(t) * r2 + c);
  if (t == 0.0) return ExtReal(k / (2.0 * (k - 1.0)) * r2 + c);
  const double bound = kPi / (k - 1.0);
  if (near_boundary(t, bound)) {
    return on_rotation_graph(o, q) ? ExtReal(c) : ExtReal::minus_infinity();
  }
  if (std::abs(t) < bound) {
    return ExtReal(std::sin(k * t) / (2.0 * std::sin((k - 1.0) * t)) * r2 + c);
  }
  return ExtReal::minus_infinity();
}

// --- normal cone ----------------------------------------------------------

ExtReal phi_of(const NormalConeOracle& o, ChainOrder, const GraphPair& q) {
  check_query_dims(q, o.dim());
  if (!o.contains(q.x)) return ExtReal::plus_infinity();
  return ExtReal(o.support(q.y));
}

ExtReal chi_of(const NormalConeOracle& o, ChainOrder, const GraphPair& q) {
  check_query_dims(q, o.dim());
  if (!o.is_box()) {
    throw UnsupportedOracleError(
        "normal_cone chi: the range of N_C is only available for intervals and boxes");
  }
  if (!o.contains(q.x) || !o.in_range(q.y)) return ExtReal::plus_infinity();
  return ExtReal(o.support(q.y));
}

// --- skew-linear ----------------------------------------------------------

struct SkewParts {
  Eigen::MatrixXd a;
  Eigen::MatrixXd u;
  Eigen::MatrixXd au;
};

SkewParts parts(const SkewLinearOracle& o) {
  SkewParts p{to_eigen(o.matrix()), to_eigen(o.basis()), {}};
  p.au = p.a * p.u;
  return p;
}

bool is_zero(const Eigen::VectorXd& v, double scale) {
  return v.norm() <= kOracleGraphTol * (1.0 + scale);
}

ExtReal phi_of(const SkewLinearOracle& o, ChainOrder n, const GraphPair& q) {
  check_query_dims(q, o.dim());
  if (n.is_infinite() || n.value() > 2) {
    throw UnsupportedOracleError("skew phi: closed form only known for n = 1 and n = 2");
  }
  const SkewParts p = parts(o);
  const Eigen::VectorXd x = to_eigen(q.x);
  const Eigen::VectorXd y = to_eigen(q.y);
  const double scale = x.norm() + y.norm();
  if (n.value() == 1) {
    // Indicator of the annihilator of the graph.
    return is_zero(p.u.transpose() * (y - p.a * x), scale) ? ExtReal(0.0)
                                                           : ExtReal::plus_infinity();
  }
  const bool inner = max_singular_value(p.u.transpose() * p.au) <= kRankCutoff;
  const bool ok = inner && is_zero(p.u.transpose() * y, scale) &&
                  is_zero(p.au.transpose() * x, scale);
  return ok ? ExtReal(0.0) : ExtReal::plus_infinity();
}

ExtReal chi_of(const SkewLinearOracle&, ChainOrder, const GraphPair&) {
  throw UnsupportedOracleError("skew chi: no closed form available");
}

}  // namespace

IdentityOracle::IdentityOracle(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InputError("identity oracle: dimension must be >= 1");
}

RotationOracle::RotationOracle(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || std::abs(theta) > kPi + kThetaBoundaryTol) {
    throw InputError("rotation oracle: theta must lie in [-pi, pi]");
  }
}

Vector RotationOracle::apply(std::span<const double> x) const {
  if (x.size() != 2) throw InputError("rotation oracle: points must be planar");
  const double c = std::cos(theta_);
  const double s = std::sin(theta_);
  return {c * x[0] - s * x[1], s * x[0] + c * x[1]};
}

NormalConeOracle::NormalConeOracle(std::vector<Vector> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("normal_cone oracle: vertex list is empty");
  const std::size_t d = vertices_.front().size();
  if (d == 0) throw InputError("normal_cone oracle: vertices must have dimension >= 1");
  lo_ = hi_ = vertices_.front();
  for (const auto& v : vertices_) {
    if (v.size() != d) throw InputError("normal_cone oracle: mixed vertex dimensions");
    check_finite(v, "normal_cone oracle");
    for (std::size_t i = 0; i < d; ++i) {
      lo_[i] = std::min(lo_[i], v[i]);
      hi_[i] = std::max(hi_[i], v[i]);
    }
  }
  if (d == 1) {
    box_ = true;
    return;
  }
  // A box iff every vertex is a corner and every corner is present.
  std::set<Vector> corners;
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] != lo_[i] && v[i] != hi_[i]) return;
    }
    corners.insert(v);
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (lo_[i] < hi_[i]) expected *= 2;
  }
  box_ = corners.size() == expected;
}

bool NormalConeOracle::contains(std::span<const double> x) const {
  if (x.size() != dim()) throw InputError("normal_cone oracle: dimension mismatch");
  const std::size_t d = dim();
  const std::size_t k = vertices_.size();
  Matrix a(d + 1, k);
  Vector b(d + 1, 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = vertices_[j][i];
    a(d, j) = 1.0;
  }
  std::copy(x.begin(), x.end(), b.begin());
  return solve_standard_form(a, b, Vector(k, 0.0)).status == LpStatus::kOptimal;
}

double NormalConeOracle::support(std::span<const double> y) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, dot(v, y));
  return best;
}

bool NormalConeOracle::in_range(std::span<const double> y) const {
  if (!box_) throw UnsupportedOracleError("normal_cone: range test needs a box");
  if (y.size() != dim()) throw InputError("normal_cone oracle: dimension mismatch");
  // R(N_C) is the union over faces of products of {0}, R+, R- and R; a
  // coordinate is admissible if one of the per-axis choices contains it.
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool interior = lo_[i] < hi_[i] && y[i] == 0.0;
    const bool upper = y[i] >= 0.0;
    const bool lower = y[i] <= 0.0;
    const bool flat = lo_[i] == hi_[i];
    if (!(interior || upper || lower || flat)) return false;
  }
  return true;
}

SkewLinearOracle::SkewLinearOracle(Matrix a, std::optional<Matrix> domain_basis)
    : a_(std::move(a)) {
  const std::size_t d = a_.rows();
  if (d == 0 || a_.cols() != d) throw InputError("skew oracle: matrix must be square");
  check_finite(a_.data(), "skew oracle");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (std::abs(a_(i, j) + a_(j, i)) > 1e-12) {
        throw InputError("skew oracle: matrix is not skew-symmetric");
      }
    }
  }
  if (!domain_basis) {
    u_ = Matrix::identity(d);
    return;
  }
  u_ = std::move(*domain_basis);
  explicit_basis_ = true;
  if (u_.rows() != d || u_.cols() == 0 || u_.cols() > d) {
    throw InputError("skew oracle: domain basis must be d x k with 1 <= k <= d");
  }
  check_finite(u_.data(), "skew oracle basis");
  const Eigen::MatrixXd u = to_eigen(u_);
  const Eigen::MatrixXd gram = u.transpose() * u;
  const auto k = static_cast<Eigen::Index>(u_.cols());
  if ((gram - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff() > kRankCutoff) {
    throw InputError("skew oracle: domain basis must have orthonormal columns");
  }
}

std::size_t oracle_dim(const AnalyticOracle& o) {
  return std::visit(Overloaded{[](const IdentityOracle& v) { return v.dim(); },
                               [](const RotationOracle&) { return std::size_t{2}; },
                               [](const NormalConeOracle& v) { return v.dim(); },
                               [](const SkewLinearOracle& v) { return v.dim(); }},
                    o);
}

std::string oracle_kind(const AnalyticOracle& o) {
  static constexpr const char* kNames[] = {"identity", "rotation", "normal_cone", "skew"};
  return kNames[o.index()];
}

ExtReal oracle_phi(const AnalyticOracle& o, ChainOrder n, const GraphPair& q) {
  return std::visit([&](const auto& v) { return phi_of(v, n, q); }, o);
}

ExtReal oracle_chi(const AnalyticOracle& o, ChainOrder n, const GraphPair& q) {
  if (n == ChainOrder(1)) throw InputError("oracle chi is defined here for n >= 2");
  return std::visit([&](const auto& v) { return chi_of(v, n, q); }, o);
}

ChainOrder oracle_order(const AnalyticOracle& o) {
  return std::visit(
      Overloaded{
          [](const IdentityOracle&) { return ChainOrder::infinite(); },
          [](const NormalConeOracle&) { return ChainOrder::infinite(); },
          [](const RotationOracle& r) {
            const double t = std::abs(r.theta());
            if (t == 0.0) return ChainOrder::infinite();
            if (t > kPi / 2.0 + kThetaBoundaryTol) return ChainOrder(1);
            // n-monotone iff |theta| <= pi/n.
            const double ratio = kPi / t;
            double k = std::floor(ratio);
            if (std::abs(ratio - std::round(ratio)) <= kThetaBoundaryTol * ratio) {
              k = std::round(ratio);
            }
            return ChainOrder(static_cast<std::size_t>(k));
          },
          [](const SkewLinearOracle& s) {
            const SkewParts p = parts(s);
            // R(A) orthogonal to D(A): cyclically monotone.
            if (max_singular_value(p.u.transpose() * p.au) <= kRankCutoff) {
              return ChainOrder::infinite();
            }
            // D contained in its annihilator: monotone.
            const Eigen::MatrixXd sym = p.u.transpose() * (p.a + p.a.transpose()) * p.u;
            return max_singular_value(sym) <= kRankCutoff ? ChainOrder(2) : ChainOrder(1);
          }},
      o);
}

FiniteOperator sample_graph(const AnalyticOracle& o, const SampleSpec& spec) {
  const std::size_t d = oracle_dim(o);
  std::vector<GraphPair> pairs;

  if (const auto* id = std::get_if<IdentityOracle>(&o)) {
    for (auto& x : grid(grid_axis(spec), id->dim())) pairs.push_back({x, x});
  } else if (const auto* sk = std::get_if<SkewLinearOracle>(&o)) {
    const Matrix& u = sk->basis();
    const Matrix& a = sk->matrix();
    for (const auto& alpha : grid(grid_axis(spec), u.cols())) {
      Vector x(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < u.cols(); ++j) x[i] += u(i, j) * alpha[j];
      }
      Vector y(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) y[i] += a(i, j) * x[j];
      }
      pairs.push_back({std::move(x), std::move(y)});
    }
  } else if (const auto* rot = std::get_if<RotationOracle>(&o)) {
    if (spec.angles == 0 || spec.radii.empty()) {
      throw InputError("sample: rotation needs at least one radius and one angle");
    }
    for (double r : spec.radii) {
      if (!(r > 0.0) || !std::isfinite(r)) throw InputError("sample: radii must be > 0");
      for (std::size_t k = 0; k < spec.angles; ++k) {
        const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(spec.angles);
        Vector x{r * std::cos(phi), r * std::sin(phi)};
        Vector y = rot->apply(x);
        pairs.push_back({std::move(x), std::move(y)});
      }
    }
  } else {
    const auto& nc = std::get<NormalConeOracle>(o);
    if (!nc.is_box()) {
      throw UnsupportedOracleError("sample: normal_cone sampling needs an interval or a box");
    }
    for (double mag : spec.magnitudes) {
      if (!(mag > 0.0) || !std::isfinite(mag)) {
        throw InputError("sample: magnitudes must be > 0");
      }
    }
    const Vector& lo = nc.lower();
    const Vector& hi = nc.upper();
    const Vector zero(d, 0.0);
    std::vector<GraphPair> raw;

    // Corners: y = 0 plus the outward axis rays.
    std::vector<Vector> corners{Vector{}};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Vector> next;
      for (const auto& c : corners) {
        for (double v : {lo[i], hi[i]}) {
          Vector e(c);
          e.push_back(v);
          next.push_back(std::move(e));
        }
      }
      corners = std::move(next);
    }
    for (const auto& c : corners) {
      raw.push_back({c, zero});
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> dirs;
        if (lo[i] == hi[i]) {
          dirs = {-1.0, 1.0};
        } else {
          dirs = {c[i] == hi[i] ? 1.0 : -1.0};
        }
        for (double dir : dirs) {
          for (double mag : spec.magnitudes) {
            Vector y(zero);
            y[i] = dir * mag;
            raw.push_back({c, std::move(y)});
          }
        }
      }
    }
    Vector center(d);
    for (std::size_t i = 0; i < d; ++i) center[i] = 0.5 * (lo[i] + hi[i]);
    for (std::size_t i = 0; i < d; ++i) {
      for (double v : {lo[i], hi[i]}) {
        Vector f(center);
        f[i] = v;
        raw.push_back({std::move(f), zero});
      }
    }
    raw.push_back({center, zero});
    std::sort(raw.begin(), raw.end(), [](const GraphPair& a, const GraphPair& b) {
      return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    pairs = std::move(raw);
  }
  return FiniteOperator(PairingSpace::euclidean(d), std::move(pairs));
}

}  // namespace monoscope
