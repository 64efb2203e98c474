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

#include "replicate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "io.hpp"
#include "monoscope/chaincalc.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/oracles.hpp"

namespace monoscope::cli {
namespace {

constexpr double kPi = std::numbers::pi;

FiniteOperator scalar_op(std::initializer_list<std::pair<double, double>> pts) {
  std::vector<GraphPair> pairs;
  for (auto [x, y] : pts) pairs.push_back({{x}, {y}});
  return FiniteOperator(PairingSpace::euclidean(1), std::move(pairs));
}

GraphPair q1(double x, double y) { return {{x}, {y}}; }

Check near(std::string name, ExtReal got, double want, double tol) {
  const bool ok = got.is_finite() && std::abs(got.value() - want) <= tol;
  return {std::move(name), got.to_string(), format_real(want), ok};
}

Check flag(std::string name, bool ok, std::string computed, std::string expected) {
  return {std::move(name), std::move(computed), std::move(expected), ok};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

FiniteOperator random_operator(std::mt19937_64& rng, std::size_t m, std::size_t d) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<GraphPair> pairs(m);
  for (auto& p : pairs) {
    p.x.resize(d);
    p.y.resize(d);
    for (double& v : p.x) v = coord(rng);
    for (double& v : p.y) v = coord(rng);
  }
  return FiniteOperator(PairingSpace::euclidean(d), std::move(pairs));
}

std::vector<Check> remark13(std::uint64_t) {
  const FiniteOperator t = scalar_op({{0, 0}, {5, 5}});
  const ChainContext ctx(t);
  std::vector<Check> out;
  for (const GraphPair& q : {q1(1, 1), q1(2, 0.32)}) {
    const Relatedness r = relatedness(ctx, ChainOrder::infinite(), q);
    out.push_back(flag("(" + format_real(q.x[0]) + ", " + format_real(q.y[0]) +
                           ") is inf-monotonically related",
                       r.related, "phi=" + r.phi.to_string() + " c=" + format_real(r.coupling),
                       "phi <= c"));
  }
  const FiniteOperator plus = scalar_op({{0, 0}, {5, 5}, {1, 1}, {2, 0.32}});
  const Relatedness r = relatedness(ChainContext(plus), ChainOrder(3), q1(0, 0));
  const bool ok = !r.related && r.margin.is_finite() && std::abs(r.margin.value() + 0.36) <= 1e-12;
  out.push_back(flag("(0, 0) is not 3-related to the extended graph", ok,
                     "margin " + r.margin.to_string(), "margin -0.36"));
  return out;
}

std::vector<Check> example30(std::uint64_t) {
  std::vector<GraphPair> pairs;
  for (int k = 0; k <= 20; ++k) pairs.push_back(q1(k / 10.0, 0.0));
  const ChainContext ctx(FiniteOperator(PairingSpace::euclidean(1), std::move(pairs)));
  std::vector<Check> out;
  const GraphPair q = q1(-1, -1);
  const double c = 1.0;
  for (ChainOrder n : {ChainOrder(1), ChainOrder(2), ChainOrder(3), ChainOrder::infinite()}) {
    const ExtReal phi = phi_n(ctx, n, q).value;
    const bool ok = phi == ExtReal(0.0) && phi < ExtReal(c);
    out.push_back(flag("phi_" + n.to_string() + "(-1, -1) = 0 < 1 = c", ok, phi.to_string(), "0"));
  }
  out.push_back(flag("half-line sample is cyclically monotone",
                     monotonicity_order(ctx).order.is_infinite(),
                     monotonicity_order(ctx).order.to_string(), "inf"));
  return out;
}

std::vector<Check> example38(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::size_t infinite = 0;
  constexpr std::size_t kTrials = 500;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const std::size_t m = size(rng);
    Vector xs(m), ys(m);
    for (double& v : xs) v = coord(rng);
    for (double& v : ys) v = coord(rng);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<GraphPair> pairs;
    for (std::size_t i = 0; i < m; ++i) pairs.push_back(q1(xs[i], ys[i]));
    const FiniteOperator op(PairingSpace::euclidean(1), std::move(pairs));
    if (monotonicity_order(op).order.is_infinite()) ++infinite;
  }
  std::vector<Check> out;
  out.push_back(flag("{(0,0),(5,5)} has order inf",
                     monotonicity_order(scalar_op({{0, 0}, {5, 5}})).order.is_infinite(),
                     monotonicity_order(scalar_op({{0, 0}, {5, 5}})).order.to_string(), "inf"));
  out.push_back(flag("random monotone graphs in RxR have order inf", infinite == kTrials,
                     std::to_string(infinite) + "/" + std::to_string(kTrials),
                     std::to_string(kTrials) + "/" + std::to_string(kTrials)));
  return out;
}

std::vector<Check> example40(std::uint64_t) {
  std::vector<Check> out;
  const AnalyticOracle interval = NormalConeOracle({{0.0}, {1.0}});
  const FiniteOperator s = sample_graph(interval);
  const FiniteOperator want = scalar_op({{0, -1}, {0, 0}, {0.5, 0}, {1, 0}, {1, 1}});
  out.push_back(flag("interval sample", s == want, std::to_string(s.size()) + " pairs",
                     "{(0,-1),(0,0),(0.5,0),(1,0),(1,1)}"));

  bool normal = true;
  for (const auto& p : s.pairs()) {
    for (double u : {0.0, 1.0}) normal = normal && (u - p.x[0]) * p.y[0] <= 0.0;
  }
  out.push_back(flag("sampled pairs satisfy the normal-cone inequality", normal, yes_no(normal), "yes"));
  out.push_back(flag("interval sample is cyclically monotone",
                     monotonicity_order(s).order.is_infinite(),
                     monotonicity_order(s).order.to_string(), "inf"));
  out.push_back(near("phi(0.5, 2) closed form", oracle_phi(interval, ChainOrder(1), q1(0.5, 2)), 2.0, 1e-12));
  out.push_back(near("phi_1 of the sample attains sigma_C at (0.5, 2)",
                     phi_n(s, ChainOrder(1), q1(0.5, 2)).value, 2.0, 1e-12));
  const ExtReal outside = oracle_phi(interval, ChainOrder(2), q1(1.5, 0));
  out.push_back(flag("phi(1.5, 0) = inf outside C", outside.is_plus_infinity(), outside.to_string(), "inf"));

  // Sandwich on the unit square.
  const AnalyticOracle square = NormalConeOracle({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  SampleSpec spec;
  spec.magnitudes = {0.5, 1.0, 2.0};
  const ChainContext ctx(sample_graph(square, spec));
  const std::vector<GraphPair> queries{{{0.5, 0.5}, {1, -1}}, {{1, 1}, {0.3, 0.2}},
                                       {{0, 1}, {-1, 2}},     {{1, 0}, {1, 0}},
                                       {{0.5, 0}, {0, -1}}};
  double worst_phi = -1.0;
  double worst_chi = -1.0;
  for (ChainOrder n : {ChainOrder(2), ChainOrder(3), ChainOrder::infinite()}) {
    for (const auto& q : queries) {
      const ExtReal op = oracle_phi(square, n, q);
      const ExtReal sp = phi_n(ctx, n, q).value;
      if (op.is_finite() && sp.is_finite()) worst_phi = std::max(worst_phi, sp.value() - op.value());
      if (sp.is_plus_infinity() && !op.is_plus_infinity()) worst_phi = 1.0;
      const ExtReal oc = oracle_chi(square, n, q);
      const ExtReal sc = chi_n(ctx, n, q).value;
      if (oc.is_finite() && sc.is_finite()) worst_chi = std::max(worst_chi, oc.value() - sc.value());
      if (sc.is_minus_infinity() && !oc.is_minus_infinity()) worst_chi = 1.0;
    }
  }
  out.push_back(flag("square: sampled phi <= closed form", worst_phi <= 1e-9,
                     "max excess " + format_real(std::max(worst_phi, 0.0)), "<= 1e-09"));
  out.push_back(flag("square: sampled chi >= closed form", worst_chi <= 1e-9,
                     "max deficit " + format_real(std::max(worst_chi, 0.0)), "<= 1e-09"));
  return out;
}

FiniteOperator identity_grid(double lo, double hi, std::size_t points) {
  SampleSpec spec;
  spec.lo = lo;
  spec.hi = hi;
  spec.grid_points = points;
  return sample_graph(IdentityOracle(1), spec);
}

std::vector<Check> example42(std::uint64_t) {
  std::vector<Check> out;
  const AnalyticOracle id1 = IdentityOracle(1);
  const AnalyticOracle id2 = IdentityOracle(2);
  out.push_back(near("closed form phi_3(1, 0) = 3/8", oracle_phi(id1, ChainOrder(3), q1(1, 0)), 0.375, 1e-15));
  out.push_back(near("closed form phi_inf((1,0),(0,1)) = 1",
                     oracle_phi(id2, ChainOrder::infinite(), {{1, 0}, {0, 1}}), 1.0, 1e-15));
  out.push_back(near("closed form chi_2(1, 0) = 1", oracle_chi(id1, ChainOrder(2), q1(1, 0)), 1.0, 1e-15));

  const FiniteOperator coarse = identity_grid(0, 1, 3);
  out.push_back(near("grid {0,0.5,1}: phi_1(1, 0) = 0.25", phi_n(coarse, ChainOrder(1), q1(1, 0)).value, 0.25, 1e-15));
  double worst = 0.0;
  for (const auto& a : coarse.pairs()) {
    for (const auto& b : coarse.pairs()) {
      const double x = a.x[0];
      const double y = b.y[0];
      const ExtReal v = chi_n(coarse, ChainOrder(2), q1(x, y)).value;
      worst = std::max(worst, std::abs(v.value() - (x * x + y * y - x * y)));
    }
  }
  out.push_back(flag("grid {0,0.5,1}: chi_2 = x^2 + y^2 - xy on D x R", worst <= 1e-15,
                     "max error " + format_real(worst), "0"));

  const ChainContext fine(identity_grid(-2, 2, 401));
  for (std::size_t n = 1; n <= 3; ++n) {
    double err = 0.0;
    for (const GraphPair& q : {q1(1, 0), q1(-1.5, 0.7), q1(0.3, 1.9)}) {
      const double got = phi_n(fine, ChainOrder(n), q).value.value();
      err = std::max(err, std::abs(got - oracle_phi(id1, ChainOrder(n), q).value()));
    }
    out.push_back(flag("step-0.01 grid matches phi_" + std::to_string(n) + " within 1e-3",
                       err <= 1e-3, "max error " + format_real(err), "<= 0.001"));
  }
  for (double h : {0.25, 0.1}) {
    const auto points = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
    const FiniteOperator g = identity_grid(0, 1, points);
    out.push_back(near("antiderivative r(1) = (1-h)/2 at h = " + format_real(h),
                       antiderivative(g, 0, Vector{1.0}), (1.0 - h) / 2.0, 1e-12));
  }
  return out;
}

std::vector<Check> example43(std::uint64_t) {
  std::vector<Check> out;
  for (std::size_t k = 2; k <= 6; ++k) {
    const AnalyticOracle rot = RotationOracle(kPi / static_cast<double>(k));
    const OrderReport rep = monotonicity_order(sample_graph(rot));
    const ChainOrder closed = oracle_order(rot);
    const bool ok = rep.order == ChainOrder(k) && closed == ChainOrder(k);
    out.push_back(flag("theta = pi/" + std::to_string(k) + ": order of 36-point sample",
                       ok, rep.order.to_string() + " (closed form " + closed.to_string() + ")",
                       std::to_string(k)));
  }
  const double t = kPi / 6.0;
  // |(0,1) - R(1,0)|^2 = 2 - 2 sin(pi/6) = 1.
  out.push_back(near("chi_2 at theta = pi/6, q = ((1,0),(0,1))",
                     oracle_chi(RotationOracle(t), ChainOrder(2), {{1, 0}, {0, 1}}),
                     std::cos(t), 1e-12));
  const ExtReal beyond = oracle_chi(RotationOracle(3 * kPi / 4), ChainOrder(3), {{1, 2}, {0.5, -1}});
  out.push_back(flag("chi_3 at theta = 3pi/4 is -inf", beyond.is_minus_infinity(), beyond.to_string(), "-inf"));

  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const double k = static_cast<double>(n);
    const double th = 1e-6;
    const double coef = std::sin(k * th) / (2.0 * std::sin((k + 1.0) * th));
    worst = std::max(worst, std::abs(coef - k / (2.0 * (k + 1.0))));
  }
  out.push_back(flag("rotation coefficients tend to the identity ones", worst <= 1e-4,
                     "max gap " + format_real(worst), "<= 0.0001"));
  return out;
}

std::vector<Check> example44(std::uint64_t) {
  std::vector<Check> out;
  SampleSpec spec;
  spec.grid_points = 3;
  auto both = [&](const std::string& name, const SkewLinearOracle& s, ChainOrder want) {
    const AnalyticOracle o = s;
    const ChainOrder closed = oracle_order(o);
    const ChainOrder sampled = monotonicity_order(sample_graph(o, spec)).order;
    out.push_back(flag(name, closed == want && sampled == want,
                       closed.to_string() + " (sample " + sampled.to_string() + ")",
                       want.to_string()));
  };
  both("A = [[0,-1],[1,0]] on R^2", SkewLinearOracle(Matrix(2, 2, {0, -1, 1, 0})), ChainOrder(2));
  both("A = 0 on R^2", SkewLinearOracle(Matrix(2, 2)), ChainOrder::infinite());
  Matrix a4(4, 4, {0, 0, -1, -2, 0, 0, 3, -1, 1, -3, 0, 0, 2, 1, 0, 0});
  Matrix basis(4, 2, {1, 0, 0, 1, 0, 0, 0, 0});
  both("4x4 skew, range orthogonal to a 2-dim domain", SkewLinearOracle(a4, basis),
       ChainOrder::infinite());
  both("same 4x4 skew on all of R^4", SkewLinearOracle(a4), ChainOrder(2));
  return out;
}

std::vector<Check> kt(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> msize(1, 6);
  std::uniform_int_distribution<std::size_t> dsize(1, 3);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  double worst = 0.0;
  std::size_t agree = 0;
  std::size_t total = 0;
  constexpr std::size_t kInstances = 50;
  for (std::size_t inst = 0; inst < kInstances; ++inst) {
    const std::size_t d = dsize(rng);
    const FiniteOperator t = random_operator(rng, msize(rng), d);
    const FiniteOperator k = build_KT(t);
    const ChainContext ct(t);
    const ChainContext ck(k);
    for (std::size_t q = 0; q < 10; ++q) {
      Vector x(d), y(d), u(d), v(d);
      for (auto* vec : {&x, &y, &u, &v}) {
        for (double& e : *vec) e = coord(rng);
      }
      Vector z(x), w(u);
      z.insert(z.end(), y.begin(), y.end());
      w.insert(w.end(), v.begin(), v.end());
      for (std::size_t n = 1; n <= 5; ++n) {
        const double lhs = phi_n(ck, ChainOrder(n), {z, w}).value.value();
        const double rhs = phi_n(ct, ChainOrder(n), {x, v}).value.value() +
                           phi_n(ct, ChainOrder(n), {u, y}).value.value();
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      ++total;
      if (is_n_monotone(ct, ChainOrder(n)) == is_n_monotone(ck, ChainOrder(n))) ++agree;
    }
  }
  return {flag("phi factorization over 50 random operators", worst < 1e-9,
               "max residual " + format_real(worst), "< 1e-09"),
          flag("T and K_T share n-monotonicity", agree == total,
               std::to_string(agree) + "/" + std::to_string(total),
               std::to_string(total) + "/" + std::to_string(total))};
}

using CaseFn = std::function<std::vector<Check>(std::uint64_t)>;

const std::map<std::string, CaseFn, std::less<>>& registry() {
  static const std::map<std::string, CaseFn, std::less<>> cases{
      {"remark13", remark13},   {"example30", example30}, {"example38", example38},
      {"example40", example40}, {"example42", example42}, {"example43", example43},
      {"example44", example44}, {"kt", kt}};
  return cases;
}

}  // namespace

const std::vector<std::string>& replicate_cases() {
  static const std::vector<std::string> names{"remark13",  "example30", "example38",
                                              "example40", "example42", "example43",
                                              "example44", "kt"};
  return names;
}

std::vector<Check> run_replicate(std::string_view name, std::uint64_t seed) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw InputError("unknown replicate case \"" + std::string(name) + "\"");
  return it->second(seed);
}

}  // namespace monoscope::cli
