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

#include "monoscope/envelope.hpp"

#include <algorithm>
#include <random>

#include "monoscope/errors.hpp"
#include "monoscope/simplex.hpp"

namespace monoscope {
namespace {

Vector concat(const Vector& x, const Vector& y) {
  Vector z(x);
  z.insert(z.end(), y.begin(), y.end());
  return z;
}

GraphPair split(const PairingSpace& space, const Vector& z) {
  const auto mid = z.begin() + static_cast<std::ptrdiff_t>(space.d1());
  return {Vector(z.begin(), mid), Vector(mid, z.end())};
}

}  // namespace

EnvelopeInstance build_envelope(const ChainContext& ctx, ChainOrder n) {
  const FiniteOperator& op = ctx.op();
  if (op.empty()) throw InputError("build_envelope: operator has an empty graph");
  if (n.is_infinite() && !ctx.cyclically_monotone()) {
    throw ImproperValueError(
        "envelope undefined (improper): chi is -inf on the whole grid");
  }

  EnvelopeInstance env{op.space(), n, {}};
  const auto dom = op.domain();
  const auto ran = op.range();
  for (const auto& x : dom) {
    for (const auto& y : ran) {
      GraphPair q{x, y};
      const ExtReal v = chi_n(ctx, n, q).value;
      if (v.is_finite()) env.support.push_back({concat(x, y), v.value()});
    }
  }
  return env;
}

EnvelopeInstance build_envelope(const FiniteOperator& op, ChainOrder n, double tol) {
  return build_envelope(ChainContext(op, tol), n);
}

ExtReal psi_eval(const EnvelopeInstance& envelope, const GraphPair& q) {
  envelope.space.check_x(q.x);
  envelope.space.check_y(q.y);
  const auto& support = envelope.support;
  if (support.empty()) return ExtReal::plus_infinity();

  const Vector target = concat(q.x, q.y);
  const std::size_t dim = target.size();
  const std::size_t k = support.size();
  Matrix a(dim + 1, k);
  Vector b(dim + 1, 1.0);
  Vector c(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < dim; ++r) a(r, j) = support[j].z[r];
    a(dim, j) = 1.0;
    c[j] = support[j].value;
  }
  std::copy(target.begin(), target.end(), b.begin());

  const LpResult lp = solve_standard_form(a, b, c);
  if (lp.status != LpStatus::kOptimal) return ExtReal::plus_infinity();
  return ExtReal(lp.objective);
}

PsiMonotoneCheck check_monotone_via_psi(const FiniteOperator& op,
                                        const PsiCheckOptions& options) {
  PsiMonotoneCheck result;
  if (op.empty()) return result;

  const EnvelopeInstance env = build_envelope(op, ChainOrder(1), options.tol);
  const PairingSpace& space = env.space;

  auto probe = [&](const Vector& z) {
    ++result.points_checked;
    GraphPair q = split(space, z);
    const ExtReal psi = psi_eval(env, q);
    const double c = space.coupling(q.x, q.y);
    if (psi < ExtReal(c - options.tol)) {
      result.monotone = false;
      result.witness = std::move(q);
      result.witness_psi = psi;
      result.witness_coupling = c;
      return true;
    }
    return false;
  };

  const auto& s = env.support;
  for (const auto& p : s) {
    if (probe(p.z)) return result;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vector mid(s[i].z.size());
      for (std::size_t r = 0; r < mid.size(); ++r) mid[r] = 0.5 * (s[i].z[r] + s[j].z[r]);
      if (probe(mid)) return result;
    }
  }
  if (s.size() < 2) return result;

  // Exponential weights normalised to one are uniform on the simplex.
  std::mt19937_64 rng(options.seed);
  std::exponential_distribution<double> expo(1.0);
  Vector weights(s.size());
  for (std::size_t t = 0; t < options.random_points; ++t) {
    double total = 0.0;
    for (double& w : weights) total += (w = expo(rng));
    Vector z(s.front().z.size(), 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      for (std::size_t r = 0; r < z.size(); ++r) z[r] += weights[k] / total * s[k].z[r];
    }
    if (probe(z)) return result;
  }
  return result;
}

}  // namespace monoscope
