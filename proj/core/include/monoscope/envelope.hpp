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

#ifndef MONOSCOPE_ENVELOPE_HPP_
#define MONOSCOPE_ENVELOPE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoscope/chain_order.hpp"
#include "monoscope/chaincalc.hpp"
#include "monoscope/ext_real.hpp"
#include "monoscope/finite_operator.hpp"

namespace monoscope {

struct SupportPoint {
  Vector z;  // (x, y) concatenated, length d1 + d2
  double value = 0.0;
};

/// Finite description of psi^(n) = cl conv chi^(n): the grid D(T) x R(T)
/// restricted to points where chi^(n) is finite, with those values.
struct EnvelopeInstance {
  PairingSpace space;
  ChainOrder n = ChainOrder(1);
  std::vector<SupportPoint> support;
};

// Throws InputError on an empty operator and ImproperValueError when
// chi^(n) is identically -inf on the grid.
EnvelopeInstance build_envelope(const ChainContext& ctx, ChainOrder n);
EnvelopeInstance build_envelope(const FiniteOperator& op, ChainOrder n,
                                double tol = kDefaultTolerance);

/// Lower convex envelope value at q:
///   min sum l_k v_k  s.t.  sum l_k z_k = q, sum l_k = 1, l >= 0,
/// or +inf when q lies outside the convex hull of the support.
ExtReal psi_eval(const EnvelopeInstance& envelope, const GraphPair& q);

struct PsiCheckOptions {
  std::size_t random_points = 200;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  double tol = kDefaultTolerance;
};

struct PsiMonotoneCheck {
  bool monotone = true;
  std::size_t points_checked = 0;
  // First sampled point with psi < c - tol.
  std::optional<GraphPair> witness;
  ExtReal witness_psi;
  double witness_coupling = 0.0;
};

/// Sampled test of psi^(1) >= c at every support point, every pairwise
/// midpoint and `random_points` random hull points. A negative answer
/// carries a witness; a positive one is evidence at that resolution.
PsiMonotoneCheck check_monotone_via_psi(const FiniteOperator& op,
                                        const PsiCheckOptions& options = {});

}  // namespace monoscope

#endif  // MONOSCOPE_ENVELOPE_HPP_
