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

#ifndef MONOSCOPE_CHAINCALC_HPP_
#define MONOSCOPE_CHAINCALC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monoscope/chain_order.hpp"
#include "monoscope/ext_real.hpp"
#include "monoscope/finite_operator.hpp"

namespace monoscope {

inline constexpr double kDefaultTolerance = 1e-9;

// A closed walk i_1 -> ... -> i_k -> i_1 whose cycle-weight sum is negative.
struct CycleWitness {
  std::vector<std::size_t> indices;
  double sum = 0.0;
};

struct OrderReport {
  ChainOrder order = ChainOrder::infinite();
  std::optional<CycleWitness> witness;  // present iff order is finite
};

// Value of a sup/inf over chains, with the optimal chain when finite.
struct ChainValue {
  ExtReal value;
  std::vector<std::size_t> argchain;
};

struct Relatedness {
  bool related = false;
  ExtReal phi;         // phi^(n-1)(q)
  double coupling = 0;  // c(q)
  ExtReal margin;      // c(q) - phi^(n-1)(q); negative when not related
};

/// Operator plus the data every chain computation shares: the weight
/// matrices and the cyclic-monotonicity flag (negative-cycle test on the
/// cycle weights, Floyd-Warshall, threshold -tol). Immutable once built.
class ChainContext {
 public:
  explicit ChainContext(FiniteOperator op, double tol = kDefaultTolerance);

  [[nodiscard]] const FiniteOperator& op() const { return op_; }
  [[nodiscard]] const ChainWeights& weights() const { return weights_; }
  [[nodiscard]] double tol() const { return tol_; }
  [[nodiscard]] bool cyclically_monotone() const { return cyclic_; }

 private:
  FiniteOperator op_;
  ChainWeights weights_;
  double tol_;
  bool cyclic_;
};

// Largest n such that T is n-monotone: (shortest closed walk with
// cycle-weight sum < -tol) - 1, or infinity.
OrderReport monotonicity_order(const ChainContext& ctx);
OrderReport monotonicity_order(const FiniteOperator& op, double tol = kDefaultTolerance);

bool is_n_monotone(const ChainContext& ctx, ChainOrder n);
bool is_n_monotone(const FiniteOperator& op, ChainOrder n, double tol = kDefaultTolerance);

/// n-th Fitzpatrick function: sup over chains (x_1,y_1),...,(x_n,y_n) of
///   <x - x_1, y_1> + sum_{i>=2} <x_{i-1} - x_i, y_i> + <x_n, y>.
/// Evaluated by a max-plus recursion over the step weights. For n = inf the
/// value is +inf as soon as T is not cyclically monotone.
ChainValue phi_n(const ChainContext& ctx, ChainOrder n, const GraphPair& q);
ChainValue phi_n(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                 double tol = kDefaultTolerance);

/// Dual chain function: inf over chains with y_1 = y and x_n = x of
///   <x_1, y> + sum_{i=2}^{n} <x_i - x_{i-1}, y_i>.
/// n = 1 gives c restricted to the graph. +inf off D(T) x R(T).
ChainValue chi_n(const ChainContext& ctx, ChainOrder n, const GraphPair& q);
ChainValue chi_n(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                 double tol = kDefaultTolerance);

// q is n-monotonically related to T iff phi^(n-1)(q) <= c(q) + tol; n >= 2.
Relatedness relatedness(const ChainContext& ctx, ChainOrder n, const GraphPair& q);
bool is_n_related(const ChainContext& ctx, ChainOrder n, const GraphPair& q);
bool is_n_related(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                  double tol = kDefaultTolerance);

// Condition C_n(q): phi^(n-1)(q) >= c(q) - tol; n >= 2.
bool satisfies_Cn(const ChainContext& ctx, ChainOrder n, const GraphPair& q);
bool satisfies_Cn(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                  double tol = kDefaultTolerance);

/// Rockafellar antiderivative based at graph pair base_index:
///   r(x) = phi^(inf)(x, y_0) - <x_0, y_0>.
/// +inf everywhere when T is not cyclically monotone.
ExtReal antiderivative(const ChainContext& ctx, std::size_t base_index,
                       std::span<const double> x);
ExtReal antiderivative(const FiniteOperator& op, std::size_t base_index,
                       std::span<const double> x, double tol = kDefaultTolerance);

/// K_T on Z = X x Y with graph {((x_i, y_j), (x_j, y_i))}, paired by
/// z.w = <x, v> + <u, y>.
FiniteOperator build_KT(const FiniteOperator& op);

// Re-evaluate the phi / chi chain sum for explicit indices.
double phi_chain_sum(const FiniteOperator& op, std::span<const std::size_t> chain,
                     const GraphPair& q);
double chi_chain_sum(const FiniteOperator& op, std::span<const std::size_t> chain,
                     const GraphPair& q);
// Sum of cycle weights along i_1 -> ... -> i_k -> i_1.
double cycle_sum(const FiniteOperator& op, std::span<const std::size_t> cycle);

}  // namespace monoscope

#endif  // MONOSCOPE_CHAINCALC_HPP_
