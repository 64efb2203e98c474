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

#ifndef MONOSCOPE_FINITE_OPERATOR_HPP_
#define MONOSCOPE_FINITE_OPERATOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monoscope/matrix.hpp"
#include "monoscope/pairing.hpp"

namespace monoscope {

// A point (x, y) of X x Y: either a graph pair or a query.
struct GraphPair {
  Vector x;
  Vector y;

  friend bool operator==(const GraphPair&, const GraphPair&) = default;
};

/// Finite multivalued operator T : X => Y, stored as its graph.
///
/// Pairs are deduplicated on construction by exact coordinate equality;
/// first occurrences keep their order, so indices are stable for callers
/// that never pass duplicates.
class FiniteOperator {
 public:
  FiniteOperator() = default;
  explicit FiniteOperator(PairingSpace space, std::vector<GraphPair> pairs = {});

  [[nodiscard]] const PairingSpace& space() const { return space_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }
  [[nodiscard]] const GraphPair& pair(std::size_t i) const { return pairs_.at(i); }
  [[nodiscard]] const std::vector<GraphPair>& pairs() const { return pairs_; }

  // D(T) and R(T), distinct points in first-occurrence order.
  [[nodiscard]] std::vector<Vector> domain() const;
  [[nodiscard]] std::vector<Vector> range() const;

  [[nodiscard]] std::optional<std::size_t> index_of(const GraphPair& p) const;
  [[nodiscard]] bool contains(const GraphPair& p) const { return index_of(p).has_value(); }

  // Graph(T^-1) = {(y, x)} in the transposed dual system.
  [[nodiscard]] FiniteOperator inverse() const;
  // Graph T union extra.
  [[nodiscard]] FiniteOperator extended(std::span<const GraphPair> extra) const;

  // Throws InputError when q does not live in X x Y.
  void check_query(const GraphPair& q) const;

  friend bool operator==(const FiniteOperator&, const FiniteOperator&) = default;

 private:
  PairingSpace space_;
  std::vector<GraphPair> pairs_;
};

/// Weight matrices of the chain recursions.
///
///   step(j, k)  = <x_j - x_k, y_k>   (max-plus chain step, Fitzpatrick side)
///   cycle(i, j) = <x_i - x_j, y_i>   (min-plus cycle weight; a closed walk
///                                     i_1 -> ... -> i_n -> i_1 sums to the
///                                     n-monotonicity expression)
///
/// Both diagonals are exactly zero.
struct ChainWeights {
  Matrix step;
  Matrix cycle;
};

ChainWeights chain_weights(const FiniteOperator& op);

}  // namespace monoscope

#endif  // MONOSCOPE_FINITE_OPERATOR_HPP_
