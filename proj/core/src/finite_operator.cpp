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

#include "monoscope/finite_operator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "monoscope/errors.hpp"

namespace monoscope {
namespace {

struct PairLess {
  bool operator()(const GraphPair* a, const GraphPair* b) const {
    if (a->x != b->x) return a->x < b->x;
    return a->y < b->y;
  }
};

void check_finite(std::span<const double> v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c)) {
      throw InputError(std::string("non-finite coordinate in ") + what);
    }
  }
}

std::vector<Vector> distinct(const std::vector<GraphPair>& pairs, bool take_x) {
  std::vector<Vector> out;
  std::set<Vector> seen;
  for (const auto& p : pairs) {
    const Vector& v = take_x ? p.x : p.y;
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace

FiniteOperator::FiniteOperator(PairingSpace space, std::vector<GraphPair> pairs)
    : space_(std::move(space)) {
  std::set<const GraphPair*, PairLess> seen;
  pairs_.reserve(pairs.size());
  for (auto& p : pairs) {
    space_.check_x(p.x);
    space_.check_y(p.y);
    check_finite(p.x, "graph point x");
    check_finite(p.y, "graph point y");
    if (seen.contains(&p)) continue;
    seen.insert(&p);
  }
  // Second pass keeps first occurrences in their original order.
  for (auto& p : pairs) {
    if (seen.erase(&p) > 0) pairs_.push_back(std::move(p));
  }
}

std::vector<Vector> FiniteOperator::domain() const { return distinct(pairs_, true); }
std::vector<Vector> FiniteOperator::range() const { return distinct(pairs_, false); }

std::optional<std::size_t> FiniteOperator::index_of(const GraphPair& p) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i] == p) return i;
  }
  return std::nullopt;
}

FiniteOperator FiniteOperator::inverse() const {
  std::vector<GraphPair> swapped;
  swapped.reserve(pairs_.size());
  for (const auto& p : pairs_) swapped.push_back({p.y, p.x});
  return FiniteOperator(space_.transposed(), std::move(swapped));
}

FiniteOperator FiniteOperator::extended(std::span<const GraphPair> extra) const {
  std::vector<GraphPair> all = pairs_;
  all.insert(all.end(), extra.begin(), extra.end());
  return FiniteOperator(space_, std::move(all));
}

void FiniteOperator::check_query(const GraphPair& q) const {
  space_.check_x(q.x);
  space_.check_y(q.y);
  check_finite(q.x, "query x");
  check_finite(q.y, "query y");
}

ChainWeights chain_weights(const FiniteOperator& op) {
  const std::size_t m = op.size();
  const PairingSpace& space = op.space();
  ChainWeights w{Matrix(m, m), Matrix(m, m)};
  Vector diff(space.d1());
  for (std::size_t i = 0; i < m; ++i) {
    const auto& pi = op.pair(i);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& pj = op.pair(j);
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = pi.x[k] - pj.x[k];
      // step(i, j) = <x_i - x_j, y_j>, cycle(i, j) = <x_i - x_j, y_i>.
      w.step(i, j) = space.coupling_unchecked(diff.data(), pj.y.data());
      w.cycle(i, j) = space.coupling_unchecked(diff.data(), pi.y.data());
    }
  }
  return w;
}

}  // namespace monoscope
