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

#include "monoscope/chaincalc.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "monoscope/errors.hpp"

namespace monoscope {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Floyd-Warshall on the cycle weights; false as soon as some closed walk
// drops below -tol.
bool negative_cycle_free(const Matrix& cycle, double tol) {
  const std::size_t m = cycle.rows();
  Matrix dist = cycle;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const double dik = dist(i, k);
      for (std::size_t j = 0; j < m; ++j) {
        const double via = dik + dist(k, j);
        if (via < dist(i, j)) dist(i, j) = via;
      }
      if (dist(i, i) < -tol) return false;
    }
  }
  return true;
}

std::vector<std::size_t> compress_repeats(const std::vector<std::size_t>& chain) {
  std::vector<std::size_t> out;
  for (std::size_t idx : chain) {
    if (out.empty() || out.back() != idx) out.push_back(idx);
  }
  return out;
}

// Shortest closed walk in the cycle-weight digraph whose sum falls below
// -threshold_tol (first pass) or below zero (fallback for walks that only
// violate at the tolerance scale).
std::optional<CycleWitness> shortest_violation(const ChainContext& ctx) {
  const Matrix& w = ctx.weights().cycle;
  const std::size_t m = w.rows();
  if (m < 2) return std::nullopt;

  // dist[s][v]: cheapest walk s -> v of exactly k steps (self-loops cost 0,
  // so also of at most k steps). pred[k][s*m + v] is the penultimate node.
  std::vector<std::vector<std::uint32_t>> pred;
  Matrix dist = w;
  pred.emplace_back(m * m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t v = 0; v < m; ++v) pred[0][s * m + v] = static_cast<std::uint32_t>(s);
  }

  struct Hit {
    std::size_t level;
    std::size_t start;
  };
  std::optional<Hit> strict;
  std::optional<Hit> loose;

  for (std::size_t level = 2; level <= m && !strict; ++level) {
    Matrix next(m, m, kInf);
    std::vector<std::uint32_t> p(m * m, 0);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t u = 0; u < m; ++u) {
        const double dsu = dist(s, u);
        if (dsu == kInf) continue;
        const auto wrow = w.row(u);
        for (std::size_t v = 0; v < m; ++v) {
          const double cand = dsu + wrow[v];
          // Strict '<' keeps the lowest-index predecessor on ties.
          if (cand < next(s, v)) {
            next(s, v) = cand;
            p[s * m + v] = static_cast<std::uint32_t>(u);
          }
        }
      }
    }
    dist = std::move(next);
    pred.push_back(std::move(p));
    for (std::size_t s = 0; s < m; ++s) {
      if (!strict && dist(s, s) < -ctx.tol()) strict = Hit{level, s};
      if (!loose && dist(s, s) < 0.0) loose = Hit{level, s};
    }
  }
  const std::optional<Hit> hit = strict ? strict : loose;
  if (!hit) return std::nullopt;

  // Walk back from (start, start) at the hit level.
  std::vector<std::size_t> rev;
  std::size_t v = hit->start;
  for (std::size_t level = hit->level; level >= 1; --level) {
    const std::size_t u = pred[level - 1][hit->start * m + v];
    rev.push_back(u);
    v = u;
  }
  std::reverse(rev.begin(), rev.end());
  CycleWitness witness;
  witness.indices = std::move(rev);
  witness.sum = cycle_sum(ctx.op(), witness.indices);
  return witness;
}

void require_order_at_least_two(ChainOrder n, const char* what) {
  if (!n.is_infinite() && n.value() < 2) {
    throw InputError(std::string(what) + ": n must be >= 2 or inf");
  }
}

}  // namespace

ChainContext::ChainContext(FiniteOperator op, double tol)
    : op_(std::move(op)), weights_(chain_weights(op_)), tol_(tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  cyclic_ = negative_cycle_free(weights_.cycle, tol_);
}

OrderReport monotonicity_order(const ChainContext& ctx) {
  OrderReport report;
  if (ctx.cyclically_monotone()) return report;
  auto witness = shortest_violation(ctx);
  if (!witness) {
    throw std::logic_error(
        "monotonicity_order: negative cycle detected but no violating walk found");
  }
  report.order = ChainOrder(witness->indices.size() - 1);
  report.witness = std::move(witness);
  return report;
}

OrderReport monotonicity_order(const FiniteOperator& op, double tol) {
  return monotonicity_order(ChainContext(op, tol));
}

bool is_n_monotone(const ChainContext& ctx, ChainOrder n) {
  if (n == ChainOrder(1) || ctx.cyclically_monotone()) return true;
  if (n.is_infinite()) return false;
  return monotonicity_order(ctx).order >= n;
}

bool is_n_monotone(const FiniteOperator& op, ChainOrder n, double tol) {
  return is_n_monotone(ChainContext(op, tol), n);
}

ChainValue phi_n(const ChainContext& ctx, ChainOrder n, const GraphPair& q) {
  const FiniteOperator& op = ctx.op();
  op.check_query(q);
  const std::size_t m = op.size();
  if (m == 0) return {ExtReal::minus_infinity(), {}};
  if (n.is_infinite() && !ctx.cyclically_monotone()) {
    return {ExtReal::plus_infinity(), {}};
  }
  const PairingSpace& space = op.space();
  const Matrix& step = ctx.weights().step;

  // Backward recursion: tail[j] is the best value of a chain starting at j,
  // excluding the leading <x - x_j, y_j> term.
  std::vector<double> tail(m);
  for (std::size_t k = 0; k < m; ++k) {
    tail[k] = space.coupling_unchecked(op.pair(k).x.data(), q.y.data());
  }
  const std::size_t levels = n.is_infinite() ? m : n.value();
  std::vector<std::vector<std::uint32_t>> succ;  // succ[l][j]: next index
  std::vector<double> next(m);
  std::vector<std::uint32_t> choice(m);
  for (std::size_t level = 2; level <= levels; ++level) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto row = step.row(j);
      double best = -kInf;
      std::uint32_t arg = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const double cand = row[k] + tail[k];
        if (cand > best) {
          best = cand;
          arg = static_cast<std::uint32_t>(k);
        }
      }
      next[j] = best;
      choice[j] = arg;
    }
    // With zero self-steps the recursion is monotone; an exact fixed point
    // means every longer chain is no better.
    if (n.is_infinite() && next == tail) break;
    tail.swap(next);
    succ.push_back(choice);
  }

  Vector diff(space.d1());
  double best = -kInf;
  std::size_t first = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& pj = op.pair(j);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = q.x[i] - pj.x[i];
    const double cand = space.coupling_unchecked(diff.data(), pj.y.data()) + tail[j];
    if (cand > best) {
      best = cand;
      first = j;
    }
  }

  std::vector<std::size_t> chain{first};
  for (auto it = succ.rbegin(); it != succ.rend(); ++it) {
    chain.push_back((*it)[chain.back()]);
  }
  if (n.is_infinite()) chain = compress_repeats(chain);
  return {ExtReal(best), std::move(chain)};
}

ChainValue phi_n(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                 double tol) {
  return phi_n(ChainContext(op, tol), n, q);
}

ChainValue chi_n(const ChainContext& ctx, ChainOrder n, const GraphPair& q) {
  const FiniteOperator& op = ctx.op();
  op.check_query(q);
  const std::size_t m = op.size();
  if (m == 0) return {ExtReal::plus_infinity(), {}};
  const PairingSpace& space = op.space();

  if (n == ChainOrder(1)) {
    if (auto idx = op.index_of(q)) {
      return {ExtReal(space.coupling(q.x, q.y)), {*idx}};
    }
    return {ExtReal::plus_infinity(), {}};
  }

  // Endpoint constraints: y_1 = y, x_n = x.
  std::vector<double> head(m, kInf);
  bool any_head = false;
  bool any_tail = false;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& pk = op.pair(k);
    if (pk.y == q.y) {
      head[k] = space.coupling_unchecked(pk.x.data(), q.y.data());
      any_head = true;
    }
    if (pk.x == q.x) any_tail = true;
  }
  if (!any_head || !any_tail) return {ExtReal::plus_infinity(), {}};
  if (n.is_infinite() && !ctx.cyclically_monotone()) {
    return {ExtReal::minus_infinity(), {}};
  }

  const Matrix& cycle = ctx.weights().cycle;
  const std::size_t levels = n.is_infinite() ? std::max<std::size_t>(m, 2) : n.value();
  std::vector<std::vector<std::uint32_t>> pred;  // pred[l][k]: previous index
  std::vector<double> next(m);
  std::vector<std::uint32_t> choice(m);
  for (std::size_t level = 2; level <= levels; ++level) {
    for (std::size_t k = 0; k < m; ++k) {
      // Step j -> k costs <x_k - x_j, y_k> = cycle(k, j).
      const auto row = cycle.row(k);
      double best = kInf;
      std::uint32_t arg = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (head[j] == kInf) continue;
        const double cand = head[j] + row[j];
        if (cand < best) {
          best = cand;
          arg = static_cast<std::uint32_t>(j);
        }
      }
      next[k] = best;
      choice[k] = arg;
    }
    if (n.is_infinite() && level > 2 && next == head) break;
    head.swap(next);
    pred.push_back(choice);
  }

  double best = kInf;
  std::size_t last = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (op.pair(k).x != q.x) continue;
    if (head[k] < best) {
      best = head[k];
      last = k;
    }
  }
  if (best == kInf) return {ExtReal::plus_infinity(), {}};

  std::vector<std::size_t> chain{last};
  for (auto it = pred.rbegin(); it != pred.rend(); ++it) {
    chain.push_back((*it)[chain.back()]);
  }
  std::reverse(chain.begin(), chain.end());
  if (n.is_infinite()) chain = compress_repeats(chain);
  return {ExtReal(best), std::move(chain)};
}

ChainValue chi_n(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                 double tol) {
  return chi_n(ChainContext(op, tol), n, q);
}

Relatedness relatedness(const ChainContext& ctx, ChainOrder n, const GraphPair& q) {
  require_order_at_least_two(n, "relatedness");
  Relatedness r;
  r.phi = phi_n(ctx, n.predecessor(), q).value;
  r.coupling = ctx.op().space().coupling(q.x, q.y);
  r.margin = ExtReal(r.coupling) - r.phi;
  r.related = r.phi <= ExtReal(r.coupling + ctx.tol());
  return r;
}

bool is_n_related(const ChainContext& ctx, ChainOrder n, const GraphPair& q) {
  return relatedness(ctx, n, q).related;
}

bool is_n_related(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                  double tol) {
  return is_n_related(ChainContext(op, tol), n, q);
}

bool satisfies_Cn(const ChainContext& ctx, ChainOrder n, const GraphPair& q) {
  require_order_at_least_two(n, "satisfies_Cn");
  const ExtReal phi = phi_n(ctx, n.predecessor(), q).value;
  const double c = ctx.op().space().coupling(q.x, q.y);
  return phi >= ExtReal(c - ctx.tol());
}

bool satisfies_Cn(const FiniteOperator& op, ChainOrder n, const GraphPair& q,
                  double tol) {
  return satisfies_Cn(ChainContext(op, tol), n, q);
}

ExtReal antiderivative(const ChainContext& ctx, std::size_t base_index,
                       std::span<const double> x) {
  const FiniteOperator& op = ctx.op();
  if (base_index >= op.size()) {
    throw InputError("antiderivative: base index " + std::to_string(base_index) +
                     " out of range (operator has " + std::to_string(op.size()) +
                     " pairs)");
  }
  const GraphPair& base = op.pair(base_index);
  const GraphPair q{Vector(x.begin(), x.end()), base.y};
  const ExtReal phi = phi_n(ctx, ChainOrder::infinite(), q).value;
  return phi - ExtReal(op.space().coupling(base.x, base.y));
}

ExtReal antiderivative(const FiniteOperator& op, std::size_t base_index,
                       std::span<const double> x, double tol) {
  return antiderivative(ChainContext(op, tol), base_index, x);
}

FiniteOperator build_KT(const FiniteOperator& op) {
  std::vector<GraphPair> pairs;
  const std::size_t m = op.size();
  pairs.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& pi = op.pair(i);
      const auto& pj = op.pair(j);
      GraphPair k;
      k.x = pi.x;
      k.x.insert(k.x.end(), pj.y.begin(), pj.y.end());
      k.y = pj.x;
      k.y.insert(k.y.end(), pi.y.begin(), pi.y.end());
      pairs.push_back(std::move(k));
    }
  }
  return FiniteOperator(op.space().product(), std::move(pairs));
}

double phi_chain_sum(const FiniteOperator& op, std::span<const std::size_t> chain,
                     const GraphPair& q) {
  if (chain.empty()) throw InputError("phi_chain_sum: empty chain");
  const PairingSpace& s = op.space();
  const auto& first = op.pair(chain.front());
  double total = s.coupling(subtract(q.x, first.x), first.y);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& prev = op.pair(chain[i - 1]);
    const auto& cur = op.pair(chain[i]);
    total += s.coupling(subtract(prev.x, cur.x), cur.y);
  }
  total += s.coupling(op.pair(chain.back()).x, q.y);
  return total;
}

double chi_chain_sum(const FiniteOperator& op, std::span<const std::size_t> chain,
                     const GraphPair& q) {
  if (chain.empty()) throw InputError("chi_chain_sum: empty chain");
  const PairingSpace& s = op.space();
  if (chain.size() == 1) return s.coupling(q.x, q.y);
  double total = s.coupling(op.pair(chain.front()).x, q.y);
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const auto& prev = op.pair(chain[i - 1]);
    const auto& cur = op.pair(chain[i]);
    total += s.coupling(subtract(cur.x, prev.x), cur.y);
  }
  const auto& penult = op.pair(chain[chain.size() - 2]);
  total += s.coupling(subtract(q.x, penult.x), op.pair(chain.back()).y);
  return total;
}

double cycle_sum(const FiniteOperator& op, std::span<const std::size_t> cycle) {
  const PairingSpace& s = op.space();
  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& a = op.pair(cycle[i]);
    const auto& b = op.pair(cycle[(i + 1) % cycle.size()]);
    total += s.coupling(subtract(a.x, b.x), a.y);
  }
  return total;
}

}  // namespace monoscope
