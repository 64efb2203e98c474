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

#ifndef MONOSCOPE_TESTS_SUPPORT_BRUTE_FORCE_HPP_
#define MONOSCOPE_TESTS_SUPPORT_BRUTE_FORCE_HPP_

// Exhaustive reference implementations used as oracles by the unit and
// acceptance tests. Nothing here shares code with the DP implementations
// beyond the data types.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "monoscope/finite_operator.hpp"

namespace monoscope::testing {

inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// x^T B y by explicit double loop.
inline double pair_value(const PairingSpace& s, const Vector& x, const Vector& y) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double b = s.is_identity() ? (i == j ? 1.0 : 0.0) : s.matrix()(i, j);
      total += x[i] * b * y[j];
    }
  }
  return total;
}

inline Vector minus(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Calls f(idx) for every idx in {0..m-1}^n.
template <class F>
void for_each_tuple(std::size_t m, std::size_t n, F&& f) {
  if (m == 0) return;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    f(idx);
    std::size_t k = n;
    while (k > 0) {
      if (++idx[k - 1] < m) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

// sup over all chains of <x - x1, y1> + sum <x_{i-1} - x_i, y_i> + <x_n, y>.
// Works on a raw pair list so that duplicate pairs can be fed in directly.
inline double brute_phi(const PairingSpace& s, const std::vector<GraphPair>& p,
                        std::size_t n, const GraphPair& q) {
  double best = -kPosInf;
  for_each_tuple(p.size(), n, [&](const std::vector<std::size_t>& c) {
    double v = pair_value(s, minus(q.x, p[c[0]].x), p[c[0]].y);
    for (std::size_t i = 1; i < n; ++i) {
      v += pair_value(s, minus(p[c[i - 1]].x, p[c[i]].x), p[c[i]].y);
    }
    v += pair_value(s, p[c[n - 1]].x, q.y);
    best = std::max(best, v);
  });
  return best;
}

// inf of <x1, y> + sum_{i>=2} <x_i - x_{i-1}, y_i> with y1 = y and x_n = x.
inline double brute_chi(const PairingSpace& s, const std::vector<GraphPair>& p,
                        std::size_t n, const GraphPair& q) {
  double best = kPosInf;
  for_each_tuple(p.size(), n, [&](const std::vector<std::size_t>& c) {
    if (p[c[0]].y != q.y || p[c[n - 1]].x != q.x) return;
    double v = pair_value(s, p[c[0]].x, q.y);
    for (std::size_t i = 1; i < n; ++i) {
      v += pair_value(s, minus(p[c[i]].x, p[c[i - 1]].x), p[c[i]].y);
    }
    best = std::min(best, v);
  });
  return best;
}

// Smallest cyclic sum sum_i <x_i - x_{i+1}, y_i> over all n-tuples.
inline double brute_min_cycle(const PairingSpace& s, const std::vector<GraphPair>& p,
                              std::size_t n) {
  double best = kPosInf;
  for_each_tuple(p.size(), n, [&](const std::vector<std::size_t>& c) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = p[c[i]];
      const auto& b = p[c[(i + 1) % n]];
      v += pair_value(s, minus(a.x, b.x), a.y);
    }
    best = std::min(best, v);
  });
  return best;
}

inline double brute_phi(const FiniteOperator& op, std::size_t n, const GraphPair& q) {
  return brute_phi(op.space(), op.pairs(), n, q);
}
inline double brute_chi(const FiniteOperator& op, std::size_t n, const GraphPair& q) {
  return brute_chi(op.space(), op.pairs(), n, q);
}
inline double brute_min_cycle(const FiniteOperator& op, std::size_t n) {
  return brute_min_cycle(op.space(), op.pairs(), n);
}

inline bool brute_n_monotone(const FiniteOperator& op, std::size_t n, double tol) {
  return brute_min_cycle(op, n) >= -tol;
}

// Largest n < m with no violating (n+1)-tuple, or nullopt when no tuple of
// length up to m violates (cyclically monotone).
inline std::optional<std::size_t> brute_order(const FiniteOperator& op, double tol) {
  for (std::size_t k = 2; k <= op.size(); ++k) {
    if (!brute_n_monotone(op, k, tol)) return k - 1;
  }
  return std::nullopt;
}

// Dyadic coordinates k/8 keep every chain sum exact in double precision.
inline double dyadic(std::mt19937_64& rng, int range = 16) {
  std::uniform_int_distribution<int> k(-range, range);
  return k(rng) / 8.0;
}

inline Vector dyadic_vector(std::mt19937_64& rng, std::size_t d, int range = 16) {
  Vector v(d);
  for (double& e : v) e = dyadic(rng, range);
  return v;
}

inline FiniteOperator random_dyadic_operator(std::mt19937_64& rng, std::size_t m,
                                             std::size_t d) {
  std::vector<GraphPair> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    pairs.push_back({dyadic_vector(rng, d), dyadic_vector(rng, d)});
  }
  return FiniteOperator(PairingSpace::euclidean(d), std::move(pairs));
}

inline FiniteOperator random_real_operator(std::mt19937_64& rng, std::size_t m,
                                           std::size_t d) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<GraphPair> pairs(m);
  for (auto& p : pairs) {
    p.x.resize(d);
    p.y.resize(d);
    for (double& e : p.x) e = u(rng);
    for (double& e : p.y) e = u(rng);
  }
  return FiniteOperator(PairingSpace::euclidean(d), std::move(pairs));
}

// Sorted xs against sorted ys: monotone in R x R, hence cyclically monotone.
// Small ranges force repeated x values (multivalued points).
inline FiniteOperator sorted_scalar_operator(std::mt19937_64& rng, std::size_t m,
                                             int range = 16) {
  Vector xs(m), ys(m);
  for (double& v : xs) v = dyadic(rng, range);
  for (double& v : ys) v = dyadic(rng, range);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<GraphPair> pairs;
  for (std::size_t i = 0; i < m; ++i) pairs.push_back({{xs[i]}, {ys[i]}});
  return FiniteOperator(PairingSpace::euclidean(1), std::move(pairs));
}

// Samples of the gradient of h = |x|^2 / 2.
inline FiniteOperator identity_samples(std::mt19937_64& rng, std::size_t m, std::size_t d) {
  std::vector<GraphPair> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    Vector x = dyadic_vector(rng, d);
    pairs.push_back({x, x});
  }
  return FiniteOperator(PairingSpace::euclidean(d), std::move(pairs));
}

// A mix of generic, monotone and cyclically monotone operators so that every
// branch of the decision procedures gets exercised.
inline FiniteOperator random_mixed_operator(std::mt19937_64& rng, std::size_t max_m,
                                            std::size_t max_d) {
  std::uniform_int_distribution<std::size_t> msize(1, max_m);
  std::uniform_int_distribution<std::size_t> dsize(1, max_d);
  std::uniform_int_distribution<int> kind(0, 3);
  const std::size_t m = msize(rng);
  switch (kind(rng)) {
    case 0:
      return sorted_scalar_operator(rng, m);
    case 1:
      return identity_samples(rng, m, dsize(rng));
    case 2: {
      // Scalar graphs are often (but not always) monotone.
      return random_dyadic_operator(rng, m, 1);
    }
    default:
      return random_dyadic_operator(rng, m, dsize(rng));
  }
}

}  // namespace monoscope::testing

#endif  // MONOSCOPE_TESTS_SUPPORT_BRUTE_FORCE_HPP_
