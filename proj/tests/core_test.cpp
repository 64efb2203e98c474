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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "monoscope/chain_order.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/ext_real.hpp"
#include "monoscope/finite_operator.hpp"
#include "monoscope/pairing.hpp"
#include "support/brute_force.hpp"

namespace monoscope {
namespace {

using testing::pair_value;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ExtReal, SaturatingArithmetic) {
  const ExtReal inf = ExtReal::plus_infinity();
  const ExtReal ninf = ExtReal::minus_infinity();
  EXPECT_EQ(ExtReal(3.0) + inf, inf);
  EXPECT_EQ(ninf + ExtReal(-7.5), ninf);
  EXPECT_EQ(inf + inf, inf);
  EXPECT_EQ(ExtReal(1.5) - ExtReal(0.5), ExtReal(1.0));
  EXPECT_EQ(-inf, ninf);
  EXPECT_LT(ninf, ExtReal(-1e300));
  EXPECT_GT(inf, ExtReal(1e300));
}

TEST(ExtReal, MixedInfinitiesAreRejected) {
  EXPECT_THROW((void)(ExtReal::plus_infinity() + ExtReal::minus_infinity()), ExtRealError);
  EXPECT_THROW((void)(ExtReal::plus_infinity() - ExtReal::plus_infinity()), ExtRealError);
  EXPECT_THROW(ExtReal(std::nan("")), ExtRealError);
}

TEST(ExtReal, EmptyReductions) {
  EXPECT_TRUE(sup_of({}).is_minus_infinity());
  EXPECT_TRUE(inf_of({}).is_plus_infinity());
  const std::vector<ExtReal> v{ExtReal(2.0), ExtReal(-1.0), ExtReal(5.0)};
  EXPECT_EQ(sup_of(v), ExtReal(5.0));
  EXPECT_EQ(inf_of(v), ExtReal(-1.0));
}

TEST(ExtReal, Printing) {
  EXPECT_EQ(ExtReal::plus_infinity().to_string(), "inf");
  EXPECT_EQ(ExtReal::minus_infinity().to_string(), "-inf");
  EXPECT_EQ(ExtReal(-0.36).to_string(), "-0.36");
  EXPECT_EQ(ExtReal(1.0 / 3.0).to_string(), "0.333333333333");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_THROW((void)ExtReal::plus_infinity().finite_value(), std::domain_error);
}

TEST(ChainOrder, ParseAndCompare) {
  EXPECT_TRUE(ChainOrder::parse("inf").is_infinite());
  EXPECT_EQ(ChainOrder::parse("7").value(), 7u);
  EXPECT_THROW(ChainOrder::parse("0"), InputError);
  EXPECT_THROW(ChainOrder::parse("-2"), InputError);
  EXPECT_THROW(ChainOrder::parse("3x"), InputError);
  EXPECT_THROW(ChainOrder(0), InputError);
  EXPECT_LT(ChainOrder(40), ChainOrder::infinite());
  EXPECT_EQ(ChainOrder(3).predecessor(), ChainOrder(2));
  EXPECT_EQ(ChainOrder::infinite().predecessor(), ChainOrder::infinite());
  EXPECT_THROW((void)ChainOrder(1).predecessor(), InputError);
}

TEST(Pairing, CouplingExamples) {
  EXPECT_EQ(PairingSpace::euclidean(2).coupling(Vector{1, 0}, Vector{0, 1}), 0.0);
  EXPECT_EQ(PairingSpace::euclidean(1).coupling(Vector{5}, Vector{5}), 25.0);
  const PairingSpace b(2, 2, Matrix(2, 2, {2, 0, 0, 3}));
  const Vector one{1, 1};
  EXPECT_EQ(b.coupling(one, one), 5.0);
  EXPECT_EQ(pair_value(b, one, one), 5.0);
}

TEST(Pairing, RejectsBadShapes) {
  EXPECT_THROW(PairingSpace(2, 3), InputError);
  EXPECT_THROW(PairingSpace(2, 2, Matrix(3, 2)), InputError);
  EXPECT_THROW(PairingSpace(1, 1, Matrix(1, 1, {kInf})), InputError);
  EXPECT_THROW((void)PairingSpace::euclidean(2).coupling(Vector{1, 2, 3}, Vector{1, 2}),
               InputError);
}

TEST(Pairing, RectangularCouplingMatchesScalarLoop) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 50; ++t) {
    Matrix b(2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) b(r, c) = u(rng);
    }
    const PairingSpace s(2, 3, b);
    const Vector x{u(rng), u(rng)};
    const Vector y{u(rng), u(rng), u(rng)};
    EXPECT_NEAR(s.coupling(x, y), pair_value(s, x, y), 1e-12);
    EXPECT_NEAR(s.transposed().coupling(y, x), s.coupling(x, y), 1e-12);
  }
}

TEST(Pairing, BilinearityProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 3;
    Matrix b(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) b(r, c) = u(rng);
    }
    const PairingSpace s(d, d, b);
    Vector x(d), w(d), y(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = u(rng);
      w[i] = u(rng);
      y[i] = u(rng);
    }
    const double a = u(rng), c = u(rng);
    Vector comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = a * x[i] + c * w[i];
    const double lhs = s.coupling(comb, y);
    const double rhs = a * s.coupling(x, y) + c * s.coupling(w, y);
    EXPECT_NEAR(lhs, rhs, 1e-12 * (1.0 + std::abs(lhs) + std::abs(a * s.coupling(x, y)) +
                                   std::abs(c * s.coupling(w, y))));
  }
}

TEST(Pairing, ProductPairingOfZWithItselfIsTwiceTheCoupling) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 3;
    const PairingSpace s = PairingSpace::euclidean(d);
    Vector x(d), y(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
    }
    const double c = s.coupling(x, y);
    EXPECT_NEAR(product_pairing(s, x, y, x, y), 2.0 * c, 1e-12 * (1.0 + std::abs(c)));
    // Same quantity through the block matrix of the product space.
    Vector z(x);
    z.insert(z.end(), y.begin(), y.end());
    EXPECT_NEAR(s.product().coupling(z, z), 2.0 * c, 1e-12 * (1.0 + std::abs(c)));
  }
}

TEST(FiniteOperator, ExactDuplicatesAreDropped) {
  const auto s = PairingSpace::euclidean(1);
  const FiniteOperator op(s, {{{1}, {2}}, {{0}, {0}}, {{1}, {2}}, {{1}, {2 + 1e-15}}});
  ASSERT_EQ(op.size(), 3u);
  EXPECT_EQ(op.pair(0), (GraphPair{{1}, {2}}));
  EXPECT_EQ(op.pair(1), (GraphPair{{0}, {0}}));
  EXPECT_EQ(op.pair(2).y[0], 2 + 1e-15);
}

TEST(FiniteOperator, Projections) {
  const FiniteOperator op(PairingSpace::euclidean(1),
                          {{{0}, {1}}, {{0}, {2}}, {{3}, {1}}, {{4}, {4}}});
  EXPECT_EQ(op.domain(), (std::vector<Vector>{{0}, {3}, {4}}));
  EXPECT_EQ(op.range(), (std::vector<Vector>{{1}, {2}, {4}}));
  EXPECT_TRUE(op.contains({{3}, {1}}));
  EXPECT_FALSE(op.contains({{3}, {2}}));
  const FiniteOperator inv = op.inverse();
  EXPECT_EQ(inv.pair(1), (GraphPair{{2}, {0}}));
}

TEST(FiniteOperator, Validation) {
  const auto s = PairingSpace::euclidean(2);
  EXPECT_THROW(FiniteOperator(s, {{{1}, {1, 2}}}), InputError);
  EXPECT_THROW(FiniteOperator(s, {{{1, kInf}, {1, 2}}}), InputError);
  const FiniteOperator op(s, {{{1, 0}, {0, 1}}});
  EXPECT_THROW(op.check_query({{1, 0}, {0}}), InputError);
}

TEST(ChainWeights, Examples) {
  const FiniteOperator two(PairingSpace::euclidean(1), {{{0}, {0}}, {{5}, {5}}});
  const ChainWeights w = chain_weights(two);
  // cycle(i, j) = <x_i - x_j, y_i>: only the step out of (5, 5) is non-zero.
  EXPECT_EQ(w.cycle, Matrix(2, 2, {0, 0, 25, 0}));

  const FiniteOperator one(PairingSpace::euclidean(1), {{{3}, {-2}}});
  EXPECT_EQ(chain_weights(one).cycle, Matrix(1, 1, {0}));

  const FiniteOperator rot(PairingSpace::euclidean(2), {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}});
  const ChainWeights r = chain_weights(rot);
  EXPECT_EQ(r.cycle(0, 1), -1.0);
  EXPECT_EQ(r.cycle(1, 0), 1.0);

  EXPECT_EQ(chain_weights(FiniteOperator(PairingSpace::euclidean(3))).cycle.rows(), 0u);
}

TEST(ChainWeights, StructuralInvariants) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const FiniteOperator op = testing::random_real_operator(rng, 1 + t % 7, 1 + t % 3);
    const ChainWeights w = chain_weights(op);
    const std::size_t m = op.size();
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_EQ(w.cycle(i, i), 0.0);
      EXPECT_EQ(w.step(i, i), 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_NEAR(w.cycle(i, j), -w.step(j, i), 1e-12);
        const double direct = pair_value(op.space(), testing::minus(op.pair(i).x, op.pair(j).x),
                                         op.pair(i).y);
        EXPECT_NEAR(w.cycle(i, j), direct, 1e-12);
      }
    }
  }
}

TEST(ChainWeights, ReorderingPermutesRowsAndColumns) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const FiniteOperator op = testing::random_real_operator(rng, 6, 2);
    std::vector<std::size_t> perm(op.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<GraphPair> shuffled;
    for (std::size_t p : perm) shuffled.push_back(op.pair(p));
    const FiniteOperator other(op.space(), shuffled);
    const ChainWeights a = chain_weights(op);
    const ChainWeights b = chain_weights(other);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j < perm.size(); ++j) {
        EXPECT_EQ(b.cycle(i, j), a.cycle(perm[i], perm[j]));
        EXPECT_EQ(b.step(i, j), a.step(perm[i], perm[j]));
      }
    }
  }
}

}  // namespace
}  // namespace monoscope
