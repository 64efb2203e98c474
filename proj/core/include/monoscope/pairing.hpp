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

#ifndef MONOSCOPE_PAIRING_HPP_
#define MONOSCOPE_PAIRING_HPP_

#include <cstddef>
#include <span>

#include "monoscope/matrix.hpp"

namespace monoscope {

/// Finite-dimensional dual system (R^d1, R^d2, <x,y> = x^T B y).
///
/// B defaults to the identity, which requires d1 == d2. The closed-form
/// oracles only accept that default.
class PairingSpace {
 public:
  PairingSpace() = default;
  // Identity pairing; throws InputError when d1 != d2.
  PairingSpace(std::size_t d1, std::size_t d2);
  // Explicit coupling matrix (d1 x d2).
  PairingSpace(std::size_t d1, std::size_t d2, Matrix coupling_matrix);

  static PairingSpace euclidean(std::size_t d) { return {d, d}; }

  [[nodiscard]] std::size_t d1() const { return d1_; }
  [[nodiscard]] std::size_t d2() const { return d2_; }
  [[nodiscard]] const Matrix& matrix() const { return b_; }
  [[nodiscard]] bool is_identity() const { return identity_; }

  // c(x, y) = <x, y>. Throws InputError on dimension mismatch.
  [[nodiscard]] double coupling(std::span<const double> x,
                                std::span<const double> y) const;

  // Same as coupling() without the dimension check, for inner loops.
  [[nodiscard]] double coupling_unchecked(const double* x, const double* y) const;

  // Pairing of the inverse system (R^d2, R^d1, B^T).
  [[nodiscard]] PairingSpace transposed() const;

  // Pairing of Z = X x Y with itself: z.w = <x, v> + <u, y>,
  // realised as the block matrix [[0, B], [B^T, 0]].
  [[nodiscard]] PairingSpace product() const;

  void check_x(std::span<const double> x) const;
  void check_y(std::span<const double> y) const;

  friend bool operator==(const PairingSpace&, const PairingSpace&) = default;

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  Matrix b_;
  bool identity_ = true;
};

// z.w for z = (x, y), w = (u, v) in X x Y.
double product_pairing(const PairingSpace& space, std::span<const double> x,
                       std::span<const double> y, std::span<const double> u,
                       std::span<const double> v);

}  // namespace monoscope

#endif  // MONOSCOPE_PAIRING_HPP_
