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

#include "monoscope/pairing.hpp"

#include <cmath>
#include <string>

#include "monoscope/errors.hpp"

namespace monoscope {

PairingSpace::PairingSpace(std::size_t d1, std::size_t d2)
    : d1_(d1), d2_(d2), b_(Matrix::identity(d1)), identity_(true) {
  if (d1 != d2) {
    throw InputError("PairingSpace: identity pairing needs d1 == d2 (got " +
                     std::to_string(d1) + ", " + std::to_string(d2) + ")");
  }
}

PairingSpace::PairingSpace(std::size_t d1, std::size_t d2, Matrix coupling_matrix)
    : d1_(d1), d2_(d2), b_(std::move(coupling_matrix)) {
  if (b_.rows() != d1 || b_.cols() != d2) {
    throw InputError("PairingSpace: pairing matrix must be " + std::to_string(d1) +
                     "x" + std::to_string(d2));
  }
  for (double v : b_.data()) {
    if (!std::isfinite(v)) throw InputError("PairingSpace: non-finite pairing entry");
  }
  identity_ = b_.is_identity();
}

void PairingSpace::check_x(std::span<const double> x) const {
  if (x.size() != d1_) {
    throw InputError("dimension mismatch: x has " + std::to_string(x.size()) +
                     " coordinates, X has dimension " + std::to_string(d1_));
  }
}

void PairingSpace::check_y(std::span<const double> y) const {
  if (y.size() != d2_) {
    throw InputError("dimension mismatch: y has " + std::to_string(y.size()) +
                     " coordinates, Y has dimension " + std::to_string(d2_));
  }
}

double PairingSpace::coupling(std::span<const double> x,
                              std::span<const double> y) const {
  check_x(x);
  check_y(y);
  return coupling_unchecked(x.data(), y.data());
}

double PairingSpace::coupling_unchecked(const double* x, const double* y) const {
  double s = 0.0;
  if (identity_) {
    for (std::size_t i = 0; i < d1_; ++i) s += x[i] * y[i];
    return s;
  }
  for (std::size_t i = 0; i < d1_; ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < d2_; ++j) row += b_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

PairingSpace PairingSpace::transposed() const {
  return PairingSpace(d2_, d1_, b_.transposed());
}

PairingSpace PairingSpace::product() const {
  const std::size_t d = d1_ + d2_;
  Matrix block(d, d);
  for (std::size_t i = 0; i < d1_; ++i) {
    for (std::size_t j = 0; j < d2_; ++j) {
      block(i, d1_ + j) = b_(i, j);
      block(d1_ + j, i) = b_(i, j);
    }
  }
  return PairingSpace(d, d, std::move(block));
}

double product_pairing(const PairingSpace& space, std::span<const double> x,
                       std::span<const double> y, std::span<const double> u,
                       std::span<const double> v) {
  return space.coupling(x, v) + space.coupling(u, y);
}

}  // namespace monoscope
