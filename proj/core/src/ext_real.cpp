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

#include "monoscope/ext_real.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "monoscope/errors.hpp"

namespace monoscope {

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v)) throw ExtRealError("ExtReal: NaN is not an extended real");
}

double ExtReal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ExtReal: value is " + to_string());
  return v_;
}

ExtReal operator+(ExtReal a, ExtReal b) {
  if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
      (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw ExtRealError("ExtReal: +inf + (-inf) is undefined");
  }
  return ExtReal(ExtReal::Raw{}, a.v_ + b.v_);
}

ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }

std::string ExtReal::to_string() const {
  if (is_plus_infinity()) return "inf";
  if (is_minus_infinity()) return "-inf";
  return format_real(v_);
}

ExtReal sup_of(std::span<const ExtReal> values) {
  ExtReal best = ExtReal::minus_infinity();
  for (ExtReal v : values) {
    if (v > best) best = v;
  }
  return best;
}

ExtReal inf_of(std::span<const ExtReal> values) {
  ExtReal best = ExtReal::plus_infinity();
  for (ExtReal v : values) {
    if (v < best) best = v;
  }
  return best;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace monoscope
