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

#ifndef MONOSCOPE_EXT_REAL_HPP_
#define MONOSCOPE_EXT_REAL_HPP_

#include <compare>
#include <limits>
#include <span>
#include <string>

namespace monoscope {

/// Totally ordered extended real line with saturating arithmetic.
///
/// The only undefined form, +inf + (-inf), throws ExtRealError instead of
/// silently producing NaN. NaN is never stored.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  explicit ExtReal(double v);

  static constexpr ExtReal plus_infinity() {
    return ExtReal(Raw{}, std::numeric_limits<double>::infinity());
  }
  static constexpr ExtReal minus_infinity() {
    return ExtReal(Raw{}, -std::numeric_limits<double>::infinity());
  }

  [[nodiscard]] constexpr bool is_finite() const {
    return v_ != std::numeric_limits<double>::infinity() &&
           v_ != -std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] constexpr bool is_plus_infinity() const {
    return v_ == std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] constexpr bool is_minus_infinity() const {
    return v_ == -std::numeric_limits<double>::infinity();
  }

  // IEEE representation; infinities map to +/-HUGE_VAL.
  [[nodiscard]] constexpr double value() const { return v_; }
  // Throws std::domain_error when not finite.
  [[nodiscard]] double finite_value() const;

  friend ExtReal operator+(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a) { return ExtReal(Raw{}, -a.v_); }
  ExtReal& operator+=(ExtReal other) { return *this = *this + other; }

  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }

  // 12 significant digits, "inf" / "-inf" for the infinities.
  [[nodiscard]] std::string to_string() const;

 private:
  struct Raw {};
  constexpr ExtReal(Raw, double v) : v_(v) {}

  double v_ = 0.0;
};

// sup over an empty range is -inf.
ExtReal sup_of(std::span<const ExtReal> values);
// inf over an empty range is +inf.
ExtReal inf_of(std::span<const ExtReal> values);

// Shared numeric formatting for doubles (12 significant digits).
std::string format_real(double v);

}  // namespace monoscope

#endif  // MONOSCOPE_EXT_REAL_HPP_
