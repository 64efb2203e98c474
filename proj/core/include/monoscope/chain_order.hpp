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

#ifndef MONOSCOPE_CHAIN_ORDER_HPP_
#define MONOSCOPE_CHAIN_ORDER_HPP_

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

namespace monoscope {

// A chain length / monotonicity order: a positive integer or infinity.
class ChainOrder {
 public:
  // Throws InputError for n == 0.
  explicit ChainOrder(std::size_t n);
  static constexpr ChainOrder infinite() { return ChainOrder(Raw{}, kInf); }

  // Accepts a positive integer or "inf".
  static ChainOrder parse(std::string_view text);

  [[nodiscard]] constexpr bool is_infinite() const { return n_ == kInf; }
  // Throws std::logic_error when infinite.
  [[nodiscard]] std::size_t value() const;

  // n - 1 for finite n >= 2; inf stays inf. Throws InputError for n == 1.
  [[nodiscard]] ChainOrder predecessor() const;

  [[nodiscard]] std::string to_string() const;

  friend constexpr auto operator<=>(ChainOrder, ChainOrder) = default;

 private:
  struct Raw {};
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  constexpr ChainOrder(Raw, std::size_t n) : n_(n) {}

  std::size_t n_ = 1;
};

}  // namespace monoscope

#endif  // MONOSCOPE_CHAIN_ORDER_HPP_
