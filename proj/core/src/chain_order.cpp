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

#include "monoscope/chain_order.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "monoscope/errors.hpp"

namespace monoscope {

ChainOrder::ChainOrder(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("chain order must be a positive integer or inf");
  if (n == kInf) throw InputError("chain order too large");
}

ChainOrder ChainOrder::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinite();
  std::size_t n = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, n);
  if (ec != std::errc() || ptr != end || n == 0) {
    throw InputError("invalid chain order '" + std::string(text) +
                     "': expected a positive integer or 'inf'");
  }
  return ChainOrder(n);
}

std::size_t ChainOrder::value() const {
  if (is_infinite()) throw std::logic_error("ChainOrder::value on infinite order");
  return n_;
}

ChainOrder ChainOrder::predecessor() const {
  if (is_infinite()) return *this;
  if (n_ < 2) throw InputError("order must be at least 2 here");
  return ChainOrder(n_ - 1);
}

std::string ChainOrder::to_string() const {
  return is_infinite() ? "inf" : std::to_string(n_);
}

}  // namespace monoscope
