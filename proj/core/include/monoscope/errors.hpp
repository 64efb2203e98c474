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

#ifndef MONOSCOPE_ERRORS_HPP_
#define MONOSCOPE_ERRORS_HPP_

#include <stdexcept>

namespace monoscope {

// Malformed or dimensionally inconsistent input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value was requested from a function that is improper at that input,
// e.g. the envelope of a chain function that is identically -inf.
class ImproperValueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The analytic oracle cannot evaluate the requested configuration.
class UnsupportedOracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Forbidden extended-real form, i.e. +inf + (-inf).
class ExtRealError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The linear-programming kernel gave up (iteration guard exceeded).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monoscope

#endif  // MONOSCOPE_ERRORS_HPP_
