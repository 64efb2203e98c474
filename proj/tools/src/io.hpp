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

#ifndef MONOSCOPE_TOOLS_IO_HPP_
#define MONOSCOPE_TOOLS_IO_HPP_

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "monoscope/finite_operator.hpp"
#include "monoscope/oracles.hpp"

namespace monoscope::cli {

using nlohmann::json;

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::string& path);
// Parses JSON text, mapping syntax errors to InputError.
json parse_json(std::string_view text, std::string_view origin);

FiniteOperator operator_from_json(const json& j);
json operator_to_json(const FiniteOperator& op);
FiniteOperator read_operator_file(const std::string& path);

// "pi/6", "-3pi/4", "2*pi/3", "pi", or a plain number.
double parse_angle(const json& j);

AnalyticOracle oracle_from_json(const json& j);
SampleSpec sample_spec_from_json(const json& j);
// Descriptor given either as inline JSON (starting with '{') or a file path.
json load_descriptor(const std::string& arg);

// "x1,x2;y1,y2". With allow_x_only a missing ';' yields y = {}.
GraphPair parse_inline_query(std::string_view text, bool allow_x_only = false);
// Array of {"x": [...], "y": [...]} objects or [[x...], [y...]] pairs.
std::vector<GraphPair> queries_from_json(const json& j, bool allow_x_only = false);

std::string format_vector(const Vector& v);

}  // namespace monoscope::cli

#endif  // MONOSCOPE_TOOLS_IO_HPP_
