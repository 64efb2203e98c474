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

#include "io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "monoscope/errors.hpp"

namespace monoscope::cli {
namespace {

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw InputError(std::string(what) + " must contain numbers only");
    v.push_back(e.get<double>());
  }
  return v;
}

Matrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<double> data;
  for (const auto& row : j) {
    const Vector r = vector_from_json(row, what);
    if (cols == 0) cols = r.size();
    if (r.size() != cols || cols == 0) throw InputError(std::string(what) + " has ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(rows, cols, std::move(data));
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double parse_number(std::string_view s) {
  double out = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw InputError("cannot parse number \"" + std::string(s) + "\"");
  }
  return out;
}

Vector parse_csv(std::string_view s) {
  Vector v;
  if (s.find_first_not_of(" \t") == std::string_view::npos) return v;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    std::string_view tok = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    v.push_back(parse_number(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + std::string(origin) + ": " + e.what());
  }
}

FiniteOperator operator_from_json(const json& j) {
  if (!j.is_object()) throw InputError("operator JSON must be an object");
  const std::size_t d1 = size_field(j, "d1");
  const std::size_t d2 = size_field(j, "d2");
  PairingSpace space = j.contains("pairing")
                           ? PairingSpace(d1, d2, matrix_from_json(j.at("pairing"), "pairing"))
                           : PairingSpace(d1, d2);
  std::vector<GraphPair> pairs;
  if (j.contains("points")) {
    const auto& pts = j.at("points");
    if (!pts.is_array()) throw InputError("\"points\" must be an array");
    for (const auto& p : pts) {
      if (!p.is_object() || !p.contains("x") || !p.contains("y")) {
        throw InputError("each point needs \"x\" and \"y\"");
      }
      pairs.push_back({vector_from_json(p.at("x"), "x"), vector_from_json(p.at("y"), "y")});
    }
  }
  return FiniteOperator(std::move(space), std::move(pairs));
}

json operator_to_json(const FiniteOperator& op) {
  json j;
  j["d1"] = op.space().d1();
  j["d2"] = op.space().d2();
  if (!op.space().is_identity()) {
    const Matrix& b = op.space().matrix();
    json rows = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const auto row = b.row(r);
      rows.push_back(Vector(row.begin(), row.end()));
    }
    j["pairing"] = std::move(rows);
  }
  json pts = json::array();
  for (const auto& p : op.pairs()) pts.push_back({{"x", p.x}, {"y", p.y}});
  j["points"] = std::move(pts);
  return j;
}

FiniteOperator read_operator_file(const std::string& path) {
  return operator_from_json(parse_json(read_text_file(path), path));
}

double parse_angle(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw InputError("theta must be a number or a string such as \"pi/6\"");
  std::string s;
  for (char ch : j.get<std::string>()) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const std::size_t pi = s.find("pi");
  if (pi == std::string::npos) return parse_number(s);

  std::string coef = s.substr(0, pi);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (coef == "+") {
    c = 1.0;
  } else if (!coef.empty()) {
    c = parse_number(coef);
  }
  double denom = 1.0;
  const std::string rest = s.substr(pi + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw InputError("cannot parse angle \"" + s + "\"");
    denom = parse_number(rest.substr(1));
    if (denom == 0.0) throw InputError("angle denominator is zero");
  }
  return c * std::numbers::pi / denom;
}

AnalyticOracle oracle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InputError("oracle descriptor needs a string \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") {
    return IdentityOracle(j.contains("dim") ? size_field(j, "dim") : 1);
  }
  if (kind == "rotation") {
    if (!j.contains("theta")) throw InputError("rotation descriptor needs \"theta\"");
    return RotationOracle(parse_angle(j.at("theta")));
  }
  if (kind == "normal_cone") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
      throw InputError("normal_cone descriptor needs \"vertices\"");
    }
    std::vector<Vector> verts;
    for (const auto& v : j.at("vertices")) {
      // Scalars are accepted as one-dimensional vertices.
      verts.push_back(v.is_number() ? Vector{v.get<double>()} : vector_from_json(v, "vertex"));
    }
    return NormalConeOracle(std::move(verts));
  }
  if (kind == "skew") {
    if (!j.contains("matrix")) throw InputError("skew descriptor needs \"matrix\"");
    std::optional<Matrix> basis;
    if (j.contains("domain_basis")) {
      // Given as a list of basis vectors; stored column-wise.
      basis = matrix_from_json(j.at("domain_basis"), "domain_basis").transposed();
    }
    return SkewLinearOracle(matrix_from_json(j.at("matrix"), "matrix"), std::move(basis));
  }
  throw UnsupportedOracleError("unknown oracle kind \"" + kind + "\"");
}

SampleSpec sample_spec_from_json(const json& j) {
  SampleSpec spec;
  if (!j.contains("sample")) return spec;
  const auto& s = j.at("sample");
  if (!s.is_object()) throw InputError("\"sample\" must be an object");
  if (s.contains("lo")) spec.lo = s.at("lo").get<double>();
  if (s.contains("hi")) spec.hi = s.at("hi").get<double>();
  if (s.contains("grid_points")) spec.grid_points = size_field(s, "grid_points");
  if (s.contains("angles")) spec.angles = size_field(s, "angles");
  if (s.contains("radii")) spec.radii = vector_from_json(s.at("radii"), "radii");
  if (s.contains("magnitudes")) spec.magnitudes = vector_from_json(s.at("magnitudes"), "magnitudes");
  return spec;
}

json load_descriptor(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json(arg, "descriptor");
  return parse_json(read_text_file(arg), arg);
}

GraphPair parse_inline_query(std::string_view text, bool allow_x_only) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) {
    if (!allow_x_only) throw InputError("query \"" + std::string(text) + "\" needs the form x1,x2;y1,y2");
    return {parse_csv(text), {}};
  }
  return {parse_csv(text.substr(0, semi)), parse_csv(text.substr(semi + 1))};
}

std::vector<GraphPair> queries_from_json(const json& j, bool allow_x_only) {
  if (!j.is_array()) throw InputError("query file must hold a JSON array");
  std::vector<GraphPair> out;
  for (const auto& q : j) {
    if (q.is_object()) {
      if (!q.contains("x")) throw InputError("query object needs \"x\"");
      GraphPair p{vector_from_json(q.at("x"), "x"), {}};
      if (q.contains("y")) {
        p.y = vector_from_json(q.at("y"), "y");
      } else if (!allow_x_only) {
        throw InputError("query object needs \"y\"");
      }
      out.push_back(std::move(p));
    } else if (q.is_array() && q.size() == 2 && q[0].is_array()) {
      out.push_back({vector_from_json(q[0], "x"), vector_from_json(q[1], "y")});
    } else if (allow_x_only && q.is_array()) {
      out.push_back({vector_from_json(q, "x"), {}});
    } else {
      throw InputError("each query must be {\"x\",\"y\"} or [[x...],[y...]]");
    }
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_real(v[i]);
  }
  return out + ")";
}

}  // namespace monoscope::cli
