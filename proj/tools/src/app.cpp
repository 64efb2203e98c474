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

#include "app.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "monoscope/chaincalc.hpp"
#include "monoscope/envelope.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/oracles.hpp"
#include "replicate.hpp"

namespace monoscope::cli {
namespace {

enum class Format { kText, kCsv, kJson };

struct Options {
  std::string target;  // operator file, descriptor or case name
  std::string fn;
  std::string n;
  std::vector<std::string> at;
  std::string queries_file;
  std::optional<std::size_t> base;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 20240917;
  std::string format = "text";
  bool cross_check = false;
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::kText;
  if (f == "csv") return Format::kCsv;
  if (f == "json") return Format::kJson;
  throw InputError("unknown format \"" + f + "\"");
}

json ext_json(ExtReal v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

json order_json(ChainOrder n) {
  if (n.is_infinite()) return "inf";
  return n.value();
}

std::string join(const std::vector<std::size_t>& idx, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(idx[i]);
  }
  return out;
}

std::string csv_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_real(v[i]);
  }
  return out;
}

std::vector<GraphPair> collect_queries(const Options& o, bool x_only) {
  std::vector<GraphPair> qs;
  for (const auto& a : o.at) qs.push_back(parse_inline_query(a, x_only));
  if (!o.queries_file.empty()) {
    auto more = queries_from_json(parse_json(read_text_file(o.queries_file), o.queries_file), x_only);
    qs.insert(qs.end(), more.begin(), more.end());
  }
  if (qs.empty()) throw InputError("no queries given (use --at or --queries)");
  return qs;
}

ChainOrder parse_n(const Options& o, const char* fallback) {
  return ChainOrder::parse(o.n.empty() ? fallback : o.n);
}

// --- order ------------------------------------------------------------------

int cmd_order(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  const FiniteOperator op = read_operator_file(o.target);
  const OrderReport rep = monotonicity_order(ChainContext(op, o.tol));
  const auto& w = rep.witness;
  switch (fmt) {
    case Format::kText:
      out << "order: " << rep.order.to_string();
      if (w) {
        out << ", witness length " << w->indices.size() << ", indices [" << join(w->indices, ", ")
            << "], sum " << format_real(w->sum);
      }
      out << '\n';
      break;
    case Format::kCsv:
      out << "order,witness_length,witness,sum\n" << rep.order.to_string() << ',';
      if (w) out << w->indices.size() << ',' << join(w->indices, " ") << ',' << format_real(w->sum);
      else out << ",,";
      out << '\n';
      break;
    case Format::kJson: {
      json j{{"order", order_json(rep.order)}};
      if (w) j["witness"] = {{"indices", w->indices}, {"sum", w->sum}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// --- eval -------------------------------------------------------------------

struct Row {
  GraphPair q;
  ExtReal value;
  std::optional<std::vector<std::size_t>> chain;
};

void print_rows(const std::vector<Row>& rows, Format fmt, bool x_only, std::ostream& out) {
  switch (fmt) {
    case Format::kText:
      for (const auto& r : rows) {
        out << "x=" << format_vector(r.q.x);
        if (!x_only) out << " y=" << format_vector(r.q.y);
        out << "  value: " << r.value.to_string();
        if (r.chain) out << "  chain: [" << join(*r.chain, ", ") << ']';
        out << '\n';
      }
      break;
    case Format::kCsv:
      out << (x_only ? "x,value\n" : "x,y,value,chain\n");
      for (const auto& r : rows) {
        out << csv_vector(r.q.x);
        if (!x_only) out << ',' << csv_vector(r.q.y);
        out << ',' << r.value.to_string();
        if (!x_only) out << ',' << (r.chain ? join(*r.chain, " ") : "");
        out << '\n';
      }
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j{{"x", r.q.x}, {"value", ext_json(r.value)}};
        if (!x_only) j["y"] = r.q.y;
        if (r.chain) j["chain"] = *r.chain;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  const FiniteOperator op = read_operator_file(o.target);
  const ChainContext ctx(op, o.tol);
  const ChainOrder n = parse_n(o, "1");
  const bool anti = o.fn == "antideriv";
  const auto qs = collect_queries(o, anti);
  std::vector<Row> rows;

  if (o.fn == "phi" || o.fn == "chi") {
    for (const auto& q : qs) {
      const ChainValue cv = o.fn == "phi" ? phi_n(ctx, n, q) : chi_n(ctx, n, q);
      Row r{q, cv.value, std::nullopt};
      if (cv.value.is_finite()) r.chain = cv.argchain;
      rows.push_back(std::move(r));
    }
  } else if (o.fn == "psi") {
    const EnvelopeInstance env = build_envelope(ctx, n);
    for (const auto& q : qs) rows.push_back({q, psi_eval(env, q), std::nullopt});
  } else if (anti) {
    if (!o.base) throw InputError("antideriv needs --base INDEX");
    for (const auto& q : qs) {
      rows.push_back({q, antiderivative(ctx, *o.base, q.x), std::nullopt});
    }
  } else {
    throw InputError("unknown function \"" + o.fn + "\" (expected phi, chi, psi or antideriv)");
  }
  print_rows(rows, fmt, anti, out);
  return kExitOk;
}

// --- related ----------------------------------------------------------------

int cmd_related(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  const FiniteOperator op = read_operator_file(o.target);
  const ChainContext ctx(op, o.tol);
  const ChainOrder n = parse_n(o, "2");
  const auto qs = collect_queries(o, false);
  std::vector<std::pair<GraphPair, Relatedness>> res;
  for (const auto& q : qs) res.emplace_back(q, relatedness(ctx, n, q));

  switch (fmt) {
    case Format::kText:
      for (const auto& [q, r] : res) {
        out << "x=" << format_vector(q.x) << " y=" << format_vector(q.y)
            << "  related: " << (r.related ? "yes" : "no") << "  phi: " << r.phi.to_string()
            << "  c: " << format_real(r.coupling) << "  margin: " << r.margin.to_string() << '\n';
      }
      break;
    case Format::kCsv:
      out << "x,y,related,phi,c,margin\n";
      for (const auto& [q, r] : res) {
        out << csv_vector(q.x) << ',' << csv_vector(q.y) << ',' << (r.related ? "yes" : "no") << ','
            << r.phi.to_string() << ',' << format_real(r.coupling) << ',' << r.margin.to_string()
            << '\n';
      }
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& [q, r] : res) {
        arr.push_back({{"x", q.x},
                       {"y", q.y},
                       {"related", r.related},
                       {"phi", ext_json(r.phi)},
                       {"c", r.coupling},
                       {"margin", ext_json(r.margin)}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// --- oracle -----------------------------------------------------------------

int cmd_oracle(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  const json desc = load_descriptor(o.target);
  const AnalyticOracle oracle = oracle_from_json(desc);

  if (o.fn == "order") {
    const ChainOrder ord = oracle_order(oracle);
    if (fmt == Format::kJson) {
      out << json{{"kind", oracle_kind(oracle)}, {"order", order_json(ord)}}.dump(2) << '\n';
    } else if (fmt == Format::kCsv) {
      out << "kind,order\n" << oracle_kind(oracle) << ',' << ord.to_string() << '\n';
    } else {
      out << "order: " << ord.to_string() << '\n';
    }
    return kExitOk;
  }
  if (o.fn == "sample") {
    out << operator_to_json(sample_graph(oracle, sample_spec_from_json(desc))).dump(2) << '\n';
    return kExitOk;
  }
  if (o.fn != "phi" && o.fn != "chi") {
    throw InputError("unknown function \"" + o.fn + "\" (expected phi, chi, order or sample)");
  }

  const bool phi = o.fn == "phi";
  const ChainOrder n = parse_n(o, phi ? "1" : "2");
  const auto qs = collect_queries(o, false);
  std::optional<ChainContext> sampled;
  if (o.cross_check) sampled.emplace(sample_graph(oracle, sample_spec_from_json(desc)), o.tol);

  json arr = json::array();
  if (fmt == Format::kCsv) out << (o.cross_check ? "x,y,value,sampled,gap\n" : "x,y,value\n");
  for (const auto& q : qs) {
    const ExtReal v = phi ? oracle_phi(oracle, n, q) : oracle_chi(oracle, n, q);
    std::optional<ExtReal> s;
    std::optional<ExtReal> gap;
    if (sampled) {
      s = phi ? phi_n(*sampled, n, q).value : chi_n(*sampled, n, q).value;
      // Sandwich: sampled phi stays below the closed form, sampled chi above;
      // the gap is non-negative when the sandwich holds.
      if (!(v.is_plus_infinity() && s->is_plus_infinity()) &&
          !(v.is_minus_infinity() && s->is_minus_infinity())) {
        gap = phi ? v - *s : *s - v;
      }
    }
    switch (fmt) {
      case Format::kText:
        out << "x=" << format_vector(q.x) << " y=" << format_vector(q.y) << "  value: " << v.to_string();
        if (s) out << "  sampled: " << s->to_string() << "  gap: " << (gap ? gap->to_string() : "n/a");
        out << '\n';
        break;
      case Format::kCsv:
        out << csv_vector(q.x) << ',' << csv_vector(q.y) << ',' << v.to_string();
        if (s) out << ',' << s->to_string() << ',' << (gap ? gap->to_string() : "");
        out << '\n';
        break;
      case Format::kJson: {
        json j{{"x", q.x}, {"y", q.y}, {"value", ext_json(v)}};
        if (s) {
          j["sampled"] = ext_json(*s);
          j["gap"] = gap ? ext_json(*gap) : json(nullptr);
        }
        arr.push_back(std::move(j));
        break;
      }
    }
  }
  if (fmt == Format::kJson) out << arr.dump(2) << '\n';
  return kExitOk;
}

// --- replicate --------------------------------------------------------------

int cmd_replicate(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  std::vector<std::string> names;
  if (o.target == "all") {
    names = replicate_cases();
  } else {
    names.push_back(o.target);
  }
  bool all_pass = true;
  json arr = json::array();
  if (fmt == Format::kCsv) out << "case,check,computed,expected,result\n";
  for (const auto& name : names) {
    const auto checks = run_replicate(name, o.seed);
    std::size_t passed = 0;
    for (const auto& c : checks) {
      passed += c.pass ? 1 : 0;
      const char* verdict = c.pass ? "PASS" : "FAIL";
      if (fmt == Format::kText) {
        out << verdict << "  " << c.name << "  computed: " << c.computed
            << "  expected: " << c.expected << '\n';
      } else if (fmt == Format::kCsv) {
        out << name << ",\"" << c.name << "\",\"" << c.computed << "\",\"" << c.expected << "\","
            << verdict << '\n';
      } else {
        arr.push_back({{"case", name},
                       {"check", c.name},
                       {"computed", c.computed},
                       {"expected", c.expected},
                       {"pass", c.pass}});
      }
    }
    if (fmt == Format::kText) {
      out << name << ": " << passed << '/' << checks.size() << " checks passed\n";
    }
    all_pass = all_pass && passed == checks.size();
  }
  if (fmt == Format::kJson) out << arr.dump(2) << '\n';
  return all_pass ? kExitOk : kExitReplicationFailed;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "Comparison tolerance against c")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format: text, csv or json");
}

void add_queries(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Chain order (positive integer or inf)");
  sub->add_option("--at", o.at, "Inline query \"x1,x2;y1,y2\" (repeatable)");
  sub->add_option("--queries", o.queries_file, "JSON file with an array of queries");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotonicity order, Fitzpatrick-type chain functions and closed-form oracles "
               "for finite operators",
               "monoscope"};
  app.require_subcommand(1);
  Options o;

  auto* order = app.add_subcommand("order", "Monotonicity order with a violating cycle");
  order->add_option("file", o.target, "Operator JSON")->required();
  add_common(order, o);

  auto* eval = app.add_subcommand("eval", "Evaluate phi, chi, psi or the antiderivative");
  eval->add_option("file", o.target, "Operator JSON")->required();
  eval->add_option("fn", o.fn, "phi | chi | psi | antideriv")->required();
  add_queries(eval, o);
  eval->add_option("--base", o.base, "Base pair index for antideriv");
  add_common(eval, o);

  auto* related = app.add_subcommand("related", "n-monotone relatedness of query points");
  related->add_option("file", o.target, "Operator JSON")->required();
  add_queries(related, o);
  add_common(related, o);

  auto* oracle = app.add_subcommand("oracle", "Closed-form values of an analytic operator");
  oracle->add_option("descriptor", o.target, "Oracle JSON file or inline JSON")->required();
  oracle->add_option("fn", o.fn, "phi | chi | order | sample")->required();
  add_queries(oracle, o);
  oracle->add_flag("--cross-check", o.cross_check, "Compare against a sampled graph");
  add_common(oracle, o);

  auto* replicate = app.add_subcommand("replicate", "Re-derive the reference examples");
  replicate->add_option("case", o.target, "Case name or \"all\"")->required();
  replicate->add_option("--seed", o.seed, "Seed for the randomized cases");
  replicate->add_option("--format", o.format, "Output format: text, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*order) return cmd_order(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*related) return cmd_related(o, out);
    if (*oracle) return cmd_oracle(o, out);
    return cmd_replicate(o, out);
  } catch (const UnsupportedOracleError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupportedOracle;
  } catch (const ImproperValueError& e) {
    err << "improper: " << e.what() << '\n';
    return kExitImproper;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace monoscope::cli
