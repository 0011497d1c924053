// Copyright 2026 The Hyperwalk Authors
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

#include "hyperwalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hyperwalk::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where + ": missing key '" + key + "'");
  return *it;
}

Index parse_index(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    schema(where + ": expected a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

const Json& array_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_array()) schema(where + ": '" + key + "' must be an array");
  return v;
}

std::string label_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema(where + ": vertex labels must be strings or integers");
}

Rational parse_decimal(const std::string& s, const std::string& where) {
  std::string digits;
  long long scale = 0;
  bool dot = false;
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c == '.' && !dot) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (dot) ++scale;
    } else {
      schema(where + ": cannot read '" + s + "' as a number");
    }
  }
  if (digits.empty()) schema(where + ": cannot read '" + s + "' as a number");
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int den = 1;
  for (long long i = 0; i < scale; ++i) den *= 10;
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

Permutation parse_permutation(const Json& v, Index n, const std::string& where) {
  if (!v.is_array()) schema(where + ": involution must be an array");
  Permutation p;
  for (const auto& e : v) p.push_back(parse_index(e, where + ".involution"));
  if (!is_permutation(p, n)) {
    throw Error(ErrorCode::NotInvolutive, where + ": involution is not a permutation of size " +
                                              std::to_string(n));
  }
  return p;
}

template <class T>
BasicTensor<T> tensor_from(const Json& doc, T (*number)(const Json&, const std::string&)) {
  const Index n = parse_index(field(doc, "size", "tensor"), "tensor.size");
  bool truncated = false;
  if (const auto it = doc.find("truncated"); it != doc.end()) {
    if (!it->is_boolean()) schema("tensor.truncated must be a boolean");
    truncated = it->get<bool>();
  }
  TensorBuilder<T> builder(n == 0 ? throw Error(ErrorCode::Schema, "tensor.size must be positive")
                                  : n);
  builder.allow_undefined_rows(truncated);
  const Json& entries = array_field(doc, "entries", "tensor");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "tensor.entries[" + std::to_string(e) + "]";
    const Json& row = entries[e];
    if (!row.is_array() || row.size() != 4) schema(where + ": expected [i, j, k, value]");
    builder.add(parse_index(row[0], where), parse_index(row[1], where),
                parse_index(row[2], where), number(row[3], where));
  }
  return builder.build();
}

Json base_doc(const char* kind) {
  Json doc;
  doc["kind"] = kind;
  doc["version"] = kVersion;
  return doc;
}

template <class T>
Json tensor_json(const BasicTensor<T>& tensor, const std::optional<Permutation>& involution,
                 Json (*value)(const T&)) {
  Json doc = base_doc("hypergroup");
  doc["size"] = tensor.size();
  if (involution) doc["involution"] = *involution;
  if (tensor.truncated()) doc["truncated"] = true;
  Json entries = Json::array();
  for (const auto& e : tensor.entries()) entries.push_back({e.i, e.j, e.k, value(e.value)});
  doc["entries"] = std::move(entries);
  return doc;
}

Json double_value(const double& v) { return v; }
Json exact_value(const Rational& v) { return to_fraction_string(v); }

Json optional_tuple(const std::optional<std::array<Index, 4>>& t) {
  return t ? Json(*t) : Json(nullptr);
}

Json check_json(const GraphCheck& c) {
  Json j;
  j["holds"] = c.holds;
  if (!c.holds) {
    j["witness"] = c.witness;
    j["detail"] = c.detail;
  }
  return j;
}

}  // namespace

Json parse_document(const std::string& text, const std::string& kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t p = 0; p < stop; ++p) {
      if (text[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) schema("document must be a JSON object");
  const Json& k = field(doc, "kind", "document");
  if (!k.is_string()) schema("document.kind must be a string");
  const Json& v = field(doc, "version", "document");
  if (!v.is_string() || v.get<std::string>() != kVersion) {
    schema("unsupported version (expected \"" + std::string(kVersion) + "\")");
  }
  static const char* known[] = {"graph", "hypergroup", "kraus", "state", "report"};
  const auto name = k.get<std::string>();
  if (std::find(std::begin(known), std::end(known), name) == std::end(known)) {
    schema("unknown document kind '" + name + "'");
  }
  if (!kind.empty() && name != kind) schema("expected a " + kind + " document, got " + name);
  return doc;
}

Rational parse_rational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) {
    schema(where + ": exact values must be integers or \"p/q\" strings");
  }
  if (!value.is_string()) schema(where + ": expected a number");
  const auto s = value.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s, where);
  const Rational num = parse_decimal(s.substr(0, slash), where);
  const Rational den = parse_decimal(s.substr(slash + 1), where);
  if (den == 0) schema(where + ": zero denominator in '" + s + "'");
  return num / den;
}

double parse_number(const Json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  return to_double(parse_rational(value, where));
}

namespace {
double number_fn(const Json& v, const std::string& w) { return parse_number(v, w); }
Rational rational_fn(const Json& v, const std::string& w) { return parse_rational(v, w); }
}  // namespace

PointedGraph parse_graph(const std::string& text) {
  const Json doc = parse_document(text, "graph");
  const Json& vertices = array_field(doc, "vertices", "graph");
  std::vector<std::string> labels;
  std::map<std::string, Index> index;
  for (const auto& v : vertices) {
    labels.push_back(label_of(v, "graph.vertices"));
    index.emplace(labels.back(), labels.size() - 1);
  }
  const auto lookup = [&](const Json& v, const std::string& where) {
    const auto l = label_of(v, where);
    const auto it = index.find(l);
    if (it == index.end()) {
      throw Error(ErrorCode::InvalidGraph, where + ": unknown vertex '" + l + "'");
    }
    return it->second;
  };
  std::vector<Edge> edges;
  const Json& e = array_field(doc, "edges", "graph");
  for (std::size_t p = 0; p < e.size(); ++p) {
    const std::string where = "graph.edges[" + std::to_string(p) + "]";
    if (!e[p].is_array() || e[p].size() != 2) schema(where + ": expected [a, b]");
    edges.emplace_back(lookup(e[p][0], where), lookup(e[p][1], where));
  }
  const Index base = lookup(field(doc, "base", "graph"), "graph.base");
  std::optional<Index> boundary;
  if (const auto it = doc.find("boundary_radius"); it != doc.end()) {
    boundary = parse_index(*it, "graph.boundary_radius");
  }
  return PointedGraph(std::move(labels), std::move(edges), base, boundary);
}

Json graph_to_json(const PointedGraph& graph) {
  Json doc = base_doc("graph");
  doc["vertices"] = graph.labels();
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({graph.labels()[a], graph.labels()[b]});
  doc["edges"] = std::move(edges);
  doc["base"] = graph.labels()[graph.base()];
  if (graph.boundary_radius()) doc["boundary_radius"] = *graph.boundary_radius();
  return doc;
}

StructureTensor parse_tensor(const std::string& text) {
  return tensor_from<double>(parse_document(text, "hypergroup"), number_fn);
}

ExactTensor parse_exact_tensor(const std::string& text) {
  return tensor_from<Rational>(parse_document(text, "hypergroup"), rational_fn);
}

Hypergroup parse_hypergroup(const std::string& text) {
  const Json doc = parse_document(text, "hypergroup");
  StructureTensor t = tensor_from<double>(doc, number_fn);
  Permutation sigma;
  if (const auto it = doc.find("involution"); it != doc.end()) {
    sigma = parse_permutation(*it, t.size(), "hypergroup");
  } else {
    sigma = derive_involution(t);
  }
  return Hypergroup(std::move(t), std::move(sigma));
}

Json tensor_to_json(const StructureTensor& tensor, const std::optional<Permutation>& involution) {
  return tensor_json<double>(tensor, involution, double_value);
}

Json tensor_to_json(const ExactTensor& tensor, const std::optional<Permutation>& involution) {
  return tensor_json<Rational>(tensor, involution, exact_value);
}

Json hypergroup_to_json(const Hypergroup& hypergroup) {
  return tensor_to_json(hypergroup.tensor(), hypergroup.involution());
}

CMatrix parse_matrix(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) schema(where + ": matrix must be a nonempty array of rows");
  const Index rows = value.size();
  const Index cols = value[0].is_array() ? value[0].size() : 0;
  if (cols == 0) schema(where + ": matrix rows must be nonempty arrays");
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (!value[r].is_array() || value[r].size() != cols) schema(where + ": ragged matrix");
    for (Index c = 0; c < cols; ++c) {
      const Json& e = value[r][c];
      const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (e.is_array()) {
        if (e.size() != 2) schema(at + ": complex entries are [re, im]");
        m(r, c) = {parse_number(e[0], at), parse_number(e[1], at)};
      } else {
        m(r, c) = parse_number(e, at);
      }
    }
  }
  return m;
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

KrausFamily parse_kraus(const std::string& text, bool check_completeness) {
  const Json doc = parse_document(text, "kraus");
  const Index d = parse_index(field(doc, "d_size", "kraus"), "kraus.d_size");
  const Index h = parse_index(field(doc, "h_dim", "kraus"), "kraus.h_dim");
  std::map<BlockKey, CMatrix> blocks;
  const Json& list = array_field(doc, "blocks", "kraus");
  for (std::size_t p = 0; p < list.size(); ++p) {
    const std::string where = "kraus.blocks[" + std::to_string(p) + "]";
    const BlockKey key{parse_index(field(list[p], "i", where), where),
                       parse_index(field(list[p], "j", where), where),
                       parse_index(field(list[p], "k", where), where)};
    if (!blocks.emplace(key, parse_matrix(field(list[p], "matrix", where), where)).second) {
      schema(where + ": duplicate block " + format_tuple({key.i, key.j, key.k}));
    }
  }
  std::set<Slot> undefined;
  if (const auto it = doc.find("undefined_slots"); it != doc.end()) {
    if (!it->is_array()) schema("kraus.undefined_slots must be an array");
    for (const auto& s : *it) {
      if (!s.is_array() || s.size() != 2) schema("kraus.undefined_slots: expected [j, k]");
      undefined.insert({parse_index(s[0], "kraus.undefined_slots"),
                        parse_index(s[1], "kraus.undefined_slots")});
    }
  }
  KrausFamily family(d, h, blocks, undefined);
  if (!check_completeness) return family;
  const auto report = validate_kraus(family);
  if (!report.pass) {
    throw Error(ErrorCode::InvalidKraus,
                "completeness fails at slot " +
                    format_tuple({report.worst_slot->first, report.worst_slot->second}) +
                    " with residual " + std::to_string(report.max_residual));
  }
  return family;
}

Json kraus_to_json(const KrausFamily& family) {
  Json doc = base_doc("kraus");
  doc["d_size"] = family.d_size();
  doc["h_dim"] = family.h_dim();
  Json blocks = Json::array();
  for (const auto& [key, m] : family.blocks()) {
    Json b;
    b["i"] = key.i;
    b["j"] = key.j;
    b["k"] = key.k;
    b["matrix"] = matrix_to_json(m);
    blocks.push_back(std::move(b));
  }
  doc["blocks"] = std::move(blocks);
  if (family.truncated()) {
    Json slots = Json::array();
    for (const auto& [j, k] : family.undefined_slots()) slots.push_back({j, k});
    doc["undefined_slots"] = std::move(slots);
  }
  return doc;
}

BlockState parse_state(const std::string& text) {
  const Json doc = parse_document(text, "state");
  const Index h = parse_index(field(doc, "h_dim", "state"), "state.h_dim");
  const Json& list = array_field(doc, "blocks", "state");
  std::vector<CMatrix> blocks;
  for (std::size_t p = 0; p < list.size(); ++p) {
    blocks.push_back(parse_matrix(list[p], "state.blocks[" + std::to_string(p) + "]"));
    if (static_cast<Index>(blocks.back().rows()) != h ||
        static_cast<Index>(blocks.back().cols()) != h) {
      throw Error(ErrorCode::DimensionMismatch,
                  "state.blocks[" + std::to_string(p) + "] is not h_dim x h_dim");
    }
  }
  return BlockState(std::move(blocks));
}

Json state_to_json(const BlockState& state) {
  Json doc = base_doc("state");
  doc["h_dim"] = state.h_dim();
  Json blocks = Json::array();
  for (const auto& b : state.blocks()) blocks.push_back(matrix_to_json(b));
  doc["blocks"] = std::move(blocks);
  return doc;
}

Json report_to_json(const ValidationReport& report) {
  Json doc = base_doc("report");
  doc["report"] = "hypergroup-validation";
  doc["pass"] = report.pass();
  doc["hermitian"] = report.hermitian;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["axiom"] = to_string(c.axiom);
    j["pass"] = c.pass;
    j["worst_residual"] = c.worst_residual;
    j["checked"] = c.checked;
    j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

Json report_to_json(const KrausReport& report) {
  Json doc = base_doc("report");
  doc["report"] = "kraus-completeness";
  doc["pass"] = report.pass;
  doc["max_residual"] = report.max_residual;
  doc["tolerance"] = tol::kraus;
  doc["worst_slot"] = report.worst_slot
                          ? Json({report.worst_slot->first, report.worst_slot->second})
                          : Json(nullptr);
  return doc;
}

Json report_to_json(const HbReport& report) {
  Json doc = base_doc("report");
  doc["report"] = "hb";
  doc["pass"] = report.pass;
  doc["max_residual"] = report.max_residual;
  doc["tolerance"] = tol::hb;
  doc["checked"] = report.checked;
  doc["worst"] = optional_tuple(report.worst);
  doc["first_violation"] = optional_tuple(report.first_violation);
  return doc;
}

Json report_to_json(const VerificationReport& report) {
  Json doc = base_doc("report");
  doc["report"] = report.name;
  doc["pass"] = report.pass;
  doc["checked_cases"] = report.checked_cases;
  doc["skipped_cases"] = report.skipped_cases;
  doc["max_residual"] = report.max_residual;
  doc["tolerance"] = report.tolerance;
  if (report.worst) {
    Json w;
    w["word"] = report.worst->word;
    w["seed"] = report.worst->seed ? Json(*report.worst->seed) : Json(nullptr);
    w["tuple"] = report.worst->tuple;
    w["note"] = report.worst->note;
    doc["worst_case"] = std::move(w);
  } else {
    doc["worst_case"] = nullptr;
  }
  if (report.converse) {
    const auto& c = *report.converse;
    Json j;
    j["m"] = c.m;
    j["basis_state"] = c.basis_label;
    j["word"] = c.word;
    j["mismatch"] = c.mismatch;
    j["walk"] = c.walk;
    j["mixture"] = c.mixture;
    doc["converse_witness"] = std::move(j);
  }
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

Json report_to_json(const GraphCheck& condition_s, const GraphCheck& distance_regular,
                    const GraphCheck& spheres) {
  Json doc = base_doc("report");
  doc["report"] = "graph-checks";
  doc["pass"] = condition_s.holds && distance_regular.holds && spheres.holds;
  doc["condition_s"] = check_json(condition_s);
  doc["distance_regular"] = check_json(distance_regular);
  doc["nonempty_spheres"] = check_json(spheres);
  return doc;
}

Json distribution_to_json(const Distribution& d) { return Json(d); }

}  // namespace hyperwalk::io
