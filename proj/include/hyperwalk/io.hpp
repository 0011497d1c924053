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

// JSON documents {"kind", "version", ...} for graphs, tensors, Kraus
// families, states and reports. Numeric fields accept decimal numbers or
// exact fraction strings "p/q".

#pragma once

#include <string>

#include <json.hpp>

#include "hyperwalk/graph.hpp"
#include "hyperwalk/graph_walk.hpp"
#include "hyperwalk/hypergroup.hpp"
#include "hyperwalk/oqrw.hpp"
#include "hyperwalk/verify.hpp"

namespace hyperwalk::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1";

/// Parses text, reporting syntax errors as ErrorCode::Parse with line and
/// column. Checks "kind" and "version" when `kind` is nonempty.
Json parse_document(const std::string& text, const std::string& kind = "");

PointedGraph parse_graph(const std::string& text);
Json graph_to_json(const PointedGraph& graph);

/// Tensor documents: {"size", "involution"?, "truncated"?, "entries": [[i,j,k,v],...]}.
StructureTensor parse_tensor(const std::string& text);
ExactTensor parse_exact_tensor(const std::string& text);

/// Validated hypergroup; a missing involution is derived from the constants.
Hypergroup parse_hypergroup(const std::string& text);

Json tensor_to_json(const StructureTensor& tensor,
                    const std::optional<Permutation>& involution = std::nullopt);
Json tensor_to_json(const ExactTensor& tensor,
                    const std::optional<Permutation>& involution = std::nullopt);
Json hypergroup_to_json(const Hypergroup& hypergroup);

/// {"d_size", "h_dim", "blocks": [{"i","j","k","matrix"}], "undefined_slots"?}.
/// Completeness is checked at parse time (ErrorCode::InvalidKraus) unless
/// `check_completeness` is false.
KrausFamily parse_kraus(const std::string& text, bool check_completeness = true);
Json kraus_to_json(const KrausFamily& family);

/// {"h_dim", "blocks": [matrix, ...]}; validated at parse time.
BlockState parse_state(const std::string& text);
Json state_to_json(const BlockState& state);

/// Complex matrices are arrays of rows of [re, im] pairs; a bare number is
/// read as a real entry.
CMatrix parse_matrix(const Json& value, const std::string& where);
Json matrix_to_json(const CMatrix& m);

/// Decimal number, integer, or "p/q" string.
double parse_number(const Json& value, const std::string& where);
Rational parse_rational(const Json& value, const std::string& where);

Json report_to_json(const ValidationReport& report);
Json report_to_json(const KrausReport& report);
Json report_to_json(const HbReport& report);
Json report_to_json(const VerificationReport& report);
Json report_to_json(const GraphCheck& condition_s, const GraphCheck& distance_regular,
                    const GraphCheck& spheres);
Json distribution_to_json(const Distribution& d);

}  // namespace hyperwalk::io
