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

#include "hyperwalk/core.hpp"

#include <sstream>

#include "hyperwalk/rational.hpp"

namespace hyperwalk {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::InvalidTensor: return "InvalidTensor";
    case ErrorCode::InvalidHypergroup: return "InvalidHypergroup";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::EmptySphere: return "EmptySphere";
    case ErrorCode::PathCapExceeded: return "PathCapExceeded";
    case ErrorCode::ConditionSViolated: return "ConditionSViolated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::InvalidKraus: return "InvalidKraus";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

std::string format_tuple(const std::vector<Index>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p) os << ',';
    os << t[p];
  }
  os << ')';
  return os.str();
}

std::vector<Word> all_words(Index alphabet, std::size_t len) {
  std::vector<Word> out;
  if (len == 0 || alphabet == 0) return out;
  Word w(len, 0);
  while (true) {
    out.push_back(w);
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++w[pos] < alphabet) break;
      w[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<Word> all_words_up_to(Index alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto part = all_words(alphabet, len);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_fraction_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace hyperwalk
