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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperwalk {

/// Element of a distance set D = {0, ..., size-1}. Index 0 is always the unit.
using Index = std::size_t;

/// A sequence of jump lengths (k1, ..., kn).
using Word = std::vector<Index>;

/// A permutation of {0, ..., n-1} stored as its image list.
using Permutation = std::vector<Index>;

/// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double prob = 1e-9;    // stochasticity and support decisions
inline constexpr double assoc = 1e-8;   // associativity / product identities
inline constexpr double kraus = 1e-8;   // completeness and isometry checks
inline constexpr double hb = 1e-8;      // condition (HB) residuals
inline constexpr double psd = 1e-10;    // minimum eigenvalue slack
}  // namespace tol

enum class ErrorCode {
  InvalidArgument,
  SizeMismatch,
  IndexOutOfRange,
  TruncationExceeded,
  NoCandidate,
  Ambiguous,
  NotInvolutive,
  NotAGroup,
  InvalidTensor,
  InvalidHypergroup,
  InvalidGraph,
  DisconnectedGraph,
  EmptySphere,
  PathCapExceeded,
  ConditionSViolated,
  DimensionMismatch,
  NotIsometric,
  InvalidKraus,
  InvalidState,
  Parse,
  Schema,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library. `index()` carries the
/// offending element for errors such as NoCandidate(i) or EmptySphere(v, j).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<Index> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<Index> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<Index> index_;
};

/// Renders a word or tuple as "(a,b,c)".
std::string format_tuple(const std::vector<Index>& t);

/// All words of length `len` over {0..alphabet-1} in lexicographic order.
std::vector<Word> all_words(Index alphabet, std::size_t len);

/// All words of length 1..max_len, shortest first, each length lexicographic.
std::vector<Word> all_words_up_to(Index alphabet, std::size_t max_len);

}  // namespace hyperwalk
