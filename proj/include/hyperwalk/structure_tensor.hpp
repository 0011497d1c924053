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

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "hyperwalk/core.hpp"
#include "hyperwalk/rational.hpp"

namespace hyperwalk {

template <class T>
struct TensorEntry {
  Index i;
  Index j;
  Index k;
  T value;
};

template <class T>
class TensorBuilder;

/// Nonnegative structure constants Q_{i,j}^k of an algebra on {0..size-1},
/// with x_i o x_j = sum_k Q_{i,j}^k x_k.
///
/// Storage is sparse and keyed by the pair (i,j). A row may be undefined when
/// the tensor is a truncation of an infinite one; reading an undefined row
/// throws TruncationExceeded. Instances are immutable; use TensorBuilder.
template <class T>
class BasicTensor {
 public:
  using value_type = T;

  struct Term {
    Index k;
    T value;
  };
  using Row = std::vector<Term>;

  BasicTensor() = default;

  Index size() const noexcept { return size_; }
  bool truncated() const noexcept { return truncated_; }

  bool defined(Index i, Index j) const {
    check_pair(i, j);
    return rows_[i * size_ + j].has_value();
  }

  /// Support of x_i o x_j sorted by k; only strictly positive terms.
  const Row& row(Index i, Index j) const {
    check_pair(i, j);
    const auto& r = rows_[i * size_ + j];
    if (!r) {
      throw Error(ErrorCode::TruncationExceeded,
                  "row " + format_tuple({i, j}) + " lies beyond the truncation");
    }
    return *r;
  }

  T at(Index i, Index j, Index k) const {
    if (k >= size_) throw Error(ErrorCode::IndexOutOfRange, "k out of range");
    for (const auto& t : row(i, j)) {
      if (t.k == k) return t.value;
    }
    return T(0);
  }

  std::vector<T> dense_row(Index i, Index j) const {
    std::vector<T> out(size_, T(0));
    for (const auto& t : row(i, j)) out[t.k] = t.value;
    return out;
  }

  std::vector<TensorEntry<T>> entries() const {
    std::vector<TensorEntry<T>> out;
    for (Index i = 0; i < size_; ++i) {
      for (Index j = 0; j < size_; ++j) {
        const auto& r = rows_[i * size_ + j];
        if (!r) continue;
        for (const auto& t : *r) out.push_back({i, j, t.k, t.value});
      }
    }
    return out;
  }

  bool commutative(double eps = tol::prob) const {
    for (Index i = 0; i < size_; ++i) {
      for (Index j = i + 1; j < size_; ++j) {
        if (!defined(i, j) || !defined(j, i)) continue;
        const auto a = dense_row(i, j);
        const auto b = dense_row(j, i);
        for (Index k = 0; k < size_; ++k) {
          if (std::abs(hyperwalk::to_double(a[k]) - hyperwalk::to_double(b[k])) > eps) return false;
        }
      }
    }
    return true;
  }

  BasicTensor<double> to_double() const {
    BasicTensor<double> out;
    out.size_ = size_;
    out.truncated_ = truncated_;
    out.rows_.resize(rows_.size());
    for (std::size_t p = 0; p < rows_.size(); ++p) {
      if (!rows_[p]) continue;
      typename BasicTensor<double>::Row r;
      r.reserve(rows_[p]->size());
      for (const auto& t : *rows_[p]) r.push_back({t.k, hyperwalk::to_double(t.value)});
      out.rows_[p] = std::move(r);
    }
    return out;
  }

 private:
  template <class>
  friend class BasicTensor;
  friend class TensorBuilder<T>;

  void check_pair(Index i, Index j) const {
    if (i >= size_ || j >= size_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair " + format_tuple({i, j}) + " outside tensor of size " +
                      std::to_string(size_));
    }
  }

  Index size_ = 0;
  bool truncated_ = false;
  std::vector<std::optional<Row>> rows_;
};

using StructureTensor = BasicTensor<double>;
using ExactTensor = BasicTensor<Rational>;

/// Accumulates entries and produces a validated BasicTensor.
///
/// build() rejects negative entries and rows whose sum differs from 1 (exactly
/// for Rational, within tol::prob for double). Rows that received no entries
/// are an error unless allow_undefined_rows() was requested, in which case
/// they become undefined (truncated) rows.
template <class T>
class TensorBuilder {
 public:
  explicit TensorBuilder(Index size) : size_(size) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "tensor size must be positive");
  }

  TensorBuilder& add(Index i, Index j, Index k, const T& value) {
    if (i >= size_ || j >= size_ || k >= size_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "entry " + format_tuple({i, j, k}) + " outside size " + std::to_string(size_));
    }
    if (value < T(0)) {
      throw Error(ErrorCode::InvalidTensor, "negative entry at " + format_tuple({i, j, k}));
    }
    touched_[{i, j}];
    if (value == T(0)) return *this;
    auto& cell = touched_[{i, j}][k];
    cell += value;
    return *this;
  }

  /// Declares a row as present even if all its entries are zero; build()
  /// will then reject it for failing stochasticity.
  TensorBuilder& touch(Index i, Index j) {
    touched_[{i, j}];
    return *this;
  }

  TensorBuilder& allow_undefined_rows(bool allow = true) {
    allow_undefined_ = allow;
    return *this;
  }

  BasicTensor<T> build() const {
    BasicTensor<T> out;
    out.size_ = size_;
    out.rows_.resize(size_ * size_);
    for (const auto& [key, cells] : touched_) {
      typename BasicTensor<T>::Row r;
      T sum(0);
      for (const auto& [k, v] : cells) {
        if (v == T(0)) continue;
        r.push_back({k, v});
        sum += v;
      }
      check_sum(key.first, key.second, sum);
      out.rows_[key.first * size_ + key.second] = std::move(r);
    }
    for (Index p = 0; p < size_ * size_; ++p) {
      if (out.rows_[p]) continue;
      if (!allow_undefined_) {
        throw Error(ErrorCode::InvalidTensor,
                    "row " + format_tuple({p / size_, p % size_}) + " has no entries");
      }
      out.truncated_ = true;
    }
    return out;
  }

 private:
  void check_sum(Index i, Index j, const T& sum) const {
    if constexpr (std::is_same_v<T, Rational>) {
      if (sum != T(1)) {
        throw Error(ErrorCode::InvalidTensor, "row " + format_tuple({i, j}) +
                                                  " sums to " + to_fraction_string(sum));
      }
    } else {
      if (std::abs(sum - 1.0) > tol::prob) {
        throw Error(ErrorCode::InvalidTensor, "row " + format_tuple({i, j}) + " sums to " +
                                                  std::to_string(sum) + ", residual " +
                                                  std::to_string(std::abs(sum - 1.0)));
      }
    }
  }

  Index size_;
  bool allow_undefined_ = false;
  std::map<std::pair<Index, Index>, std::map<Index, T>> touched_;
};

}  // namespace hyperwalk
