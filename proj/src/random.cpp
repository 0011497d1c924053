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

#include "hyperwalk/random.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/QR>

namespace hyperwalk {

double CounterRng::normal() noexcept {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXcd random_complex_matrix(Index rows, Index cols, CounterRng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      m(r, c) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  }
  return m;
}

Eigen::MatrixXcd random_unitary(Index h_dim, CounterRng& rng) {
  const Eigen::MatrixXcd z = random_complex_matrix(h_dim, h_dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(h_dim, h_dim);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < h_dim; ++c) {
    const std::complex<double> d = r(c, c);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(c) *= d / mag;
  }
  return q;
}

Eigen::VectorXcd random_unit_vector(Index h_dim, CounterRng& rng) {
  Eigen::VectorXcd v = random_complex_matrix(h_dim, 1, rng);
  const double norm = v.norm();
  return norm > 0.0 ? Eigen::VectorXcd(v / norm) : Eigen::VectorXcd::Unit(h_dim, 0);
}

}  // namespace hyperwalk
