// Copyright 2026 The cavitygates Authors
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

#include "cavitygates/random.hpp"

#include <cmath>

namespace cavitygates {

ComplexMatrix random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double a = normal(rng), b = normal(rng), c = normal(rng), d = normal(rng);
  const double norm = std::sqrt(a * a + b * b + c * c + d * d);
  a /= norm;
  b /= norm;
  c /= norm;
  d /= norm;
  return ComplexMatrix{{Complex{a, b}, Complex{c, d}}, {Complex{-c, d}, Complex{a, -b}}};
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd z(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) z(r, c) = Complex{normal(rng), normal(rng)};
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex rk = r(k, k);
    q.col(k) *= rk / std::abs(rk);
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd z(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) z(r, c) = Complex{normal(rng), normal(rng)};
  return ComplexMatrix(Eigen::MatrixXcd(0.5 * (z + z.adjoint())));
}

}  // namespace cavitygates
