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

#include "cavitygates/gates.hpp"

#include <complex>

#include <fmt/format.h>

namespace cavitygates::gates {

ComplexMatrix controlled_not(int n, int control, int target) {
  if (n < 2 || n > 3 || control < 1 || control > n || target < 1 || target > n || control == target)
    throw InvalidQubits(fmt::format("invalid CNOT({}, {}) on {} qubits", control, target, n));
  const int dim = 1 << n;
  const int cbit = 1 << (n - control);
  const int tbit = 1 << (n - target);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) m((col & cbit) ? col ^ tbit : col, col) = 1.0;
  return ComplexMatrix(std::move(m));
}

ComplexMatrix cnot() { return controlled_not(2, 1, 2); }

ComplexMatrix swap() {
  return ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix toffoli() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return ComplexMatrix(std::move(m));
}

ComplexMatrix u23() {
  const Complex minus = std::polar(1.0, -kPi / 3.0);
  const Complex plus = std::polar(1.0, kPi / 3.0);
  return ComplexMatrix::diagonal({minus, plus, plus, minus});
}

}  // namespace cavitygates::gates
