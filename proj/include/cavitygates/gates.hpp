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

#pragma once

#include "cavitygates/matrix.hpp"

namespace cavitygates::gates {

/// CNOT on `n` qubits (1-based control and target), built as a permutation.
ComplexMatrix controlled_not(int n, int control, int target);

/// Two-qubit CNOT, control 1 target 2.
ComplexMatrix cnot();
ComplexMatrix swap();
/// Controls 1, 2; target 3.
ComplexMatrix toffoli();
/// diag(e^{-i pi/3}, e^{i pi/3}, e^{i pi/3}, e^{-i pi/3}) = exp(-i pi/3 sigma_z x sigma_z).
ComplexMatrix u23();


}  // namespace cavitygates::gates
