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

#include <random>

#include "cavitygates/matrix.hpp"

namespace cavitygates {

/// Haar-random 2x2 unitary with unit determinant.
ComplexMatrix random_su2(std::mt19937_64& rng);

/// Haar-random n x n unitary (QR of a complex Ginibre matrix with phase fix).
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Random Hermitian matrix with standard normal entries.
ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng);

}  // namespace cavitygates
