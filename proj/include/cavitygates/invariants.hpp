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

namespace cavitygates {

/// Local-equivalence fingerprint of a two-qubit gate.
struct LocalInvariants {
  Complex g1;  ///< Tr^2(m) / (16 det M)
  Complex g2;  ///< (Tr^2(m) - Tr(m^2)) / (4 det M); real for unitary M
};

/**
 * Single-qubit sandwich relating two locally equivalent gates:
 * phase * o_prime * M * o == L, with o and o_prime Kronecker products of
 * 2x2 unitaries. `o` acts first.
 */
struct LocalCorrectionPair {
  ComplexMatrix o;
  ComplexMatrix o_prime;
  Complex phase;
};

/**
 * Magic basis Q. Its rows are (|00>+i|11>)/sqrt2, (i|01>+|10>)/sqrt2,
 * (i|01>-|10>)/sqrt2, (|00>-i|11>)/sqrt2. Q^dagger (A x B) Q is real
 * orthogonal for any A, B in SU(2).
 */
ComplexMatrix magic_basis();

/// Throws DimensionMismatch unless 4x4, NotUnitary unless unitary within tol.
LocalInvariants local_invariants(const ComplexMatrix& gate, Tolerance tol = {});

/// Both invariant components agree within tol.
bool are_equivalent(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});

/// True iff `u` (4x4) equals A x B for some 2x2 matrices, i.e. its
/// block rearrangement has exactly one nonzero singular value.
bool is_local(const ComplexMatrix& u, Tolerance tol = {});

/**
 * Finds (O, O', phase) with phase * O' * M * O == L.
 *
 * Throws NotEquivalent if the invariants of `m_gate` and `l_gate` differ by
 * more than tol, plus the errors of local_invariants.
 */
LocalCorrectionPair solve_local_corrections(const ComplexMatrix& m_gate, const ComplexMatrix& l_gate,
                                            Tolerance tol = {});

}  // namespace cavitygates
