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

#include <cstddef>
#include <string>

#include "cavitygates/matrix.hpp"

namespace cavitygates {

/// Number of atoms (qubits) in the cavity, 1..3.
class AtomCount {
 public:
  /// Throws IndexOutOfRange outside 1..3.
  explicit AtomCount(int n);

  int value() const { return n_; }
  std::size_t hilbert_dim() const { return std::size_t{1} << n_; }

  friend bool operator==(AtomCount, AtomCount) = default;

 private:
  int n_;
};

enum class PauliAxis { X, Y, Z, Plus, Minus };

/// Parses "x", "y", "z", "+", "-".
PauliAxis parse_pauli_axis(const std::string& s);

/// A half-integer stored as twice its value, so 3/2 is {3}.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  /// Throws InvalidQuantumNumbers if 2*v is not integral.
  static HalfInt from_double(double v);
  double value() const { return 0.5 * twice; }

  friend bool operator==(HalfInt, HalfInt) = default;
};

/// Dicke label |j, m>.
struct SpinQuantum {
  HalfInt j;
  HalfInt m;

  /// Throws InvalidQuantumNumbers unless j >= 0, |m| <= j and j - m is integral.
  SpinQuantum(HalfInt j_, HalfInt m_);
};

/**
 * Single-qubit operator embedded at qubit `k` (1-based, qubit 1 leftmost)
 * of an `n`-qubit register. sigma_z = diag(1,-1) with |0> = ground state as
 * the +1 eigenvector, sigma_+ = |0><1| and sigma_- = |1><0|.
 */
ComplexMatrix pauli(PauliAxis axis, int k, AtomCount n);

/// (1/2) sum_k sigma_axis^(k) for x, y, z; sum_k sigma_{+/-}^(k) for the ladder axes.
ComplexMatrix collective_op(PauliAxis axis, AtomCount n);

/// S_x^2 + S_y^2 + S_z^2.
ComplexMatrix s_squared(AtomCount n);

/// G = [S^2 - (S_z^2 - S_z)] / 2 for two atoms; a rank-2 projector.
ComplexMatrix dicke_projector_g();

/**
 * Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
 * convention, evaluated with Racah's closed-form sum. Returns 0 when
 * M != m1 + m2. Throws InvalidQuantumNumbers for inconsistent labels or a
 * J outside the triangle |j1 - j2| <= J <= j1 + j2.
 */
double cg_coefficient(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/**
 * 8x8 real orthogonal map from the computational basis of atoms (1,2,3) to
 * (atom 1) x (atoms 2,3 coupled to j23). Row r of the result holds the
 * computational-basis amplitudes of coupled state r, ordered
 *
 *   0..2  m1=+1/2, j23=1, M23 = 1, 0, -1
 *   3..5  m1=-1/2, j23=1, M23 = 1, 0, -1
 *   6     m1=+1/2, j23=0
 *   7     m1=-1/2, j23=0
 *
 * so T * |psi> gives coordinates in the coupled basis.
 */
ComplexMatrix coupled_basis_transform_3();

}  // namespace cavitygates
