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

#include <string>
#include <variant>
#include <vector>

#include "cavitygates/collective_spin.hpp"
#include "cavitygates/hamiltonian.hpp"
#include "cavitygates/matrix.hpp"
#include "cavitygates/rational.hpp"

namespace cavitygates {

/// R_axis(pi * angle_pi) = exp(-i pi angle_pi sigma_axis / 2) on one qubit (1-based).
struct Rotation {
  int qubit = 1;
  PauliAxis axis = PauliAxis::Z;
  double angle_pi = 0.0;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Collective evolution for phi = pi * phi_pi, rendered with thermal compensation.
struct CollectiveEvolution {
  Rational phi_pi;
  HamiltonianForm form;

  friend bool operator==(const CollectiveEvolution&, const CollectiveEvolution&) = default;
};

/// Single-qubit rotations applied in listed order.
struct LocalLayer {
  std::vector<Rotation> rotations;

  friend bool operator==(const LocalLayer&, const LocalLayer&) = default;
};

/// Scalar e^{i pi theta_pi}.
struct GlobalPhase {
  double theta_pi = 0.0;

  friend bool operator==(const GlobalPhase&, const GlobalPhase&) = default;
};

using SequenceStep = std::variant<CollectiveEvolution, LocalLayer, GlobalPhase>;

/// Steps in temporal order: steps.front() acts first.
struct GateSequence {
  AtomCount n_atoms{2};
  std::vector<SequenceStep> steps;
  std::string label;

  void append(const GateSequence& other);
  /// Throws InvalidQubits for rotations on missing qubits or non-x/y/z axes,
  /// DimensionMismatch when appending sequences of different sizes.
  void validate() const;

  friend bool operator==(const GateSequence&, const GateSequence&) = default;
};

/// exp(-i angle sigma_axis / 2) for axis x, y or z.
ComplexMatrix rotation_matrix(PauliAxis axis, double angle);

/// Unitary of one step on an n-qubit register.
ComplexMatrix step_unitary(const SequenceStep& step, AtomCount n, double nbar = 0.0);

/// Product of all step unitaries, first step rightmost. Independent of nbar.
ComplexMatrix compose(const GateSequence& seq, double nbar = 0.0);

/// Sum of |phi| over collective steps, in units of pi / eta.
Rational collective_time(const GateSequence& seq);

/// tan(phi_f / 2) = 1/sqrt(2), in units of pi.
double cnot3_refocus_angle_pi();

/**
 * CNOT (control 1, target 2) on two atoms: a pre layer, U(pi/4), R_y(pi) on
 * atom 1, U(pi/4), a post layer, and the global phase e^{-i pi/4}. Collective
 * time pi/2.
 */
GateSequence cnot2_sequence();

/// The CNOT-equivalent core U(pi/4) (R_y(pi) x 1) U(pi/4).
GateSequence cnot2_core_sequence();

/**
 * Collective evolution, NOT on `excluded`, collective evolution, NOT on
 * `excluded`, with the Casimir form. For phi = 2 pi (3k + i) / 3 and i != 0
 * the excluded atom decouples and the remaining pair sees
 * exp(-/+ i pi/3 sigma_z x sigma_z).
 */
GateSequence spin_echo_block(Rational phi_pi, int excluded);

/// spin_echo_block on atom 1 with phi = 2 pi (3k + branch) / 3. Throws InvalidBranch unless branch is +1 or -1.
GateSequence spin_echo_u23(int branch, int k);

/**
 * Returns V for an 8x8 `u` equal to 1_2 x V up to tolerance. Throws
 * NotFactorable if the off-diagonal blocks are nonzero or the diagonal
 * blocks differ.
 */
ComplexMatrix extract_factor(const ComplexMatrix& u, Tolerance tol = {});

/// CNOT between two of three atoms, the third untouched. Collective time 8 pi/3.
GateSequence cnot3_sequence(int control, int target);

/**
 * Toffoli with controls 1, 2 and target 3. The full version is the 6-CNOT
 * H/T network (collective time 16 pi). The simplified version uses three
 * CNOTs and R_y(+/-pi/4) on the target (collective time 8 pi); it matches
 * the Toffoli except for a sign on |101>.
 */
GateSequence toffoli_sequence(bool simplified);

}  // namespace cavitygates
