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

#include "cavitygates/collective_spin.hpp"
#include "cavitygates/matrix.hpp"

namespace cavitygates {

/// Physical parameters of the dispersive cavity. Rates in rad/s.
struct CavityParams {
  double g = 0.0;      ///< atom-cavity dipole coupling
  double delta = 0.0;  ///< detuning omega_0 - omega
  double kappa = 0.0;  ///< cavity loss rate
  double nbar = 0.0;   ///< mean thermal photon number
  AtomCount n_atoms{2};

  /// Throws InvalidArgument if g, kappa or nbar is negative or any value is non-finite.
  void validate() const;
};

/// Dimensionless evolution phase phi = eta * t.
struct EvolutionPhase {
  double phi = 0.0;
};

/// Reporting threshold for validity_ratio; values at or above it should be flagged.
inline constexpr double kValidityWarningThreshold = 0.1;

/// eta = g^2 Delta / (kappa^2 + Delta^2). Throws DegenerateParams when kappa = Delta = 0.
double coupling_eta(const CavityParams& p);

/// g sqrt(N) / |i Delta + kappa|; the effective description needs this << 1.
double validity_ratio(const CavityParams& p);

enum class FormKind {
  Ladder,   ///< S+S- + 2 nbar S_z
  Casimir,  ///< S^2 - S_z^2 + (2 nbar + 1) S_z
};

/// Which algebraic form of the effective Hamiltonian, and whether its linear S_z term is kept.
struct HamiltonianForm {
  FormKind kind = FormKind::Ladder;
  bool include_linear = true;

  friend bool operator==(const HamiltonianForm&, const HamiltonianForm&) = default;
};

std::string to_string(FormKind kind);
FormKind parse_form_kind(const std::string& s);

/**
 * H / (hbar eta) as a dimensionless Hermitian matrix.
 *
 *   Ladder,  linear kept:    S+S- + 2 nbar S_z
 *   Ladder,  linear dropped: S+S-
 *   Casimir, linear kept:    S^2 - S_z^2 + (2 nbar + 1) S_z
 *   Casimir, linear dropped: S^2 - S_z^2
 *
 * The two "linear kept" forms are the same operator.
 */
ComplexMatrix build_hamiltonian(AtomCount n, HamiltonianForm form, double nbar);

/// A rotation R_axis(angle) = exp(-i angle sigma_axis / 2) applied to every qubit.
struct CompensationRotation {
  PauliAxis axis = PauliAxis::Z;
  double angle = 0.0;  ///< radians
};

/// R_z(-2 nbar phi) for the ladder form, R_z(-(2 nbar + 1) phi) for the Casimir form.
CompensationRotation compensation_rotation(HamiltonianForm form, double nbar, EvolutionPhase phi);

/// The compensation rotation as an n-qubit unitary (the same R_z on every qubit).
ComplexMatrix compensation_unitary(AtomCount n, HamiltonianForm form, double nbar, EvolutionPhase phi);

/**
 * exp(-i phi H/(hbar eta)). With `compensate` set and the linear term present
 * in `form`, the per-qubit compensation rotation is applied as well, which
 * removes every trace of nbar from the result. S_z commutes with H, so the
 * placement of that rotation within the evolution window does not matter.
 */
ComplexMatrix evolve(AtomCount n, EvolutionPhase phi, HamiltonianForm form, double nbar,
                     bool compensate);

}  // namespace cavitygates
