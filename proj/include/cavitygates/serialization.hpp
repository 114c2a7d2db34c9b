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

#include <json.hpp>

#include "cavitygates/hamiltonian.hpp"
#include "cavitygates/invariants.hpp"
#include "cavitygates/matrix.hpp"
#include "cavitygates/synthesis.hpp"

namespace cavitygates {

using Json = nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"g1": {"re":..,"im":..}, "g2": {"re":..,"im":..}}
Json to_json(const LocalInvariants& inv);

/// {"g":..,"delta":..,"kappa":..,"nbar":..,"n_atoms":..}; nbar and n_atoms optional (0, 2).
Json to_json(const CavityParams& p);
CavityParams cavity_params_from_json(const Json& j);

/**
 * {"label": .., "n_atoms": .., "steps": [..]} with steps
 *
 *   {"kind": "evolve", "phi_pi": "2/3", "form": "casimir", "include_linear": true}
 *   {"kind": "local",  "rotations": [{"qubit": 1, "axis": "x", "angle_pi": 0.5}, ..]}
 *   {"kind": "phase",  "theta_pi": -0.25}
 *
 * All angles are in units of pi. Doubles are written with round-trip precision.
 */
Json to_json(const GateSequence& seq);
GateSequence sequence_from_json(const Json& j);

}  // namespace cavitygates
