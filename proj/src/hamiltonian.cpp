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

#include "cavitygates/hamiltonian.hpp"

#include <cmath>

#include <fmt/format.h>

namespace cavitygates {

void CavityParams::validate() const {
  for (double v : {g, delta, kappa, nbar})
    if (!std::isfinite(v)) throw InvalidArgument("cavity parameters must be finite");
  if (g < 0.0) throw InvalidArgument(fmt::format("g must be non-negative, got {}", g));
  if (kappa < 0.0) throw InvalidArgument(fmt::format("kappa must be non-negative, got {}", kappa));
  if (nbar < 0.0) throw InvalidArgument(fmt::format("nbar must be non-negative, got {}", nbar));
}

namespace {

double detuning_norm_sq(const CavityParams& p) {
  const double d = p.kappa * p.kappa + p.delta * p.delta;
  if (!(d > 0.0)) throw DegenerateParams("kappa and delta are both zero");
  return d;
}

}  // namespace

double coupling_eta(const CavityParams& p) {
  const double d = detuning_norm_sq(p);
  return p.g * p.g * p.delta / d;
}

double validity_ratio(const CavityParams& p) {
  const double d = detuning_norm_sq(p);
  return p.g * std::sqrt(static_cast<double>(p.n_atoms.value())) / std::sqrt(d);
}

std::string to_string(FormKind kind) { return kind == FormKind::Ladder ? "ladder" : "casimir"; }

FormKind parse_form_kind(const std::string& s) {
  if (s == "ladder") return FormKind::Ladder;
  if (s == "casimir") return FormKind::Casimir;
  throw ParseError(fmt::format("unknown Hamiltonian form '{}' (expected ladder or casimir)", s));
}

ComplexMatrix build_hamiltonian(AtomCount n, HamiltonianForm form, double nbar) {
  const auto sz = collective_op(PauliAxis::Z, n);
  if (form.kind == FormKind::Ladder) {
    const auto h = collective_op(PauliAxis::Plus, n) * collective_op(PauliAxis::Minus, n);
    return form.include_linear ? h + Complex{2.0 * nbar} * sz : h;
  }
  const auto h = s_squared(n) - sz * sz;
  return form.include_linear ? h + Complex{2.0 * nbar + 1.0} * sz : h;
}

CompensationRotation compensation_rotation(HamiltonianForm form, double nbar, EvolutionPhase phi) {
  const double rate = form.kind == FormKind::Ladder ? 2.0 * nbar : 2.0 * nbar + 1.0;
  return {PauliAxis::Z, -rate * phi.phi};
}

ComplexMatrix compensation_unitary(AtomCount n, HamiltonianForm form, double nbar,
                                   EvolutionPhase phi) {
  // R_z(theta) on every qubit is exp(-i theta S_z).
  const auto rot = compensation_rotation(form, nbar, phi);
  return expm_hermitian(collective_op(PauliAxis::Z, n), rot.angle);
}

ComplexMatrix evolve(AtomCount n, EvolutionPhase phi, HamiltonianForm form, double nbar,
                     bool compensate) {
  const auto u = expm_hermitian(build_hamiltonian(n, form, nbar), phi.phi);
  if (!compensate || !form.include_linear) return u;
  return compensation_unitary(n, form, nbar, phi) * u;
}

}  // namespace cavitygates
