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

#include "cavitygates/synthesis.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace cavitygates {

namespace {

ComplexMatrix embed(const ComplexMatrix& op, int qubit, AtomCount n) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = qubit == 1 ? op : id;
  for (int q = 2; q <= n.value(); ++q) out = kron(out, q == qubit ? op : id);
  return out;
}

void check_rotation(const Rotation& r, AtomCount n) {
  if (r.qubit < 1 || r.qubit > n.value())
    throw InvalidQubits(fmt::format("rotation on qubit {} of a {}-qubit register", r.qubit, n.value()));
  if (r.axis != PauliAxis::X && r.axis != PauliAxis::Y && r.axis != PauliAxis::Z)
    throw InvalidQubits("rotation axis must be x, y or z");
}

// Physical forms: the cavity always carries the thermal linear term, compose() cancels it.
constexpr HamiltonianForm kLadder{FormKind::Ladder, true};
constexpr HamiltonianForm kCasimir{FormKind::Casimir, true};

LocalLayer layer(std::vector<Rotation> rotations) { return LocalLayer{std::move(rotations)}; }

}  // namespace

void GateSequence::append(const GateSequence& other) {
  if (!(other.n_atoms == n_atoms))
    throw DimensionMismatch(fmt::format("cannot append a {}-atom sequence to a {}-atom sequence",
                                        other.n_atoms.value(), n_atoms.value()));
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

void GateSequence::validate() const {
  for (const auto& step : steps) {
    if (const auto* l = std::get_if<LocalLayer>(&step))
      for (const auto& r : l->rotations) check_rotation(r, n_atoms);
    if (const auto* p = std::get_if<GlobalPhase>(&step); p && !std::isfinite(p->theta_pi))
      throw InvalidArgument("global phase must be finite");
  }
}

ComplexMatrix rotation_matrix(PauliAxis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (axis) {
    case PauliAxis::X: return ComplexMatrix{{c, Complex{0.0, -s}}, {Complex{0.0, -s}, c}};
    case PauliAxis::Y: return ComplexMatrix{{c, -s}, {s, c}};
    case PauliAxis::Z: return ComplexMatrix::diagonal({Complex{c, -s}, Complex{c, s}});
    default: throw InvalidQubits("rotation axis must be x, y or z");
  }
}

ComplexMatrix step_unitary(const SequenceStep& step, AtomCount n, double nbar) {
  if (const auto* e = std::get_if<CollectiveEvolution>(&step))
    return evolve(n, EvolutionPhase{kPi * e->phi_pi.to_double()}, e->form, nbar, true);
  if (const auto* l = std::get_if<LocalLayer>(&step)) {
    ComplexMatrix u = ComplexMatrix::identity(n.hilbert_dim());
    for (const auto& r : l->rotations) {
      check_rotation(r, n);
      u = embed(rotation_matrix(r.axis, kPi * r.angle_pi), r.qubit, n) * u;
    }
    return u;
  }
  const auto& p = std::get<GlobalPhase>(step);
  return std::polar(1.0, kPi * p.theta_pi) * ComplexMatrix::identity(n.hilbert_dim());
}

ComplexMatrix compose(const GateSequence& seq, double nbar) {
  ComplexMatrix u = ComplexMatrix::identity(seq.n_atoms.hilbert_dim());
  for (const auto& step : seq.steps) u = step_unitary(step, seq.n_atoms, nbar) * u;
  return u;
}

Rational collective_time(const GateSequence& seq) {
  Rational total;
  for (const auto& step : seq.steps)
    if (const auto* e = std::get_if<CollectiveEvolution>(&step)) total = total + abs(e->phi_pi);
  return total;
}

double cnot3_refocus_angle_pi() { return 2.0 * std::atan(1.0 / std::sqrt(2.0)) / kPi; }

GateSequence cnot2_core_sequence() {
  GateSequence seq{AtomCount{2}, {}, "cnot2-core"};
  seq.steps.emplace_back(CollectiveEvolution{Rational(1, 4), kLadder});
  seq.steps.emplace_back(layer({{1, PauliAxis::Y, 1.0}}));
  seq.steps.emplace_back(CollectiveEvolution{Rational(1, 4), kLadder});
  return seq;
}

GateSequence cnot2_sequence() {
  GateSequence seq{AtomCount{2}, {}, "cnot2"};
  seq.steps.emplace_back(layer({{1, PauliAxis::X, -0.5},
                                {1, PauliAxis::Z, 0.75},
                                {2, PauliAxis::X, 0.5},
                                {2, PauliAxis::Z, 0.25}}));
  seq.append(cnot2_core_sequence());
  seq.steps.emplace_back(layer({{1, PauliAxis::Z, 0.25},
                                {1, PauliAxis::Y, -0.5},
                                {2, PauliAxis::Z, 1.25}}));
  seq.steps.emplace_back(GlobalPhase{-0.25});
  return seq;
}

GateSequence spin_echo_block(Rational phi_pi, int excluded) {
  const AtomCount three{3};
  if (excluded < 1 || excluded > 3)
    throw InvalidQubits(fmt::format("echo atom {} outside 1..3", excluded));
  const LocalLayer flip = layer({{excluded, PauliAxis::X, 1.0}});
  GateSequence seq{three, {}, fmt::format("spin-echo[{}]({} pi)", excluded, phi_pi.to_string())};
  seq.steps.emplace_back(CollectiveEvolution{phi_pi, kCasimir});
  seq.steps.emplace_back(flip);
  seq.steps.emplace_back(CollectiveEvolution{phi_pi, kCasimir});
  seq.steps.emplace_back(flip);
  return seq;
}

GateSequence spin_echo_u23(int branch, int k) {
  if (branch != 1 && branch != -1)
    throw InvalidBranch(fmt::format("branch must be +1 or -1, got {}", branch));
  if (k < 0) throw InvalidBranch(fmt::format("k must be non-negative, got {}", k));
  auto seq = spin_echo_block(Rational(2 * (3 * k + branch), 3), 1);
  seq.label = fmt::format("u23(branch={:+d}, k={})", branch, k);
  return seq;
}

ComplexMatrix extract_factor(const ComplexMatrix& u, Tolerance tol) {
  if (u.dim() != 8) throw NotFactorable(fmt::format("expected an 8x8 matrix, got {}x{}", u.dim(), u.dim()));
  const auto top = u.block(0, 0, 4);
  const auto bottom = u.block(4, 4, 4);
  const double off = std::hypot(u.block(0, 4, 4).frobenius_norm(), u.block(4, 0, 4).frobenius_norm());
  if (off > tol.eps)
    throw NotFactorable(fmt::format("off-diagonal blocks have norm {:.3e}", off));
  const double mismatch = (top - bottom).frobenius_norm();
  if (mismatch > tol.eps)
    throw NotFactorable(fmt::format("diagonal blocks differ by {:.3e}", mismatch));
  return top;
}

GateSequence cnot3_sequence(int control, int target) {
  if (control < 1 || control > 3 || target < 1 || target > 3 || control == target)
    throw InvalidQubits(fmt::format("invalid CNOT({}, {}) on three atoms", control, target));
  const int spectator = 6 - control - target;
  const double refocus = cnot3_refocus_angle_pi();
  const GateSequence echo = spin_echo_block(Rational(2, 3), spectator);

  GateSequence seq{AtomCount{3}, {}, fmt::format("cnot3({},{})", control, target)};
  seq.steps.emplace_back(layer({{control, PauliAxis::X, -1.0},
                                {target, PauliAxis::Z, refocus / 2.0},
                                {target, PauliAxis::X, 0.5}}));
  seq.append(echo);
  seq.steps.emplace_back(layer({{target, PauliAxis::Y, refocus}}));
  seq.append(echo);
  seq.steps.emplace_back(layer({{control, PauliAxis::Z, -0.5},
                                {control, PauliAxis::Y, -1.0},
                                {target, PauliAxis::Y, -refocus / 2.0},
                                {target, PauliAxis::Z, 1.0}}));
  seq.steps.emplace_back(GlobalPhase{-0.25});
  return seq;
}

namespace {

LocalLayer hadamard(int q) { return layer({{q, PauliAxis::Z, 1.0}, {q, PauliAxis::Y, 0.5}}); }
Rotation t_gate(int q, double sign = 1.0) { return {q, PauliAxis::Z, sign * 0.25}; }

}  // namespace

GateSequence toffoli_sequence(bool simplified) {
  GateSequence seq{AtomCount{3}, {}, simplified ? "toffoli-simplified" : "toffoli"};
  auto cx = [&seq](int c, int t) { seq.append(cnot3_sequence(c, t)); };
  auto local = [&seq](LocalLayer l) { seq.steps.emplace_back(std::move(l)); };

  if (simplified) {
    const auto a = [](double sign) { return layer({{3, PauliAxis::Y, sign * 0.25}}); };
    local(a(1.0));
    cx(2, 3);
    local(a(1.0));
    cx(1, 3);
    local(a(-1.0));
    cx(2, 3);
    local(a(-1.0));
    return seq;
  }

  local(hadamard(3));
  cx(2, 3);
  local(layer({t_gate(3, -1.0)}));
  cx(1, 3);
  local(layer({t_gate(3)}));
  cx(2, 3);
  local(layer({t_gate(3, -1.0)}));
  cx(1, 3);
  local(layer({t_gate(2), t_gate(3)}));
  local(hadamard(3));
  cx(1, 2);
  local(layer({t_gate(1), t_gate(2, -1.0)}));
  cx(1, 2);
  return seq;
}

}  // namespace cavitygates
