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

#include "cavitygates/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "cavitygates/collective_spin.hpp"
#include "cavitygates/gates.hpp"
#include "cavitygates/random.hpp"

namespace cavitygates {

namespace {

constexpr double kTight = 1e-9;
constexpr double kLoose = 1e-8;
constexpr double kExact = 1e-12;

double unitarity_error(const ComplexMatrix& u) {
  return (dagger(u) * u - ComplexMatrix::identity(u.dim())).frobenius_norm();
}

// 0 when the exact times agree, otherwise the size of the gap.
double time_error(Rational got, Rational want) {
  return got == want ? 0.0 : std::abs((got + -want).to_double());
}

void merge(Report& into, const Report& from) {
  for (const auto& m : from.metrics)
    into.metrics.push_back({from.target + "." + m.name, m.value, m.tolerance});
}

double thermal_spread(const GateSequence& seq) {
  const auto reference = compose(seq, 0.0);
  double worst = 0.0;
  for (double nbar : {0.5, 3.7}) worst = std::max(worst, phase_distance(compose(seq, nbar), reference));
  return worst;
}

}  // namespace

Status Report::status() const {
  return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.passed(); })
             ? Status::Pass
             : Status::Fail;
}

Json to_json(const Report& r) {
  Json metrics = Json::array();
  for (const auto& m : r.metrics)
    metrics.push_back(Json{{"name", m.name}, {"value", m.value}, {"tolerance", m.tolerance},
                           {"pass", m.passed()}});
  Json out{{"target", r.target},
           {"status", r.status() == Status::Pass ? "pass" : "fail"},
           {"metrics", std::move(metrics)}};
  if (r.artifacts) out["artifacts"] = *r.artifacts;
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << fmt::format("verify {}: {}\n", r.target, r.status() == Status::Pass ? "PASS" : "FAIL");
  for (const auto& m : r.metrics)
    out << fmt::format("  [{}] {:<44} {:.3e} (tol {:.0e})\n", m.passed() ? "ok" : "!!", m.name,
                       m.value, m.tolerance);
  return out.str();
}

Report verify_cnot2() {
  Report r{"cnot2", {}, {}};
  const auto seq = cnot2_sequence();
  const auto u = compose(seq);
  const auto target = gates::cnot();
  r.metrics.push_back({"phase_distance", phase_distance(u, target), kTight});
  r.metrics.push_back({"entrywise_with_phase", max_abs_diff(u, target), kTight});
  r.metrics.push_back({"unitarity", unitarity_error(u), kTight});
  const auto inv = local_invariants(compose(cnot2_core_sequence()));
  r.metrics.push_back({"core_g1", std::abs(inv.g1), kTight});
  r.metrics.push_back({"core_g2", std::abs(inv.g2 - 1.0), kTight});
  r.metrics.push_back({"collective_time", time_error(collective_time(seq), Rational(1, 2)), 0.0});
  r.metrics.push_back({"thermal_independence", thermal_spread(seq), kTight});
  r.artifacts = Json{{"sequence", to_json(seq)}, {"matrix", to_json(u)}};
  return r;
}

Report verify_cnot3(int control, int target) {
  Report r{fmt::format("cnot3({},{})", control, target), {}, {}};
  const auto seq = cnot3_sequence(control, target);
  const auto u = compose(seq);
  const auto want = gates::controlled_not(3, control, target);
  r.metrics.push_back({"phase_distance", phase_distance(u, want), kLoose});
  r.metrics.push_back({"entrywise_with_phase", max_abs_diff(u, want), kLoose});
  r.metrics.push_back({"unitarity", unitarity_error(u), kTight});
  r.metrics.push_back({"collective_time", time_error(collective_time(seq), Rational(8, 3)), 0.0});
  r.metrics.push_back({"thermal_independence", thermal_spread(seq), kTight});
  r.artifacts = Json{{"sequence", to_json(seq)}, {"matrix", to_json(u)}};
  return r;
}

Report verify_spin_echo() {
  Report r{"spin_echo", {}, {}};
  const auto u = compose(spin_echo_u23(1, 0));
  const auto want = kron(ComplexMatrix::identity(2), gates::u23());
  r.metrics.push_back({"phase_distance", phase_distance(u, want), kTight});

  const auto off = std::hypot(u.block(0, 4, 4).frobenius_norm(), u.block(4, 0, 4).frobenius_norm());
  r.metrics.push_back({"off_diagonal_blocks", off, kTight});

  double factor_error = 1.0;
  double zz_error = 1.0;
  double g1_error = 1.0;
  double g2_error = 1.0;
  try {
    const auto v = extract_factor(u);
    factor_error = phase_distance(v, gates::u23());
    const auto zz = kron(pauli(PauliAxis::Z, 1, AtomCount{1}), pauli(PauliAxis::Z, 1, AtomCount{1}));
    zz_error = phase_distance(v, expm_hermitian(zz, kPi / 3.0));
    const auto inv = local_invariants(v);
    g1_error = std::abs(inv.g1 - 0.25);
    g2_error = std::abs(inv.g2 - 1.5);
  } catch (const NotFactorable&) {
  }
  r.metrics.push_back({"factor_vs_u23", factor_error, kTight});
  r.metrics.push_back({"factor_vs_exp_zz", zz_error, kTight});
  r.metrics.push_back({"invariant_g1", g1_error, kTight});
  r.metrics.push_back({"invariant_g2", g2_error, kTight});

  const auto adjoint = compose(spin_echo_u23(-1, 0));
  r.metrics.push_back({"branch_minus_is_adjoint", phase_distance(adjoint, dagger(want)), kTight});
  const auto trivial = compose(spin_echo_block(Rational(2), 1));
  r.metrics.push_back({"branch_zero_is_identity", phase_distance(trivial, ComplexMatrix::identity(8)), kTight});
  return r;
}

Report verify_toffoli(bool simplified) {
  Report r{simplified ? "toffoli-simplified" : "toffoli", {}, {}};
  const auto seq = toffoli_sequence(simplified);
  const auto u = compose(seq);
  const auto tof = gates::toffoli();
  r.metrics.push_back({"unitarity", unitarity_error(u), kTight});
  if (!simplified) {
    r.metrics.push_back({"phase_distance", phase_distance(u, tof), kLoose});
    r.metrics.push_back({"collective_time", time_error(collective_time(seq), Rational(16)), 0.0});
  } else {
    const Eigen::MatrixXd mag_diff = u.eigen().cwiseAbs() - tof.eigen().cwiseAbs();
    r.metrics.push_back({"magnitude_mismatch", mag_diff.cwiseAbs().maxCoeff(), kLoose});
    // Ratio of u to the Toffoli on its support, one value per input basis state.
    std::vector<Complex> ratios;
    for (Eigen::Index col = 0; col < 8; ++col) {
      Eigen::Index row = 0;
      tof.eigen().col(col).cwiseAbs().maxCoeff(&row);
      ratios.push_back(u.eigen()(row, col));
    }
    std::size_t differing = 0;
    for (const auto& z : ratios)
      if (std::abs(z - ratios.front()) > kLoose) ++differing;
    // Exactly one basis state carries a different phase.
    r.metrics.push_back({"conditional_phase_count_error", std::abs(double(differing) - 1.0), 0.0});
    r.metrics.push_back({"collective_time", time_error(collective_time(seq), Rational(8)), 0.0});
  }
  r.metrics.push_back({"thermal_independence", thermal_spread(seq), kTight});
  return r;
}

Report verify_all() {
  Report all{"all", {}, {}};

  {
    // Two-atom evolution against its closed form.
    Report eq{"two_atom_evolution", {}, {}};
    double worst = 0.0;
    for (double phi : {0.0, kPi / 8.0, kPi / 4.0, 1.0}) {
      const Complex e = std::polar(1.0, -phi);
      const Complex c = std::cos(phi);
      const Complex s = Complex{0.0, -std::sin(phi)};
      const ComplexMatrix closed =
          e * ComplexMatrix{{e, 0, 0, 0}, {0, c, s, 0}, {0, s, c, 0}, {0, 0, 0, std::conj(e)}};
      const auto u = evolve(AtomCount{2}, EvolutionPhase{phi}, {FormKind::Ladder, false}, 0.0, false);
      worst = std::max(worst, max_abs_diff(u, closed));
    }
    eq.metrics.push_back({"closed_form", worst, kExact});

    double curve = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double phi = -kPi + 2.0 * kPi * (i + 0.5) / 50.0;
      const auto inv = local_invariants(
          evolve(AtomCount{2}, EvolutionPhase{phi}, {FormKind::Ladder, false}, 0.0, false));
      const double c2 = std::cos(phi) * std::cos(phi);
      curve = std::max({curve, std::abs(inv.g1 - c2 * c2), std::abs(inv.g2 - (4.0 * c2 - 1.0))});
    }
    eq.metrics.push_back({"invariant_curve", curve, kTight});
    merge(all, eq);
  }

  {
    Report inv{"invariants", {}, {}};
    const auto c = local_invariants(gates::cnot());
    inv.metrics.push_back({"cnot", std::max(std::abs(c.g1), std::abs(c.g2 - 1.0)), kExact});
    inv.metrics.push_back({"cnot_swap_equivalent", are_equivalent(gates::cnot(), gates::swap()) ? 1.0 : 0.0, 0.0});

    std::mt19937_64 rng(20260);
    double invariance = 0.0;
    double round_trip = 0.0;
    double non_local = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = random_unitary(4, rng);
      const auto l = kron(random_su2(rng), random_su2(rng)) * m * kron(random_su2(rng), random_su2(rng));
      const auto im = local_invariants(m);
      const auto il = local_invariants(l);
      invariance = std::max({invariance, std::abs(im.g1 - il.g1), std::abs(im.g2 - il.g2)});
      const auto sol = solve_local_corrections(m, l);
      round_trip = std::max(round_trip, phase_distance(sol.phase * sol.o_prime * m * sol.o, l));
      if (!is_local(sol.o) || !is_local(sol.o_prime)) non_local += 1.0;
    }
    inv.metrics.push_back({"local_invariance", invariance, kTight});
    inv.metrics.push_back({"round_trip", round_trip, kLoose});
    inv.metrics.push_back({"non_local_corrections", non_local, 0.0});
    merge(all, inv);
  }

  {
    Report ops{"operators", {}, {}};
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const AtomCount atoms{n};
      const auto sz = collective_op(PauliAxis::Z, atoms);
      const auto lhs = collective_op(PauliAxis::Plus, atoms) * collective_op(PauliAxis::Minus, atoms);
      worst = std::max(worst, (lhs - (s_squared(atoms) - sz * sz + sz)).frobenius_norm());
    }
    ops.metrics.push_back({"ladder_casimir_identity", worst, kExact});

    double placement = 0.0;
    double thermal = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const AtomCount atoms{n};
      for (FormKind kind : {FormKind::Ladder, FormKind::Casimir}) {
        const HamiltonianForm form{kind, true};
        const EvolutionPhase phi{0.77};
        const auto reference = evolve(atoms, phi, form, 0.0, true);
        for (double nbar : {0.5, 3.7}) {
          const auto bare = evolve(atoms, phi, form, nbar, false);
          const auto comp = compensation_unitary(atoms, form, nbar, phi);
          const auto half = compensation_unitary(atoms, form, nbar, EvolutionPhase{phi.phi / 2.0});
          placement = std::max({placement, phase_distance(comp * bare, bare * comp),
                                phase_distance(comp * bare, half * bare * half)});
          thermal = std::max(thermal, phase_distance(evolve(atoms, phi, form, nbar, true), reference));
        }
      }
    }
    ops.metrics.push_back({"compensation_placement", placement, kTight});
    ops.metrics.push_back({"compensated_thermal_independence", thermal, kTight});
    merge(all, ops);
  }

  merge(all, verify_cnot2());
  merge(all, verify_spin_echo());
  for (int c = 1; c <= 3; ++c)
    for (int t = 1; t <= 3; ++t)
      if (c != t) merge(all, verify_cnot3(c, t));
  merge(all, verify_toffoli(false));
  merge(all, verify_toffoli(true));
  return all;
}

}  // namespace cavitygates
