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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cavitygates/collective_spin.hpp"
#include "cavitygates/gates.hpp"
#include "cavitygates/hamiltonian.hpp"
#include "cavitygates/invariants.hpp"
#include "cavitygates/serialization.hpp"
#include "cavitygates/synthesis.hpp"
#include "cavitygates/verification.hpp"

namespace py = pybind11;
using namespace cavitygates;

namespace {

using Array = Eigen::MatrixXcd;

ComplexMatrix in(const Array& a) { return ComplexMatrix(a); }
Array out(const ComplexMatrix& m) { return m.eigen(); }

PauliAxis axis(const std::string& s) { return parse_pauli_axis(s); }

HamiltonianForm form(const std::string& kind, bool include_linear) {
  return HamiltonianForm{parse_form_kind(kind), include_linear};
}

GateSequence sequence(const std::string& json) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  return sequence_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collective-spin cavity gate synthesis: evolution, local invariants and CNOT/Toffoli sequences.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("kron", [](const Array& a, const Array& b) { return out(kron(in(a), in(b))); });
  m.def("expm_hermitian", [](const Array& h, double scale) { return out(expm_hermitian(in(h), scale)); },
        py::arg("h"), py::arg("scale"));
  m.def("phase_distance", [](const Array& u, const Array& v) { return phase_distance(in(u), in(v)); });

  m.def("pauli", [](const std::string& a, int k, int n) { return out(pauli(axis(a), k, AtomCount{n})); },
        py::arg("axis"), py::arg("k"), py::arg("n"));
  m.def("collective_op", [](const std::string& a, int n) { return out(collective_op(axis(a), AtomCount{n})); },
        py::arg("axis"), py::arg("n"));
  m.def("s_squared", [](int n) { return out(s_squared(AtomCount{n})); });
  m.def("dicke_projector_g", [] { return out(dicke_projector_g()); });
  m.def("cg_coefficient",
        [](double j1, double m1, double j2, double m2, double j, double mm) {
          return cg_coefficient(HalfInt::from_double(j1), HalfInt::from_double(m1), HalfInt::from_double(j2),
                                HalfInt::from_double(m2), HalfInt::from_double(j), HalfInt::from_double(mm));
        },
        py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"), py::arg("J"), py::arg("M"));
  m.def("coupled_basis_transform_3", [] { return out(coupled_basis_transform_3()); });

  m.def("coupling_eta", [](double g, double delta, double kappa) {
    return coupling_eta(CavityParams{g, delta, kappa, 0.0, AtomCount{2}});
  }, py::arg("g"), py::arg("delta"), py::arg("kappa"));
  m.def("validity_ratio", [](double g, double delta, double kappa, int n) {
    return validity_ratio(CavityParams{g, delta, kappa, 0.0, AtomCount{n}});
  }, py::arg("g"), py::arg("delta"), py::arg("kappa"), py::arg("n") = 2);
  m.def("build_hamiltonian",
        [](int n, const std::string& kind, bool include_linear, double nbar) {
          return out(build_hamiltonian(AtomCount{n}, form(kind, include_linear), nbar));
        },
        py::arg("n"), py::arg("form") = "ladder", py::arg("include_linear") = true, py::arg("nbar") = 0.0);
  m.def("evolve",
        [](int n, double phi, const std::string& kind, bool include_linear, double nbar, bool compensate) {
          return out(evolve(AtomCount{n}, EvolutionPhase{phi}, form(kind, include_linear), nbar, compensate));
        },
        py::arg("n"), py::arg("phi"), py::arg("form") = "ladder", py::arg("include_linear") = true,
        py::arg("nbar") = 0.0, py::arg("compensate") = true);

  m.def("magic_basis", [] { return out(magic_basis()); });
  m.def("local_invariants", [](const Array& g) {
    const auto inv = local_invariants(in(g));
    return std::make_pair(inv.g1, inv.g2);
  });
  m.def("are_equivalent", [](const Array& a, const Array& b, double tol) {
    return are_equivalent(in(a), in(b), Tolerance{tol});
  }, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
  m.def("is_local", [](const Array& u, double tol) { return is_local(in(u), Tolerance{tol}); },
        py::arg("u"), py::arg("tol") = 1e-9);
  m.def("solve_local_corrections", [](const Array& mg, const Array& lg) {
    const auto sol = solve_local_corrections(in(mg), in(lg));
    return py::make_tuple(out(sol.o), out(sol.o_prime), sol.phase);
  }, py::arg("m_gate"), py::arg("l_gate"));

  // Sequences cross the boundary as their JSON text.
  auto seq_json = [](const GateSequence& s) { return to_json(s).dump(); };
  m.def("cnot2_sequence", [seq_json] { return seq_json(cnot2_sequence()); });
  m.def("cnot3_sequence", [seq_json](int c, int t) { return seq_json(cnot3_sequence(c, t)); },
        py::arg("control") = 2, py::arg("target") = 3);
  m.def("spin_echo_u23", [seq_json](int branch, int k) { return seq_json(spin_echo_u23(branch, k)); },
        py::arg("branch") = 1, py::arg("k") = 0);
  m.def("toffoli_sequence", [seq_json](bool simplified) { return seq_json(toffoli_sequence(simplified)); },
        py::arg("simplified") = false);
  m.def("compose", [](const std::string& json, double nbar) { return out(compose(sequence(json), nbar)); },
        py::arg("sequence"), py::arg("nbar") = 0.0);
  m.def("collective_time", [](const std::string& json) {
    const Rational t = collective_time(sequence(json));
    return std::make_pair(t.num(), t.den());
  }, "Collective time as (numerator, denominator) in units of pi/eta.");
  m.def("extract_factor", [](const Array& u) { return out(extract_factor(in(u))); });

  m.def("cnot", [] { return out(gates::cnot()); });
  m.def("swap", [] { return out(gates::swap()); });
  m.def("toffoli", [] { return out(gates::toffoli()); });
  m.def("u23", [] { return out(gates::u23()); });

  m.def("verify_all", [] { return to_json(verify_all()).dump(); });
}
