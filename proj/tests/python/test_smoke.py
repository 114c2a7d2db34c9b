# Copyright 2026 The cavitygates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess
from fractions import Fraction

import numpy as np
import pytest

import cavitygates as cg

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


def test_cnot_invariants():
    g1, g2 = cg.local_invariants(CNOT)
    assert abs(g1) < 1e-12
    assert abs(g2 - 1) < 1e-12


def test_cnot2_composes_to_cnot():
    seq = cg.cnot2_sequence()
    u = cg.compose_sequence(seq)
    assert np.max(np.abs(u - CNOT)) < 1e-9
    assert cg.sequence_time(seq) == Fraction(1, 2)


def test_toffoli_times():
    assert cg.sequence_time(cg.toffoli_sequence()) == 16
    assert cg.sequence_time(cg.toffoli_sequence(simplified=True)) == 8


def test_evolve_matches_closed_form():
    phi = 0.3
    u = cg.evolve(2, phi, "ladder", False, 0.0, False)
    e = np.exp(-1j * phi)
    c, s = np.cos(phi), -1j * np.sin(phi)
    want = e * np.array([[e, 0, 0, 0], [0, c, s, 0], [0, s, c, 0], [0, 0, 0, np.conj(e)]])
    assert np.max(np.abs(u - want)) < 1e-12


def test_solver_round_trip():
    rng = np.random.default_rng(1)
    z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m, _ = np.linalg.qr(z)
    a = np.kron(cg.expm_hermitian(cg.pauli("x", 1, 1), 0.4), cg.expm_hermitian(cg.pauli("y", 1, 1), 1.1))
    l = a @ m @ a.conj().T
    o, o_prime, phase = cg.solve_local_corrections(m, l)
    assert cg.phase_distance(phase * o_prime @ m @ o, l) < 1e-8


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        cg.local_invariants(np.eye(2, dtype=complex))
    with pytest.raises(cg.Error):
        cg.compose_sequence("{not json")


def test_verify_all_passes():
    report = cg.verify_all()
    assert report["status"] == "pass"
    assert all(m["pass"] for m in report["metrics"])


@pytest.mark.skipif("CAVITYGATES_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_invariants_json():
    out = subprocess.run(
        [os.environ["CAVITYGATES_CLI"], "--json", "invariants", "swap"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    inv = json.loads(out)
    assert abs(inv["g1"]["re"] + 1) < 1e-12
    assert abs(inv["g2"]["re"] + 3) < 1e-12
