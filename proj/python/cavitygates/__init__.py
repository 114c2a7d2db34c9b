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

"""Gate synthesis and verification for collective-spin atoms in a dispersive cavity."""

import json as _json

from . import _core
from ._core import *  # noqa: F401,F403
from ._core import (
    Error,
    cnot2_sequence as _cnot2_sequence,
    cnot3_sequence as _cnot3_sequence,
    spin_echo_u23 as _spin_echo_u23,
    toffoli_sequence as _toffoli_sequence,
    verify_all as _verify_all,
)

__version__ = "0.1.0"


def cnot2_sequence():
    return _json.loads(_cnot2_sequence())


def cnot3_sequence(control=2, target=3):
    return _json.loads(_cnot3_sequence(control, target))


def spin_echo_u23(branch=1, k=0):
    return _json.loads(_spin_echo_u23(branch, k))


def toffoli_sequence(simplified=False):
    return _json.loads(_toffoli_sequence(simplified))


def compose_sequence(sequence, nbar=0.0):
    """Unitary of a sequence given as a dict (or JSON text)."""
    text = sequence if isinstance(sequence, str) else _json.dumps(sequence)
    return _core.compose(text, nbar)


def sequence_time(sequence):
    """Collective time in units of pi/eta as a fractions.Fraction."""
    from fractions import Fraction

    text = sequence if isinstance(sequence, str) else _json.dumps(sequence)
    num, den = _core.collective_time(text)
    return Fraction(num, den)


def verify_all():
    return _json.loads(_verify_all())

