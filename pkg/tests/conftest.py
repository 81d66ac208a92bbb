from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
SRC_DIR = ROOT / "src"

path_str = str(SRC_DIR)
if path_str not in sys.path:
    sys.path.insert(0, path_str)

from wkqfa.config.options import RunOptions  # noqa: E402
from wkqfa.runtime import run_strand  # noqa: E402
from wkqfa.tape.strands import complements  # noqa: E402

CONSERVATION_TOL = 1e-9
CONSERVING = RunOptions(norm_tol=CONSERVATION_TOL)


def _run_conserving(machine, w1, w2):
    outcome = run_strand(machine, tuple(w1), tuple(w2), CONSERVING)
    assert outcome.norm_anomalies == [], (w1, w2)
    assert abs(outcome.total - 1.0) <= CONSERVATION_TOL, (w1, w2)
    return outcome


def _strand_outcomes(machine, w1, *, stop_when_certain: bool = True):
    results = []
    for w2 in complements(tuple(w1), machine.rho):
        outcome = _run_conserving(machine, w1, w2)
        results.append((w2, outcome))
        if stop_when_certain and outcome.p_acc >= 1.0 - CONSERVATION_TOL:
            break
    return results


@pytest.fixture
def run_conserving():
    """Run one strand pair, failing on any step whose norm change exceeds 1e-9."""

    return _run_conserving


@pytest.fixture
def strand_outcomes():
    """Run the strands of a word in enumeration order under the conservation check."""

    return _strand_outcomes
