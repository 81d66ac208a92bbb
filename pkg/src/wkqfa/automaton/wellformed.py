"""Well-formedness check: every operator must be unitary on the declared columns."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config.amplitude import DEFAULT_TOL
from ..errors import CompletionError
from .model import MachineDef, SymbolPair


@dataclass(frozen=True, slots=True)
class OperatorDeviation:
    """Distance of one operator's Gram matrix from the identity."""

    pair: SymbolPair
    deviation: float


@dataclass(frozen=True, slots=True)
class WellFormedReport:
    tol: float
    deviations: tuple[OperatorDeviation, ...]

    @property
    def well_formed(self) -> bool:
        return all(item.deviation <= self.tol for item in self.deviations)

    @property
    def max_deviation(self) -> float:
        return max((item.deviation for item in self.deviations), default=0.0)

    def failing(self) -> list[OperatorDeviation]:
        """Return the operators whose deviation exceeds the tolerance."""

        return [item for item in self.deviations if item.deviation > self.tol]


def column_matrix(m: MachineDef, pair: SymbolPair) -> np.ndarray:
    """Return the ``|Q| x |Q_declared|`` matrix of the declared columns of ``pair``."""

    row = {state: index for index, state in enumerate(m.states)}
    table = m.operators.get(pair, {})
    matrix = np.zeros((len(m.states), len(m.declared_states)), dtype=np.complex128)
    for col, source in enumerate(m.declared_states):
        for target, amp in table.get(source, {}).items():
            matrix[row[target], col] = amp
    return matrix


def gram_deviation(m: MachineDef, pair: SymbolPair) -> float:
    """Return ``max |G - I|`` where ``G`` is the Gram matrix of the declared columns."""

    matrix = column_matrix(m, pair)
    gram = matrix.conj().T @ matrix
    return float(np.max(np.abs(gram - np.eye(gram.shape[0])), initial=0.0))


def check_well_formed(m: MachineDef, tol: float = DEFAULT_TOL) -> WellFormedReport:
    """Report the Gram deviation of every materialized operator of ``m``."""

    deviations = tuple(
        OperatorDeviation(pair=pair, deviation=gram_deviation(m, pair)) for pair in m.operators
    )
    return WellFormedReport(tol=tol, deviations=deviations)


def extend_to_unitary(m: MachineDef, pair: SymbolPair, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return a full unitary whose declared columns are those of ``pair``.

    The columns of the non-declared states are an orthonormal basis of the
    complement of the declared column space, so the partial operator is the
    restriction of a unitary on all of ``Q``.

    Raises:
        CompletionError: if the declared columns are not orthonormal.
    """

    deviation = gram_deviation(m, pair)
    if deviation > tol:
        raise CompletionError(
            f"U_{{{pair[0]},{pair[1]}}} is not extendable; Gram deviation {deviation:.6g}"
        )
    matrix = column_matrix(m, pair)
    declared = len(m.declared_states)
    basis, _, _ = np.linalg.svd(matrix, full_matrices=True)
    complement = basis[:, declared:]
    unitary = np.zeros((len(m.states), len(m.states)), dtype=np.complex128)
    declared_set = set(m.declared_states)
    extra = 0
    for col, state in enumerate(m.states):
        if state in declared_set:
            unitary[:, col] = matrix[:, m.declared_states.index(state)]
        else:
            unitary[:, col] = complement[:, extra]
            extra += 1
    return unitary
