"""Random machines whose operators only permute basis states (up to phases)."""

from __future__ import annotations

import random

from ..config.models import RIGHT_END
from .model import Alphabet, ComplementarityRelation, MachineDef, OperatorTable

_PHASES = ((1 + 0j, "1"), (-1 + 0j, "-1"), (1j, "i"), (-1j, "-1*i"))


def random_permutation_machine(
    rng: random.Random,
    *,
    states: int = 4,
    symbols: tuple[str, ...] = ("a", "b"),
    drop: float = 0.2,
) -> MachineDef:
    """Return a random machine whose specified columns are distinct basis vectors.

    ``states`` non-halting states are generated next to one accepting and one
    rejecting state. Each readable pair maps the non-halting states injectively
    onto targets whose direction keeps every head on its tape; a ``drop``
    fraction of columns is left unspecified for completion to reject.
    """

    names = [f"q{index}" for index in range(states)]
    all_states = (*names, "acc", "rej")
    directions = {name: (rng.randint(0, 1), rng.randint(0, 1)) for name in names}
    directions["acc"] = (0, 0)
    directions["rej"] = (0, 0)

    pairs = [(upper, lower) for upper in symbols for lower in symbols]
    rho = [pair for pair in pairs if rng.random() < 0.6]
    for upper in symbols:
        if not any(first == upper for first, _ in rho):
            rho.append((upper, rng.choice(symbols)))
    rho.sort(key=pairs.index)
    relation = ComplementarityRelation(tuple(rho))

    m = MachineDef(
        states=all_states,
        alphabet=Alphabet(symbols),
        rho=relation,
        start="q0",
        accepting=frozenset({"acc"}),
        rejecting=frozenset({"rej"}),
        operators={},
        directions=directions,
    )
    operators: OperatorTable = {}
    expressions = {}
    for upper, lower in m.readable_pairs():
        allowed = [
            state
            for state in all_states
            if (upper != RIGHT_END or directions[state][0] == 0)
            and (lower != RIGHT_END or directions[state][1] == 0)
        ]
        rng.shuffle(allowed)
        table = operators.setdefault((upper, lower), {})
        for source, target in zip(names, allowed, strict=False):
            if rng.random() < drop:
                continue
            amp, expr = rng.choice(_PHASES)
            table[source] = {target: amp}
            expressions[(upper, lower, source, target)] = expr
    return MachineDef(
        states=all_states,
        alphabet=m.alphabet,
        rho=relation,
        start="q0",
        accepting=m.accepting,
        rejecting=m.rejecting,
        operators=operators,
        directions=directions,
        expressions=expressions,
    )
