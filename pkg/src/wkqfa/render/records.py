"""Machine-readable records: JSON lines and TSV rows with full-precision floats."""

from __future__ import annotations

import json
from collections.abc import Iterable
from typing import Any

from ..automaton.wellformed import WellFormedReport
from ..runtime.models import Decision, RunOutcome, SweepRow
from ..tape.strands import Strand, format_word

SWEEP_COLUMNS = ("word", "accepted", "best_p_acc", "strands_examined", "witness", "error")


def json_line(record: dict[str, Any]) -> str:
    """Serialize one record deterministically on a single line."""

    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def outcome_record(w1: Strand, w2: Strand, outcome: RunOutcome) -> dict[str, Any]:
    return {
        "upper": format_word(w1),
        "lower": format_word(w2),
        "p_acc": outcome.p_acc,
        "p_rej": outcome.p_rej,
        "p_residual": outcome.p_residual,
        "steps": outcome.steps,
        "halt_reason": outcome.halt_reason.value,
        "norm_anomalies": list(outcome.norm_anomalies),
    }


def decision_record(w1: Strand, decision: Decision, policy: str) -> dict[str, Any]:
    return {
        "upper": format_word(w1),
        "policy": policy,
        "accepted": decision.accepted,
        "witness": None if decision.witness is None else format_word(decision.witness),
        "best_p_acc": decision.best_p_acc,
        "strands_examined": decision.strands_examined,
        "error_bound_holds": decision.error_bound_holds,
    }


def sweep_record(row: SweepRow) -> dict[str, Any]:
    return {
        "word": format_word(row.word),
        "accepted": row.accepted,
        "best_p_acc": row.best_p_acc,
        "strands_examined": row.strands_examined,
        "witness": None if row.witness is None else format_word(row.witness),
        "error": row.error,
    }


def report_record(report: WellFormedReport) -> dict[str, Any]:
    return {
        "well_formed": report.well_formed,
        "tol": report.tol,
        "max_deviation": report.max_deviation,
        "operators": [
            {"upper": item.pair[0], "lower": item.pair[1], "deviation": item.deviation}
            for item in report.deviations
        ],
    }


def tsv_lines(columns: Iterable[str], records: Iterable[dict[str, Any]]) -> list[str]:
    """Render records as a header line plus one tab-separated line per record."""

    names = list(columns)
    lines = ["\t".join(names)]
    for record in records:
        lines.append("\t".join(_tsv_cell(record.get(name)) for name in names))
    return lines


def _tsv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return ",".join(str(item) for item in value)
    return str(value)
