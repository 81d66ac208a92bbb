from __future__ import annotations

import json
from pathlib import Path

from typer.testing import CliRunner

from wkqfa.cli import app

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def _loop(upper: str, lower: str) -> dict:
    return {"upper": upper, "lower": lower, "entries": [{"from": "q0", "to": "q0", "amp": "1"}]}


def _write_overrunning_machine(path: Path) -> None:
    path.write_text(
        json.dumps(
            {
                "states": ["q0", "acc"],
                "start": "q0",
                "accept": ["acc"],
                "reject": [],
                "alphabet": ["a"],
                "rho": [["a", "a"]],
                "directions": {"q0": [1, 1], "acc": [0, 0]},
                "operators": [_loop("#", "#"), _loop("a", "a"), _loop("$", "$")],
            }
        ),
        encoding="utf-8",
    )


def test_check_command_reports_well_formed_corpus_machine() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["check", "example1_anbncn"])
        log_exists = Path(".wkqfa/logs/wkqfa.log").exists()

    assert result.exit_code == 0
    assert "well-formed: max deviation" in result.stdout
    assert log_exists


def test_check_command_fails_on_printed_ww_table() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app, ["check", str(FIXTURES / "theorem5_printed.json"), "--verbose"]
        )

    assert result.exit_code == 1
    assert "NOT well-formed" in result.stdout
    assert "U_($,$):" in result.stdout


def test_check_command_emits_json_report() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["check", "theorem3_yao", "--format", "json"])

    assert result.exit_code == 0
    record = json.loads(result.stdout.strip())
    assert record["well_formed"] is True
    assert record["max_deviation"] <= 1e-9


def test_run_command_decides_over_all_strands() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["run", "theorem5_ww", "-u", "abab"])

    assert result.exit_code == 0
    assert "decision: accepted" in result.stdout
    assert "witness: amab" in result.stdout
    assert "best_p_acc: 1.000000000" in result.stdout


def test_run_command_on_explicit_pair_emits_json() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app, ["run", "theorem5_ww", "-u", "abab", "-l", "abam", "--format", "json"]
        )

    assert result.exit_code == 0
    record = json.loads(result.stdout.strip())
    assert abs(record["p_acc"] - 0.25) < 1e-9
    assert record["halt_reason"] == "all-halted"


def test_run_command_trace_precedes_summary() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["run", "theorem5_ww", "-u", "a", "-l", "m", "--trace"])

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    first = json.loads(lines[0])
    assert first["step"] == 1
    assert lines[-1] == "halt: all-halted"


def test_run_command_reports_error_bound() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app, ["run", "theorem5_ww", "-u", "a", "--policy", "bounded-error"]
        )

    assert result.exit_code == 0
    assert "decision: rejected" in result.stdout
    assert "error bound holds: yes" in result.stdout


def test_run_command_assert_accept_fails_for_non_member() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["run", "theorem5_ww", "-u", "aba", "--assert-accept"])

    assert result.exit_code == 1


def test_run_command_rejects_lower_with_all_strands() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app, ["run", "theorem5_ww", "-u", "a", "-l", "m", "--all-strands"]
        )

    assert result.exit_code == 2
    assert "either --lower or --all-strands" in result.stderr


def test_run_command_rejects_unknown_machine() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["run", "nope", "-u", "a"])

    assert result.exit_code == 2
    assert "neither a corpus machine" in result.stderr


def test_run_command_rejects_symbol_without_complement() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["run", "theorem5_ww", "-u", "am"])

    assert result.exit_code == 2
    assert "has no complement" in result.stderr


def test_run_command_maps_head_overrun_to_exit_4() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        machine_path = Path("overrun.json")
        _write_overrunning_machine(machine_path)

        result = runner.invoke(app, ["run", str(machine_path), "-u", "a", "-l", "a"])

    assert result.exit_code == 4
    assert "past '$'" in result.stderr


def test_run_command_reports_amplitude_position() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        machine_path = Path("bad.json")
        _write_overrunning_machine(machine_path)
        document = json.loads(machine_path.read_text(encoding="utf-8"))
        document["operators"][0]["entries"][0]["amp"] = "1/0"
        machine_path.write_text(json.dumps(document), encoding="utf-8")

        result = runner.invoke(app, ["run", str(machine_path), "-u", "a"])

    assert result.exit_code == 2
    assert "Machine validation failed." in result.stderr
    assert "position 2" in result.stderr


def test_run_command_maps_huge_amplitude_literal_to_exit_2() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        machine_path = Path("huge.json")
        _write_overrunning_machine(machine_path)
        document = json.loads(machine_path.read_text(encoding="utf-8"))
        document["operators"][0]["entries"][0]["amp"] = "1" * 400
        machine_path.write_text(json.dumps(document), encoding="utf-8")

        result = runner.invoke(app, ["check", str(machine_path)])

    assert result.exit_code == 2
    assert "out of range" in result.stderr


def test_lang_command_prints_tsv_table() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app, ["lang", "example1_anbncn", "--max-len", "3", "--format", "tsv"]
        )

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("word\taccepted")
    assert len(lines) == 41
    accepted = [line.split("\t")[0] for line in lines[1:] if line.split("\t")[1] == "true"]
    assert accepted == ["abc"]


def test_lang_command_text_table_counts_accepted_words() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["lang", "theorem5_ww", "--max-len", "2"])

    assert result.exit_code == 0
    assert "2 of 7 words accepted" in result.stdout


def test_lang_command_exits_3_when_strand_budget_is_exceeded() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(
            app,
            ["lang", "theorem5_ww", "--max-len", "2", "--format", "json"],
            env={"WKQFA_STRAND_BUDGET": "2"},
        )

    assert result.exit_code == 3
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(records) == 7
    assert records[-1]["error"].startswith("Strand budget exceeded")


def test_compile_dfa_command_writes_runnable_machine() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        compiled = runner.invoke(
            app, ["compile-dfa", str(FIXTURES / "example2_dfa.json"), "-o", "regex.json"]
        )
        decided = runner.invoke(app, ["run", "regex.json", "-u", "aba"])

    assert compiled.exit_code == 0
    assert "|V'| = 6, |rho| = 4, |Q'| = 4" in compiled.stdout
    assert "Wrote regex.json" in compiled.stdout
    assert decided.exit_code == 0
    assert "witness: a1b2a1" in decided.stdout


def test_compile_dfa_command_prints_document_to_stdout() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["compile-dfa", str(FIXTURES / "example2_dfa.json")])

    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["start"] == "q0'"
    assert "|Q'| = 4" in result.stderr


def test_compile_dfa_command_rejects_partial_dfa() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(app, ["compile-dfa", str(FIXTURES / "partial_dfa.json")])

    assert result.exit_code == 2
    assert "delta is not total" in result.stderr


def test_corpus_list_and_export() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        listed = runner.invoke(app, ["corpus", "list"])
        exported = runner.invoke(app, ["corpus", "export", "theorem3_yao", "machines"])
        written = sorted(path.name for path in Path("machines").iterdir())

    assert listed.exit_code == 0
    assert listed.stdout.splitlines()[0].startswith("example1_anbncn")
    assert exported.exit_code == 0
    assert "Wrote machines/theorem3_yao.json" in exported.stdout
    assert written == ["theorem3_yao.json", "theorem3_yao.oracle.txt"]
