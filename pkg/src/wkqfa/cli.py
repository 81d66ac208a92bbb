"""Typer CLI for the WKQFA toolkit."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import typer

from .app import (
    check_machine,
    compile_dfa_file,
    decide_word,
    parse_upper,
    prepare_machine,
    run_pair,
)
from .cli_errors import handle_cli_exception
from .config.amplitude import DEFAULT_TOL
from .config.options import RunOptions, strand_budget_from_env
from .corpus.registry import export_machine, get_machine, list_machines
from .errors import WkqfaError
from .logging_config import configure_logging, shutdown_logging
from .render import (
    SWEEP_COLUMNS,
    OutputFormat,
    decision_record,
    format_decision,
    format_outcome,
    json_line,
    outcome_record,
    print_corpus,
    print_report,
    print_sweep,
    report_record,
    resolve_output_format,
    sweep_record,
    tsv_lines,
)
from .runtime.decide import language_sweep
from .runtime.models import AcceptancePolicy
from .version import get_version

app = typer.Typer(help="Watson-Crick quantum finite automata", add_completion=False)
corpus_app = typer.Typer(help="Built-in corpus machines.", add_completion=False)
app.add_typer(corpus_app, name="corpus")

MACHINE_HELP = "Corpus machine name or path to a machine JSON file."


@app.callback()
def main() -> None:
    """WKQFA CLI."""
    return None


def _fail(exc: Exception, logger: logging.Logger) -> typer.Exit:
    result = handle_cli_exception(exc, logger)
    typer.echo(result.message, err=True)
    return typer.Exit(code=result.exit_code)


def _echo_records(output: OutputFormat, records: list[dict[str, Any]]) -> None:
    if output is OutputFormat.JSON:
        for record in records:
            typer.echo(json_line(record))
    else:
        columns = list(records[0]) if records else []
        for line in tsv_lines(columns, records):
            typer.echo(line)


@app.command()
def version() -> None:
    """Print the CLI version."""
    typer.echo(get_version())


@app.command()
def check(
    machine: str = typer.Argument(..., help=MACHINE_HELP),
    tol: float = typer.Option(DEFAULT_TOL, "--tol", min=0.0, help="Gram deviation tolerance."),
    output_format: str = typer.Option("text", "--format", help="Output: text or json."),
    verbose: bool = typer.Option(
        False, "--verbose", help="Enable verbose file logging and show failing columns."
    ),
) -> None:
    """Check that every operator is unitary on the declared states."""

    logging_ctx = configure_logging(verbose=verbose, command="check")
    logger = logging_ctx.logger.getChild("cli.check")
    try:
        output = resolve_output_format(output_format)
        result = check_machine(machine, tol=tol, logger=logger)
        if output is OutputFormat.TEXT:
            print_report(result.report, result.machine, verbose=verbose)
        else:
            _echo_records(output, [report_record(result.report)])
        if verbose:
            typer.echo(f"Log file: {logging_ctx.log_path}", err=True)
        if not result.report.well_formed:
            raise typer.Exit(code=1)
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - centralized CLI mapping
        raise _fail(exc, logger) from exc
    finally:
        shutdown_logging()


@app.command()
def run(
    machine: str = typer.Argument(..., help=MACHINE_HELP),
    upper: str = typer.Option("", "--upper", "-u", help="Upper strand; empty is the empty word."),
    lower: str | None = typer.Option(None, "--lower", "-l", help="Explicit lower strand."),
    all_strands: bool = typer.Option(
        False, "--all-strands", help="Decide over every complementary strand (default)."
    ),
    policy: str = typer.Option(
        "exists-strand-certain",
        "--policy",
        help="exists-strand-certain, exists-strand-cutpoint (with --theta) or bounded-error.",
    ),
    theta: float | None = typer.Option(None, "--theta", help="Cut-point for the cutpoint policy."),
    trace: bool = typer.Option(False, "--trace", help="Emit one JSON line per step."),
    output_format: str = typer.Option("text", "--format", help="Output: text, json or tsv."),
    jobs: int = typer.Option(1, "--jobs", min=1, help="Worker processes for strand runs."),
    step_cap: int | None = typer.Option(None, "--step-cap", min=0, help="Override the step cap."),
    tol: float = typer.Option(DEFAULT_TOL, "--tol", min=0.0, help="Acceptance tolerance."),
    assert_accept: bool = typer.Option(
        False, "--assert-accept", help="Exit 1 when the word is not accepted."
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose file logging."),
) -> None:
    """Run one strand pair, or decide a word over all of its complementary strands."""

    logging_ctx = configure_logging(verbose=verbose, command="run")
    logger = logging_ctx.logger.getChild("cli.run")
    try:
        if lower is not None and all_strands:
            raise WkqfaError("Use either --lower or --all-strands, not both.", exit_code=2)
        output = resolve_output_format(output_format)
        acceptance = AcceptancePolicy.from_name(policy, theta)
        options = RunOptions(
            step_cap=step_cap,
            trace=trace,
            tol=tol,
            strand_budget=strand_budget_from_env(),
            jobs=jobs,
        )
        target = prepare_machine(machine)
        word = parse_upper(target, upper)

        if lower is not None:
            strand_run = run_pair(target, word, lower, options)
            accepted = acceptance.accepts(strand_run.outcome.p_acc, tol)
            record = outcome_record(strand_run.upper, strand_run.lower, strand_run.outcome)
            summary = format_outcome(strand_run.upper, strand_run.lower, strand_run.outcome)
        else:
            decision, strand_run = decide_word(target, word, acceptance, options)
            accepted = decision.accepted
            record = decision_record(word, decision, acceptance.label)
            summary = format_decision(word, decision, acceptance.label)

        if strand_run is not None and strand_run.outcome.witness_trace is not None:
            for step_record in strand_run.outcome.witness_trace:
                typer.echo(step_record.to_json_line())
        if output is OutputFormat.TEXT:
            typer.echo(summary)
        else:
            _echo_records(output, [record])
        logger.info("Run finished on '%s': accepted=%s", upper, accepted)
        if assert_accept and not accepted:
            raise typer.Exit(code=1)
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - centralized CLI mapping
        raise _fail(exc, logger) from exc
    finally:
        shutdown_logging()


@app.command()
def lang(
    machine: str = typer.Argument(..., help=MACHINE_HELP),
    max_len: int = typer.Option(..., "--max-len", min=0, help="Longest upper word to decide."),
    policy: str = typer.Option("exists-strand-certain", "--policy", help="Acceptance policy."),
    theta: float | None = typer.Option(None, "--theta", help="Cut-point for the cutpoint policy."),
    output_format: str = typer.Option("text", "--format", help="Output: text, json or tsv."),
    jobs: int = typer.Option(1, "--jobs", min=1, help="Worker processes for words."),
    tol: float = typer.Option(DEFAULT_TOL, "--tol", min=0.0, help="Acceptance tolerance."),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose file logging."),
) -> None:
    """Print the membership table of every upper word up to --max-len."""

    logging_ctx = configure_logging(verbose=verbose, command="lang")
    logger = logging_ctx.logger.getChild("cli.lang")
    try:
        output = resolve_output_format(output_format)
        acceptance = AcceptancePolicy.from_name(policy, theta)
        options = RunOptions(tol=tol, strand_budget=strand_budget_from_env(), jobs=jobs)
        target = prepare_machine(machine)
        rows = language_sweep(target, max_len, acceptance, options)
        if output is OutputFormat.TEXT:
            print_sweep(rows, title=f"{machine} up to length {max_len} ({acceptance.label})")
        elif output is OutputFormat.JSON:
            for row in rows:
                typer.echo(json_line(sweep_record(row)))
        else:
            for line in tsv_lines(SWEEP_COLUMNS, [sweep_record(row) for row in rows]):
                typer.echo(line)
        failed = [row for row in rows if row.error is not None]
        if failed:
            logger.error("Strand budget exceeded on %d words", len(failed))
            raise typer.Exit(code=3)
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - centralized CLI mapping
        raise _fail(exc, logger) from exc
    finally:
        shutdown_logging()


@app.command("compile-dfa")
def compile_dfa_command(
    dfa: Path = typer.Argument(..., help="Path to a DFA JSON file."),
    output: Path | None = typer.Option(
        None, "--output", "-o", help="Machine file to write; prints to stdout when omitted."
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose file logging."),
) -> None:
    """Compile a total DFA into an equivalent WKQFA machine file."""

    logging_ctx = configure_logging(verbose=verbose, command="compile-dfa")
    logger = logging_ctx.logger.getChild("cli.compile")
    try:
        text, summary = compile_dfa_file(dfa, output)
        if output is None:
            typer.echo(text, nl=False)
            typer.echo(summary.describe(), err=True)
        else:
            typer.echo(summary.describe())
            typer.echo(f"Wrote {output}")
        logger.info("Compiled %s: %s", dfa, summary.describe())
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - centralized CLI mapping
        raise _fail(exc, logger) from exc
    finally:
        shutdown_logging()


@corpus_app.command("list")
def corpus_list() -> None:
    """List the built-in machines."""

    print_corpus([(name, get_machine(name).language) for name in list_machines()])


@corpus_app.command("export")
def corpus_export(
    name: str = typer.Argument(..., help="Corpus machine name."),
    directory: Path = typer.Argument(Path("."), help="Target directory."),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose file logging."),
) -> None:
    """Write a corpus machine file and its oracle description."""

    logging_ctx = configure_logging(verbose=verbose, command="corpus export")
    logger = logging_ctx.logger.getChild("cli.corpus")
    try:
        for path in export_machine(name, directory):
            typer.echo(f"Wrote {path}")
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - centralized CLI mapping
        raise _fail(exc, logger) from exc
    finally:
        shutdown_logging()


if __name__ == "__main__":
    app()
