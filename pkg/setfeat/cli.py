"""Console script for setfeat."""

from rich.traceback import install as rich_traceback  # noqa

rich_traceback(show_locals=True, suppress=["pydantic", "typer", "click", "codetiming"])  # noqa

import sys
from typing import Dict, List, Tuple, Optional
from pathlib import Path
from contextlib import contextmanager

import typer
from loguru import logger
from devtools import debug
from pydantic import ValidationError
from codetiming import Timer
from rich.console import Console

from setfeat.fol import emit, translate, sb_satisfiable
from setfeat.terms import Term
from setfeat.config import config
from setfeat.errors import SetfeatError
from setfeat.models import ModelDocument
from setfeat.solver import SolveResult, SolverConfig, solve, prepare, default_root
from setfeat.syntax import SourceText, render, parse_prop, read_dimacs, parse_document
from setfeat.constant import Defaults
from setfeat.sat.check import cross_check
from setfeat.sat.encode import encode
from setfeat.metrics.timer import TimerReport

app = typer.Typer(name="setfeat")

TermPathArg: Path = typer.Argument(
    ..., exists=True, file_okay=True, dir_okay=False, help="Term or corpus file."
)
NameOpt: Optional[str] = typer.Option(None, "-n", "--name", help="Corpus entry to use.")
MaxStepsOpt: int = typer.Option(
    Defaults.MAX_STEPS, "--max-steps", help="Rule application fuse.", show_default=True
)
SeedOpt: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized branch order.")
TraceOpt: bool = typer.Option(False, "--trace", help="Print the rule trace.", is_flag=True)
VerboseOpt: bool = typer.Option(False, "-v", "--verbose", help="Debug logging.", is_flag=True)
TimingsOpt: bool = typer.Option(False, "--timings", help="Print timers.", is_flag=True)
OutputOpt: Optional[Path] = typer.Option(
    None, "-o", "--output", file_okay=True, dir_okay=False, help="Write to file, not stdout."
)

stderr = Console(stderr=True)


def configure_logging(verbose: bool) -> None:
    logger.remove()
    level = "DEBUG" if verbose else config.LOG_LEVEL
    logger.add(sys.stderr, level=level, format=config.create_log_format(""), colorize=False)


@contextmanager
def diagnostics(timings: bool = False):
    """Map library errors to exit code 2 with a one-line diagnostic."""
    try:
        yield
    except (SetfeatError, ValidationError) as e:
        message = str(e).splitlines()[0] if str(e) else type(e).__name__
        typer.secho(f"error: {message}", err=True, fg=typer.colors.RED)
        raise typer.Exit(2)
    finally:
        if timings:
            stderr.print(TimerReport(Timer, console=stderr))


def load(path: Path, name: Optional[str] = None) -> Tuple[List[Tuple[str, Term]], bool]:
    """Entries of a term file, and whether it is a corpus."""
    doc = parse_document(SourceText.from_path(path))
    if isinstance(doc, Term):
        return [(path.stem, doc)], False
    entries: Dict[str, Term] = doc
    if name is not None:
        if name not in entries:
            raise SetfeatError(f"no entry {name!r} in {path}")
        return [(name, entries[name])], True
    return list(entries.items()), True


def load_one(path: Path, name: Optional[str]) -> Term:
    entries, corpus = load(path, name)
    if corpus and len(entries) > 1:
        raise SetfeatError(f"{path} has {len(entries)} entries, pick one with --name")
    return entries[0][1]


def run_solver(term: Term, max_steps: int, seed: Optional[int], trace: bool) -> SolveResult:
    params = SolverConfig(max_steps=max_steps, seed=seed, trace=trace)
    return solve(term, default_root(term), params)


def print_trace(result: SolveResult) -> None:
    for entry in result.trace:
        typer.echo(str(entry))


@app.command()
def check(
    term_path: Path = TermPathArg,
    name: Optional[str] = NameOpt,
    max_steps: int = MaxStepsOpt,
    seed: Optional[int] = SeedOpt,
    trace: bool = TraceOpt,
    verbose: bool = VerboseOpt,
    timings: bool = TimingsOpt,
    dump_config: bool = typer.Option(
        False, "-d", "--dump-config", help="Dump solver config.", is_flag=True
    ),
):
    """Decide consistency of a term, or of every entry of a corpus."""
    configure_logging(verbose)
    if dump_config:
        debug(config)
        debug(SolverConfig(max_steps=max_steps, seed=seed, trace=trace))
        return
    with diagnostics(timings):
        entries, corpus = load(term_path, name)
        consistent = True
        for entry, term in entries:
            result = run_solver(term, max_steps, seed, trace)
            consistent &= result.consistent
            if trace:
                print_trace(result)
            typer.echo(f"{result.summary()} name={entry}" if corpus else result.summary())
    raise typer.Exit(0 if consistent else 1)


@app.command()
def model(
    term_path: Path = TermPathArg,
    name: Optional[str] = NameOpt,
    output: Optional[Path] = OutputOpt,
    max_steps: int = MaxStepsOpt,
    seed: Optional[int] = SeedOpt,
    verbose: bool = VerboseOpt,
    timings: bool = TimingsOpt,
):
    """Decide consistency and write the JSON model of a consistent term."""
    configure_logging(verbose)
    with diagnostics(timings):
        result = run_solver(load_one(term_path, name), max_steps, seed, False)
        typer.echo(result.summary())
        if result.consistent:
            document = ModelDocument.from_model(result.model).dump()
            if output is None:
                typer.echo(document, nl=False)
            else:
                output.write_text(document, encoding="utf-8")
    raise typer.Exit(0 if result.consistent else 1)


@app.command(name="sat-encode")
def sat_encode(
    formula: str = typer.Argument(..., help="Formula, or a file holding one."),
    check_: bool = typer.Option(
        False, "--check/--emit", help="Compare solver and truth table, or print the term."
    ),
    dimacs: bool = typer.Option(False, "--dimacs", help="Read DIMACS CNF.", is_flag=True),
    max_steps: int = MaxStepsOpt,
    seed: Optional[int] = SeedOpt,
    verbose: bool = VerboseOpt,
    timings: bool = TimingsOpt,
):
    """Encode a propositional formula as a term."""
    configure_logging(verbose)
    with diagnostics(timings):
        path = Path(formula)
        text = path.read_text(encoding="utf-8") if path.is_file() else formula
        origin = str(path) if path.is_file() else "<argument>"
        phi = read_dimacs(text, origin) if dimacs else parse_prop(SourceText(text, origin))
        if not check_:
            typer.echo(render(encode(phi).term))
            return
        outcome = cross_check(phi, SolverConfig(max_steps=max_steps, seed=seed))
        typer.echo(outcome.summary())
    raise typer.Exit(0 if outcome.agree else 1)


@app.command(name="translate-fol")
def translate_fol(
    term_path: Path = TermPathArg,
    name: Optional[str] = NameOpt,
    output: Optional[Path] = OutputOpt,
    decide: bool = typer.Option(
        False, "--decide", help="Append the ground satisfiability verdict.", is_flag=True
    ),
    verbose: bool = VerboseOpt,
    timings: bool = TimingsOpt,
):
    """Write the exists-forall translation of a term as a clause listing."""
    configure_logging(verbose)
    with diagnostics(timings):
        term = load_one(term_path, name)
        root = default_root(term)
        out = translate(root, prepare(term, root))
        listing = emit(out)
        if decide:
            listing += f"% sb_satisfiable: {str(sb_satisfiable(out)).lower()}\n"
        if output is None:
            typer.echo(listing, nl=False)
        else:
            output.write_text(listing, encoding="utf-8")


@app.command()
def trace(
    term_path: Path = TermPathArg,
    name: Optional[str] = NameOpt,
    max_steps: int = MaxStepsOpt,
    seed: Optional[int] = SeedOpt,
    verbose: bool = VerboseOpt,
    timings: bool = TimingsOpt,
):
    """Print the rule application trace, then the verdict."""
    configure_logging(verbose)
    with diagnostics(timings):
        result = run_solver(load_one(term_path, name), max_steps, seed, True)
        print_trace(result)
        typer.echo(result.summary())
    raise typer.Exit(0 if result.consistent else 1)


@app.callback()
def main():
    """setfeat CLI Entrypoint."""


if __name__ == "__main__":
    app()
