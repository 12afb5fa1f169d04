"""
Command functions of the ``limweight`` CLI.

Every command prints exactly one JSON document on stdout. Errors are printed
as ``{"error": ..., "detail": ...}`` and mapped to the exit codes of
``limweight.core.config.constants``.
"""
import json
import sys
from functools import wraps
from typing import List, Optional

import typer
from loguru import logger
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from limweight.core.config.constants import (
    EXIT_HYPOTHESIS_VIOLATED,
    EXIT_OTHER_ERROR,
    EXIT_PARSE_ERROR,
    EXIT_VERIFY_FAILED,
)
from limweight.core.exceptions import HypothesisViolated, LimweightError, ParseError
from limweight.limits import Algebra
from limweight.realization import ModuleFamily
from limweight.schemas import VerifyReport
from limweight.services import (
    DescriptorKind,
    run_annihilator,
    run_bound,
    run_branch,
    run_classify,
    run_degree,
    run_hw,
    run_iso,
    run_parse,
    run_support,
    run_verification,
)

stderr = Console(stderr=True)

ALG = typer.Option(Algebra.SL, "--alg", help="Algebra: sl, o-b, o-d or sp")
MODULE = typer.Option(None, "--module", help="Module descriptor such as V, Lambda{odds} or X[1,g0; tail=0]")
MU = typer.Option(None, "--mu", help="Weight sequence of an X module, e.g. [1,2,g0; tail=-1]")


def emit(payload) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    typer.echo(json.dumps(payload, sort_keys=True))


def _exit_code(e: Exception) -> int:
    if isinstance(e, ParseError):
        return EXIT_PARSE_ERROR
    if isinstance(e, HypothesisViolated):
        return EXIT_HYPOTHESIS_VIOLATED
    return EXIT_OTHER_ERROR


def reporting(fn):
    """Print the returned report, or the error with its exit code"""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            report = fn(*args, **kwargs)
        except (LimweightError, ValueError) as e:
            payload = {"error": type(e).__name__, "detail": str(e)}
            if isinstance(e, ParseError) and e.position is not None:
                payload["position"] = e.position
            logger.debug("{} failed: {}", fn.__name__, e)
            emit(payload)
            raise typer.Exit(_exit_code(e))
        if report is not None:
            emit(report)

    return wrapper


def _note(text: str) -> None:
    stderr.print(text)


@reporting
def classify(
    alg: Algebra = ALG,
    module: Optional[str] = MODULE,
    mu: Optional[str] = MU,
    rank: Optional[int] = typer.Option(None, "--rank", help="Also classify the truncation X(mu^n) at this rank"),
):
    """Family, integrability, five-type shape and annihilator of a module."""
    report = run_classify(alg.value, module, mu, rank)
    _note(f"[bold]{report.module}[/bold] is {report.family} over {report.algebra}(inf)")
    return report


@reporting
def support(
    weight: str = typer.Option(..., "--weight", help="Weight, finite or with a tail"),
    alg: Algebra = ALG,
    module: Optional[str] = MODULE,
    mu: Optional[str] = MU,
):
    """Whether a weight lies in the support of a module."""
    return run_support(alg.value, weight, module, mu)


@reporting
def branch(
    mu: str = typer.Option(..., "--mu", help="Finite weight of X(mu), e.g. -1,1,0"),
    alg: ModuleFamily = typer.Option(ModuleFamily.SL, "--alg", help="sl or sp"),
    box: Optional[int] = typer.Option(None, "--box", help="Half-width of the box for infinite summand sets"),
    window: Optional[int] = typer.Option(None, "--window", help="Half-width of the character comparison window"),
):
    """Restriction of X(mu) to the algebra of one rank less."""
    report = run_branch(alg.value, mu, box, window)
    _note(f"{len(report.summands)} summands, {report.checked} window weights checked")
    return report


@reporting
def degree(
    lam: str = typer.Option(..., "--lambda", help="Dominant integral weight, e.g. 2,1,0"),
    nu: Optional[str] = typer.Option(None, "--nu", help="Weight whose multiplicity to report"),
):
    """Dimension, degree and multiplicities of a finite-dimensional gl(n)-module."""
    return run_degree(lam, nu)


@reporting
def bound(
    lemma: str = typer.Argument(..., help="lem0, lem1, lem2, lem3, lem4 or lemma-deg"),
    arguments: List[str] = typer.Argument(..., help="Arguments of the bound, e.g. 3 2 for lem1"),
):
    """Check a lower bound on the degree of a gl(n)-module; exit 3 outside its hypotheses."""
    report = run_bound(lemma, arguments)
    _note(f"{report.lemma}: rhs {report.rhs}, holds {report.holds}")
    return report


@reporting
def hw(
    borel: str = typer.Option(..., "--borel", help="Borel order, e.g. [asc{odds}; desc{evens}] sign=+{2,4,...}"),
    alg: Algebra = ALG,
    module: Optional[str] = MODULE,
    mu: Optional[str] = MU,
):
    """Highest weight, pseudo highest weight, or neither, for a Borel order."""
    report = run_hw(alg.value, borel, module, mu)
    _note(f"{report.module}: {report.status}")
    return report


@reporting
def iso(
    first: str = typer.Argument(..., help="First module descriptor"),
    second: str = typer.Argument(..., help="Second module descriptor"),
    alg: Algebra = ALG,
):
    """Whether two module descriptors over one algebra are isomorphic."""
    return run_iso(alg.value, first, second)


@reporting
def annihilator(alg: Algebra = ALG, module: Optional[str] = MODULE, mu: Optional[str] = MU):
    """Label of the annihilator ideal of a module."""
    return run_annihilator(alg.value, module, mu)


@reporting
def parse(
    text: str = typer.Argument(..., help="Descriptor text"),
    kind: Optional[DescriptorKind] = typer.Option(None, "--kind", help="Grammar to use; guessed when omitted"),
    alg: Algebra = ALG,
):
    """Parse a descriptor and print its canonical text form."""
    return run_parse(text, None if kind is None else kind.value, alg.value)


def _outcome_table(report: VerifyReport) -> Table:
    table = Table(title=f"seed {report.seed}, budget {report.budget}")
    table.add_column("suite")
    table.add_column("check")
    table.add_column("cases", justify="right")
    table.add_column("result")
    for outcome in report.outcomes:
        result = "[green]ok[/green]" if outcome.ok else f"[red]failed[/red] {outcome.detail or ''}"
        table.add_row(outcome.suite, outcome.name, str(outcome.cases), result)
    return table


@reporting
def verify(
    suite: Optional[List[str]] = typer.Option(None, "--suite", help="Suite to run; repeat for several, default all"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the randomized checks"),
    budget: float = typer.Option(1.0, "--budget", help="Multiplier on the number of randomized cases"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads, default LIMWEIGHT_THREADS"),
):
    """Run the verification suites; exit 1 when any check fails."""
    report = run_verification(suite, seed, budget, threads)
    stderr.print(_outcome_table(report))
    emit(report)
    if not report.ok:
        raise typer.Exit(EXIT_VERIFY_FAILED)


COMMANDS = {
    "classify": classify,
    "support": support,
    "branch": branch,
    "degree": degree,
    "bound": bound,
    "hw": hw,
    "iso": iso,
    "annihilator": annihilator,
    "verify": verify,
    "parse": parse,
}


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())
