"""Command-line interface for nlie."""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn

from . import __version__
from .core.fileformat import algebra_to_dict, dump_algebra, load_algebra
from .core.invariants import analyze as analyze_algebra
from .counting.basic import count_basic
from .counting.multipliers import (
    MultiplierResult,
    bound_2multiplier_dimL2_k,
    dim_2multiplier_dimL2_one,
    dim_2multiplier_heisenberg,
    dim_multiplier_abelian,
    dim_multiplier_heisenberg,
)
from .errors import AlgebraFormatError, NLieError, ParameterError, TermCapExceededError
from .oracle.compare import compare_report
from .oracle.free import TERM_CAP_ENVVAR, export_free_nilpotent, resolve_term_cap
from .oracle.trees import count_terms
from .tables import compare_table, load_sweep, render, run_sweep, to_rich

app = typer.Typer(
    name="nlie",
    help="Exact computations for finite-dimensional n-Lie algebras.",
    add_completion=False,
)
console = Console(stderr=True)
stdout_console = Console()

EXIT_USAGE = 2
EXIT_TERM_CAP = 3


class Family(str, Enum):
    abelian = "abelian"
    heisenberg = "heisenberg"
    dimL2one = "dimL2one"
    bound = "bound"


class TableFormat(str, Enum):
    csv = "csv"
    latex = "latex"
    json = "json"


class VerifyFormat(str, Enum):
    csv = "csv"
    json = "json"
    table = "table"


def version_callback(value: bool):
    if value:
        typer.echo(f"nlie version {__version__}")
        raise typer.Exit()


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _fail(message: str, code: int = EXIT_USAGE):
    console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(code)


def _emit_json(data) -> None:
    typer.echo(json.dumps(data, indent=2))


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None, "--version", "-v", callback=version_callback, is_eager=True,
        help="Show version and exit."
    ),
    verbose: bool = typer.Option(
        False, "--verbose",
        help="Log computation details to stderr.",
    ),
):
    """Exact computations for finite-dimensional n-Lie algebras."""
    _configure_logging(verbose)


@app.command()
def count(
    d: int = typer.Option(..., "--d", min=0, help="Number of generators."),
    n: int = typer.Option(..., "--n", min=2, help="Arity of the bracket."),
    w: int = typer.Option(..., "--w", min=1, help="Weight."),
    trace: bool = typer.Option(False, "--trace", help="Also print every summand as JSON."),
):
    """
    Count basic commutators of weight w.

    Examples:
        nlie count --d 5 --n 5 --w 4
        nlie count --d 3 --n 2 --w 3 --trace
    """
    try:
        value, formula_trace = count_basic(d, n, w)
    except ParameterError as e:
        _fail(str(e))
    typer.echo(str(value))
    if trace:
        _emit_json(formula_trace.to_dict())


@app.command()
def mult(
    family: Family = typer.Option(..., "--family", "-f", help="Algebra family."),
    d: Optional[int] = typer.Option(None, "--d", help="Dimension (abelian, dimL2one, bound)."),
    n: int = typer.Option(2, "--n", help="Arity."),
    c: int = typer.Option(2, "--c", help="Nilpotency degree c of M^(c); 1 is the Schur multiplier."),
    m: Optional[int] = typer.Option(None, "--m", help="Heisenberg parameter (heisenberg, dimL2one)."),
    k: Optional[int] = typer.Option(None, "--k", help="dim L^2 (bound)."),
):
    """
    Dimension of a multiplier from the closed forms.

    Examples:
        nlie mult --family heisenberg --n 2 --m 1
        nlie mult --family abelian --d 4 --n 2 --c 3
        nlie mult --family bound --d 5 --n 2 --k 2
    """
    required = {
        Family.abelian: {"--d": d},
        Family.heisenberg: {"--m": m},
        Family.dimL2one: {"--d": d, "--m": m},
        Family.bound: {"--d": d, "--k": k},
    }[family]
    missing = [flag for flag, value in required.items() if value is None]
    if missing:
        _fail(f"--family {family.value} needs {', '.join(missing)}")
    known = (1, 2) if family == Family.heisenberg else (2,)
    if family != Family.abelian and c not in known:
        _fail(f"--family {family.value} supports --c {' or '.join(map(str, known))}")

    try:
        result: MultiplierResult
        if family == Family.abelian:
            result = dim_multiplier_abelian(d, n, c)
        elif family == Family.heisenberg:
            result = dim_multiplier_heisenberg(n, m) if c == 1 else dim_2multiplier_heisenberg(n, m)
        elif family == Family.dimL2one:
            result = dim_2multiplier_dimL2_one(d, n, m)
        else:
            result = bound_2multiplier_dimL2_k(d, n, k)
    except ParameterError as e:
        _fail(str(e))
    _emit_json(result.to_dict())


@app.command()
def analyze(
    file: Path = typer.Option(..., "--file", help="Algebra JSON file."),
):
    """
    Validate an algebra and report its invariants as JSON.

    An algebra that fails the Jacobi identity is reported with
    is_valid false; only unreadable files are errors.

    Examples:
        nlie analyze --file heisenberg.json
    """
    try:
        algebra = load_algebra(file)
    except AlgebraFormatError as e:
        _fail(str(e))
    report = analyze_algebra(algebra)
    _emit_json(report.to_dict())


@app.command()
def verify(
    d: int = typer.Option(..., "--d", min=0, help="Number of generators."),
    n: int = typer.Option(..., "--n", min=2, help="Arity."),
    wmax: int = typer.Option(..., "--wmax", min=1, help="Largest weight to compare."),
    format: VerifyFormat = typer.Option(VerifyFormat.csv, "--format", help="csv, json or table."),
    term_cap: Optional[int] = typer.Option(
        None, "--term-cap", envvar=TERM_CAP_ENVVAR,
        help="Largest number of bracket terms the oracle may build per weight.",
    ),
):
    """
    Compare the closed-form count with the free-algebra oracle.

    Disagreements are data: the command exits 0 whenever it completes.

    Examples:
        nlie verify --d 2 --n 2 --wmax 4
        nlie verify --d 3 --n 2 --wmax 3 --format table
    """
    try:
        cap = resolve_term_cap(term_cap)
    except ParameterError as e:
        _fail(str(e))

    if format == VerifyFormat.table:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            progress.add_task("Building free algebra...", total=None)
            rows = compare_report(d, n, wmax, cap)
        stdout_console.print(to_rich(compare_table(rows), title=f"d={d}, n={n}"))
    else:
        rows = compare_report(d, n, wmax, cap)
        typer.echo(render(compare_table(rows), format.value), nl=False)

    disagreements = [row.w for row in rows if row.agree is False]
    if disagreements and format == VerifyFormat.table:
        console.print(f"[yellow]Formula and oracle disagree at w = {disagreements}[/yellow]")


@app.command()
def table(
    sweep: Path = typer.Option(..., "--sweep", help="Sweep description (JSON)."),
    format: TableFormat = typer.Option(TableFormat.csv, "--format", help="csv, latex or json."),
):
    """
    Tabulate a calculator over a parameter grid.

    The sweep file looks like
    {"calculator": "dim_2multiplier_heisenberg",
     "grid": {"n": {"start": 2, "stop": 4}, "m": [1, 2, 3]}, "fixed": {}}

    Examples:
        nlie table --sweep heisenberg.json --format latex
    """
    try:
        result = run_sweep(load_sweep(sweep))
    except ParameterError as e:
        _fail(str(e))
    typer.echo(render(result, format.value), nl=False)


@app.command()
def free(
    d: int = typer.Option(..., "--d", min=0, help="Number of generators."),
    n: int = typer.Option(..., "--n", min=2, help="Arity."),
    c: int = typer.Option(..., "--c", min=1, help="Nilpotency class."),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o",
        help="Write the algebra JSON here instead of stdout.",
    ),
    term_cap: Optional[int] = typer.Option(
        None, "--term-cap", envvar=TERM_CAP_ENVVAR,
        help="Largest number of bracket terms the oracle may build per weight.",
    ),
):
    """
    Export the free nilpotent n-Lie algebra of class c on d generators.

    Examples:
        nlie free --d 2 --n 2 --c 3 -o free_2_2_3.json
    """
    terms = sum(count_terms(d, n, w) for w in range(1, c + 1))
    console.print(f"[dim]Reducing {terms} bracket terms up to weight {c}[/dim]")
    try:
        algebra = export_free_nilpotent(d, n, c, resolve_term_cap(term_cap))
    except TermCapExceededError as e:
        _fail(str(e), EXIT_TERM_CAP)
    except NLieError as e:
        _fail(str(e))

    if output is None:
        _emit_json(algebra_to_dict(algebra))
    else:
        dump_algebra(algebra, output)
        console.print(f"Wrote {algebra.dim}-dimensional algebra to [cyan]{output}[/cyan]")


if __name__ == "__main__":
    app()
