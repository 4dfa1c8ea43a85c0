"""
Command-line interface for darkstates

JSON payloads go to stdout; diagnostics, seeds and errors go to stderr.
Exit codes: 0 pass, 1 fail, 2 input error.
"""

from __future__ import annotations

import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Iterator, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from darkstates import __version__
from darkstates.construction import (
    four_qubit_dark_pair,
    p_all_state,
    pair_singlet,
    pairing_singlet_product,
    psi3,
    psi4,
    qutrit_semidark_example,
    werner_state,
)
from darkstates.core.config import Config
from darkstates.core.errors import DarkStatesError
from darkstates.core.types import CollapseOutcome, SubspaceKind, SymmetryGroup
from darkstates.dfs import ChannelSpec, dfs_experiment
from darkstates.hilbert.serialization import (
    density_from_json,
    density_to_json,
    state_from_json,
    state_to_json,
)
from darkstates.linalg.kernel import make_rng
from darkstates.solver import (
    conjecture_check,
    dark_basis,
    dark_dimension_oracle,
    dimension_table,
    qudit_feasibility,
    semidark_basis,
    semidark_dimension_oracle,
    su2_multiplet_census,
)
from darkstates.utils.logging_config import setup_logging
from darkstates.verify import (
    collapse_darkness_check,
    density_invariance,
    is_dark_random,
    is_semidark_random,
)

app = typer.Typer(
    name="darkstates",
    help="Construct, solve and verify multipartite dark and semi-dark states",
    no_args_is_help=True,
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)


class ConstructName(str, Enum):
    PAIR_SINGLET = "pair-singlet"
    P_ALL = "p-all"
    PSI3 = "psi3"
    PSI4 = "psi4"
    DARK_PAIR = "dark-pair"
    PAIRING = "pairing"
    QUTRIT_EXAMPLE = "qutrit-example"
    WERNER = "werner"


class Mode(str, Enum):
    DARK = "dark"
    SEMIDARK = "semidark"


@dataclass
class Options:
    config: Config
    seed: Optional[int]
    tol: Optional[float]
    json: bool


def _options(ctx: typer.Context) -> Options:
    if ctx.obj is None:
        ctx.obj = Options(config=Config(), seed=None, tol=None, json=True)
    return ctx.obj


def _emit(payload: Any) -> None:
    typer.echo(json.dumps(payload, sort_keys=True, indent=2))


def _fail(message: str) -> None:
    err_console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(code=2)


@contextmanager
def _input_errors() -> Iterator[None]:
    """Map library and validation errors to exit code 2"""
    try:
        yield
    except (DarkStatesError, ValidationError, FileNotFoundError, ValueError) as exc:
        _fail(str(exc))


def _resolve_seed(opts: Options, seed: Optional[int] = None) -> int:
    seed = seed if seed is not None else opts.seed
    if seed is None:
        seed = opts.config.seed
    if seed is None:
        _, seed = make_rng()
        err_console.print(f"[dim]seed: {seed}[/dim]")
    return int(seed)


def _read_json(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _parse_sites(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise DarkStatesError(f"Could not parse site list {text!r}") from None


def _parse_pairing(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.replace(" ", "").split(","):
        a, sep, b = chunk.partition("-")
        if not sep or not a.isdigit() or not b.isdigit():
            raise DarkStatesError(f"Pairs are written as a-b, got {chunk!r}")
        pairs.append((int(a), int(b)))
    return pairs


@app.callback()
def main(
    ctx: typer.Context,
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for every randomized step"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Numerical tolerance override"),
    json_output: bool = typer.Option(False, "--json", help="Emit JSON where a table is the default"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML configuration file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only log errors"),
) -> None:
    with _input_errors():
        cfg = Config.from_yaml(config) if config else Config()
    level = "DEBUG" if verbose else "ERROR" if quiet else cfg.logging.level
    setup_logging(level, cfg.logging.format, cfg.logging.output, cfg.logging.file_path)
    ctx.obj = Options(config=cfg, seed=seed, tol=tol, json=json_output)


@app.command()
def construct(
    ctx: typer.Context,
    name: ConstructName = typer.Argument(..., help="Which state to build"),
    d: int = typer.Option(3, "--d", help="Levels per site (p-all)"),
    beta: float = typer.Option(0.0, "--beta", help="Flip-operator weight (werner); 0 is maximally mixed"),
    index: int = typer.Option(1, "--index", min=1, max=2, help="Which member of the dark pair"),
    pairing: str = typer.Option("1-2,3-4", "--pairing", help="Perfect matching, e.g. 1-3,2-4"),
) -> None:
    """Build a named state and print it as JSON"""
    _options(ctx)
    with _input_errors():
        if name is ConstructName.WERNER:
            _emit(density_to_json(werner_state(d, beta)))
            return
        builders = {
            ConstructName.PAIR_SINGLET: pair_singlet,
            ConstructName.P_ALL: lambda: p_all_state(d),
            ConstructName.PSI3: psi3,
            ConstructName.PSI4: psi4,
            ConstructName.DARK_PAIR: lambda: four_qubit_dark_pair()[index - 1],
            ConstructName.PAIRING: lambda: pairing_singlet_product(_parse_pairing(pairing)),
            ConstructName.QUTRIT_EXAMPLE: qutrit_semidark_example,
        }
        _emit(state_to_json(builders[name]()))


@app.command()
def solve(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=1, help="Number of sites"),
    d: int = typer.Option(..., "--d", min=2, help="Levels per site"),
    kind: SubspaceKind = typer.Option(SubspaceKind.DARK, "--kind"),
) -> None:
    """Solve for a dark or semi-dark basis"""
    opts = _options(ctx)
    numerics = opts.config.numerics
    tol = opts.tol or numerics.tol
    with _input_errors():
        if kind is SubspaceKind.DARK:
            subspace = dark_basis(n, d, tol, numerics.sector_prefilter, numerics.size_cap, numerics.dense_apply_limit)
            oracle = dark_dimension_oracle(n, d)
        else:
            subspace = semidark_basis(n, d, tol, numerics.sector_prefilter, numerics.size_cap, numerics.dense_apply_limit)
            oracle = semidark_dimension_oracle(n, d)
    _emit(
        {
            "n": n,
            "d": d,
            "kind": kind.value,
            "dim": subspace.dim,
            "oracle_dim": oracle,
            "tol": tol,
            "tol_stable": subspace.tol_stable,
            "basis": [state_to_json(v) for v in subspace.basis],
        }
    )


@app.command()
def dims(
    ctx: typer.Context,
    d: int = typer.Option(..., "--d", min=2, help="Levels per site"),
    max_n: int = typer.Option(..., "--max-n", min=1, help="Largest number of sites"),
) -> None:
    """Semi-dark and dark dimensions for N = 1..max-n, with oracles"""
    opts = _options(ctx)
    numerics = opts.config.numerics
    with _input_errors():
        rows = dimension_table(d, max_n, opts.tol or numerics.tol, numerics.sector_prefilter, numerics.size_cap)

    if opts.json:
        _emit([row.model_dump(mode="json") for row in rows])
        return

    table = Table(title=f"Dimensions for d={d}")
    for column in ("N", "semi-dark", "semi-dark oracle", "dark", "dark oracle", "mismatch"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(
            str(row.n),
            str(row.semidark_dim),
            str(row.semidark_oracle),
            str(row.dark_dim),
            str(row.oracle_dim),
            "[red]yes[/red]" if row.mismatch else "",
        )
    console.print(table)


@app.command()
def census(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=1),
    d: int = typer.Option(..., "--d", min=2),
) -> None:
    """Collective-spin multiplet decomposition"""
    opts = _options(ctx)
    with _input_errors():
        multiplets = su2_multiplet_census(
            n, d, opts.tol or opts.config.numerics.tol, opts.config.numerics.size_cap
        )
    _emit(
        {
            "n": n,
            "d": d,
            "multiplets": [{"j": str(j), "multiplicity": m} for j, m in multiplets],
        }
    )


@app.command()
def conjecture(
    ctx: typer.Context,
    d: int = typer.Option(..., "--d", min=2),
    m: int = typer.Option(..., "--m", min=1),
) -> None:
    """Dark dimension at N = m*d against m and the hook-length oracle"""
    opts = _options(ctx)
    numerics = opts.config.numerics
    with _input_errors():
        report = conjecture_check(d, m, opts.tol or numerics.tol, numerics.sector_prefilter, numerics.size_cap)
    _emit(report.model_dump(mode="json"))
    if not report.conjecture_holds:
        raise typer.Exit(code=1)


@app.command()
def verify(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="State JSON file, or - for stdin"),
    mode: Mode = typer.Option(Mode.DARK, "--mode"),
    trials: Optional[int] = typer.Option(None, "--trials", min=1),
    seed: Optional[int] = typer.Option(None, "--seed"),
    strict_phase: Optional[bool] = typer.Option(None, "--strict-phase/--phase-insensitive"),
) -> None:
    """Randomized darkness test; exit 0 on pass, 1 on fail"""
    opts = _options(ctx)
    settings = opts.config.verification
    trials = trials or settings.trials
    tol = opts.tol or settings.tol
    strict = settings.strict_phase if strict_phase is None else strict_phase
    seed = _resolve_seed(opts, seed)
    group = SymmetryGroup.SUD if mode is Mode.DARK else SymmetryGroup.SU2

    with _input_errors():
        raw = _read_json(source)
        payload = json.loads(raw)
        if isinstance(payload, dict) and payload.get("kind") == "density":
            verdict = density_invariance(
                density_from_json(raw), group, trials, tol, seed=seed, max_workers=settings.max_workers
            )
        else:
            check = is_dark_random if mode is Mode.DARK else is_semidark_random
            verdict = check(
                state_from_json(raw),
                trials=trials,
                tol=tol,
                seed=seed,
                strict_phase=strict,
                max_workers=settings.max_workers,
            )

    _emit({"mode": mode.value, **verdict.model_dump(mode="json")})
    if not verdict.passed:
        raise typer.Exit(code=1)


@app.command()
def collapse(
    ctx: typer.Context,
    state_n: str = typer.Argument(..., help="N-party state JSON file"),
    state_m: str = typer.Argument(..., help="M-party state JSON file"),
    parties: str = typer.Option(..., "--parties", help="Sites of the N-party state, e.g. 1,3"),
    trials: Optional[int] = typer.Option(None, "--trials", min=1),
    seed: Optional[int] = typer.Option(None, "--seed"),
) -> None:
    """Collapse a dark state onto a smaller dark state and test the remnant"""
    opts = _options(ctx)
    trials = trials or opts.config.verification.trials
    tol = opts.tol or opts.config.verification.tol
    seed = _resolve_seed(opts, seed)

    with _input_errors():
        psi_n = state_from_json(_read_json(state_n))
        phi_m = state_from_json(_read_json(state_m))
        result = collapse_darkness_check(psi_n, phi_m, _parse_sites(parties), trials=trials, tol=tol, seed=seed)

    payload = result.model_dump(mode="json")
    payload["remnant"] = state_to_json(result.remnant)
    payload["seed"] = seed
    _emit(payload)
    if result.outcome is CollapseOutcome.NOT_DARK:
        raise typer.Exit(code=1)


@app.command("dfs-sim")
def dfs_sim(
    ctx: typer.Context,
    samples: Optional[int] = typer.Option(None, "--samples", min=1, help="Noise shots per input"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    group: Optional[SymmetryGroup] = typer.Option(None, "--group", help="Noise group"),
    qudit_d: Optional[int] = typer.Option(
        None, "--qudit-d", min=2, help="Also report decoherence-free qudit feasibility at N = d^2"
    ),
) -> None:
    """Decoherence-free qubit versus a bare qubit under collective noise"""
    opts = _options(ctx)
    settings = opts.config.dfs
    seed = _resolve_seed(opts, seed)

    with _input_errors():
        spec = ChannelSpec(group=group or settings.group, samples=samples or settings.samples)
        report = dfs_experiment(spec=spec, seed=seed)
        if qudit_d is not None:
            report = report.model_copy(
                update={"qudit": qudit_feasibility(qudit_d, opts.tol or opts.config.numerics.tol)}
            )
    _emit(report.model_dump(mode="json"))


@app.command()
def version() -> None:
    """Show version information"""
    typer.echo(f"darkstates {__version__}")


if __name__ == "__main__":
    app()
