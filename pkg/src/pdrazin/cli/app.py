"""
Command-line front end.

Exit codes: 0 pass, 1 identity failure, 2 input error, 3 internal numerical
breakdown, 4 hypothesis rejection or series divergence.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Tuple

import numpy as np
import typer

from .. import __version__
from ..algebra import AlgebraContext, ContextKind
from ..drazin import core_nilpotent_parts, pdrazin, quasinilpotence_report
from ..drazin.models import SeriesPolicy
from ..errors import (
    GeneratorError,
    HypothesisError,
    InstanceFileError,
    InternalConsistencyError,
    NotGroupInvertibleError,
    PDrazinError,
    SeriesDivergenceError,
    StructuralError,
)
from ..generators import KIND_BUILDERS, RandomSpec, gen_instance, gen_kind, random_index
from ..generators.models import MAX_SEED
from ..instances import InstanceLoader, encode_json, matrix_to_json
from ..settings import AppSettings, ConfigError
from ..tolerances import Tolerances
from ..utils import setup_logging
from ..verification import IDENTITIES, FuzzConfig, FuzzRunner, get_identity, verify
from .render import render_compute, render_fuzz, render_report

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_HYPOTHESIS = 4

app = typer.Typer(
    name="pdrazin",
    help="Drazin and p-Drazin inverses with verified additive and product formulas.",
    no_args_is_help=True,
    add_completion=False,
)

logger = logging.getLogger(__name__)


@dataclass
class CliState:
    settings: AppSettings

    @property
    def tolerances(self) -> Tolerances:
        return self.settings.effective_tolerances

    @property
    def policy(self) -> SeriesPolicy:
        return self.settings.series_policy


ERROR_EXIT_CODES = (
    (InstanceFileError, EXIT_INPUT),
    (StructuralError, EXIT_INPUT),
    (GeneratorError, EXIT_INPUT),
    (InternalConsistencyError, EXIT_INTERNAL),
    (HypothesisError, EXIT_HYPOTHESIS),
    (SeriesDivergenceError, EXIT_HYPOTHESIS),
    (NotGroupInvertibleError, EXIT_HYPOTHESIS),
)


def exit_code_for(error: PDrazinError) -> Optional[int]:
    for error_type, code in ERROR_EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return None


@contextmanager
def reporting_errors() -> Iterator[None]:
    """Turn library errors into an stderr message and the matching exit code."""
    try:
        yield
    except PDrazinError as e:
        code = exit_code_for(e)
        if code is None:
            raise
        logger.error(f"{type(e).__name__}: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code) from None


def parse_scalar(text: str) -> complex:
    """Parse "RE", "RE,IM" or a Python complex literal such as "1+2j"."""
    try:
        if "," in text:
            re, im = text.split(",", 1)
            return complex(float(re), float(im))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise GeneratorError(f"cannot parse scalar {text!r} (expected RE or RE,IM)")


def parse_dims(text: str) -> Tuple[int, int]:
    """Parse an inclusive integer range "LO..HI" or a single value."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return int(low), int(high)
        return int(text), int(text)
    except ValueError:
        raise GeneratorError(f"cannot parse range {text!r} (expected LO..HI)")


def _state(ctx: typer.Context) -> CliState:
    state = ctx.obj
    if not isinstance(state, CliState):
        state = CliState(AppSettings())
        ctx.obj = state
    return state


def _emit_json(data: Any) -> None:
    typer.echo(encode_json(data).decode("utf-8"), nl=False)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"pdrazin {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None, "--config", help="INI settings file (default: the user settings store)."
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Log DEBUG output to stderr."
    ),
    version: bool = typer.Option(
        False,
        "--version",
        callback=_version_callback,
        is_eager=True,
        help="Show the version and exit.",
    ),
) -> None:
    settings = AppSettings(settings_file=config)
    setup_logging(settings, verbose=verbose)
    try:
        validation = settings.require_valid()
    except ConfigError as e:
        logger.error(str(e))
        for error in e.errors:
            typer.echo(f"configuration error: {error}", err=True)
        raise typer.Exit(EXIT_INPUT) from None
    for warning in validation.warnings:
        logger.warning(f"Configuration warning: {warning}")
    logger.debug(f"Configuration loaded from {settings.get_settings_file_path()}")
    ctx.obj = CliState(settings)


@app.command()
def compute(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Instance file."),
    name: str = typer.Argument("a", help="Element to invert."),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON report."),
) -> None:
    """Compute the p-Drazin inverse, indices and spectral idempotent of one element."""
    state = _state(ctx)
    with reporting_errors():
        instance = InstanceLoader().load(file)
        a = instance.element(name)
        tolerances = instance.resolve_tolerances(state.tolerances)
        result = pdrazin(a, tolerances)
        core, nilpotent = core_nilpotent_parts(a, tolerances)
        quasi = quasinilpotence_report(nilpotent, tolerances)

    data: Dict[str, Any] = {
        "element": name,
        "context": a.context.describe(),
        "drazin_index": result.drazin_index,
        "radical_index": result.radical_index,
        "inverse": matrix_to_json(result.inverse.matrix),
        "spectral_idempotent": matrix_to_json(result.spectral_idempotent.matrix),
        "core_part": matrix_to_json(core.matrix),
        "nilpotent_part": matrix_to_json(nilpotent.matrix),
        "axiom_residuals": dict(result.axiom_residuals),
        "quasinilpotence": quasi.to_dict(),
        "tolerances_used": tolerances.to_dict(),
    }
    logger.info(
        f"compute {file}:{name}: index {result.drazin_index}, "
        f"radical index {result.radical_index}"
    )
    if json_output:
        _emit_json(data)
    else:
        typer.echo(
            render_compute(
                name,
                data,
                {
                    "inverse": result.inverse,
                    "spectral_idempotent": result.spectral_idempotent,
                },
            )
        )


@app.command("verify")
def verify_command(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Instance file."),
    identity: str = typer.Argument(..., help="Identity tag, e.g. thm2.7."),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON report."),
) -> None:
    """Verify one identity on an instance file against the oracle."""
    state = _state(ctx)
    with reporting_errors():
        instance = InstanceLoader().load(file)
        report = verify(instance, identity, state.tolerances, state.policy)

    logger.info(f"verify {file} {report.identity}: {'pass' if report.passed else 'FAIL'}")
    if json_output:
        _emit_json(report.to_dict())
    else:
        typer.echo(render_report(report))
    if not report.passed:
        raise typer.Exit(EXIT_FAILURE)


@app.command()
def fuzz(
    ctx: typer.Context,
    identity: str = typer.Argument(..., help="Identity tag, e.g. thm2.7."),
    count: int = typer.Option(100, "--count", "-n", help="Number of instances."),
    seed: int = typer.Option(0, "--seed", help="Base seed."),
    dims: str = typer.Option("2..8", "--dims", help="Size range LO..HI."),
    context: str = typer.Option(
        "full", "--context", help="Algebra kind: full, upper, poly or sum."
    ),
    lam: Optional[str] = typer.Option(None, "--lambda", help="λ as RE or RE,IM."),
    indices: Optional[str] = typer.Option(
        None, "--indices", help="Drazin index range LO..HI of the generated element."
    ),
    workers: Optional[int] = typer.Option(
        None, "--workers", help="Worker threads (default from settings)."
    ),
    out_dir: Optional[Path] = typer.Option(
        None, "--out-dir", help="Counterexample directory (default from settings)."
    ),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON summary."),
) -> None:
    """Generate hypothesis-satisfying instances and verify each one."""
    state = _state(ctx)
    fuzz_settings = state.settings.fuzz
    with reporting_errors():
        config = FuzzConfig(
            identity=identity,
            count=count,
            seed=seed,
            dims=parse_dims(dims),
            context_kind=ContextKind.parse(context),
            lam=None if lam is None else parse_scalar(lam),
            indices=None if indices is None else parse_dims(indices),
            workers=fuzz_settings.workers if workers is None else workers,
            out_dir=fuzz_settings.counterexample_dir if out_dir is None else out_dir,
        )
        summary = FuzzRunner(state.tolerances, state.policy).run(config)

    data = summary.to_dict()
    if json_output:
        _emit_json(data)
    else:
        typer.echo(render_fuzz(data))
    if not summary.passed:
        raise typer.Exit(EXIT_FAILURE)


@app.command()
def gen(
    kind: Optional[str] = typer.Option(
        None, "--kind", help=f"Instance kind: {', '.join(KIND_BUILDERS)}."
    ),
    identity: Optional[str] = typer.Option(
        None, "--identity", help="Build an instance shaped for this identity tag."
    ),
    dim: int = typer.Option(..., "--dim", help="Context size."),
    seed: int = typer.Option(0, "--seed", help="Seed (64-bit unsigned)."),
    target: Optional[int] = typer.Option(
        None, "--target", help="Drazin index of a (default: drawn from the seed)."
    ),
    lam: Optional[str] = typer.Option(None, "--lambda", help="λ as RE or RE,IM."),
    context: str = typer.Option(
        "full", "--context", help="Algebra kind: full, upper, poly or sum."
    ),
    out: Optional[Path] = typer.Option(
        None, "--out", help="Output file (default: stdout)."
    ),
) -> None:
    """Write a deterministic random instance file."""
    with reporting_errors():
        if (kind is None) == (identity is None):
            raise GeneratorError("give exactly one of --kind and --identity")
        if not 0 <= seed <= MAX_SEED:
            raise GeneratorError(f"seed must be a 64-bit unsigned integer, got {seed}")
        algebra = AlgebraContext.from_kind(ContextKind.parse(context), dim)
        if target is None:
            rng = np.random.default_rng([seed, 1])
            target = random_index(algebra, rng, algebra.rep_dim)
        spec = RandomSpec(
            seed, algebra, target, None if lam is None else parse_scalar(lam)
        )
        if identity is not None:
            instance = gen_instance(get_identity(identity).tag, spec)
        elif kind is not None and kind in KIND_BUILDERS:
            instance = gen_kind(kind, spec)
        else:
            raise GeneratorError(
                f"unknown kind {kind!r}; known: {', '.join(KIND_BUILDERS)}"
            )

    loader = InstanceLoader()
    if out is None:
        typer.echo(loader.dumps(instance).decode("utf-8"), nl=False)
        return
    with reporting_errors():
        loader.save(instance, out)
    logger.info(f"Instance written to {out}")


@app.command("identities")
def list_identities(
    json_output: bool = typer.Option(False, "--json", help="Print JSON."),
) -> None:
    """List the identity tags accepted by verify and fuzz."""
    rows = [
        {
            "tag": info.tag,
            "title": info.title,
            "elements": list(info.elements) or ["a1", "a2", "..."],
            "needs_lambda": info.needs_lambda,
        }
        for info in IDENTITIES.values()
    ]
    if json_output:
        _emit_json(rows)
        return
    width = max(len(str(row["tag"])) for row in rows)
    for row in rows:
        flag = "  [λ]" if row["needs_lambda"] else ""
        typer.echo(f"{row['tag']:<{width}}  {row['title']}{flag}")
