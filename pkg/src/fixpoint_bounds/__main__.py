"""Main CLI entry point."""

import sys
from pathlib import Path
from typing import NoReturn

import click

from fixpoint_bounds import __version__
from fixpoint_bounds.certifier import certify
from fixpoint_bounds.certifier import mutation_drill
from fixpoint_bounds.errors import DatasetError
from fixpoint_bounds.errors import PreconditionError
from fixpoint_bounds.fixed_points import load_dataset
from fixpoint_bounds.fixtures import builtin_fixture
from fixpoint_bounds.fixtures import write_fixtures
from fixpoint_bounds.genus import genus_report
from fixpoint_bounds.localization import chern_table
from fixpoint_bounds.logging import get_logger
from fixpoint_bounds.logging import setup_logging
from fixpoint_bounds.models import ChernReport
from fixpoint_bounds.models import FixedPointDataset
from fixpoint_bounds.reports import Report
from fixpoint_bounds.reports import render_json
from fixpoint_bounds.reports import render_text
from fixpoint_bounds.reports import verdict_line
from fixpoint_bounds.reproducer import reproduce_theorem
from fixpoint_bounds.reproducer import search_weights
from fixpoint_bounds.settings import get_settings

# Get logger for this module - will be created only once
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CANCELLED = 130

BANNER = f"fixpoint-bounds {__version__}"


def _input_error(message: str) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def _load(path: Path) -> FixedPointDataset:
    try:
        return load_dataset(path)
    except DatasetError as e:
        logger.debug("Rejected input %s", path, exc_info=True)
        _input_error(str(e))


def _emit(ctx: click.Context, report: Report, *, passed: bool) -> None:
    options = ctx.find_root().obj
    if options["format"] == "json":
        click.echo(render_json(report))
    elif options["quiet"]:
        click.echo(verdict_line(report))
    else:
        if not options["no_banner"]:
            click.echo(BANNER)
        click.echo(render_text(report))
    sys.exit(EXIT_OK if passed else EXIT_FAILED)


@click.group()
@click.version_option(__version__)
@click.option("-v", "--verbose", is_flag=True, help="Enable verbose logging")
@click.option("-q", "--quiet", is_flag=True, help="Print only the verdict line")
@click.option("--no-banner", is_flag=True, help="Omit the version banner")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format",
)
@click.pass_context
def cli(
    ctx: click.Context,
    *,
    verbose: bool,
    quiet: bool,
    no_banner: bool,
    output_format: str,
) -> None:
    """Certify circle-action fixed-point data and reproduce fixed-point bounds."""
    ctx.ensure_object(dict)
    ctx.obj.update(quiet=quiet, no_banner=no_banner, format=output_format)

    if verbose:
        setup_logging(level="DEBUG")
        logger.debug("Verbose logging enabled")


@cli.command()
@click.argument("path", type=click.Path(path_type=Path))
@click.pass_context
def verify(ctx: click.Context, path: Path) -> None:
    """Run every necessary condition on a dataset file."""
    certificate = certify(_load(path))
    _emit(ctx, certificate, passed=certificate.passed)


@cli.command()
@click.argument("path", type=click.Path(path_type=Path))
@click.pass_context
def genus(ctx: click.Context, path: Path) -> None:
    """Print the chi-y coefficients and the N-profile."""
    report = genus_report(_load(path))
    _emit(ctx, report, passed=report.constant)


@cli.command()
@click.argument("path", type=click.Path(path_type=Path))
@click.pass_context
def chern(ctx: click.Context, path: Path) -> None:
    """Print every Chern number obtained by localization."""
    dataset = _load(path)
    report = ChernReport(
        label=dataset.display_name,
        table=chern_table(dataset),
        warnings=dataset.warnings,
    )
    _emit(ctx, report, passed=report.integral)


@cli.command("prove-dim10")
@click.pass_context
def prove_dim10(ctx: click.Context) -> None:
    """Refute 4 fixed points in dimension 10 and conclude at least 6."""
    report = reproduce_theorem()
    _emit(ctx, report, passed=report.verdict == "pass")


@cli.command()
@click.option("--bound", type=int, default=None, help="Largest |weight| searched")
@click.option(
    "--dimension", type=int, default=10, show_default=True, help="Real dimension"
)
@click.option("--points", type=int, default=4, show_default=True, help="Fixed points")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.pass_context
def search(
    ctx: click.Context,
    bound: int | None,
    dimension: int,
    points: int,
    workers: int | None,
) -> None:
    """Certify every canonical dataset with weights bounded by --bound."""
    settings = get_settings()
    if dimension < 2 or dimension % 2:  # noqa: PLR2004
        _input_error(f"dimension must be a positive even number, got {dimension}")
    try:
        report = search_weights(
            settings.search_bound if bound is None else bound,
            n=dimension // 2,
            points=points,
            workers=settings.search_workers if workers is None else workers,
        )
    except PreconditionError as e:
        _input_error(str(e))
    _emit(ctx, report, passed=report.verdict == "pass")


@cli.command()
@click.argument("fixture")
@click.option("--trials", type=int, default=500, show_default=True)
@click.option("--seed", type=int, default=None, help="Random seed")
@click.pass_context
def drill(ctx: click.Context, fixture: str, trials: int, seed: int | None) -> None:
    """Certify random single-weight mutations of a built-in dataset."""
    try:
        dataset = builtin_fixture(fixture)
    except KeyError as e:
        _input_error(str(e.args[0]))
    if trials < 1:
        _input_error(f"trials must be >= 1, got {trials}")
    seed = get_settings().mutation_seed if seed is None else seed
    report = mutation_drill(dataset, trials, seed)
    _emit(ctx, report, passed=report.verdict == "pass")


@cli.command()
@click.argument("directory", type=click.Path(file_okay=False, path_type=Path))
def examples(directory: Path) -> None:
    """Write the built-in datasets as JSON files."""
    try:
        written = write_fixtures(directory)
    except OSError as e:
        _input_error(f"cannot write fixtures to {directory}: {e.strerror or e}")
    for path in written:
        click.echo(str(path))


def main() -> None:
    """Main entry point."""
    try:
        cli()
    except KeyboardInterrupt:
        click.echo("\nOperation cancelled.", err=True)
        logger.warning("Operation cancelled by user")
        sys.exit(EXIT_CANCELLED)
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        logger.exception("Unexpected error occurred")
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":
    main()
