"""Command-line surface"""
import functools
import sys
from pathlib import Path
from typing import Callable, Optional

import click

from src.buildset.element_set import EMPTY
from src.cli import output
from src.config.logging import configure_logging, get_logger
from src.config.settings import FLASK_HOST, FLASK_PORT, load_settings
from src.errors import BettiEngineError, InputError, VerificationFailure
from src.pipeline.registry import METHOD_ALIASES
from src.poset.shelling import ELCertificate
from src.system.engine import METHODS, BettiEngine
from src.system.sources import Source, resolve_source

logger = get_logger(__name__)

METHOD_CHOICES = sorted({*METHODS, *METHOD_ALIASES})


def _read(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def fail(error: BettiEngineError) -> None:
    """Write the machine-readable error record to stderr and exit with its code"""
    click.echo(output.to_json(error.to_record()), err=True, nl=False)
    sys.exit(error.exit_code)


def handles_errors(command: Callable) -> Callable:
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BettiEngineError as e:
            logger.debug("Command failed", exc_info=True)
            fail(e)
    return wrapper


def source_options(command: Callable) -> Callable:
    """Shared input-source options"""
    options = [
        click.option("--building-set", "building_set", type=click.Path(dir_okay=False), help="Building-set file"),
        click.option("--graph", "graph", type=click.Path(dir_okay=False), help="Graph file"),
        click.option("--hochschild", type=(int, int), default=None, metavar="M N", help="Hochschild B_{m,n}"),
        click.option("--complete", type=int, help="Complete graph on [N]"),
        click.option("--path", "path_n", type=int, help="Path 1-2-...-N"),
        click.option("--star", type=int, help="Star on [N] with center N"),
        click.option("--cycle", type=int, help="Cycle 1-2-...-N-1"),
        click.option("--add-singletons", is_flag=True, help="Add missing singletons to a building-set file"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _source(engine: BettiEngine, building_set, graph, hochschild, complete, path_n, star, cycle,
            add_singletons) -> Source:
    return resolve_source(
        building_set_text=_read(building_set),
        graph_text=_read(graph),
        hochschild=tuple(hochschild) if hochschild else None,
        complete=complete,
        path=path_n,
        star=star,
        cycle=cycle,
        add_singletons=add_singletons,
        name=building_set or graph,
        max_ground=engine.settings.max_enumeration_ground,
    )


format_option = click.option("--format", "fmt", type=click.Choice(output.FORMATS), default="tsv",
                             show_default=True)
threads_option = click.option("--threads", type=click.IntRange(min=1), default=None,
                              help="Worker processes for the subset loop")


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML settings file")
@click.option("--verbose", is_flag=True, help="Log progress to stderr")
@click.option("--debug", is_flag=True, help="Log everything to stderr")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool, debug: bool):
    """Exact Betti numbers of real toric manifolds of building sets"""
    try:
        settings = load_settings(config_path)
    except BettiEngineError as e:
        fail(e)
    level = "DEBUG" if debug else "INFO" if verbose else settings.log_level
    configure_logging(level)
    ctx.obj = BettiEngine(settings)


@cli.command()
@source_options
@click.option("--method", type=click.Choice(METHOD_CHOICES), default="alt", show_default=True)
@click.option("--breakdown", is_flag=True, help="Emit the per-subset contributions")
@click.option("--unimodality", is_flag=True, help="Report unimodality and log-concavity")
@threads_option
@format_option
@click.pass_obj
@handles_errors
def betti(engine: BettiEngine, method: str, breakdown: bool, unimodality: bool, fmt: str, threads: Optional[int],
          **sources):
    """Real Betti numbers"""
    engine.use_threads(threads)
    source = _source(engine, **sources)
    method = engine.registry.resolve_name(method)
    report = engine.betti(source, method, unimodality=unimodality)
    if method == "both":
        click.echo(output.render_both(report, fmt, breakdown), nl=False)
    else:
        click.echo(output.render_betti(report, fmt, breakdown), nl=False)


@cli.command("complex-betti")
@source_options
@format_option
@click.pass_obj
@handles_errors
def complex_betti(engine: BettiEngine, fmt: str, **sources):
    """Betti numbers of the complex toric manifold (connected chordal input)"""
    report = engine.complex_betti(_source(engine, **sources))
    click.echo(output.render_complex(report, fmt), nl=False)


@cli.command("verify-el")
@click.option("--building-set", "building_set", type=click.Path(dir_okay=False), required=True)
@click.option("--add-singletons", is_flag=True)
@click.option("--max-ground", type=int, default=None, help="Largest ground set to check")
@format_option
@click.pass_obj
@handles_errors
def verify_el(engine: BettiEngine, building_set: str, add_singletons: bool, max_ground: Optional[int], fmt: str):
    """Check the EL-labeling on every interval and print the decreasing top chain"""
    source = _source(engine, building_set, None, None, None, None, None, None, add_singletons)
    certificate: ELCertificate = engine.verify_el(source.building_set, max_ground=max_ground)
    if not certificate:
        failure = certificate.failure
        raise VerificationFailure(f"EL labeling fails on [{failure.bottom}, {failure.top}]: {failure.reason}",
                                  bottom=failure.bottom, top=failure.top)
    ground = source.building_set.ground
    click.echo(output.render_certificate(certificate, certificate.chain_for(EMPTY, ground), fmt),
               nl=False)


@cli.command()
@click.option("--graph", "graph", type=click.Path(dir_okay=False), required=True)
@format_option
@click.pass_obj
@handles_errors
def anumber(engine: BettiEngine, graph: str, fmt: str):
    """a(G) and its signed version sa(G)"""
    source = _source(engine, None, graph, None, None, None, None, None, False)
    click.echo(output.render_a_numbers(engine.a_numbers(source), fmt), nl=False)


@cli.command("hochschild-table")
@click.option("--max-m", type=int, required=True)
@format_option
@click.pass_obj
@handles_errors
def hochschild_table(engine: BettiEngine, max_m: int, fmt: str):
    """Hochschild Betti table with stable rows collapsed"""
    if max_m < 0:
        raise InputError(f"--max-m must be non-negative, got {max_m}")
    click.echo(output.render_hochschild_table(engine.hochschild_table(max_m), fmt), nl=False)


@cli.command()
@source_options
@threads_option
@format_option
@click.pass_obj
@handles_errors
def compare(engine: BettiEngine, fmt: str, threads: Optional[int], **sources):
    """Per-subset comparison of the alternating count and the homology oracle"""
    engine.use_threads(threads)
    report = engine.compare(_source(engine, **sources))
    click.echo(output.render_comparison(report, fmt), nl=False)


@cli.command()
@click.option("--host", default=None, help=f"Bind address (default {FLASK_HOST})")
@click.option("--port", type=int, default=None, help=f"Port (default {FLASK_PORT})")
@click.pass_obj
def serve(engine: BettiEngine, host: Optional[str], port: Optional[int]):
    """Serve the engine over HTTP"""
    from src.cli.server import create_app, print_banner

    settings = engine.settings
    host = host or settings.flask_host
    port = port or settings.flask_port
    print_banner(host, port)
    create_app(engine).run(debug=settings.flask_debug, host=host, port=port)

