# -*- coding: utf-8 -*-

import functools
import json
import logging
import logging.handlers
import os
import sys
import traceback
from fractions import Fraction

import click

from lib import paths
from lib.components.config_manager import ConfigManager, SettingsError
from lib.flecnode import FlecnodeError, cayley_salmon_test, flecnode_poly, lines_through_point_exist
from lib.geometry import AffPoint, GeometryError
from lib.helpers import logRecursive
from lib.incidence import (
    BOUNDS,
    IncidenceError,
    assign_components,
    bounds_frame,
    count_incidences,
    derivative_chain_assign,
    incidence_report,
    max_coplanar_s,
    rich_points,
)
from lib.lab import (
    CHECKS,
    ExperimentRunner,
    Family,
    GeneratorError,
    GeneratorSpec,
    ScalingCollector,
    gen,
    load_config,
    save_config,
)
from lib.polycore import PolynomialError, parse_poly
from lib.surfaces import DegenerateQuadricError, SurfaceError, classify_quadric
from lib.version import get_version

APP_LOGGER = "ruledLab"
HANDLED_ERRORS = (IncidenceError, GeometryError, SurfaceError, PolynomialError, FlecnodeError, GeneratorError,
                  SettingsError, OSError)


def unhandled_exception_handler(exc_type, exc_value, exc_traceback):
    """Logs any unhandled exception before exiting."""
    tb = "".join(traceback.format_exception(exc_type, exc_value, exc_traceback))
    logging.getLogger(APP_LOGGER).critical(f"Unhandled exception:\n{tb}")
    sys.exit(1)


def setup_logging(log_level_str):
    """Configures the application logger and the library loggers it shares handlers with."""
    logger = logging.getLogger(APP_LOGGER)
    log_level = getattr(logging, log_level_str.upper(), logging.INFO)
    formatter = logging.Formatter("%(asctime)s - %(threadName)s - %(levelname)s - %(message)s")
    library = logging.getLogger("lib")
    for target in (logger, library):
        target.setLevel(log_level)
    if not logger.handlers:
        console_handler = logging.StreamHandler()
        os.makedirs(paths.LOG_DIR, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(paths.LOG_FILE, when="D", interval=1, backupCount=7)
        file_handler.setFormatter(formatter)
        for target in (logger, library):
            target.addHandler(console_handler)
            target.addHandler(file_handler)
            target.propagate = False
    return logger


def print_banner(logger):
    logger.debug(f"ruledLab {get_version()}: exact incidence geometry on ruled surfaces")


def handled(command):
    """Turns the library's input errors into one-line click errors."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except HANDLED_ERRORS as e:
            logging.getLogger(APP_LOGGER).debug(f"{command.__name__} failed", exc_info=True)
            raise click.ClickException(f"{type(e).__name__}: {e}") from None
    return wrapper


def _emit(data, output=None):
    text = json.dumps(data, indent=2, sort_keys=True)
    if output:
        _write(output, text + "\n")
        click.echo(f"Written {output}", err=True)
    else:
        click.echo(text)


def _write(path, text):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        f.write(text)


def _read_poly(value):
    """Polynomial from a file holding its text, or the text itself."""
    if os.path.isfile(value):
        with open(value, "r") as f:
            value = f.read()
    return parse_poly(value.strip())


def _parse_point(value):
    try:
        return AffPoint(tuple(Fraction(v.strip()) for v in value.split(",")))
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma-separated list of rationals") from None


def _csv_list(value):
    return [v.strip() for v in value.split(",") if v.strip()]


@click.group()
@click.option("--log-level", default=lambda: os.getenv("LOG_LEVEL"), help="DEBUG, INFO, WARNING, ... (default from settings)")
@click.option("--settings", "settings_path", type=click.Path(dir_okay=False), default=None,
              help="Settings file (default <data>/.ruledlab.json)")
@click.version_option(version=get_version(), prog_name="ruledLab")
@click.pass_context
def cli(ctx, log_level, settings_path):
    """Exact incidence geometry workbench for points and lines on algebraic surfaces."""
    bootstrap = logging.getLogger(APP_LOGGER)
    try:
        manager = ConfigManager(bootstrap, settings_path)
    except SettingsError as e:
        raise click.ClickException(str(e)) from None
    logger = setup_logging(log_level or manager.value("logging", "level"))
    print_banner(logger)
    ctx.obj = {"logger": logger, "settings": manager}


def _runner(ctx):
    return ExperimentRunner(ctx.obj["logger"], ctx.obj["settings"].config)


def _output_dir(ctx):
    return paths.resolve(ctx.obj["settings"].value("lab", "output_dir"), paths.OUTPUT_DIR)


@cli.command("gen")
@click.option("--family", required=True, type=click.Choice([f.value for f in Family]))
@click.option("--g", type=int, default=None, help="Grid size (regulus-grid, variety-4d)")
@click.option("--n", type=int, default=None, help="Number of lines")
@click.option("--m", type=int, default=None, help="Number of sampled points")
@click.option("--a", type=int, default=None, help="Elekes grid width")
@click.option("--b", type=int, default=None, help="Elekes slope count")
@click.option("--seed", type=int, default=None, help="Seed (default from settings)")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handled
def gen_command(ctx, family, g, n, m, a, b, seed, output):
    """Generate a configuration with known ground truth."""
    seed = seed if seed is not None else ctx.obj["settings"].value("lab", "default_seed")
    config = gen(GeneratorSpec(family, g=g, n=n, m=m, a=a, b=b, seed=seed))
    if output:
        save_config(config, output)
        click.echo(f"Written {output} (m={config.m}, n={config.n})", err=True)
    else:
        click.echo(json.dumps(config.to_json(), indent=2))


@cli.command("run")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--family", type=click.Choice([f.value for f in Family]), default=None)
@click.option("--size", type=int, default=None, help="Family size when generating")
@click.option("--seed", type=int, default=None)
@click.option("--checks", default=",".join(CHECKS), show_default=True)
@click.option("--bound", "bounds", default="TH13A", show_default=True, help="Comma-separated bound names")
@click.option("--C", "C", default=None, help="Bound constant (default from settings)")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handled
def run_command(ctx, config_path, family, size, seed, checks, bounds, C, output):
    """Run incidence, lemma, bound and projection checks on a config."""
    logger = ctx.obj["logger"]
    logRecursive(logger, ctx.obj["settings"].config)
    runner = _runner(ctx)
    if C is not None:
        runner.C = Fraction(C)
    checks = [c if c != "lemmas" else "lemma" for c in _csv_list(checks)]
    if config_path:
        result = runner.run(None, checks, _csv_list(bounds), config=load_config(config_path))
        name = os.path.splitext(os.path.basename(config_path))[0]
    elif family and size:
        seed = seed if seed is not None else ctx.obj["settings"].value("lab", "default_seed")
        spec = GeneratorSpec.for_size(family, size, seed)
        result = runner.run(spec, checks, _csv_list(bounds))
        name = f"{family}-{size}"
    else:
        raise click.UsageError("give --config or --family with --size")
    output = output or os.path.join(_output_dir(ctx), f"{name}.report.json")
    _write(output, result.dumps() + "\n")
    click.echo(f"Written {output}", err=True)
    if not result.passed:
        logger.warning(f"Some checks did not pass: {[c['name'] for c in result.checks if c['status'] != 'passed']}")


@cli.command("scale")
@click.option("--family", required=True, type=click.Choice([f.value for f in Family]))
@click.option("--sizes", required=True, help="Comma-separated sizes, at least three")
@click.option("--bound", required=True, type=click.Choice(sorted(BOUNDS), case_sensitive=False))
@click.option("--seed", type=int, default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handled
def scale_command(ctx, family, sizes, bound, seed, output):
    """Ratio of I to a bound across sizes of a family, as CSV."""
    try:
        sizes = [int(s) for s in _csv_list(sizes)]
    except ValueError:
        raise click.BadParameter(f"sizes must be integers: {sizes}") from None
    seed = seed if seed is not None else ctx.obj["settings"].value("lab", "default_seed")
    trend = ScalingCollector(ctx.obj["logger"], _runner(ctx)).collect(family, sizes, bound.upper(), seed)
    output = output or os.path.join(_output_dir(ctx), f"{family}-{bound.upper()}.csv")
    directory = os.path.dirname(output)
    if directory:
        os.makedirs(directory, exist_ok=True)
    trend.frame.to_csv(output, index=False)
    click.echo(f"Written {output}", err=True)
    click.echo(json.dumps(trend.summary, indent=2))


@cli.command("flecnode")
@click.option("--surface", required=True, help="Polynomial text or a file holding it")
@click.option("--factor", "factors", multiple=True, help="Irreducible factor (repeatable)")
@click.pass_context
@handled
def flecnode_command(ctx, surface, factors):
    """Flecnode polynomial and per-factor ruledness verdicts."""
    max_degree = ctx.obj["settings"].value("flecnode", "max_degree")
    f = _read_poly(surface)
    factors = [_read_poly(q) for q in factors] or [f]
    result = flecnode_poly(f, max_degree)
    verdicts = cayley_salmon_test(f, factors, max_degree)
    _emit({"flecnode": result.to_json(), "verdicts": [v.to_json() for v in verdicts]})


@cli.command("classify")
@click.option("--surface", required=True, help="Polynomial text or a file holding it")
@click.option("--point", default=None, help="Point of the surface, e.g. 0,0,0, to search lines through")
@click.pass_context
@handled
def classify_command(ctx, surface, point):
    """Quadric type, ruledness verdict and lines through a point."""
    f = _read_poly(surface)
    data = {"f": str(f), "degree": f.degree()}
    if f.degree() == 2:
        try:
            data["quadric"] = classify_quadric(f).to_json()
        except DegenerateQuadricError as e:
            data["quadric"] = {"error": str(e)}
    data["verdicts"] = [v.to_json() for v in
                        cayley_salmon_test(f, [f], ctx.obj["settings"].value("flecnode", "max_degree"))]
    if point:
        data["lines_through_point"] = lines_through_point_exist(f, _parse_point(point)).to_json()
    _emit(data)


@cli.command("count")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@handled
def count_command(config_path):
    """Number of incidences."""
    config = load_config(config_path)
    _emit({"m": config.m, "n": config.n, "I": count_incidences(config)})


@cli.command("rich")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--r", "r", type=int, default=2, show_default=True)
@handled
def rich_command(config_path, r):
    """Points on at least r lines."""
    rich = rich_points(load_config(config_path), r)
    _emit({"r": r, "count": len(rich), "points": [{"point": p.to_json(), "degree": d} for p, d in rich]})


@cli.command("s")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@handled
def s_command(config_path):
    """Largest number of lines in a common 2-flat."""
    _emit({"s": max_coplanar_s(load_config(config_path))})


@cli.command("assign")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@handled
def assign_command(config_path):
    """Assign points and lines to the factors of the surface."""
    _emit(assign_components(load_config(config_path)).to_json())


@cli.command("chain")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--var", default="x", show_default=True)
@handled
def chain_command(config_path, var):
    """Derivative-chain assignment along one coordinate."""
    _emit(derivative_chain_assign(None, load_config(config_path), var).to_json())


@cli.command("bounds")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--name", "names", default="TH13A", show_default=True, help="Comma-separated bound names")
@click.option("--C", "C", default=None, help="Bound constant (default from settings)")
@click.option("--q", type=int, default=None, help="Lines in a common hyperplane or quadric (default from settings, else n)")
@click.option("--D", "D", type=int, default=None, help="Degree, when the config carries no surface")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Also write one CSV row per bound")
@click.pass_context
@handled
def bounds_command(ctx, config_path, names, C, q, D, csv_path):
    """Incidence report with the named bounds evaluated."""
    settings = ctx.obj["settings"]
    config = load_config(config_path)
    C = Fraction(C if C is not None else settings.value("bounds", "C"))
    q = q if q is not None else settings.value("bounds", "q")
    q = q if q is not None else config.n
    overrides = {"D": D} if D is not None else None
    report = incidence_report(config, [n.upper() for n in _csv_list(names)], C, q,
                              settings.value("bounds", "precision_bits"), overrides)
    if csv_path:
        bounds_frame(report).to_csv(csv_path, index=False)
    _emit(report.to_json())


@cli.command("settings")
@click.option("--init", is_flag=True, help="Write the default settings file")
@click.option("--show", is_flag=True, help="Log the effective settings")
@click.pass_context
def settings_command(ctx, init, show):
    """Effective settings, or write the defaults to disk."""
    manager = ctx.obj["settings"]
    if init:
        if os.path.exists(manager.config_path):
            raise click.ClickException(f"{manager.config_path} already exists")
        if not manager.save_config():
            raise click.ClickException(f"could not write {manager.config_path}")
        click.echo(f"Written {manager.config_path}", err=True)
    if show:
        logRecursive(ctx.obj["logger"], manager.config)
    click.echo(json.dumps(manager.config, indent=2, sort_keys=True))


if __name__ == "__main__":
    sys.excepthook = unhandled_exception_handler
    cli()
