# -*- coding: utf-8 -*-
"""
Esperimenti: genera una configurazione, esegue i controlli richiesti e
raccoglie tutto in un ExperimentResult. Un controllo fallito o andato in
errore è un esito da riportare, non un'eccezione.

Il JSON di un risultato non contiene il tempo di esecuzione, così la
stessa coppia (spec, seed) produce sempre gli stessi byte.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

from lib.flecnode import FlecnodeError
from lib.geometry import GeometryError, project_generic
from lib.incidence import (
    DEFAULT_C,
    IncidenceError,
    check_double_count,
    count_incidences,
    incidence_report,
    lemma_suite,
)
from lib.lab.catalog import GeneratorError
from lib.lab.generators import Family, GeneratorSpec, gen
from lib.polycore import PolynomialError
from lib.surfaces import SurfaceError

CHECKS = ("count", "lemma", "bounds", "projection")
TREND_COLUMNS = ["family", "size", "m", "n", "D", "s", "I", "bound", "ratio"]

EXPECTED_ERRORS = (IncidenceError, GeometryError, SurfaceError, PolynomialError, FlecnodeError, GeneratorError,
                   ArithmeticError)


@dataclass
class ExperimentResult:
    spec: GeneratorSpec
    seed: int
    report: dict
    checks: list
    lemmas: dict = None
    wall_clock: float = None

    @property
    def passed(self):
        return all(c["status"] in ("passed", "skipped") for c in self.checks)

    def to_json(self):
        return {
            "spec": self.spec.to_json() if self.spec is not None else None,
            "seed": self.seed,
            "report": self.report,
            "lemmas": self.lemmas,
            "checks": self.checks,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


class ExperimentRunner:
    """Runs checks on generated or loaded configs with the settings of the bounds and lemma sections."""

    def __init__(self, logger, settings=None):
        self.logger = logger
        settings = settings or {}
        bounds = settings.get("bounds", {})
        lemmas = settings.get("lemmas", {})
        projection = settings.get("projection", {})
        self.C = Fraction(str(bounds.get("C", DEFAULT_C)))
        self.q = bounds.get("q")
        self.bits = int(bounds.get("precision_bits", 64))
        self.probe_lines = int(lemmas.get("probe_lines", 100))
        self.probe_seed = int(lemmas.get("probe_seed", 0))
        self.max_retries = int(projection.get("max_retries", 8))
        self.sample_triples = int(projection.get("sample_triples", 50))

    def run(self, spec=None, checks=CHECKS, bound_names=("TH13A",), config=None, expected_incidences=None):
        if config is None:
            if spec is None:
                raise GeneratorError("run needs a generator spec or a config")
            config = gen(spec)
        unknown = set(checks) - set(CHECKS)
        if unknown:
            raise GeneratorError(f"Unknown checks: {', '.join(sorted(unknown))}")
        seed = spec.seed if spec is not None else 0
        started = time.perf_counter()
        q = self.q if self.q is not None else config.n
        report = incidence_report(config, bound_names if "bounds" in checks else (), self.C, q, self.bits)
        result = ExperimentResult(spec, seed, report.to_json(), [])

        for name in checks:
            try:
                outcome = getattr(self, f"_check_{name}")(config, report, result, expected_incidences, seed)
            except EXPECTED_ERRORS as e:
                self.logger.error(f"Check {name} on {config.name} raised: {e}", exc_info=True)
                outcome = {"name": name, "status": "error", "error": f"{type(e).__name__}: {e}"}
            result.checks.append(outcome)
            self.logger.info(f"{config.name}: check {name} {outcome['status']}")

        result.wall_clock = time.perf_counter() - started
        self.logger.info(f"Experiment on {config.name} finished in {result.wall_clock:.2f}s")
        return result

    def _check_count(self, config, report, result, expected, seed):
        I = check_double_count(config)
        outcome = {"name": "count", "I": I, "status": "passed"}
        if expected is not None:
            outcome["expected"] = expected
            if I != expected:
                outcome["status"] = "failed"
        return outcome

    def _check_lemma(self, config, report, result, expected, seed):
        if config.surface is None:
            return {"name": "lemma", "status": "skipped", "reason": "no surface"}
        lemmas = lemma_suite(config, self.probe_lines, self.probe_seed)
        result.lemmas = lemmas.to_json()
        failed = [c.name for c in lemmas.checks if c.status == "failed"]
        return {"name": "lemma", "status": "failed" if failed else "passed", "failed": failed}

    def _check_bounds(self, config, report, result, expected, seed):
        evaluated = [b for b in report.bounds if "error" not in b]
        if not evaluated:
            errors = [b["error"] for b in report.bounds]
            return {"name": "bounds", "status": "error" if errors else "skipped", "errors": errors}
        violated = [b["name"] for b in evaluated if not b["holds"]]
        return {"name": "bounds", "status": "failed" if violated else "passed", "violated": violated,
                "ratios": {b["name"]: b["ratio"] for b in evaluated}}

    def _check_projection(self, config, report, result, expected, seed):
        if config.ambient_dim <= 3:
            return {"name": "projection", "status": "skipped", "reason": "already in dimension <= 3"}
        projected, info = project_generic(config, 3, seed, self.max_retries, self.sample_triples)
        I = count_incidences(projected)
        status = "passed" if I == report.I else "failed"
        return {"name": "projection", "status": status, "I": I, "projection": info.to_json()}


def run_experiment(spec, checks=CHECKS, bound_names=("TH13A",), settings=None):
    return ExperimentRunner(logging.getLogger(__name__), settings).run(spec, checks, bound_names)


@dataclass
class ScalingTrend:
    frame: pd.DataFrame
    non_increasing: bool
    all_hold: bool
    max_ratio: float
    summary: dict = field(default_factory=dict)


class ScalingCollector:
    """One row per size of a family under one bound, and the trend of the ratios."""

    def __init__(self, logger, runner=None):
        self.logger = logger
        self.runner = runner or ExperimentRunner(logger)

    def collect(self, family, sizes, bound_name, seed=1):
        family = Family.parse(family)
        if len(sizes) < 3:
            raise GeneratorError(f"a trend needs at least three sizes (got {len(sizes)})")
        rows = []
        for size in sizes:
            spec = GeneratorSpec.for_size(family, size, seed)
            result = self.runner.run(spec, checks=("bounds",), bound_names=(bound_name,))
            report = result.report
            bound = report["bounds"][0]
            if "error" in bound:
                raise IncidenceError(bound["error"])
            rows.append({
                "family": family.value,
                "size": size,
                "m": report["m"],
                "n": report["n"],
                "D": report["D"],
                "s": report["s"],
                "I": report["I"],
                "bound": bound["approx"],
                "ratio": bound["ratio"],
            })
            self.logger.info(f"{family.value} size {size}: I={report['I']}, ratio {bound['ratio']:.4f}")
        df = pd.DataFrame(rows, columns=TREND_COLUMNS)
        ratios = df["ratio"]
        trend = ScalingTrend(
            frame=df,
            non_increasing=bool(ratios.is_monotonic_decreasing),
            all_hold=bool((ratios <= 1).all()),
            max_ratio=float(ratios.max()),
        )
        trend.summary = {
            "family": family.value,
            "bound": bound_name,
            "sizes": list(sizes),
            "non_increasing": trend.non_increasing,
            "all_hold": trend.all_hold,
            "max_ratio": trend.max_ratio,
            "first_ratio": float(ratios.iloc[0]),
            "last_ratio": float(ratios.iloc[-1]),
        }
        if not trend.non_increasing:
            self.logger.warning(f"Ratios of {family.value} under {bound_name} are not non-increasing: {list(ratios)}")
        return trend


def scaling_report(family, sizes, bound_name, settings=None, seed=1):
    logger = logging.getLogger(__name__)
    return ScalingCollector(logger, ExperimentRunner(logger, settings)).collect(family, sizes, bound_name, seed)
