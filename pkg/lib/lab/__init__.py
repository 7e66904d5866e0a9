# -*- coding: utf-8 -*-
"""Generatori di configurazioni con verità nota, esperimenti e andamenti al crescere della taglia."""

from lib.incidence.config import load_config, save_config
from lib.lab.catalog import CATALOG, GeneratorError, SurfaceCatalogEntry, catalog_entry, pythagorean_triples
from lib.lab.experiment import (
    CHECKS,
    TREND_COLUMNS,
    ExperimentResult,
    ExperimentRunner,
    ScalingCollector,
    ScalingTrend,
    run_experiment,
    scaling_report,
)
from lib.lab.generators import GENERATORS, Family, GeneratorSpec, gen
