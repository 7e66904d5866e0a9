# -*- coding: utf-8 -*-
"""Conteggio delle incidenze e procedure combinatorie del limite per superfici rigate."""

from lib.incidence.assignment import (
    ChainAssignment,
    ComponentAssignment,
    ConicalTags,
    LinePartition,
    Tag,
    assign_components,
    component_is_ruled,
    derivative_chain,
    derivative_chain_assign,
    line_partition,
    tag_conical,
)
from lib.incidence.bounds import (
    BOUNDS,
    DEFAULT_C,
    PRECISION_BITS,
    BoundValue,
    Interval,
    bound_eval,
    focs_factor,
    rational_power,
    xi_threshold,
)
from lib.incidence.config import Config, load_config, save_config
from lib.incidence.counting import (
    count_incidences,
    incidence_pairs,
    incidence_table,
    intersecting_pairs,
    max_coplanar_s,
    points_per_line,
    rich_point_counts,
    rich_points,
)
from lib.incidence.errors import (
    ChainExhaustedError,
    IncidenceError,
    MissingParameterError,
    UncataloguedSurfaceError,
)
from lib.incidence.lemmas import CHECKS, CheckResult, LemmaReport, ThresholdReport, lemma_suite, probe_lines, threshold_split
from lib.incidence.report import IncidenceReport, bounds_frame, check_double_count, incidence_report
