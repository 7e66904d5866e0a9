# -*- coding: utf-8 -*-
"""Aritmetica razionale esatta e polinomi multivariati sparsi."""

from lib.polycore.calculus import (
    directional_derivative_form,
    evaluate,
    line_coefficients,
    order_at_zero,
    partial_derivative,
    restrict_to_line,
    shift,
    taylor_components,
)
from lib.polycore.errors import (
    ArityError,
    NotDivisibleError,
    PolynomialError,
    PolynomialParseError,
    UnknownVariableError,
)
from lib.polycore.gcd import (
    content_in,
    divides,
    exact_quotient,
    gcd,
    primitive_part_in,
    prs_resultant,
    pseudo_remainder,
    square_free_part,
    subresultant_prs,
)
from lib.polycore.multipoly import (
    DIRECTION_VARIABLES,
    POINT_VARIABLES,
    VARIABLE_ORDER,
    MultiPoly,
    as_fraction,
    sort_variables,
)
from lib.polycore.resultant import BareissError, sylvester_resultant
from lib.polycore.text import format_poly, parse_poly, parse_rational
