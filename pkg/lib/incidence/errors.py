# -*- coding: utf-8 -*-


class IncidenceError(ValueError):
    """Invalid configuration or a procedure that cannot run on it."""


class ChainExhaustedError(IncidenceError):
    """The derivative chain ended before a point or line could be assigned."""

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class MissingParameterError(IncidenceError):
    pass


class UncataloguedSurfaceError(IncidenceError):
    """A component has no closed-form generator family."""
