# -*- coding: utf-8 -*-


class SurfaceError(ValueError):
    """Invalid surface input."""


class NotOnSurfaceError(SurfaceError):
    pass


class SingularPointError(SurfaceError):
    pass


class FactorMismatchError(SurfaceError):
    """The caller-supplied factors do not multiply back to f."""


class DegenerateQuadricError(SurfaceError):
    pass
