# -*- coding: utf-8 -*-
"""
Config: l'insieme P dei punti, l'insieme L delle rette e, se noto, la
superficie che li contiene. Si salva e si ricarica in JSON.
"""

import json
import logging
import os
from collections import Counter
from dataclasses import dataclass

from lib.geometry import AffPoint, ProjLine
from lib.incidence.errors import IncidenceError
from lib.surfaces import SurfaceModel, contains_line

logger = logging.getLogger(__name__)


def _first_duplicate(items):
    counts = Counter(items)
    return next((x for x, k in counts.items() if k > 1), None)


@dataclass(frozen=True)
class Config:
    ambient_dim: int
    points: tuple = ()
    lines: tuple = ()
    surface: SurfaceModel = None
    contained: tuple = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lines", tuple(self.lines))
        if self.ambient_dim < 2:
            raise IncidenceError(f"ambient dimension {self.ambient_dim} is below 2")
        for obj in self.points + self.lines:
            if obj.dim != self.ambient_dim:
                raise IncidenceError(f"{obj} has dimension {obj.dim}, config has {self.ambient_dim}")
        duplicate = _first_duplicate(self.points)
        if duplicate is not None:
            raise IncidenceError(f"duplicate point {duplicate}")
        duplicate = _first_duplicate(self.lines)
        if duplicate is not None:
            raise IncidenceError(f"duplicate line {duplicate}")
        self._check_surface()

    def _check_surface(self):
        if self.surface is None:
            if self.contained is not None:
                raise IncidenceError("containment flags given without a surface")
            return
        if self.surface.dim != self.ambient_dim:
            raise IncidenceError(f"surface lives in dimension {self.surface.dim}, config in {self.ambient_dim}")
        actual = tuple(contains_line(self.surface.f, line) for line in self.lines)
        if self.contained is None:
            object.__setattr__(self, "contained", actual)
            return
        flags = tuple(bool(c) for c in self.contained)
        if len(flags) != len(self.lines):
            raise IncidenceError(f"{len(flags)} containment flags for {len(self.lines)} lines")
        for line, claimed, real in zip(self.lines, flags, actual):
            if claimed != real:
                raise IncidenceError(f"line {line} is marked contained={claimed} but contained={real}")
        object.__setattr__(self, "contained", flags)

    @property
    def m(self):
        return len(self.points)

    @property
    def n(self):
        return len(self.lines)

    @property
    def degree(self):
        if self.surface is None:
            raise IncidenceError("the config has no surface")
        return self.surface.degree

    def contained_lines(self):
        return [l for l, c in zip(self.lines, self.contained or ()) if c]

    def to_json(self):
        return {
            "name": self.name,
            "ambient_dim": self.ambient_dim,
            "points": [p.to_json() for p in self.points],
            "lines": [l.to_json() for l in self.lines],
            "surface": self.surface.to_json() if self.surface is not None else None,
            "contained": list(self.contained) if self.contained is not None else None,
        }

    @classmethod
    def from_json(cls, data):
        surface = data.get("surface")
        return cls(
            ambient_dim=int(data["ambient_dim"]),
            points=tuple(AffPoint.from_json(p) for p in data.get("points", [])),
            lines=tuple(ProjLine.from_json(l) for l in data.get("lines", [])),
            surface=SurfaceModel.from_json(surface) if surface is not None else None,
            contained=data.get("contained"),
            name=data.get("name", ""),
        )


def save_config(config, path):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        json.dump(config.to_json(), f, indent=2)
    logger.info(f"Saved config '{config.name}' (m={config.m}, n={config.n}) to {path}")


def load_config(path):
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise IncidenceError(f"{path} is not valid JSON: {e}") from None
    config = Config.from_json(data)
    logger.debug(f"Loaded config '{config.name}' from {path}")
    return config
