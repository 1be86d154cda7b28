"""Python front end for the wcolab core.

Reports come back as plain dicts with the same field names as the CLI JSON.
"""

import json

from ._core import (
    Error,
    Expr,
    GridConfig,
    ParseError,
    count_zeros,
    normalize_space,
    pointeval_bound,
    seminorm,
)
from . import _core

__all__ = [
    "Error",
    "Expr",
    "GridConfig",
    "ParseError",
    "axioms",
    "check_invertible",
    "check_isometry",
    "count_zeros",
    "norm",
    "normalize_space",
    "pointeval_bound",
    "seminorm",
]


def _grid(grid):
    return grid if grid is not None else GridConfig()


def norm(space, fn, grid=None):
    return json.loads(_core.norm_json(space, fn, _grid(grid)))


def check_invertible(space, F, phi, grid=None):
    return json.loads(_core.check_invertible_json(space, F, phi, _grid(grid)))


def check_isometry(space, F, phi, grid=None):
    return json.loads(_core.check_isometry_json(space, F, phi, _grid(grid)))


def axioms(space, grid=None, seed=0x5EED):
    return json.loads(_core.axioms_json(space, _grid(grid), seed))
