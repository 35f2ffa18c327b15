"""Koszul cycles, regularity bounds and Veronese syzygies over exact fields."""

import json

from . import _core
from ._core import FieldError, InfeasibleError, IoError, RingError, green_lazarsfeld_index, suite_names

__all__ = [
    "FieldError",
    "InfeasibleError",
    "IoError",
    "RingError",
    "betti",
    "cycle_families",
    "green_lazarsfeld_index",
    "homology",
    "regularity",
    "run_suite",
    "suite_names",
]


def _ideal_text(ideal):
    return ideal if isinstance(ideal, str) else json.dumps(ideal)


def homology(ideal, t, degree, field="rat"):
    """Dimensions of chains, cycles, boundaries and homology of K_t(I, S) in one degree.

    ``ideal`` is a dict like ``{"blocks": [2], "power": [2]}`` or its JSON text;
    ``degree`` is an int or one entry per block.
    """
    if isinstance(degree, int):
        degree = [degree]
    return json.loads(_core._homology(_ideal_text(ideal), t, list(degree), field))


def run_suite(name, seed=1, size=None, cap=2, field="rat"):
    return json.loads(_core._run_suite(name, seed, size, cap, field))


def betti(blocks, c, imax, field="rat"):
    return json.loads(_core._betti(list(blocks), list(c), imax, field))


def cycle_families(family, n, c, field="rat"):
    return json.loads(_core._families(family, n, c, field))


def regularity(ideal):
    """(value, certified, method) for reg of a monomial ideal."""
    return _core._regularity(_ideal_text(ideal))
