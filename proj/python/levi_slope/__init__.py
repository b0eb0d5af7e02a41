"""Minimal admissible parabolics, relative Weyl groups and stability for reductive root data."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CapExceeded,
    InvalidInput,
    RootDatum,
    brute_force_parabolic,
    degree_lift,
    from_json,
    gl,
    normalize_coxeter_label,
    pi1_torsion,
    product,
    relative_weyl_type,
    simple,
    stable_exists,
)

__all__ = [
    "CapExceeded",
    "InvalidInput",
    "RootDatum",
    "analyze",
    "brute_force_parabolic",
    "degree_lift",
    "from_json",
    "gl",
    "minimal_parabolic",
    "normalize_coxeter_label",
    "pi1_torsion",
    "product",
    "relative_weyl_type",
    "simple",
    "slope",
    "stable_exists",
    "table",
    "verify",
]


def minimal_parabolic(datum, lift):
    """Return (nodes, degree_lift, slope) with 1-based nodes and an exact slope."""
    nodes, degree, phi = _core.minimal_parabolic(datum, list(lift))
    return nodes, degree, [Fraction(x) for x in phi]


def slope(datum, nodes, lift):
    return [Fraction(x) for x in _core.slope(datum, list(nodes), list(lift))]


def analyze(datum, lift, orbit_cap=1_000_000):
    """Full report as a dict (the same document the CLI prints)."""
    return json.loads(_core.analyze_json(datum, list(lift), orbit_cap))


def table(max_rank=8, families="ABCDE"):
    return json.loads(_core.table_json(max_rank, families))["rows"]


def verify(max_rank=3):
    return json.loads(_core.verify_json(max_rank))
