"""Dendroidal Dold-Kan checks: trees, faces, integer lattices and the sweep."""

import json

from . import _core
from ._core import ClosureError, OutOfTruncation, ParseError, Truncation, canonical, known_checks, trees

__all__ = [
    "ClosureError",
    "OutOfTruncation",
    "ParseError",
    "Truncation",
    "canonical",
    "factorize",
    "faces",
    "hnf",
    "hom",
    "kernel_basis",
    "known_checks",
    "smith_diagonal",
    "split",
    "sweep",
    "trees",
    "worked_examples",
]


def _strings(rows):
    return [[str(int(x)) for x in row] for row in rows]


def _ints(rows):
    return [[int(x) for x in row] for row in rows]


def faces(term):
    return json.loads(_core.faces_json(term))


def hom(source, target):
    return json.loads(_core.hom_json(source, target))


def factorize(omega_map):
    """omega_map is a dict with domain, codomain and edge_map, as returned by hom()."""
    keep = {k: omega_map[k] for k in ("domain", "codomain", "edge_map")}
    return json.loads(_core.factorize_json(json.dumps(keep)))


def hnf(rows):
    return _ints(_core.hnf(_strings(rows)))


def smith_diagonal(rows):
    return [int(d) for d in _core.smith_diagonal(_strings(rows))]


def kernel_basis(rows, cols=None):
    """Columns of the returned matrix span the integer kernel."""
    if cols is None:
        cols = len(rows[0]) if rows else 0
    return _ints(_core.kernel_basis(_strings(rows), cols))


def split(truncation, term, at, x):
    normal, summands = truncation.split(term, at, [str(int(v)) for v in x])
    return [int(v) for v in normal], _ints(summands)


def worked_examples():
    return json.loads(_core.worked_examples_json())


def sweep(checks=(), max_vertices=4, max_edges=7, parallel=0, seed=7, sign_fault=False):
    text = _core.sweep_json(list(checks), max_vertices, max_edges, parallel, seed, sign_fault)
    return json.loads(text)
