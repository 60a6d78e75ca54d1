"""Integral G-lattices for dihedral and cyclic groups, with rationality verdicts."""

import json

from . import _latrat
from ._latrat import LatticeError, __version__

__all__ = [
    "LatticeError",
    "__version__",
    "build",
    "verify",
    "census",
    "cohomology",
    "is_flabby",
    "is_coflabby",
    "fingerprint",
    "resolve",
    "iso",
    "classify",
    "elementary_divisors",
    "det",
    "circulant_det",
]


def _lattice(m):
    # dict, JSON text, or "NAME:n"
    if isinstance(m, dict):
        return json.dumps(m)
    if isinstance(m, str) and not m.lstrip().startswith("{"):
        name, _, n = m.rpartition(":")
        return _latrat.build(name, int(n))
    return m


def build(name, n):
    return json.loads(_latrat.build(name, n))


def verify(theorem, n):
    return json.loads(_latrat.verify(theorem, n))


def census(p):
    return json.loads(_latrat.census(p))


def cohomology(m):
    return json.loads(_latrat.cohomology(_lattice(m)))


def is_flabby(m):
    return _latrat.is_flabby(_lattice(m))


def is_coflabby(m):
    return _latrat.is_coflabby(_lattice(m))


def fingerprint(m):
    return json.loads(_latrat.fingerprint(_lattice(m)))


def resolve(m):
    return json.loads(_latrat.resolve(_lattice(m)))


def iso(a, b, seed=0, draws=100000):
    return json.loads(_latrat.iso(_lattice(a), _lattice(b), seed, draws))


def classify(m, asserted_nonprincipal=False, seed=0, draws=100000, principality_points=0):
    return json.loads(
        _latrat.classify(_lattice(m), asserted_nonprincipal, seed, draws, principality_points)
    )


def elementary_divisors(matrix):
    return [int(x) for x in _latrat.elementary_divisors(json.dumps(matrix))]


def det(matrix):
    return int(_latrat.det(json.dumps(matrix)))


def circulant_det(c):
    return int(_latrat.circulant_det(list(c)))
