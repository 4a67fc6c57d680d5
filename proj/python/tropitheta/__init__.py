"""Exact tropical theta functions, faithful embeddings and nonarchimedean lifts.

Rationals may be passed as ``int``, ``fractions.Fraction`` or ``"p/q"`` strings.
Reports come back as plain dicts in the same JSON layout the command-line tool
writes; ``fraction`` converts their rational strings.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import _core

__all__ = [
    "Error",
    "Report",
    "fraction",
    "polarization",
    "theta",
    "embed",
    "certify",
    "voronoi",
    "lift",
    "example45",
]

Error = _core.Error
Error.kind = property(lambda self: self.args[0])
Error.exit_code = property(lambda self: self.args[2])


@dataclass
class Report:
    body: dict
    files: dict = field(default_factory=dict)
    status: int = 0

    def __getitem__(self, key):
        return self.body[key]

    def __contains__(self, key):
        return key in self.body


def fraction(text):
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(text)


def _encode(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _points(points):
    return [list(p) if isinstance(p, (list, tuple)) else [p] for p in points]


def _payload(**kwargs):
    return json.dumps({k: _encode(v) for k, v in kwargs.items() if v is not None})


def _report(raw):
    body, files, status = raw
    return Report(json.loads(body), dict(files), status)


def polarization(datum):
    """Type, representatives and Gram matrix of a tropical descent datum."""
    return _report(_core.type_report(_payload(datum=datum)))


def theta(datum, b, points, convention="Q_ELL"):
    """Exact values of θ_b at the given points (scalars stand for 1-vectors)."""
    r = _report(_core.theta_report(_payload(datum=datum, b=b, points=_points(points), convention=convention)))
    return [fraction(v) for v in r["values"]]


def embed(datum):
    """Linearity cells, theta tables, image complex and SVG figures."""
    return _report(_core.embed_report(_payload(datum=datum)))


def certify(datum, mode="exact", resolution=20):
    """Faithfulness report; ``status`` is 3 when the embedding is not certified faithful."""
    return _report(_core.certify_report(_payload(datum=datum), mode, resolution))


def voronoi(G=None, d=None, datum=None):
    """Voronoi cell of G (optionally with a decomposition for type d), or the adapted analysis of a datum."""
    if datum is not None:
        return _report(_core.voronoi_report(_payload(datum=datum)))
    return _report(_core.voronoi_report(_payload(G=G, d=d)))


def lift(na_datum, b=None, points=None, targets=None, divide=None, window=6):
    """Fourier lifts, surjective lifts and divided data for a nonarchimedean datum.

    Valued scalars are lists of ``[exponent, coefficient]`` pairs; ``None`` targets mean +∞.
    """
    if points is not None:
        points = _points(points)
    if targets is not None:
        targets = ["inf" if t is None else t for t in targets]
    payload = _payload(na_datum=na_datum, b=b, points=points, targets=targets, divide=divide)
    return _report(_core.lift_report(payload, window))


def example45(d, varpi=12, mode="exact", resolution=20):
    """Elliptic curve with period varpi and a degree-d polarization."""
    return _report(_core.example_report(d, _encode(Fraction(varpi)), mode, resolution))
