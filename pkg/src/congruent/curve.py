"""Congruent number curves ``y^2 = x^3 - A^2 x`` and their chord-tangent group law."""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Union

import gmpy2
from gmpy2 import mpz

from .errors import InvalidCurve, NotOnCurve, ParseError
from .exact import Rational, RationalLike, cancel_common, format_rational, parse_rational, to_rational

__all__ = [
    "CongruentCurve",
    "Point",
    "INFINITY",
    "CurvePoint",
    "contains",
    "negate",
    "add",
    "double",
    "scalar_mul",
    "two_torsion",
    "point_to_json",
    "point_from_json",
]


class _Infinity:
    """The neutral element, the projective point (0 : 1 : 0)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "O"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@dataclass(frozen=True)
class Point:
    """Affine point; membership in a particular curve is checked by that curve."""

    x: Rational
    y: Rational

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    def __str__(self):
        return f"({self.x}, {self.y})"


CurvePoint = Union[Point, _Infinity]


@dataclass(frozen=True)
class CongruentCurve:
    A: int

    def __post_init__(self):
        if isinstance(self.A, bool) or not isinstance(self.A, Integral):
            raise InvalidCurve(f"A must be an integer, got {self.A!r}")
        if self.A < 1:
            raise InvalidCurve(f"A must be a positive integer, got {self.A}")
        object.__setattr__(self, "A", int(self.A))

    def point(self, x: RationalLike, y: RationalLike) -> Point:
        """Build an affine point, rejecting it unless it lies on this curve."""
        p = Point(x, y)
        if not contains(self, p):
            raise NotOnCurve(f"{p} is not on y^2 = x^3 - {self.A * self.A}x")
        return p

    def __str__(self):
        return f"C_{self.A}: y^2 = x^3 - {self.A * self.A}x"

    def to_json(self) -> dict:
        return {"A": str(self.A)}


def contains(curve: CongruentCurve, p: CurvePoint) -> bool:
    if p is INFINITY:
        return True
    # Cross-multiplied so that no gcd is needed on large coordinates:
    # (Y/E)^2 = (X/D)^3 - A^2 X/D  <=>  Y^2 D^3 = E^2 (X^3 - A^2 X D^2)
    X, D = p.x.numerator, p.x.denominator
    Y, E = p.y.numerator, p.y.denominator
    A2 = curve.A * curve.A
    D2 = D * D
    return Y * Y * D2 * D == E * E * X * (X * X - A2 * D2)


def _require(curve: CongruentCurve, *points: CurvePoint) -> None:
    for p in points:
        if not contains(curve, p):
            raise NotOnCurve(f"{p} is not on {curve}")


def negate(p: CurvePoint) -> CurvePoint:
    if p is INFINITY:
        return INFINITY
    return Point(p.x, -p.y)


def add(curve: CongruentCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    _require(curve, p, q)
    if p is INFINITY:
        return q
    if q is INFINITY:
        return p
    x0, y0, x1, y1 = p.x, p.y, q.x, q.y
    if x0 != x1:
        lam = (y1 - y0) / (x1 - x0)
        x2 = lam * lam - x0 - x1
        y2 = lam * (x0 - x2) - y0
        return Point(x2, y2)
    if y0 == -y1:
        return INFINITY
    return _double(curve.A, p)


def double(curve: CongruentCurve, p: CurvePoint) -> CurvePoint:
    _require(curve, p)
    return _double(curve.A, p)


def _weighted(p: Point):
    # A rational point on the curve has x = r/e^2 and y = t/e^3 in lowest terms.
    r, e2 = p.x.numerator, p.x.denominator
    t, e3 = p.y.numerator, p.y.denominator
    return r, t, gmpy2.divexact(e3, e2)


def _double(A: int, p: CurvePoint) -> CurvePoint:
    """Tangent doubling on an already validated point.

    Works on the integer triple (r, t, e).  Any prime dividing both the new
    x-numerator and its denominator divides 2A, so reduction only needs gcds
    against powers of 2A and never a gcd of two huge integers.
    """
    if p is INFINITY or p.y == 0:
        return INFINITY
    r, t, e = _weighted(p)
    A2 = mpz(A) * A
    e2 = e * e
    Ae4 = A2 * e2 * e2
    r2 = r * r
    m, w, g = cancel_common(r2 + Ae4, 2 * t * e, 2 * A)
    k = gmpy2.divexact(w, e)
    x_num = m * m
    slope_num = 3 * r2 - Ae4
    t_new = gmpy2.divexact(slope_num * (r * k * k - x_num), g) - t * k * k * k
    ew = abs(w)
    if w < 0:
        t_new = -t_new
    return Point(Rational._raw(x_num, ew * ew), Rational._raw(t_new, ew * ew * ew))


def scalar_mul(curve: CongruentCurve, n: int, p: CurvePoint) -> CurvePoint:
    """``n * p`` by double-and-add."""
    if n < 0:
        raise ValueError(f"scalar must be non-negative, got {n}")
    _require(curve, p)
    result: CurvePoint = INFINITY
    addend = p
    while n:
        if n & 1:
            result = add(curve, result, addend)
        n >>= 1
        if n:
            addend = _double(curve.A, addend)
    return result


def two_torsion(curve: CongruentCurve) -> frozenset:
    A = curve.A
    return frozenset(Point(x, 0) for x in (0, A, -A))


def point_to_json(p: CurvePoint):
    if p is INFINITY:
        return "O"
    return {"x": format_rational(p.x), "y": format_rational(p.y)}


def point_from_json(obj) -> CurvePoint:
    if obj == "O":
        return INFINITY
    if isinstance(obj, dict) and set(obj) == {"x", "y"}:
        return Point(parse_rational(obj["x"]), parse_rational(obj["y"]))
    raise ParseError(f"not a point: {obj!r}")
