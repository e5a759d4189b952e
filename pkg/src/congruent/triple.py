"""Rational Pythagorean A-triples and the bijection with points of C_A."""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Tuple

from gmpy2 import mpz

from .curve import INFINITY, CongruentCurve, CurvePoint, Point, contains
from .errors import InvariantViolation, NotOnCurve, ParseError, ZeroY
from .exact import Rational, RationalLike, format_rational, parse_rational, reduce_with_hint, to_rational

__all__ = [
    "PythagoreanTriple",
    "make_triple",
    "psi",
    "psi_inv",
    "area",
    "hypotenuse",
    "triple_to_json",
    "triple_from_json",
]


@dataclass(frozen=True)
class PythagoreanTriple:
    """Signed quadruple ``(a, b, c, A)`` with ``a^2 + b^2 = c^2`` and ``a*b = 2A``.

    Signs are kept as given; ``area`` gives the unsigned triangle area.
    """

    a: Rational
    b: Rational
    c: Rational
    A: int

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        object.__setattr__(self, "c", to_rational(self.c))
        if isinstance(self.A, bool) or not isinstance(self.A, Integral):
            raise InvariantViolation(f"A must be an integer, got {self.A!r}")
        object.__setattr__(self, "A", int(self.A))
        problem = self.violation()
        if problem is not None:
            raise InvariantViolation(problem)

    @classmethod
    def _trusted(cls, a: Rational, b: Rational, c: Rational, A: int) -> PythagoreanTriple:
        # For values whose invariants hold by construction; skips the
        # cross-multiplied checks, which dominate on very large entries.
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", int(A))
        return self

    def violation(self):
        """Name of the first failed invariant, or ``None``."""
        if self.A == 0:
            return "zero entry: A = 0"
        for name in ("a", "b", "c"):
            if getattr(self, name) == 0:
                return f"zero entry: {name} = 0"
        pa, qa = self.a.numerator, self.a.denominator
        pb, qb = self.b.numerator, self.b.denominator
        pc, qc = self.c.numerator, self.c.denominator
        if pa * pb != 2 * self.A * qa * qb:
            return f"wrong area: a*b = {self.a * self.b} but 2A = {2 * self.A}"
        qab = qa * qb
        lhs = pa * qb
        rhs = pb * qa
        if (lhs * lhs + rhs * rhs) * qc * qc != pc * pc * qab * qab:
            return "not Pythagorean: a^2 + b^2 != c^2"
        return None

    def is_valid(self) -> bool:
        return self.violation() is None

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.A))

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c}; A={self.A})"


def make_triple(a: RationalLike, b: RationalLike, c: RationalLike, A: int) -> PythagoreanTriple:
    return PythagoreanTriple(a, b, c, A)


def psi(t: PythagoreanTriple) -> Tuple[Point, int]:
    """Map a triple to ``((A(b+c)/a, 2A^2(b+c)/a^2), A)``; the point lies on C_|A|."""
    s = t.b + t.c
    x = t.A * s / t.a
    y = 2 * x * x / s
    return Point(x, y), t.A


def psi_inv(p: CurvePoint, A: int) -> PythagoreanTriple:
    """Map ``(x, y)`` on C_|A| with ``y != 0`` to ``(2xA/y, (x^2-A^2)/y, (x^2+A^2)/y, A)``."""
    if isinstance(A, bool) or not isinstance(A, Integral) or A == 0:
        raise InvariantViolation(f"A must be a nonzero integer, got {A!r}")
    if p is INFINITY:
        raise ZeroY("the point at infinity has no triple")
    curve = CongruentCurve(abs(A))
    if not contains(curve, p):
        raise NotOnCurve(f"{p} is not on {curve}")
    if p.y == 0:
        raise ZeroY(f"{p} is a 2-torsion point; it has no triple")
    x, y = p.x, p.y
    x2 = x * x
    A2 = A * A
    return PythagoreanTriple._trusted(2 * A * x / y, (x2 - A2) / y, (x2 + A2) / y, A)


def hypotenuse(p: Point, A: int) -> Rational:
    """The c-component of ``psi_inv(p, A)`` without building the rest.

    With x = r/e^2, y = t/e^3 this is (r^2 + A^2 e^4)/(t e); its numerator and
    denominator share only primes dividing 2A, so no large gcd is taken.
    """
    r, e2 = p.x.numerator, p.x.denominator
    t, e3 = p.y.numerator, p.y.denominator
    if t == 0:
        raise ZeroY(f"{p} is a 2-torsion point; it has no triple")
    e = e3 // e2
    return reduce_with_hint(r * r + mpz(A) * A * e2 * e2, t * e, 2 * A)


def area(t: PythagoreanTriple) -> Rational:
    return abs(t.a * t.b) / 2


def triple_to_json(t: PythagoreanTriple) -> dict:
    return {
        "a": format_rational(t.a),
        "b": format_rational(t.b),
        "c": format_rational(t.c),
        "A": str(t.A),
    }


def triple_from_json(obj) -> PythagoreanTriple:
    try:
        return PythagoreanTriple(
            parse_rational(obj["a"]),
            parse_rational(obj["b"]),
            parse_rational(obj["c"]),
            int(obj["A"]),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"not a triple: {obj!r}") from exc
