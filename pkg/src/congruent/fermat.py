"""Fermat's triple-generating step, its orbits, and the certificates built on them.

A step sends a triple with hypotenuse ``c = u/v`` (lowest terms) to

    a1 = 4A*u*v / D,   b1 = D / (2*u*v),   c1 = (u^4 + 16 A^2 v^4) / (2*u*v*D)

where ``D = v^2 (a^2 - b^2)`` is an integer.  Every prime shared by a
numerator and denominator above divides ``2A``, and ``D`` for the next
triple is ``(64 A^2 (uv)^4 - D^4) / g^2`` with ``g`` the factor cancelled
from ``c1``.  Orbits therefore run on multiplications and exact divisions
only, which matters because coordinate sizes roughly quadruple per step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import gmpy2
from gmpy2 import mpz

from .curve import INFINITY, CongruentCurve, CurvePoint, Point, _double, contains, double
from .errors import (
    DegenerateTriple,
    InvariantViolation,
    NonPositiveRadicand,
    NotOnCurve,
    StepCapExceeded,
    TorsionInput,
)
from .exact import Rational, RationalLike, cancel_common, reduce_with_hint, sqrt_exact, to_rational, two_adic_valuation
from .triple import PythagoreanTriple, hypotenuse, make_triple, psi, triple_to_json

__all__ = [
    "MAX_STEPS",
    "FermatOrbit",
    "fermat_step",
    "fermat_step_cform",
    "orbit",
    "check_valuation_descent",
    "check_distinct_hypotenuses",
    "verify_orbit",
    "doubling_equivalence",
    "infinite_order_witness",
    "hypotenuse_valuation",
    "orbit_to_json",
]

MAX_STEPS = 24


@dataclass(frozen=True)
class FermatOrbit:
    seed: PythagoreanTriple
    steps: Tuple[PythagoreanTriple, ...]
    c_valuations: Tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.steps)


def _leg_difference(t: PythagoreanTriple) -> mpz:
    """``v^2 (a^2 - b^2)`` where v is the hypotenuse's denominator."""
    pa, qa = t.a.numerator, t.a.denominator
    pb, qb = t.b.numerator, t.b.denominator
    v = t.c.denominator
    num = v * v * (pa * pa * qb * qb - pb * pb * qa * qa)
    den = qa * qa * qb * qb
    d, rem = gmpy2.f_divmod(num, den)
    if rem:
        raise InvariantViolation(f"{t} is not a Pythagorean triple")
    return d


def _advance(u, v, d, A: int):
    """One step from hypotenuse u/v and leg difference d; returns the triple and g."""
    if d == 0:
        raise DegenerateTriple("a^2 = b^2, the step is undefined")
    hint = 2 * abs(A)
    uv = u * v
    a1 = reduce_with_hint(4 * A * uv, d, hint)
    b1 = reduce_with_hint(d, 2 * uv, hint)
    u2 = u * u
    v2 = v * v
    num, den, g = cancel_common(u2 * u2 + 16 * A * A * (v2 * v2), 2 * uv * d, hint)
    if den < 0:
        num, den = -num, -den
    c1 = Rational._raw(num, den)
    return PythagoreanTriple._trusted(a1, b1, c1, A), uv, g


def _next_difference(uv, d, g, A: int):
    uv2 = uv * uv
    d2 = d * d
    return gmpy2.divexact(64 * A * A * (uv2 * uv2) - d2 * d2, g * g)


def fermat_step(t: PythagoreanTriple) -> PythagoreanTriple:
    """Apply Fermat's map once; the result has the same A and ``a1*b1 == a*b``."""
    d = _leg_difference(t)
    nxt, _, _ = _advance(t.c.numerator, t.c.denominator, d, t.A)
    return nxt


def fermat_step_cform(c0: RationalLike, A: int) -> PythagoreanTriple:
    """The step written through the hypotenuse alone, with the square root taken >= 0.

    Agrees with :func:`fermat_step` up to the signs of the components.
    """
    c0 = to_rational(c0)
    c4 = c0**4
    radicand = c4 - 16 * A * A
    if radicand <= 0:
        raise NonPositiveRadicand(f"c^4 - 16A^2 = {radicand} is not positive")
    s = sqrt_exact(radicand)
    return make_triple(4 * A * c0 / s, s / (2 * c0), (c4 + 16 * A * A) / (2 * c0 * s), A)


def orbit(seed: PythagoreanTriple, n: int, max_steps: int = MAX_STEPS) -> FermatOrbit:
    """The first ``n`` triples of the orbit of ``seed`` (``n == 1`` gives just the seed)."""
    if n < 1:
        raise ValueError(f"orbit length must be positive, got {n}")
    if n - 1 > max_steps:
        raise StepCapExceeded(f"{n - 1} steps requested, cap is {max_steps}")
    steps = [seed]
    vals = [two_adic_valuation(seed.c)]
    if n > 1:
        d = _leg_difference(seed)
        cur = seed
        for i in range(1, n):
            nxt, uv, g = _advance(cur.c.numerator, cur.c.denominator, d, seed.A)
            steps.append(nxt)
            vals.append(two_adic_valuation(nxt.c))
            if i < n - 1:
                d = _next_difference(uv, d, g, seed.A)
            cur = nxt
    return FermatOrbit(seed, tuple(steps), tuple(vals))


def check_valuation_descent(o: FermatOrbit) -> bool:
    vals = o.c_valuations
    return all(later < earlier for earlier, later in zip(vals, vals[1:]))


def check_distinct_hypotenuses(o: FermatOrbit) -> bool:
    return len({abs(t.c) for t in o.steps}) == len(o.steps)


def verify_orbit(o: FermatOrbit) -> dict:
    """Exact check of every orbit invariant, keyed by invariant name."""
    area2 = o.seed.a * o.seed.b
    return {
        "triples_valid": all(t.is_valid() for t in o.steps),
        "area_conserved": all(t.A == o.seed.A and t.a * t.b == area2 for t in o.steps),
        "valuations_match": list(o.c_valuations) == [two_adic_valuation(t.c) for t in o.steps],
        "valuation_descent": check_valuation_descent(o),
        "distinct_hypotenuses": check_distinct_hypotenuses(o),
    }


def doubling_equivalence(t: PythagoreanTriple) -> bool:
    """Whether doubling psi(t) equals psi(fermat_step(t)) reflected, with x = c^2/4."""
    curve = CongruentCurve(abs(t.A))
    p, _ = psi(t)
    doubled = double(curve, p)
    q, _ = psi(fermat_step(t))
    if doubled is INFINITY:
        return False
    return doubled == Point(q.x, -q.y) and doubled.x == t.c * t.c / 4


def hypotenuse_valuation(p: Point, A: int) -> int:
    """2-adic valuation of |c| for the triple ``psi_inv(p, A)``."""
    return two_adic_valuation(hypotenuse(p, A))


def infinite_order_witness(p: CurvePoint, A: int, n: int) -> List[Point]:
    """``[p, 2p, 4p, ..., 2^(n-1) p]`` with a 2-adic certificate that they are distinct."""
    curve = CongruentCurve(A)
    if n < 1:
        raise ValueError(f"witness length must be positive, got {n}")
    if p is INFINITY:
        raise TorsionInput("the point at infinity has finite order")
    if not contains(curve, p):
        raise NotOnCurve(f"{p} is not on {curve}")
    if p.y == 0:
        raise TorsionInput(f"{p} has order 2")
    points = [p]
    for _ in range(n - 1):
        points.append(_double(A, points[-1]))
    vals = [hypotenuse_valuation(q, A) for q in points]
    if any(later >= earlier for earlier, later in zip(vals, vals[1:])):
        raise InvariantViolation(f"valuation certificate failed: {vals}")
    return points


def orbit_to_json(o: FermatOrbit) -> dict:
    return {
        "seed": triple_to_json(o.seed),
        "steps": [triple_to_json(t) for t in o.steps],
        "c_valuations": list(o.c_valuations),
    }
