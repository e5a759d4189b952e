"""Brute-force ground truth from the Euclid parametrization of primitive triples.

The search is a semi-decision procedure: a congruent verdict always carries
a checked witness, while a negative outcome is only ever "unknown up to the
bound".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Iterator, List, Optional, Tuple

from .errors import InvariantViolation, NoTripleFound
from .exact import Rational, isqrt, sqrt_exact
from .triple import PythagoreanTriple, make_triple, triple_to_json

__all__ = [
    "DEFAULT_M_BOUND",
    "PrimitiveParam",
    "CongruenceVerdict",
    "primitive_params",
    "euclid_triple",
    "is_congruent_up_to",
    "congruent_numbers_below",
    "random_triple",
    "squarefree_part",
]

DEFAULT_M_BOUND = 300


@dataclass(frozen=True, order=True)
class PrimitiveParam:
    m: int
    n: int

    def __post_init__(self):
        m, n = self.m, self.n
        if not (m > n >= 1):
            raise InvariantViolation(f"need m > n >= 1, got m={m}, n={n}")
        if gcd(m, n) != 1:
            raise InvariantViolation(f"m={m} and n={n} are not coprime")
        if (m - n) % 2 == 0:
            raise InvariantViolation(f"m={m} and n={n} have the same parity")

    @property
    def area(self) -> int:
        """Area of the primitive triangle, ``m n (m^2 - n^2)``."""
        return self.m * self.n * (self.m * self.m - self.n * self.n)


@dataclass(frozen=True)
class CongruenceVerdict:
    A: int
    status: str
    witness: Optional[PythagoreanTriple] = None
    param: Optional[PrimitiveParam] = None
    m_bound: Optional[int] = None

    @property
    def is_congruent(self) -> bool:
        return self.status == "congruent"

    def to_json(self) -> dict:
        if self.is_congruent:
            return {
                "A": str(self.A),
                "status": "congruent",
                "witness": triple_to_json(self.witness),
                "m": str(self.param.m),
                "n": str(self.param.n),
            }
        return {"A": str(self.A), "status": "unknown", "m_bound": str(self.m_bound)}


def primitive_params(m_bound: int) -> Iterator[PrimitiveParam]:
    """All valid (m, n) with m <= m_bound, in lexicographic order."""
    for m in range(2, m_bound + 1):
        for n in range(1 + (m % 2), m, 2):
            if gcd(m, n) == 1:
                yield PrimitiveParam(m, n)


def euclid_triple(p: PrimitiveParam) -> Tuple[int, int, int]:
    m, n = p.m, p.n
    return 2 * m * n, m * m - n * n, m * m + n * n


def _witness(A: int, p: PrimitiveParam) -> Optional[PythagoreanTriple]:
    base = p.area
    prod = A * base
    root = isqrt(prod)
    if root * root != prod:
        return None
    s = sqrt_exact(Rational(A, base))
    X, Y, Z = euclid_triple(p)
    return make_triple(s * X, s * Y, s * Z, A)


def is_congruent_up_to(A: int, m_bound: int = DEFAULT_M_BOUND) -> CongruenceVerdict:
    """Search primitive triangles with m <= m_bound for one scaling to area A.

    The first hit in lexicographic (m, n) order is returned, so the witness
    does not depend on search order.
    """
    if A < 1:
        raise ValueError(f"A must be a positive integer, got {A}")
    for p in primitive_params(m_bound):
        w = _witness(A, p)
        if w is not None:
            return CongruenceVerdict(A, "congruent", w, p, m_bound)
    return CongruenceVerdict(A, "unknown", m_bound=m_bound)


def congruent_numbers_below(limit: int, m_bound: int = DEFAULT_M_BOUND) -> List[int]:
    """Every A <= limit that the bounded search certifies, ascending."""
    params = list(primitive_params(m_bound))
    found = []
    for A in range(1, limit + 1):
        if any(_witness(A, p) is not None for p in params):
            found.append(A)
    return found


def _factor_small(n: int, into: dict) -> None:
    d = 2
    while d * d <= n:
        while n % d == 0:
            into[d] = into.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        into[n] = into.get(n, 0) + 1


def squarefree_part(p: PrimitiveParam) -> int:
    """Squarefree kernel of the primitive area, factored through m, n, m-n, m+n."""
    exps: dict = {}
    for f in (p.m, p.n, p.m - p.n, p.m + p.n):
        _factor_small(f, exps)
    out = 1
    for prime, e in exps.items():
        if e % 2:
            out *= prime
    return out


def random_triple(
    A_range: Tuple[int, int] = (1, 1000),
    m_bound: int = 40,
    seed: int = 0,
    attempts: int = 200,
) -> PythagoreanTriple:
    """Deterministic pseudo-random triple with A in the inclusive ``A_range``.

    Legs may be swapped, jointly negated, and the hypotenuse negated, so
    all sign patterns compatible with a positive A occur.
    """
    lo, hi = A_range
    rng = random.Random(seed)
    params = list(primitive_params(m_bound))
    if not params:
        raise NoTripleFound(f"no primitive triples with m <= {m_bound}")
    for _ in range(attempts):
        p = rng.choice(params)
        kernel = squarefree_part(p)
        ks = [k for k in range(1, isqrt(hi // kernel) + 1) if kernel * k * k >= lo]
        if not ks:
            continue
        k = rng.choice(ks)
        A = kernel * k * k
        s = sqrt_exact(Rational(A, p.area))
        X, Y, Z = euclid_triple(p)
        a, b, c = s * X, s * Y, s * Z
        if rng.random() < 0.5:
            a, b = b, a
        if rng.random() < 0.5:
            a, b = -a, -b
        if rng.random() < 0.5:
            c = -c
        return make_triple(a, b, c, A)
    raise NoTripleFound(f"no triple with A in [{lo}, {hi}] after {attempts} draws")
