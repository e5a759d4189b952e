"""Exact rational arithmetic on GMP integers.

Every :class:`Rational` is kept in lowest terms with a positive denominator,
so equality is structural.  Numerators and denominators are ``gmpy2.mpz``;
they interoperate with Python ``int`` transparently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Integral
from typing import Union

import gmpy2
from gmpy2 import mpz

from .errors import (
    NegativeInput,
    NotASquare,
    ParseError,
    UndefinedForZero,
    ZeroDenominator,
)

__all__ = [
    "Rational",
    "DyadicForm",
    "normalize",
    "to_rational",
    "parse_rational",
    "format_rational",
    "dyadic_decompose",
    "two_adic_valuation",
    "isqrt",
    "sqrt_exact",
    "reduce_with_hint",
    "cancel_common",
]

_gcd = gmpy2.gcd
_ZERO = mpz(0)
_ONE = mpz(1)

_RATIONAL_RE = re.compile(r"\s*(-?[0-9]+)(?:/([0-9]+))?\s*\Z")


class Rational:
    """Immutable fraction ``numerator/denominator`` in lowest terms."""

    __slots__ = ("_num", "_den")

    def __new__(cls, numerator=0, denominator=1):
        if isinstance(numerator, Rational) and denominator == 1:
            return numerator
        if isinstance(numerator, str):
            if denominator != 1:
                raise TypeError("string input takes no denominator")
            return parse_rational(numerator)
        return normalize(numerator, denominator)

    @classmethod
    def _raw(cls, num, den) -> Rational:
        # Caller guarantees den > 0 and gcd(|num|, den) == 1.
        self = object.__new__(cls)
        self._num = num
        self._den = den
        return self

    @property
    def numerator(self) -> mpz:
        return self._num

    @property
    def denominator(self) -> mpz:
        return self._den

    def is_integer(self) -> bool:
        return self._den == 1

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        na, da = self._num, self._den
        nb, db = other._num, other._den
        if da == 1 and db == 1:
            return Rational._raw(na + nb, _ONE)
        if db == 1:
            return Rational._raw(na + nb * da, da)
        if da == 1:
            return Rational._raw(na * db + nb, db)
        g = _gcd(da, db)
        if g == 1:
            return Rational._raw(na * db + da * nb, da * db)
        s = da // g
        t = na * (db // g) + nb * s
        g2 = _gcd(t, g)
        if g2 == 1:
            return Rational._raw(t, s * db)
        return Rational._raw(t // g2, s * (db // g2))

    __radd__ = __add__

    def __neg__(self) -> Rational:
        return Rational._raw(-self._num, self._den)

    def __pos__(self) -> Rational:
        return self

    def __abs__(self) -> Rational:
        if self._num >= 0:
            return self
        return Rational._raw(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        na, da = self._num, self._den
        nb, db = other._num, other._den
        if db != 1:
            g1 = _gcd(na, db)
            if g1 > 1:
                na //= g1
                db //= g1
        if da != 1:
            g2 = _gcd(nb, da)
            if g2 > 1:
                nb //= g2
                da //= g2
        return Rational._raw(na * nb, da * db)

    __rmul__ = __mul__

    def reciprocal(self) -> Rational:
        if self._num == 0:
            raise ZeroDenominator("reciprocal of zero")
        if self._num < 0:
            return Rational._raw(-self._den, -self._num)
        return Rational._raw(self._den, self._num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.reciprocal()

    def __pow__(self, exponent):
        if not isinstance(exponent, Integral):
            return NotImplemented
        exponent = int(exponent)
        if exponent >= 0:
            # Powers of a reduced fraction stay reduced.
            return Rational._raw(self._num**exponent, self._den**exponent)
        return self.reciprocal() ** (-exponent)

    # ------------------------------------------------------------ comparison

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self._num == other._num and self._den == other._den
        if isinstance(other, Integral):
            return self._den == 1 and self._num == other
        return NotImplemented

    def __hash__(self):
        if self._den == 1:
            return hash(self._num)
        return hash((self._num, self._den))

    def _cmp_key(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return None
        return self._num * other._den, other._num * self._den

    def __lt__(self, other):
        k = self._cmp_key(other)
        return NotImplemented if k is None else k[0] < k[1]

    def __le__(self, other):
        k = self._cmp_key(other)
        return NotImplemented if k is None else k[0] <= k[1]

    def __gt__(self, other):
        k = self._cmp_key(other)
        return NotImplemented if k is None else k[0] > k[1]

    def __ge__(self, other):
        k = self._cmp_key(other)
        return NotImplemented if k is None else k[0] >= k[1]

    def __bool__(self) -> bool:
        return self._num != 0

    def sign(self) -> int:
        return (self._num > 0) - (self._num < 0)

    def __float__(self) -> float:
        return int(self._num) / int(self._den)

    def __str__(self) -> str:
        return format_rational(self)

    def __repr__(self) -> str:
        return f"Rational('{format_rational(self)}')"

    def __reduce__(self):
        return (Rational, (int(self._num), int(self._den)))


RationalLike = Union[Rational, int, str]


def _coerce(value):
    if isinstance(value, Rational):
        return value
    if isinstance(value, Integral):
        return Rational._raw(mpz(value), _ONE)
    return NotImplemented


def normalize(p, q=1) -> Rational:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if not isinstance(p, Integral) or not isinstance(q, Integral):
        raise TypeError(f"normalize expects integers, got {type(p).__name__}, {type(q).__name__}")
    p, q = mpz(p), mpz(q)
    if q == 0:
        raise ZeroDenominator(f"denominator is zero in {p}/0")
    if q < 0:
        p, q = -p, -q
    if q == 1:
        return Rational._raw(p, q)
    g = _gcd(p, q)
    if g != 1:
        p //= g
        q //= g
    return Rational._raw(p, q)


def to_rational(value: RationalLike) -> Rational:
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Integral):
        return Rational._raw(mpz(value), _ONE)
    raise TypeError(f"cannot convert {type(value).__name__} to Rational")


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or ``"p"`` (optional leading ``-``)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.groups()
    return normalize(int(num), int(den) if den is not None else 1)


def format_rational(r: Rational) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class DyadicForm:
    """``2**k * u / v`` with ``u`` and ``v`` odd and ``v > 0``."""

    k: int
    u: mpz
    v: mpz

    def value(self) -> Rational:
        if self.k >= 0:
            return Rational._raw(self.u << self.k, self.v)
        return Rational._raw(self.u, self.v << -self.k)


def _v2(n) -> int:
    return int(gmpy2.bit_scan1(n))


def dyadic_decompose(r: RationalLike) -> DyadicForm:
    r = to_rational(r)
    if r.numerator == 0:
        raise UndefinedForZero("2-adic valuation of zero is undefined")
    ku = _v2(r.numerator)
    kv = _v2(r.denominator)
    return DyadicForm(ku - kv, r.numerator >> ku, r.denominator >> kv)


def two_adic_valuation(r: RationalLike) -> int:
    r = to_rational(r)
    if r.numerator == 0:
        raise UndefinedForZero("2-adic valuation of zero is undefined")
    return _v2(r.numerator) - _v2(r.denominator)


def isqrt(n) -> mpz:
    """Floor square root by Newton iteration with doubling precision.

    Each pass refines an approximation correct to ``d`` bits into one
    correct to roughly ``2d`` bits; the final correction step makes the
    result exact.
    """
    n = mpz(n)
    if n < 0:
        raise NegativeInput("square root of a negative integer")
    if n == 0:
        return _ZERO
    c = (int(n.bit_length()) - 1) // 2
    a = _ONE
    d = 0
    for s in reversed(range(c.bit_length())):
        e = d
        d = c >> s
        a = (a << (d - e - 1)) + (n >> (2 * c - e - d + 1)) // a
    if a * a > n:
        a -= 1
    return a


def _exact_int_sqrt(n):
    root = isqrt(n)
    if root * root != n:
        return None
    return root


def sqrt_exact(r: RationalLike) -> Rational:
    """Non-negative rational square root, or :class:`NotASquare`."""
    r = to_rational(r)
    if r.numerator < 0:
        raise NegativeInput(f"square root of negative value {r}")
    sn = _exact_int_sqrt(r.numerator)
    sd = _exact_int_sqrt(r.denominator) if sn is not None else None
    if sn is None or sd is None:
        raise NotASquare(f"{r} is not the square of a rational")
    return Rational._raw(sn, sd)


def cancel_common(num, den, hint):
    """Divide out the common factor of ``num`` and ``den``, assuming its primes divide ``hint``.

    Returns ``(num // g, den // g, g)``.  Only gcds against a power of the
    small ``hint`` are taken, so the cost stays linear in the operand size.
    """
    num, den = mpz(num), mpz(den)
    probe = abs(mpz(hint)) ** 8
    total = _ONE
    if probe <= 1:
        return num, den, total
    while True:
        g = _gcd(_gcd(num, probe), den)
        if g == 1:
            return num, den, total
        num = gmpy2.divexact(num, g)
        den = gmpy2.divexact(den, g)
        total *= g


def reduce_with_hint(num, den, hint) -> Rational:
    """Lowest-terms ``num/den`` when every common prime is known to divide ``hint``."""
    num, den = mpz(num), mpz(den)
    if den == 0:
        raise ZeroDenominator("denominator is zero")
    if num == 0:
        return Rational._raw(_ZERO, _ONE)
    if den < 0:
        num, den = -num, -den
    num, den, _ = cancel_common(num, den, hint)
    return Rational._raw(num, den)
