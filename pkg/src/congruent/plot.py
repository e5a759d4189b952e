"""Deterministic SVG rendering of C_A and the chord construction of P + Q.

All geometry is evaluated in exact rationals.  Square roots and pixel
transforms go through ``decimal`` at a fixed precision, and every number
is written with 12 significant digits, so equal inputs give equal bytes.
"""

from __future__ import annotations

from decimal import Context, Decimal
from typing import List, Sequence, Tuple

from .curve import INFINITY, CongruentCurve, Point, add, contains, negate
from .errors import NotOnCurve
from .exact import Rational

__all__ = ["SAMPLES_PER_BRANCH", "render_chord_figure"]

SAMPLES_PER_BRANCH = 512
WIDTH = 640
HEIGHT = 480
MARGIN = 40

_CTX = Context(prec=40)
_OUT = Context(prec=12)


def _dec(r: Rational) -> Decimal:
    return _CTX.divide(Decimal(int(r.numerator)), Decimal(int(r.denominator)))


def _fmt(d: Decimal) -> str:
    if d.is_zero():
        return "0"
    return format(_OUT.plus(d).normalize(_OUT), "f")


def _branch(A: int, lo: Rational, hi: Rational) -> List[Tuple[Rational, Decimal]]:
    out = []
    span = hi - lo
    last = SAMPLES_PER_BRANCH - 1
    for i in range(SAMPLES_PER_BRANCH):
        x = lo + span * Rational(i, last)
        radicand = x * x * x - A * A * x
        out.append((x, _CTX.sqrt(_dec(radicand)) if radicand > 0 else Decimal(0)))
    return out


class _Frame:
    def __init__(self, A: int, y_max: Decimal):
        self.x_min = Decimal(-2 * A)
        self.x_span = Decimal(5 * A)
        self.y_max = y_max
        self.inner_w = Decimal(WIDTH - 2 * MARGIN)
        self.inner_h = Decimal(HEIGHT - 2 * MARGIN)

    def px(self, x: Decimal) -> str:
        return _fmt(MARGIN + _CTX.divide(_CTX.multiply(x - self.x_min, self.inner_w), self.x_span))

    def py(self, y: Decimal) -> str:
        frac = _CTX.divide(y + self.y_max, 2 * self.y_max)
        return _fmt(HEIGHT - MARGIN - _CTX.multiply(frac, self.inner_h))


def _construction(curve: CongruentCurve, points: Sequence[Point]):
    """Markers, plus the chord and the vertical reflection line when two points are given."""
    if len(points) != 2:
        labels = ["P"] if len(points) == 1 else [f"P{i + 1}" for i in range(len(points))]
        return list(zip(labels, points)), None, None
    p, q = points
    total = add(curve, p, q)
    markers = [("P", p), ("Q", q)]
    if total is INFINITY:
        return markers, ("vertical", p.x), None
    third = negate(total)
    markers += [("P#Q", third), ("P+Q", total)]
    if p.x != q.x:
        slope = (q.y - p.y) / (q.x - p.x)
    else:
        slope = (3 * p.x * p.x - curve.A * curve.A) / (2 * p.y)
    return markers, ("line", p, slope), third.x


def render_chord_figure(A: int, points: Sequence[Point]) -> str:
    curve = CongruentCurve(A)
    for p in points:
        if p is INFINITY or not contains(curve, p):
            raise NotOnCurve(f"{p} is not on {curve}")
    markers, chord, reflect_x = _construction(curve, points)

    oval = _branch(A, Rational(-A), Rational(0))
    unbounded = _branch(A, Rational(A), Rational(3 * A))
    y_max = max([y for _, y in oval + unbounded] + [abs(_dec(pt.y)) for _, pt in markers])
    y_max = _CTX.multiply(y_max, Decimal("1.1"))
    if y_max == 0:
        y_max = Decimal(1)
    f = _Frame(A, y_max)

    def xy(x: Decimal, y: Decimal) -> str:
        return f"{f.px(x)},{f.py(y)}"

    def branch_path(samples, closed: bool) -> str:
        upper = [xy(_dec(x), y) for x, y in samples]
        lower = [xy(_dec(x), -y) for x, y in reversed(samples)]
        d = "M" + " L".join(upper + lower)
        return d + " Z" if closed else d

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>Congruent number curve y^2 = x^3 - {A * A}x</title>",
        "<defs>",
        f'<clipPath id="plot-area"><rect x="{MARGIN}" y="{MARGIN}" '
        f'width="{WIDTH - 2 * MARGIN}" height="{HEIGHT - 2 * MARGIN}"/></clipPath>',
        "</defs>",
        '<rect width="100%" height="100%" fill="white"/>',
        '<g clip-path="url(#plot-area)">',
        f'<line class="axis" x1="{MARGIN}" y1="{f.py(Decimal(0))}" x2="{WIDTH - MARGIN}" '
        f'y2="{f.py(Decimal(0))}" stroke="black" stroke-width="0.6"/>',
        f'<line class="axis" x1="{f.px(Decimal(0))}" y1="{MARGIN}" x2="{f.px(Decimal(0))}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black" stroke-width="0.6"/>',
        f'<path class="curve" d="{branch_path(oval, True)}" fill="none" stroke="blue" stroke-width="1.2"/>',
        f'<path class="curve" d="{branch_path(unbounded, False)}" fill="none" stroke="blue" stroke-width="1.2"/>',
    ]

    if chord is not None and chord[0] == "line":
        _, p, slope = chord
        ends = []
        for x in (Rational(-2 * A), Rational(3 * A)):
            ends.append((_dec(x), _dec(p.y + slope * (x - p.x))))
        lines.append(
            f'<line class="chord" x1="{f.px(ends[0][0])}" y1="{f.py(ends[0][1])}" '
            f'x2="{f.px(ends[1][0])}" y2="{f.py(ends[1][1])}" stroke="black" stroke-width="0.6"/>'
        )
    vertical_x = reflect_x if reflect_x is not None else (chord[1] if chord is not None else None)
    if vertical_x is not None:
        vx = f.px(_dec(vertical_x))
        lines.append(
            f'<line class="reflection" x1="{vx}" y1="{MARGIN}" x2="{vx}" y2="{HEIGHT - MARGIN}" '
            'stroke="black" stroke-width="0.6" stroke-dasharray="4 4"/>'
        )
    lines.append("</g>")

    for label, pt in markers:
        cx, cy = f.px(_dec(pt.x)), f.py(_dec(pt.y))
        lines.append(
            f'<g class="marker" data-label="{_escape(label)}" data-x="{pt.x}" data-y="{pt.y}">'
            f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="black"/>'
            f'<text x="{cx}" y="{cy}" dx="6" dy="-6" font-family="serif" font-size="13">{_escape(label)}</text>'
            "</g>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
