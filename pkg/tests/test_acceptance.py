"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import functools
import inspect
import random
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_RESULTS
from congruent.cli import main
from congruent.curve import INFINITY, CongruentCurve, Point, add, contains, double, negate, scalar_mul, two_torsion
from congruent.errors import ZeroY
from congruent.exact import Rational, two_adic_valuation
from congruent.fermat import (
    check_distinct_hypotenuses,
    check_valuation_descent,
    doubling_equivalence,
    fermat_step,
    fermat_step_cform,
    infinite_order_witness,
    orbit,
)
from congruent.oracle import congruent_numbers_below, is_congruent_up_to
from congruent.triple import area, hypotenuse, make_triple, psi, psi_inv
from oracles import fermat_literal, frac

R = Rational
GOLDEN = Path(__file__).parent / "golden"
KNOWN_CONGRUENT = {5, 6, 7, 13, 14, 15, 20, 21, 22, 23, 24, 28, 29, 30, 31, 34, 37}
SEVEN = (R(24, 5), R(35, 12), R(337, 60), 7)


def criterion(number, description):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            detail = {}
            try:
                fn(*args, detail=detail, **kwargs)
            except BaseException:
                ACCEPTANCE_RESULTS[number] = (description, False, detail.get("info", ""))
                raise
            ACCEPTANCE_RESULTS[number] = (description, True, detail.get("info", ""))

        sig = inspect.signature(fn)
        run.__signature__ = sig.replace(parameters=[p for p in sig.parameters.values() if p.name != "detail"])
        return run

    return wrap


def best_time(fn, repeat=20):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@criterion(1, "A=7 witness (24/5, 35/12, 337/60) validates with area 7 in < 1 ms")
def test_c01_area_seven_witness(detail):
    def validate():
        t = make_triple(*SEVEN)
        assert t.a**2 + t.b**2 == t.c**2
        assert area(t) == 7

    validate()
    elapsed = best_time(validate)
    detail["info"] = f"{elapsed * 1e3:.3f} ms"
    assert R(24, 5) ** 2 + R(35, 12) ** 2 == R(337, 60) ** 2
    assert elapsed < 1e-3


@criterion(2, "psi_inv o psi and psi o psi_inv are identities on 1000 oracle triples")
def test_c02_bijection(oracle_triples, detail):
    failures = 0
    for t in oracle_triples:
        p, A = psi(t)
        back = psi_inv(p, A)
        if back != t or psi(back) != (p, A):
            failures += 1
    detail["info"] = f"{len(oracle_triples)} triples, {failures} failures"
    assert len(oracle_triples) == 1000 and failures == 0


@criterion(3, "fermat_step(3,4,5,6) = (-120/7, -7/10, -1201/70, 6); c-form |.| agrees")
def test_c03_fermat_ground_truth(detail):
    # independent substitution into the literal formula first
    expected = fermat_literal(frac(R(3)), frac(R(4)), frac(R(5)))
    assert expected == (frac(R(-120, 7)), frac(R(-7, 10)), frac(R(-1201, 70)))

    t1 = fermat_step(make_triple(3, 4, 5, 6))
    assert (t1.a, t1.b, t1.c, t1.A) == (R(-120, 7), R(-7, 10), R(-1201, 70), 6)
    assert t1.a * t1.b == 12 == 3 * 4
    c = fermat_step_cform(5, 6)
    assert (abs(c.a), abs(c.b), abs(c.c)) == (R(120, 7), R(7, 10), R(1201, 70))


@criterion(4, "doubling equals the reflected Fermat step: two seeds and 1000 random triples")
def test_c04_doubling_equivalence(oracle_triples, detail):
    c6 = CongruentCurve(6)
    assert double(c6, Point(18, 72)) == Point(R(25, 4), R(35, 8))
    q, _ = psi(fermat_step(make_triple(3, 4, 5, 6)))
    assert q == Point(R(25, 4), R(-35, 8))
    assert doubling_equivalence(make_triple(3, 4, 5, 6))
    assert doubling_equivalence(make_triple(*SEVEN))
    failures = sum(not doubling_equivalence(t) for t in oracle_triples)
    detail["info"] = f"{failures} failures in {len(oracle_triples)}"
    assert failures == 0


@criterion(5, "orbits of length 12: strictly falling v2(|c|), 12 distinct |c|, < 5 s")
def test_c05_valuation_descent(detail):
    seeds = [make_triple(3, 4, 5, 6), make_triple(*SEVEN)]
    start = time.perf_counter()
    results = []
    for seed in seeds:
        o = orbit(seed, 12)
        results.append((o, check_valuation_descent(o), check_distinct_hypotenuses(o)))
    elapsed = time.perf_counter() - start
    first = results[0][0]
    digits = len(str(first.steps[-1].c.numerator))
    detail["info"] = f"{elapsed:.2f} s, last |c| numerator has {digits} digits"
    for o, descent, distinct in results:
        assert len(o.steps) == 12 and descent and distinct
    assert first.c_valuations[:2] == (0, -1)
    assert all(two_adic_valuation(t.c) == v for t, v in zip(first.steps[:6], first.c_valuations))
    assert elapsed < 5.0


@criterion(6, "10 doublings of (18,72) on C_6 and of the A=7 point: distinct, non-torsion, x = c^2/4")
def test_c06_infinite_order(detail):
    cases = [(Point(18, 72), 6), (psi(make_triple(*SEVEN))[0], 7)]
    for p, A in cases:
        curve = CongruentCurve(A)
        pts = infinite_order_witness(p, A, 11)
        torsion = two_torsion(curve)
        assert len(pts) == 11 and len(set(pts)) == 11
        assert all(q is not INFINITY and q not in torsion for q in pts)
        for before, after in zip(pts, pts[1:]):
            c = hypotenuse(before, A)
            assert after.x == c * c / 4
    detail["info"] = "A=6 and A=7"


def _random_points(oracle_points, rng, count):
    """(curve, p, q): q is a small multiple of p shifted by a random torsion point."""
    out = []
    while len(out) < count:
        p, A = oracle_points[rng.randrange(len(oracle_points))]
        curve = CongruentCurve(A)
        shift = rng.choice([INFINITY, *sorted(two_torsion(curve), key=lambda t: t.x)])
        q = add(curve, scalar_mul(curve, rng.randrange(1, 4), p), shift)
        out.append((curve, p, q))
    return out


@criterion(7, "group axioms on 1000 random points, associativity on 200 triples with 2-torsion")
def test_c07_group_axioms(oracle_points, detail):
    rng = random.Random(20261016)
    failures = 0
    for curve, p, q in _random_points(oracle_points, rng, 1000):
        s = add(curve, p, q)
        ok = (
            contains(curve, s)
            and s == add(curve, q, p)
            and add(curve, p, INFINITY) == p
            and add(curve, p, negate(p)) is INFINITY
        )
        failures += not ok
    assoc_failures = 0
    for curve, p, q in _random_points(oracle_points, rng, 200):
        torsion = sorted(two_torsion(curve), key=lambda t: t.x)
        r = rng.choice([*torsion, INFINITY, p, negate(q), double(curve, p)])
        assoc_failures += add(curve, add(curve, p, q), r) != add(curve, p, add(curve, q, r))
    for A in (1, 5, 6, 7):
        curve = CongruentCurve(A)
        torsion = list(two_torsion(curve))
        for x in torsion:
            for y in torsion:
                for z in torsion:
                    assoc_failures += add(curve, add(curve, x, y), z) != add(curve, x, add(curve, y, z))
    detail["info"] = f"axiom failures {failures}, associativity failures {assoc_failures}"
    assert failures == 0 and assoc_failures == 0


@criterion(8, "congruent_numbers_below(37, 50) within the known list, required subset found, < 2 s")
def test_c08_oracle_vs_known_list(detail):
    start = time.perf_counter()
    found = congruent_numbers_below(37, 50)
    elapsed = time.perf_counter() - start
    detail["info"] = f"{elapsed:.2f} s, found {found}"
    assert set(found) <= KNOWN_CONGRUENT
    assert {5, 6, 7, 14, 15, 20, 21, 24, 28, 30, 34} <= set(found)
    for A in found:
        w = is_congruent_up_to(A, 50).witness
        assert make_triple(w.a, w.b, w.c, A) == w and area(w) == A
    assert elapsed < 2.0


@criterion(9, "(0,0), (A,0), (-A,0) double to O and have no triple, A in {1,5,6,7}")
def test_c09_torsion(detail):
    for A in (1, 5, 6, 7):
        curve = CongruentCurve(A)
        for p in (Point(0, 0), Point(A, 0), Point(-A, 0)):
            assert contains(curve, p)
            assert double(curve, p) is INFINITY
            with pytest.raises(ZeroY):
                psi_inv(p, A)


@criterion(10, "CLI golden files for map / fermat / check; plot byte-identical across runs")
def test_c10_cli_contract(capsys, tmp_path, detail):
    cases = [
        (["map", "3", "4", "5", "6"], "map_3_4_5_6.json"),
        (["fermat", "3", "4", "5", "6", "--steps", "2"], "fermat_3_4_5_6_steps2.json"),
        (["check", "7"], "check_7.json"),
    ]
    for argv, golden in cases:
        assert main(argv) == 0
        assert capsys.readouterr().out.encode() == (GOLDEN / golden).read_bytes()
    outs = [tmp_path / "one.svg", tmp_path / "two.svg"]
    for out in outs:
        assert main(["plot", "5", "--points", "-4,6", "1681/144,-62279/1728", "--out", str(out)]) == 0
    capsys.readouterr()
    assert outs[0].read_bytes() == outs[1].read_bytes()
