"""Congruent number curves, rational Pythagorean triples, and Fermat's doubling step."""

from .curve import INFINITY, CongruentCurve, Point, add, contains, double, negate, scalar_mul, two_torsion
from .errors import CongruentError
from .exact import DyadicForm, Rational, dyadic_decompose, normalize, sqrt_exact, two_adic_valuation
from .fermat import (
    FermatOrbit,
    check_valuation_descent,
    doubling_equivalence,
    fermat_step,
    fermat_step_cform,
    infinite_order_witness,
    orbit,
)
from .oracle import congruent_numbers_below, euclid_triple, is_congruent_up_to, random_triple
from .triple import PythagoreanTriple, area, make_triple, psi, psi_inv

__version__ = "0.1.0"
