"""Shared random generators for valid inputs."""

from __future__ import annotations

import random

from torusfix.endomorphisms import AnalyticRep, _analytic_char_poly
from torusfix.errors import NonIntegralError
from torusfix.polynomials import IntPolynomial
from torusfix.unitcircle import CharPolyQuartic

NEGATIVE_SQUARE_FREE = (-1, -2, -3, -5, -6, -7, -10, -11)


def random_analytic_rep(rng: random.Random, span: int = 3) -> AnalyticRep:
    """A random valid endomorphism of a torus with multiplication by an
    imaginary quadratic order (or of E x E when m = 1)."""
    m = rng.choice(NEGATIVE_SQUARE_FREE + (1,))
    mat = [
        [
            (rng.randint(-span, span), rng.randint(-2, 2) if m != 1 else 0)
            for _ in range(2)
        ]
        for _ in range(2)
    ]
    return AnalyticRep(m, mat)


def random_valid_quartic(rng: random.Random, span: int = 3) -> CharPolyQuartic:
    """A quartic realizable as the characteristic polynomial of the action
    on the lattice: the product of an analytic quadratic and its conjugate."""
    while True:
        try:
            p = _analytic_char_poly(random_analytic_rep(rng, span))
        except NonIntegralError:  # pragma: no cover - integer entries only
            continue
        return CharPolyQuartic(p)


def random_int_matrix(rng: random.Random, span: int = 3) -> list[list[int]]:
    return [[rng.randint(-span, span) for _ in range(4)] for _ in range(4)]
