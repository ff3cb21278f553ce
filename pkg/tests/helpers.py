"""Shared random generators for the test suite.

Every test owns its seed; these helpers only consume the Random instance
they are handed, so failures reproduce exactly.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from hyperconn import Derivation, GaussianRational, MatrixA, Polynomial, QuotientRing

NAMES = ("x", "y", "z")


def random_fraction(rng: Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_gaussian(rng: Random, span: int = 6) -> GaussianRational:
    if rng.random() < 0.5:
        return GaussianRational(random_fraction(rng, span))
    return GaussianRational(random_fraction(rng, span), random_fraction(rng, span))


def nonzero_gaussian(rng: Random, span: int = 6) -> GaussianRational:
    while True:
        value = random_gaussian(rng, span)
        if not value.is_zero:
            return value


def random_polynomial(
    rng: Random, names=NAMES, max_degree: int = 3, max_terms: int = 4
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in names)
        terms[exps] = random_gaussian(rng)
    return Polynomial(names, terms)


def nonzero_polynomial(rng: Random, names=NAMES, max_degree: int = 3) -> Polynomial:
    while True:
        p = random_polynomial(rng, names, max_degree)
        if not p.is_zero:
            return p


def random_element(rng: Random, ring: QuotientRing, max_degree: int = 3, max_terms: int = 4):
    return ring.element(random_polynomial(rng, ring.names, max_degree, max_terms))


def random_matrix(
    rng: Random, ring: QuotientRing, n: int, max_degree: int = 2, max_terms: int = 2
) -> MatrixA:
    rows = [
        [random_polynomial(rng, ring.names, max_degree, max_terms) for _ in range(n)]
        for _ in range(n)
    ]
    return MatrixA.from_rows(ring, rows)


def random_tangent(
    rng: Random, ring: QuotientRing, generators, max_degree: int = 2, max_terms: int = 2
) -> Derivation:
    # A-linear combinations of tangent derivations stay tangent
    total = generators[0] * random_element(rng, ring, max_degree, max_terms)
    for d in generators[1:]:
        total = total + d * random_element(rng, ring, max_degree, max_terms)
    return total
