"""Quotient ring normal forms, element arithmetic, point evaluation."""

from __future__ import annotations

from random import Random

import pytest

from hyperconn import GaussianRational, Polynomial, QuotientRing, nf, parse
from helpers import NAMES, random_element, random_polynomial

SPHERE = QuotientRing(parse("x^2+y^2+z^2-1"))


def test_ring_rejects_degenerate_modulus():
    with pytest.raises(ValueError):
        QuotientRing(Polynomial(NAMES))
    with pytest.raises(ValueError):
        QuotientRing(Polynomial(NAMES, {(0, 0, 0): 5}))


def test_ring_equality_is_content_based():
    other = QuotientRing(parse("x^2+y^2+z^2-1"))
    assert other == SPHERE
    assert hash(other) == hash(SPHERE)
    assert QuotientRing(parse("x^3+y^2+z^2-1")) != SPHERE
    # elements of content-equal rings interoperate
    a = SPHERE.element("x")
    b = other.element("y")
    assert str(a * b) == "x*y"


def test_nf_idempotent_and_zero_on_modulus():
    rng = Random(40512)
    f = SPHERE.modulus
    for _ in range(80):
        p = random_polynomial(rng, max_degree=4, max_terms=5)
        reduced = SPHERE.nf(p)
        assert SPHERE.nf(reduced.rep) == reduced
        assert SPHERE.nf(p * f).is_zero
        assert SPHERE.nf(p + f) == reduced


def test_element_coercion_forms():
    assert SPHERE.element("x^2+y^2+z^2") == SPHERE.one()
    assert SPHERE.element(3).rep == Polynomial(NAMES, {(0, 0, 0): 3})
    assert SPHERE.element(GaussianRational(0, 1)) == SPHERE.element("i")
    assert SPHERE.element(SPHERE.variable(0)) == SPHERE.element("x")
    with pytest.raises(ValueError):
        SPHERE.element(parse("x", names=("x",)))


def test_element_arithmetic_respects_reduction():
    rng = Random(90125)
    for _ in range(60):
        a = random_element(rng, SPHERE)
        b = random_element(rng, SPHERE)
        assert (a + b) - b == a
        assert a * b == b * a
        assert (a * b).rep == SPHERE.nf((a.rep * b.rep)).rep
        assert (a * SPHERE.one()) == a
        assert (a * 2 - a - a).is_zero


def test_element_pow():
    x = SPHERE.element("x")
    assert x ** 4 == x * x * x * x
    assert x ** 0 == SPHERE.one()
    assert (SPHERE.element("x^2+y^2+z^2")) ** 5 == SPHERE.one()


def test_nf_module_function():
    value = nf(parse("x^4"), SPHERE)
    assert value == SPHERE.element("x^4")
    assert str(value) == str(SPHERE.element(parse("x^4")))


def test_point_checks():
    assert SPHERE.point_on_surface((1, 0, 0))
    assert not SPHERE.point_on_surface((1, 1, 1))
    with pytest.raises(ValueError):
        SPHERE.require_point_on_surface((1, 1, 1))


def test_point_off_surface_message_carries_residual():
    with pytest.raises(ValueError) as err:
        SPHERE.require_point_on_surface((1, 1, 0))
    assert "1" in str(err.value)


def test_evaluate_requires_on_surface_point():
    a = SPHERE.element("x*y + z")
    value = a.evaluate((0, 1, 0))
    assert value == GaussianRational(0)
    with pytest.raises(ValueError):
        a.evaluate((2, 0, 0))


def test_evaluate_gaussian_point():
    # (3i/4)^2 + (5/4)^2 = -9/16 + 25/16 = 1, an exact Gaussian surface point
    from fractions import Fraction

    point = (GaussianRational(0, Fraction(3, 4)), 0, Fraction(5, 4))
    assert SPHERE.point_on_surface(point)
    a = SPHERE.element("x^2")
    assert a.evaluate(point) == GaussianRational(Fraction(-9, 16))


def test_serialize_round_trip_text():
    a = SPHERE.element("x^3")
    data = a.serialize()
    assert data["element"] == str(a)
    assert data["modulus"] == str(SPHERE.modulus)
    assert SPHERE.element(data["element"]) == a


def test_sums_of_reduced_stay_reduced():
    rng = Random(61409)
    for _ in range(40):
        a = random_element(rng, SPHERE)
        b = random_element(rng, SPHERE)
        total = a + b
        assert SPHERE.nf(total.rep) == total
