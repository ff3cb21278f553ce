"""Hypersurface quotient rings A = Q(i)[x1..xn]/(f) with canonical remainders.

Every element is stored as the unique remainder of division by f under the
ring's monomial order, so equality and zero-testing are exact and all the
identity checks reduce to comparing representatives.
"""

from __future__ import annotations

from fractions import Fraction

from .polycore import (
    GaussianRational,
    MonomialOrder,
    Polynomial,
    divide_remainder,
    parse,
)


class QuotientRing:
    """The ring Q(i)[x1..xn]/(f) for a single nonzero, non-constant f."""

    __slots__ = ("names", "modulus", "order", "_hash")

    def __init__(self, modulus: Polynomial, order: MonomialOrder | None = None):
        if modulus.is_zero or modulus.degree() == 0:
            raise ValueError("the modulus must be nonzero and non-constant")
        self.names = modulus.names
        self.modulus = modulus
        self.order = order or MonomialOrder.grevlex(len(self.names))
        self._hash = hash((self.names, self.modulus, self.order))

    @classmethod
    def from_text(cls, text: str, names=("x", "y", "z")) -> "QuotientRing":
        return cls(parse(text, names))

    @property
    def arity(self) -> int:
        return len(self.names)

    def nf(self, p: Polynomial) -> "RingElement":
        """Canonical normal form of p as an element of the quotient."""
        if p.names != self.names:
            raise ValueError(f"variable mismatch: {p.names} vs {self.names}")
        _, remainder = divide_remainder(p, self.modulus, self.order)
        return RingElement(self, remainder, _reduced=True)

    def element(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, str):
            return self.nf(parse(value, self.names))
        if isinstance(value, Polynomial):
            return self.nf(value)
        if isinstance(value, (int, Fraction, GaussianRational)):
            return RingElement(self, Polynomial.constant(self.names, value), _reduced=True)
        raise TypeError(f"cannot coerce {type(value).__name__} into the ring")

    def zero(self) -> "RingElement":
        return RingElement(self, Polynomial.zero(self.names), _reduced=True)

    def one(self) -> "RingElement":
        return RingElement(self, Polynomial.constant(self.names, 1), _reduced=True)

    def variable(self, index: int) -> "RingElement":
        return self.nf(Polynomial.variable(self.names, index))

    def coerce_point(self, point) -> tuple[GaussianRational, ...]:
        values = tuple(
            v if isinstance(v, GaussianRational) else GaussianRational(v) for v in point
        )
        if len(values) != self.arity:
            raise ValueError(f"point length {len(values)} does not match arity {self.arity}")
        return values

    def point_on_surface(self, point) -> bool:
        return not self.modulus.evaluate(self.coerce_point(point))

    def require_point_on_surface(self, point) -> tuple[GaussianRational, ...]:
        values = self.coerce_point(point)
        residual = self.modulus.evaluate(values)
        if residual:
            raise ValueError(f"point is not on the hypersurface: f(point) = {residual}")
        return values

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, QuotientRing):
            return (
                self.names == other.names
                and self.modulus == other.modulus
                and self.order == other.order
            )
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        return f"QuotientRing({self.modulus!s})"


class RingElement:
    """A residue class, stored as its canonical reduced representative."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: Polynomial, *, _reduced: bool = False):
        if rep.names != ring.names:
            raise ValueError(f"variable mismatch: {rep.names} vs {ring.names}")
        if not _reduced:
            _, rep = divide_remainder(rep, ring.modulus, ring.order)
        self.ring = ring
        self.rep = rep

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __bool__(self) -> bool:
        return bool(self.rep)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements belong to different rings")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RingElement(
                self.ring, Polynomial.constant(self.ring.names, other), _reduced=True
            )
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # sums of reduced representatives are reduced
        return RingElement(self.ring, self.rep + other.rep, _reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.ring, self.rep - other.rep, _reduced=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RingElement(self.ring, -self.rep, _reduced=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RingElement(self.ring, self.rep * other, _reduced=True)
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements belong to different rings")
            return self.ring.nf(self.rep * other.rep)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, point) -> GaussianRational:
        """Value at an on-surface point; well defined on residue classes."""
        values = self.ring.require_point_on_surface(point)
        return self.rep.evaluate(values)

    def serialize(self) -> dict:
        return {"element": str(self.rep), "modulus": str(self.ring.modulus)}

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"RingElement({self.rep!s} mod {self.ring.modulus!s})"


def nf(p: Polynomial, ring: QuotientRing) -> RingElement:
    return ring.nf(p)


def is_zero(a: RingElement) -> bool:
    return a.is_zero


def evaluate(a: RingElement, point) -> GaussianRational:
    return a.evaluate(point)
