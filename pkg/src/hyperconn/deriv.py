"""Derivations of a hypersurface quotient ring.

A derivation is determined by the images of the generators. It descends to
the quotient exactly when it sends the modulus to zero in the quotient
(tangency), so that condition is enforced at construction. Application uses
the chain rule on reduced representatives and reduces once at the end.
"""

from __future__ import annotations

from fractions import Fraction

from .polycore import GaussianRational, Polynomial
from .matring import MatrixA
from .quotient import QuotientRing, RingElement


class TangencyError(ValueError):
    """The proposed generator images do not send the modulus to zero."""


class Derivation:
    """A derivation of the quotient ring, stored by generator images."""

    __slots__ = ("ring", "images")

    def __init__(self, ring: QuotientRing, images, *, _checked: bool = False):
        images = tuple(ring.element(v) for v in images)
        if len(images) != ring.arity:
            raise ValueError(f"expected {ring.arity} generator images, got {len(images)}")
        self.ring = ring
        self.images = images
        if not _checked:
            defect = self.modulus_image()
            if not defect.is_zero:
                raise TangencyError(
                    f"images do not define a derivation of the quotient: "
                    f"delta(f) = {defect} != 0"
                )

    def modulus_image(self) -> RingElement:
        """delta(f) recomputed from scratch; zero for every valid derivation."""
        return self._apply_rep(self.ring.modulus)

    def _apply_rep(self, rep: Polynomial) -> RingElement:
        ring = self.ring
        acc = Polynomial.zero(ring.names)
        for index, image in enumerate(self.images):
            partial = rep.partial_derivative(index)
            if partial.is_zero or image.rep.is_zero:
                continue
            acc = acc + partial * image.rep
        return ring.nf(acc)

    def apply(self, a: RingElement) -> RingElement:
        """Chain rule on the reduced representative, reduced once."""
        if a.ring != self.ring:
            raise ValueError("element belongs to a different ring")
        return self._apply_rep(a.rep)

    def apply_to_matrix(self, m: MatrixA) -> MatrixA:
        if m.ring != self.ring:
            raise ValueError("matrix belongs to a different ring")
        return MatrixA(
            self.ring, m.rows, m.cols, [self._apply_rep(e.rep) for e in m.entries]
        )

    def apply_to_vector(self, vector) -> tuple[RingElement, ...]:
        vec = [self.ring.element(v) for v in vector]
        return tuple(self._apply_rep(v.rep) for v in vec)

    @property
    def is_zero(self) -> bool:
        return all(image.is_zero for image in self.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash((self.ring, self.images))

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("derivations belong to different rings")
        images = tuple(a + b for a, b in zip(self.images, other.images))
        return Derivation(self.ring, images, _checked=True)

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Derivation(self.ring, tuple(-a for a in self.images), _checked=True)

    def __mul__(self, scalar):
        # an A-multiple of a tangent derivation is tangent
        if isinstance(scalar, (int, Fraction, GaussianRational, RingElement)):
            a = self.ring.element(scalar)
            return Derivation(
                self.ring, tuple(a * img for img in self.images), _checked=True
            )
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        pieces = []
        for name, image in zip(self.ring.names, self.images):
            if image.is_zero:
                continue
            text = str(image)
            if "+" in text or "-" in text:
                text = f"({text})"
            pieces.append(f"{text}*d/d{name}")
        if not pieces:
            return "0"
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"Derivation({self!s})"


def make_derivation(ring: QuotientRing, images) -> Derivation:
    """Build a derivation from generator images, enforcing tangency."""
    return Derivation(ring, images)


def apply(delta: Derivation, a: RingElement) -> RingElement:
    return delta.apply(a)


def apply_to_matrix(delta: Derivation, m: MatrixA) -> MatrixA:
    return delta.apply_to_matrix(m)


def bracket(delta: Derivation, eta: Derivation) -> Derivation:
    """The Lie bracket, with images delta(eta(x_i)) - eta(delta(x_i))."""
    if delta.ring != eta.ring:
        raise ValueError("derivations belong to different rings")
    images = tuple(
        delta.apply(eta.images[i]) - eta.apply(delta.images[i])
        for i in range(delta.ring.arity)
    )
    # the bracket of tangent derivations is tangent; verify anyway since it is cheap
    return Derivation(delta.ring, images)
