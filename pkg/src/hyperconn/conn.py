"""Connections and curvature on idempotent-presented projective modules.

A projective module is presented as the image of an idempotent matrix Phi
acting on a free module. The connection operator for a tangent derivation
delta sends v to D_delta(v) + delta(Phi)*v, its curvature for a pair is the
commutator [delta(Phi), eta(Phi)], and traces over the module and its
complement are computed by conjugation with Phi and Psi = I - Phi. All
comparisons are exact zero tests in the quotient ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matring import MatrixA, commutator
from .deriv import Derivation, bracket
from .quotient import QuotientRing, RingElement


class PresentationError(ValueError):
    """The proposed data does not present a projective module."""


class ProjectivePresentation:
    """An idempotent presentation: the module is the image of Phi."""

    __slots__ = ("ring", "n", "phi", "psi", "kernel_generator", "convention")

    def __init__(self, ring, n, phi, psi, kernel_generator, convention):
        self.ring = ring
        self.n = n
        self.phi = phi
        self.psi = psi
        self.kernel_generator = kernel_generator
        self.convention = convention

    def __repr__(self) -> str:
        return f"ProjectivePresentation(n={self.n} over {self.ring!r})"


def make_presentation(
    ring: QuotientRing, phi: MatrixA, kernel_generator=None
) -> ProjectivePresentation:
    """Validate an idempotent and package it with its complement.

    The optional kernel generator is a nonzero vector that Phi must
    annihilate; it witnesses membership in the kernel summand.
    """
    if phi.ring != ring:
        raise ValueError("idempotent belongs to a different ring")
    if not phi.is_square:
        raise PresentationError("the idempotent must be square")
    defect = phi * phi - phi
    if not defect.is_zero:
        raise PresentationError(f"idempotency failure: Phi^2 - Phi = {defect}")
    n = phi.rows
    psi = MatrixA.identity(ring, n) - phi
    generator = None
    if kernel_generator is not None:
        generator = tuple(ring.element(v) for v in kernel_generator)
        if len(generator) != n:
            raise PresentationError(
                f"kernel generator length {len(generator)} does not match rank {n}"
            )
        if all(v.is_zero for v in generator):
            raise PresentationError("kernel generator must be nonzero")
        image = phi.mul_vector(generator)
        if any(not v.is_zero for v in image):
            witness = "(" + ", ".join(str(v) for v in image) + ")"
            raise PresentationError(f"kernel generator not annihilated: Phi*k = {witness}")
    return ProjectivePresentation(ring, n, phi, psi, generator, "module-is-image-of-phi")


def _coerce_vector(p: ProjectivePresentation, vector) -> tuple[RingElement, ...]:
    vec = tuple(p.ring.element(v) for v in vector)
    if len(vec) != p.n:
        raise ValueError(f"vector length {len(vec)} does not match rank {p.n}")
    return vec


def _connection_operator(p: ProjectivePresentation, delta: Derivation):
    """The first-order operator v -> D_delta(v) + delta(Phi)*v."""
    if delta.ring != p.ring:
        raise ValueError("derivation belongs to a different ring")
    d_phi = delta.apply_to_matrix(p.phi)

    def operator(vec):
        component = delta.apply_to_vector(vec)
        linear = d_phi.mul_vector(vec)
        return tuple(a + b for a, b in zip(component, linear))

    return operator


def connection_apply(p: ProjectivePresentation, delta: Derivation, vector):
    """Apply the connection operator for delta to a coordinate vector."""
    vec = _coerce_vector(p, vector)
    return _connection_operator(p, delta)(vec)


def curvature_matrix(p: ProjectivePresentation, delta: Derivation, eta: Derivation) -> MatrixA:
    """The curvature commutator [delta(Phi), eta(Phi)].

    When the presentation carries a kernel generator k, the result is
    checked to annihilate k; for tangent derivations this always holds.
    """
    if delta.ring != p.ring or eta.ring != p.ring:
        raise ValueError("derivation belongs to a different ring")
    c = commutator(delta.apply_to_matrix(p.phi), eta.apply_to_matrix(p.phi))
    if p.kernel_generator is not None:
        image = c.mul_vector(p.kernel_generator)
        if any(not v.is_zero for v in image):
            witness = "(" + ", ".join(str(v) for v in image) + ")"
            raise PresentationError(
                f"curvature does not annihilate the kernel generator: C*k = {witness}"
            )
    return c


def _require_endomorphism(p: ProjectivePresentation, c: MatrixA):
    if c.ring != p.ring:
        raise ValueError("matrix belongs to a different ring")
    if c.rows != p.n or c.cols != p.n:
        raise ValueError(f"expected a {p.n}x{p.n} matrix, got {c.rows}x{c.cols}")


def trace_over_image(p: ProjectivePresentation, c: MatrixA) -> RingElement:
    """Trace of the endomorphism induced on the module: tr(Phi*C*Phi)."""
    _require_endomorphism(p, c)
    return (p.phi * c * p.phi).trace()


def trace_over_kernel(p: ProjectivePresentation, c: MatrixA) -> RingElement:
    """Trace of the endomorphism induced on the complement: tr(Psi*C*Psi)."""
    _require_endomorphism(p, c)
    return (p.psi * c * p.psi).trace()


def is_flat_pair(p: ProjectivePresentation, delta: Derivation, eta: Derivation) -> bool:
    """True when the induced curvature endomorphism Phi*C*Phi vanishes."""
    c = curvature_matrix(p, delta, eta)
    return (p.phi * c * p.phi).is_zero


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature data for one derivation pair."""

    pair: tuple[str, str]
    commutator: MatrixA
    trace_image: RingElement
    trace_kernel: RingElement
    induced_nonzero: bool

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "commutator": self.commutator.to_json(),
            "trace_image": str(self.trace_image),
            "trace_kernel": str(self.trace_kernel),
            "flat": not self.induced_nonzero,
        }


def curvature_report(
    p: ProjectivePresentation,
    delta: Derivation,
    eta: Derivation,
    label_delta: str,
    label_eta: str,
) -> CurvatureReport:
    c = curvature_matrix(p, delta, eta)
    trace_image = trace_over_image(p, c)
    trace_kernel = trace_over_kernel(p, c)
    total = c.trace()
    if trace_image + trace_kernel != total or not total.is_zero:
        raise PresentationError("trace split failed to sum to the (zero) commutator trace")
    induced_nonzero = not (p.phi * c * p.phi).is_zero
    return CurvatureReport((label_delta, label_eta), c, trace_image, trace_kernel, induced_nonzero)


def operator_commutator_matrix(
    p: ProjectivePresentation, delta: Derivation, potential: MatrixA
) -> MatrixA:
    """Matrix of [A_delta, X] on the standard basis, X a matrix potential.

    Column j is A_delta(X e_j) - X A_delta(e_j); since X acts A-linearly
    this operator commutator is again A-linear.
    """
    _require_endomorphism(p, potential)
    op = _connection_operator(p, delta)
    ring = p.ring
    zero, one = ring.zero(), ring.one()
    columns = []
    for j in range(p.n):
        basis = tuple(one if i == j else zero for i in range(p.n))
        left = op(potential.column(j))
        right = potential.mul_vector(op(basis))
        columns.append([a - b for a, b in zip(left, right)])
    return MatrixA.from_columns(ring, columns)


def _preserves_module(p: ProjectivePresentation, x: MatrixA) -> bool:
    left = p.phi * x
    right = x * p.phi
    return left == right and p.phi * right == right


def modified_curvature(
    p: ProjectivePresentation,
    delta: Derivation,
    eta: Derivation,
    bracket_delta_eta: Derivation,
    phi_delta: MatrixA,
    phi_eta: MatrixA,
    phi_bracket: MatrixA,
) -> MatrixA:
    """Curvature of the shifted connection A_delta + phi_delta, two ways.

    Route one applies the shifted operators directly to the standard basis:
    column j of [A'_delta, A'_eta] - A'_[delta,eta]. Route two assembles
    the same operator from parts: the unshifted curvature, the potential
    term [phi_delta, phi_eta] - phi_bracket, and the two operator
    commutators [A_delta, phi_eta] - [A_eta, phi_delta]. The two routes are
    verified to agree on the induced endomorphisms Phi*(.)*Phi, and the
    directly computed matrix is returned.
    """
    for x in (phi_delta, phi_eta, phi_bracket):
        _require_endomorphism(p, x)
        if not _preserves_module(p, x):
            raise PresentationError(
                "potential does not preserve the module: need Phi*X*Phi = X*Phi = Phi*X"
            )
    if bracket(delta, eta) != bracket_delta_eta:
        raise ValueError("bracket mismatch: the supplied derivation is not [delta, eta]")

    ring = p.ring
    op_delta = _connection_operator(p, delta)
    op_eta = _connection_operator(p, eta)
    op_bracket = _connection_operator(p, bracket_delta_eta)

    def shifted(op, potential):
        def shifted_op(vec):
            base = op(vec)
            extra = potential.mul_vector(vec)
            return tuple(a + b for a, b in zip(base, extra))

        return shifted_op

    sop_delta = shifted(op_delta, phi_delta)
    sop_eta = shifted(op_eta, phi_eta)
    sop_bracket = shifted(op_bracket, phi_bracket)

    zero, one = ring.zero(), ring.one()
    columns = []
    for j in range(p.n):
        basis = tuple(one if i == j else zero for i in range(p.n))
        col = sop_delta(sop_eta(basis))
        col = tuple(a - b for a, b in zip(col, sop_eta(sop_delta(basis))))
        col = tuple(a - b for a, b in zip(col, sop_bracket(basis)))
        columns.append(list(col))
    direct = MatrixA.from_columns(ring, columns)

    assembled = (
        curvature_matrix(p, delta, eta)
        + (commutator(phi_delta, phi_eta) - phi_bracket)
        + operator_commutator_matrix(p, delta, phi_eta)
        - operator_commutator_matrix(p, eta, phi_delta)
    )
    gap = p.phi * (direct - assembled) * p.phi
    if not gap.is_zero:
        raise PresentationError(
            f"modified curvature identity failed on the induced endomorphism: {gap}"
        )
    return direct


@dataclass(frozen=True)
class DeviationReport:
    """Ambient rank, module rank at a point, and their difference."""

    ambient: int
    rank: int
    deviation: int


def deviation_report(p: ProjectivePresentation, point) -> DeviationReport:
    """Rank data for this presentation at an on-surface point.

    The deviation reported here is ambient minus rank for this particular
    presentation, an upper-bound witness rather than a minimum over all
    presentations.
    """
    rank = p.phi.rank_at_point(point)
    return DeviationReport(ambient=p.n, rank=rank, deviation=p.n - rank)
