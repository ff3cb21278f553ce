"""Matrix algebra over a hypersurface quotient ring.

Products accumulate raw polynomial arithmetic and reduce each entry once,
so the expensive normal-form step runs once per result entry. Determinants
and characteristic polynomials use cofactor expansion, which is exact and
ample for the small matrices that occur here.
"""

from __future__ import annotations

from fractions import Fraction

from .polycore import GaussianRational, Polynomial
from .quotient import QuotientRing, RingElement

_COFACTOR_LIMIT = 6


class MatrixA:
    """A rows x cols matrix of ring elements. Treated as immutable."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: QuotientRing, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if not isinstance(e, RingElement):
                raise TypeError("entries must be ring elements; use from_rows to coerce")
            if e.ring != ring:
                raise ValueError("entry belongs to a different ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, ring: QuotientRing, rows) -> "MatrixA":
        data = [[ring.element(v) for v in row] for row in rows]
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows must all have the same length")
        return cls(ring, len(data), width, [e for row in data for e in row])

    @classmethod
    def identity(cls, ring: QuotientRing, n: int) -> "MatrixA":
        one, zero = ring.one(), ring.zero()
        return cls(ring, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, ring: QuotientRing, rows: int, cols: int | None = None) -> "MatrixA":
        cols = rows if cols is None else cols
        z = ring.zero()
        return cls(ring, rows, cols, [z] * (rows * cols))

    @classmethod
    def from_columns(cls, ring: QuotientRing, columns) -> "MatrixA":
        cols = [[ring.element(v) for v in col] for col in columns]
        if not cols:
            raise ValueError("matrix needs at least one column")
        height = len(cols[0])
        if any(len(col) != height for col in cols):
            raise ValueError("columns must all have the same length")
        return cls(
            ring, height, len(cols), [cols[j][i] for i in range(height) for j in range(len(cols))]
        )

    def entry(self, i: int, j: int) -> RingElement:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[RingElement, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def _require_same_shape(self, other: "MatrixA"):
        if self.ring != other.ring:
            raise ValueError("matrices belong to different rings")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixA):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __add__(self, other):
        if not isinstance(other, MatrixA):
            return NotImplemented
        self._require_same_shape(other)
        return MatrixA(
            self.ring,
            self.rows,
            self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        if not isinstance(other, MatrixA):
            return NotImplemented
        self._require_same_shape(other)
        return MatrixA(
            self.ring,
            self.rows,
            self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return MatrixA(self.ring, self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, MatrixA):
            if self.ring != other.ring:
                raise ValueError("matrices belong to different rings")
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            ring = self.ring
            names = ring.names
            out = []
            for i in range(self.rows):
                row = [self.entries[i * self.cols + k].rep for k in range(self.cols)]
                for j in range(other.cols):
                    acc = Polynomial.zero(names)
                    for k in range(self.cols):
                        acc = acc + row[k] * other.entries[k * other.cols + j].rep
                    out.append(ring.nf(acc))
            return MatrixA(ring, self.rows, other.cols, out)
        if isinstance(other, (int, Fraction, GaussianRational, RingElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, RingElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar) -> "MatrixA":
        scalar = self.ring.element(scalar)
        return MatrixA(self.ring, self.rows, self.cols, [scalar * e for e in self.entries])

    def mul_vector(self, vector) -> tuple[RingElement, ...]:
        vec = [self.ring.element(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} does not match {self.cols} columns")
        ring = self.ring
        names = ring.names
        reps = [v.rep for v in vec]
        out = []
        for i in range(self.rows):
            acc = Polynomial.zero(names)
            base = i * self.cols
            for k in range(self.cols):
                acc = acc + self.entries[base + k].rep * reps[k]
            out.append(ring.nf(acc))
        return tuple(out)

    def transpose(self) -> "MatrixA":
        return MatrixA(
            self.ring,
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> RingElement:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        total = self.ring.zero()
        for i in range(self.rows):
            total = total + self.entries[i * self.cols + i]
        return total

    def determinant(self) -> RingElement:
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        if self.rows > _COFACTOR_LIMIT:
            raise ValueError(f"cofactor expansion is limited to n <= {_COFACTOR_LIMIT}")
        grid = [list(self.row(i)) for i in range(self.rows)]
        return _det_cofactor(self.ring, grid)

    def char_poly(self) -> "CharPoly":
        """Coefficients of det(tI - self), degree n first; always monic."""
        if not self.is_square:
            raise ValueError("characteristic polynomial requires a square matrix")
        if self.rows > _COFACTOR_LIMIT:
            raise ValueError(f"cofactor expansion is limited to n <= {_COFACTOR_LIMIT}")
        ring = self.ring
        one, zero = ring.one(), ring.zero()
        # entries of tI - g as coefficient lists in t, constant term first
        grid = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                e = self.entries[i * self.cols + j]
                row.append([-e, one] if i == j else [-e])
            grid.append(row)
        coeffs = _det_cofactor_tpoly(ring, grid)
        coeffs = coeffs + [zero] * (self.rows + 1 - len(coeffs))
        return CharPoly(ring, tuple(reversed(coeffs)))

    def rank_at_point(self, point) -> int:
        """Rank over Q(i) of the matrix evaluated at an on-surface point."""
        values = self.ring.require_point_on_surface(point)
        grid = [[e.rep.evaluate(values) for e in self.row(i)] for i in range(self.rows)]
        return _rank_gauss(grid)

    def to_json(self) -> list[list[str]]:
        return [[str(e) for e in self.row(i)] for i in range(self.rows)]

    def __str__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)
        )
        return f"[{rows}]"

    def __repr__(self) -> str:
        return f"MatrixA({self.rows}x{self.cols} over {self.ring!r})"


def _det_cofactor(ring: QuotientRing, grid) -> RingElement:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = ring.zero()
    sign = 1
    for j in range(n):
        pivot = grid[0][j]
        if not pivot.is_zero:
            minor = [[row[k] for k in range(n) if k != j] for row in grid[1:]]
            term = pivot * _det_cofactor(ring, minor)
            total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def _tpoly_mul(ring: QuotientRing, a, b):
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero:
            continue
        for j, cb in enumerate(b):
            if cb.is_zero:
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def _tpoly_add(ring: QuotientRing, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, cb in enumerate(b):
        out[i] = out[i] + cb
    return out


def _det_cofactor_tpoly(ring: QuotientRing, grid):
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = [ring.zero()]
    sign = 1
    for j in range(n):
        pivot = grid[0][j]
        if any(not c.is_zero for c in pivot):
            minor = [[row[k] for k in range(n) if k != j] for row in grid[1:]]
            term = _tpoly_mul(ring, pivot, _det_cofactor_tpoly(ring, minor))
            if sign < 0:
                term = [-c for c in term]
            total = _tpoly_add(ring, total, term)
        sign = -sign
    return total


def _rank_gauss(grid) -> int:
    if not grid:
        return 0
    rows, cols = len(grid), len(grid[0])
    rank = 0
    pivot_row = 0
    for col in range(cols):
        pivot = None
        for r in range(pivot_row, rows):
            if grid[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        grid[pivot_row], grid[pivot] = grid[pivot], grid[pivot_row]
        inv = GaussianRational.ONE / grid[pivot_row][col]
        grid[pivot_row] = [v * inv for v in grid[pivot_row]]
        for r in range(pivot_row + 1, rows):
            factor = grid[r][col]
            if factor:
                grid[r] = [a - factor * b for a, b in zip(grid[r], grid[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == rows:
            break
    return rank


class CharPoly:
    """det(tI - g) as a monic coefficient sequence, degree n down to 0."""

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring: QuotientRing, coefficients):
        coefficients = tuple(coefficients)
        if not coefficients:
            raise ValueError("a characteristic polynomial needs coefficients")
        for c in coefficients:
            if not isinstance(c, RingElement) or c.ring != ring:
                raise ValueError("coefficients must be elements of the given ring")
        if coefficients[0] != ring.one():
            raise ValueError("characteristic polynomials are monic")
        self.ring = ring
        self.coefficients = coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> RingElement:
        """Coefficient of t^k."""
        if not 0 <= k <= self.degree:
            raise ValueError(f"no coefficient of degree {k}")
        return self.coefficients[self.degree - k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.ring == other.ring and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.ring, self.coefficients))

    def __mul__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        if self.ring != other.ring:
            raise ValueError("characteristic polynomials over different rings")
        a = list(reversed(self.coefficients))
        b = list(reversed(other.coefficients))
        prod = _tpoly_mul(self.ring, a, b)
        return CharPoly(self.ring, tuple(reversed(prod)))

    def evaluate_matrix(self, g: MatrixA) -> MatrixA:
        """Substitute the square matrix g for t (Horner over matrices)."""
        if not g.is_square or g.ring != self.ring:
            raise ValueError("substitution needs a square matrix over the same ring")
        identity = MatrixA.identity(self.ring, g.rows)
        result = MatrixA.zero(self.ring, g.rows)
        for c in self.coefficients:
            result = result * g + identity.scale(c)
        return result

    def __str__(self) -> str:
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if c.is_zero:
                continue
            if k == 0:
                body = _wrap(str(c))
            else:
                t = "t" if k == 1 else f"t^{k}"
                body = t if c == self.ring.one() else f"{_wrap(str(c))}*{t}"
            pieces.append(body)
        if not pieces:
            return "0"
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"CharPoly({self!s})"


def _wrap(text: str) -> str:
    if "+" in text or "-" in text:
        return f"({text})"
    return text


def commutator(a: MatrixA, b: MatrixA) -> MatrixA:
    """The matrix commutator a*b - b*a."""
    if not isinstance(a, MatrixA) or not isinstance(b, MatrixA):
        raise TypeError("commutator needs two matrices")
    if not a.is_square or not b.is_square:
        raise ValueError("commutator requires square matrices")
    a._require_same_shape(b)
    return a * b - b * a


def trace(a: MatrixA) -> RingElement:
    return a.trace()


def determinant(a: MatrixA) -> RingElement:
    return a.determinant()


def char_poly(g: MatrixA) -> CharPoly:
    return g.char_poly()


def rank_at_point(a: MatrixA, point) -> int:
    return a.rank_at_point(point)
