"""Exact sparse multivariate polynomial arithmetic over the Gaussian rationals.

Coefficients are elements of Q(i) held as pairs of reduced Fractions.
Polynomials are sparse maps from monomials to nonzero coefficients, so
equality is equality of term maps. A graded reverse lexicographic order
fixes leading terms and makes division remainders canonical. A small
recursive-descent parser round-trips the canonical text form.
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class ParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GaussianRational:
    """An element re + im*i of Q(i). Instances are treated as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        # matches int/Fraction hashing when purely real, so mixed dicts stay sane
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational(a * c, _F0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GaussianRational(_F1)
        base = self
        for _ in range(exponent):
            result = result * base
        return result

    def __str__(self) -> str:
        if not self:
            return "0"
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_text(self.im)
        return f"({self.re}{_signed_imag_text(self.im)})"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"


def _imag_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def _signed_imag_text(im: Fraction) -> str:
    mag = -im if im < 0 else im
    body = "i" if mag == 1 else f"{mag}*i"
    return ("-" if im < 0 else "+") + body


GaussianRational.ZERO = GaussianRational(0)
GaussianRational.ONE = GaussianRational(1)
GaussianRational.I = GaussianRational(0, 1)


class Monomial:
    """Exponent vector of a power product. Instances are treated as immutable."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exps!r}")
        self.exponents = exps

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def mul(self, other: "Monomial") -> "Monomial":
        return _mono(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def divide(self, other: "Monomial") -> "Monomial":
        # self / other; requires other.divides(self)
        exps = tuple(a - b for a, b in zip(self.exponents, other.exponents))
        if any(e < 0 for e in exps):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return _mono(exps)

    def text(self, names) -> str:
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            return self.exponents == other.exponents
        return NotImplemented

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents!r})"


def _mono(exps: tuple) -> Monomial:
    # internal fast path: exponents already known valid
    m = object.__new__(Monomial)
    m.exponents = exps
    return m


class MonomialOrder:
    """Graded reverse lexicographic order with a fixed variable precedence."""

    __slots__ = ("kind", "precedence")

    def __init__(self, kind: str = "grevlex", precedence=None):
        if kind != "grevlex":
            raise ValueError(f"unsupported monomial order kind {kind!r}")
        self.kind = kind
        self.precedence = None if precedence is None else tuple(precedence)

    @classmethod
    def grevlex(cls, arity: int) -> "MonomialOrder":
        return cls("grevlex", tuple(range(arity)))

    def key(self, m: Monomial):
        e = m.exponents
        p = self.precedence
        if p is not None and p != tuple(range(len(e))):
            if len(p) != len(e):
                raise ValueError("monomial arity does not match order precedence")
            e = tuple(e[i] for i in p)
        return (sum(e), tuple(-x for x in reversed(e)))

    def __eq__(self, other) -> bool:
        if isinstance(other, MonomialOrder):
            return self.kind == other.kind and self.precedence == other.precedence
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind!r}, {self.precedence!r})"


def _check_names(names) -> tuple:
    names = tuple(names)
    if not names:
        raise ValueError("at least one variable name is required")
    seen = set()
    for name in names:
        if not name.isidentifier():
            raise ValueError(f"invalid variable name {name!r}")
        if name == "i":
            raise ValueError("variable name 'i' is reserved for the imaginary unit")
        if name in seen:
            raise ValueError(f"duplicate variable name {name!r}")
        seen.add(name)
    return names


def _coerce_coeff(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class Polynomial:
    """Sparse multivariate polynomial over Q(i). Treated as immutable."""

    __slots__ = ("names", "_terms")

    def __init__(self, names, terms=None):
        self.names = _check_names(names)
        clean: dict[Monomial, GaussianRational] = {}
        arity = len(self.names)
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                if m.arity != arity:
                    raise ValueError(f"monomial arity {m.arity} does not match {arity}")
                c = _coerce_coeff(c)
                if c:
                    clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, names, terms) -> "Polynomial":
        p = object.__new__(cls)
        p.names = names
        p._terms = terms
        return p

    @classmethod
    def zero(cls, names) -> "Polynomial":
        return cls(names)

    @classmethod
    def constant(cls, names, value) -> "Polynomial":
        names = _check_names(names)
        c = _coerce_coeff(value)
        if not c:
            return cls._raw(names, {})
        return cls._raw(names, {_mono((0,) * len(names)): c})

    @classmethod
    def variable(cls, names, index: int) -> "Polynomial":
        names = _check_names(names)
        if not 0 <= index < len(names):
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if k == index else 0 for k in range(len(names)))
        return cls._raw(names, {_mono(exps): GaussianRational.ONE})

    @property
    def terms(self) -> dict:
        # shared for speed; callers must not mutate
        return self._terms

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        order = order or MonomialOrder.grevlex(self.arity)
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> GaussianRational:
        return self._terms[self.leading_monomial(order)]

    def constant_coefficient(self) -> GaussianRational:
        return self._terms.get(_mono((0,) * self.arity), GaussianRational.ZERO)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Polynomial.constant(self.names, other)
        return None

    def _require_same_names(self, other: "Polynomial"):
        if self.names != other.names:
            raise ValueError(f"variable mismatch: {self.names} vs {other.names}")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.names, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.names == other.names and self._terms == other._terms

    def __hash__(self):
        return hash((self.names, frozenset((m, c.re, c.im) for m, c in self._terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._require_same_names(other)
        result = dict(self._terms)
        for m, c in other._terms.items():
            acc = result.get(m)
            if acc is None:
                result[m] = c
            else:
                s = acc + c
                if s:
                    result[m] = s
                else:
                    del result[m]
        return Polynomial._raw(self.names, result)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Polynomial._raw(self.names, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce_coeff(other)
            if not c:
                return Polynomial._raw(self.names, {})
            return Polynomial._raw(self.names, {m: v * c for m, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_names(other)
        result: dict[Monomial, GaussianRational] = {}
        get = result.get
        for m1, c1 in self._terms.items():
            e1 = m1.exponents
            for m2, c2 in other._terms.items():
                m = _mono(tuple(a + b for a, b in zip(e1, m2.exponents)))
                c = c1 * c2
                acc = get(m)
                if acc is None:
                    result[m] = c
                else:
                    s = acc + c
                    if s:
                        result[m] = s
                    else:
                        del result[m]
        return Polynomial._raw(self.names, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.names, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def partial_derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < self.arity:
            raise ValueError(f"variable index {index} out of range for arity {self.arity}")
        result: dict[Monomial, GaussianRational] = {}
        for m, c in self._terms.items():
            e = m.exponents[index]
            if e:
                exps = list(m.exponents)
                exps[index] = e - 1
                result[_mono(tuple(exps))] = c * e
        return Polynomial._raw(self.names, result)

    def evaluate(self, point) -> GaussianRational:
        values = tuple(_coerce_coeff(v) for v in point)
        if len(values) != self.arity:
            raise ValueError(f"point length {len(values)} does not match arity {self.arity}")
        total = GaussianRational.ZERO
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m.exponents):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        order = MonomialOrder.grevlex(self.arity)
        pieces = []
        for m in sorted(self._terms, key=order.key, reverse=True):
            negative, body = _term_text(self._terms[m], m.text(self.names))
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("-" if negative else "+") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _term_text(c: GaussianRational, mtext: str) -> tuple[bool, str]:
    """Render one term; returns (sign is negative, unsigned body text)."""
    if not c.im:
        negative = c.re < 0
        mag = -c.re if negative else c.re
        if not mtext:
            return negative, str(mag)
        if mag == 1:
            return negative, mtext
        return negative, f"{mag}*{mtext}"
    if not c.re:
        negative = c.im < 0
        mag = -c.im if negative else c.im
        itext = "i" if mag == 1 else f"{mag}*i"
        return negative, itext if not mtext else f"{itext}*{mtext}"
    # mixed coefficients keep their own sign inside parentheses
    ctext = f"({c.re}{_signed_imag_text(c.im)})"
    return False, ctext if not mtext else f"{ctext}*{mtext}"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def negate(p: Polynomial) -> Polynomial:
    return -p


def scale(c, p: Polynomial) -> Polynomial:
    return p * _coerce_coeff(c)


def divide_remainder(
    p: Polynomial, f: Polynomial, order: MonomialOrder | None = None
) -> tuple[Polynomial, Polynomial]:
    """Divide p by the single divisor f: p = quotient*f + remainder.

    No monomial of the remainder is divisible by the leading monomial of f
    under the given order, so the remainder is the canonical normal form of
    p modulo the ideal (f).
    """
    if f.is_zero:
        raise ValueError("division by the zero polynomial")
    p._require_same_names(f)
    order = order or MonomialOrder.grevlex(p.arity)
    lead = f.leading_monomial(order)
    lead_exps = lead.exponents
    lc = f.leading_coefficient(order)
    tail = [(m, c) for m, c in f._terms.items() if m != lead]
    key = order.key

    work = dict(p._terms)
    quotient: dict[Monomial, GaussianRational] = {}
    remainder: dict[Monomial, GaussianRational] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        exps = m.exponents
        if all(a >= b for a, b in zip(exps, lead_exps)):
            t = tuple(a - b for a, b in zip(exps, lead_exps))
            factor = c / lc
            tm = _mono(t)
            acc = quotient.get(tm)
            if acc is None:
                quotient[tm] = factor
            else:
                s = acc + factor
                if s:
                    quotient[tm] = s
                else:
                    del quotient[tm]
            for fm, fc in tail:
                mm = _mono(tuple(a + b for a, b in zip(t, fm.exponents)))
                delta = factor * fc
                acc = work.get(mm)
                s = -delta if acc is None else acc - delta
                if s:
                    work[mm] = s
                elif acc is not None:
                    del work[mm]
        else:
            remainder[m] = c
    return Polynomial._raw(p.names, quotient), Polynomial._raw(p.names, remainder)


_OPS = frozenset("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    # grammar, tightest last:
    #   expr  := term (('+'|'-') term)*
    #   term  := unary (('*'|'/') unary)*     divisor must be a nonzero constant
    #   unary := '-' unary | power
    #   power := atom ('^' INT)?              exponent: non-negative integer literal
    #   atom  := INT | 'i' | NAME | '(' expr ')'

    def __init__(self, tokens, names):
        self.tokens = tokens
        self.pos = 0
        self.names = names
        self.index = {name: k for k, name in enumerate(names)}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        left = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                right = self.term()
                left = left + right if value == "+" else left - right
            else:
                return left

    def term(self) -> Polynomial:
        left = self.unary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.take()
                right = self.unary()
                if value == "*":
                    left = left * right
                else:
                    if right.is_zero:
                        raise ParseError("division by zero", pos)
                    if right.degree() > 0:
                        raise ParseError("division is only allowed by a nonzero constant", pos)
                    left = left * (GaussianRational.ONE / right.constant_coefficient())
            else:
                return left

    def unary(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, pos = self.take()
            if kind == "op" and value == "-":
                raise ParseError("negative exponent", pos)
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            return base**value
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "int":
            return Polynomial.constant(self.names, value)
        if kind == "name":
            if value == "i":
                return Polynomial.constant(self.names, GaussianRational.I)
            idx = self.index.get(value)
            if idx is None:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(self.names, idx)
        if kind == "op" and value == "(":
            inner = self.expr()
            kind, value, pos = self.take()
            if kind != "op" or value != ")":
                raise ParseError("expected ')'", pos)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse(text: str, names=("x", "y", "z")) -> Polynomial:
    """Parse polynomial text over the named variables.

    Accepts integers, `/` by nonzero constants, the literal `i`, `+ - * ^`
    and parentheses. Implicit multiplication is not allowed. Parsing the
    canonical printed form returns an equal polynomial.
    """
    names = _check_names(names)
    parser = _Parser(_tokenize(text), names)
    result = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return result
