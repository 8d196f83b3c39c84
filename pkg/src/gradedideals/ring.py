"""Polynomial rings over QQ / GF(p), monomial orders, and Z^m-gradings.

Monomials are plain tuples of exponents. A :class:`Polynomial` stores a dict
``{exponent tuple: raw coefficient}``; term order only matters for leading
terms and printing, so it is supplied by the caller or taken from the ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, UsageError
from .scalar import Field, FieldElement, parse_field

Monomial = tuple  # tuple[int, ...]

_VAR_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


# -- monomial orders ---------------------------------------------------------


def _grevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex``, or ``elim`` (block order eliminating the first ``k`` variables).

    ``key(e)`` maps an exponent tuple to a tuple of ints whose natural
    comparison is the order; larger key means larger monomial.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise UsageError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 0:
            raise UsageError("elimination block size must be nonnegative")

    def key(self, e: Monomial) -> tuple:
        if self.kind == "lex":
            return e
        if self.kind == "grevlex":
            return _grevlex_key(e)
        k = self.k
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])

    def keyfunc(self):
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            return _grevlex_key
        k = self.k
        return lambda e: _grevlex_key(e[:k]) + _grevlex_key(e[k:])

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return f"elim({self.k})" if self.kind == "elim" else self.kind

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        text = text.strip()
        if text in ("lex", "grevlex"):
            return cls(text)
        m = re.fullmatch(r"elim\(\s*(\d+)\s*\)", text)
        if m:
            return cls("elim", int(m.group(1)))
        raise ParseError(f"unknown monomial order {text!r}; expected lex, grevlex or elim(k)")


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


# -- rings -------------------------------------------------------------------


class PolynomialRing:
    """k[x_1, ..., x_n] with a default monomial order used for printing."""

    def __init__(self, field: Field, variables: Sequence[str], order: MonomialOrder = GREVLEX):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not _VAR_RE.fullmatch(v):
                raise UsageError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise UsageError(f"duplicate variable names in {variables}")
        self.field = field
        self.variables = variables
        self.n = len(variables)
        self.order = order

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"

    @classmethod
    def from_string(cls, text: str) -> PolynomialRing:
        """``"QQ[x,y]"`` or ``"GF(32003)[x,y,z]"``."""
        m = re.fullmatch(r"\s*(QQ|GF\(\s*\d+\s*\))\s*\[([^\]]*)\]\s*", text)
        if not m:
            raise ParseError(f"bad ring {text!r}; expected e.g. QQ[x,y] or GF(32003)[x,y,z]")
        names = [v.strip() for v in m.group(2).split(",") if v.strip()]
        if not names:
            raise ParseError("a ring needs at least one variable")
        return cls(parse_field(m.group(1)), names)

    def with_order(self, order: MonomialOrder) -> PolynomialRing:
        return PolynomialRing(self.field, self.variables, order)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UsageError(f"{name!r} is not a variable of {self}") from None

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field.convert(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exps: Monomial, coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise UsageError(f"bad exponent vector {exps} for {self}")
        c = self.field.convert(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def gen(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.n
        e[i] = 1
        return self.monomial(tuple(e))

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.n))

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise UsageError(f"polynomial over {value.ring} is not in {self}")
            return value
        if isinstance(value, str):
            from .parser import parse_polynomial

            return parse_polynomial(value, self)
        return self.constant(value)

    def parse(self, text: str) -> Polynomial:
        from .parser import parse_polynomial

        return parse_polynomial(text, self)


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial; ``data`` maps exponent tuples to nonzero raw coefficients."""

    __slots__ = ("ring", "data", "_hash")

    def __init__(self, ring: PolynomialRing, data: dict):
        self.ring = ring
        self.data = data
        self._hash = None

    # construction helpers
    def _new(self, data):
        return Polynomial(self.ring, data)

    def _check(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, FieldElement) or (
            isinstance(other, int) and not isinstance(other, bool)
        ):
            return self.ring.constant(other)
        from fractions import Fraction

        if isinstance(other, Fraction):
            return self.ring.constant(other)
        return None

    # queries
    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def __len__(self):
        return len(self.data)

    def terms(self, order: MonomialOrder | None = None) -> list:
        """(FieldElement, exponents) pairs, strictly descending in ``order``."""
        key = (order or self.ring.order).keyfunc()
        F = self.ring.field
        return [(F.element(self.data[e]), e) for e in sorted(self.data, key=key, reverse=True)]

    def monomials(self, order: MonomialOrder | None = None) -> list:
        key = (order or self.ring.order).keyfunc()
        return sorted(self.data, key=key, reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.data:
            raise UsageError("the zero polynomial has no leading monomial")
        return max(self.data, key=(order or self.ring.order).keyfunc())

    def leading_coefficient(self, order: MonomialOrder | None = None) -> FieldElement:
        return self.ring.field.element(self.data[self.leading_monomial(order)])

    def total_degree(self) -> int:
        """Standard degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.data), default=-1)

    def coefficient(self, exps) -> FieldElement:
        F = self.ring.field
        return F.element(self.data.get(tuple(exps), F.zero))

    def variables_used(self) -> set:
        return {i for e in self.data for i, x in enumerate(e) if x}

    def is_monomial(self) -> bool:
        return len(self.data) == 1

    def is_constant(self) -> bool:
        return not self.data or set(self.data) == {(0,) * self.ring.n}

    # arithmetic
    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        data = dict(self.data)
        for e, c in other.data.items():
            v = F.add(data.get(e, F.zero), c)
            if v:
                data[e] = v
            else:
                data.pop(e, None)
        return self._new(data)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return self._new({e: F.neg(c) for e, c in self.data.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        data: dict = {}
        for e1, c1 in self.data.items():
            for e2, c2 in other.data.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = F.add(data.get(e, F.zero), F.mul(c1, c2))
                if v:
                    data[e] = v
                else:
                    data.pop(e, None)
        return self._new(data)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a nonnegative integer")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, coeff, exps: Monomial) -> Polynomial:
        """Multiply by the term ``coeff * x^exps`` (coeff raw)."""
        F = self.ring.field
        if not coeff:
            return self.ring.zero
        return self._new(
            {tuple(x + y for x, y in zip(e, exps)): F.mul(c, coeff) for e, c in self.data.items()}
        )

    def scale(self, coeff) -> Polynomial:
        F = self.ring.field
        c = F.convert(coeff)
        if not c:
            return self.ring.zero
        return self._new({e: F.mul(v, c) for e, v in self.data.items()})

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.data:
            return self
        F = self.ring.field
        inv = F.inv(self.data[self.leading_monomial(order)])
        return self._new({e: F.mul(c, inv) for e, c in self.data.items()})

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        """Quotient of an exact division; raises if ``divisor`` does not divide ``self``."""
        divisor = self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.ring.field
        key = self.ring.order.keyfunc()
        lm = max(divisor.data, key=key)
        inv = F.inv(divisor.data[lm])
        rem = dict(self.data)
        quot: dict = {}
        while rem:
            m = max(rem, key=key)
            if not monomial_divides(lm, m):
                raise UsageError(f"{divisor} does not divide {self}")
            q = monomial_div(m, lm)
            c = F.mul(rem[m], inv)
            quot[q] = c
            for e, d in divisor.data.items():
                t = monomial_mul(e, q)
                v = F.sub(rem.get(t, F.zero), F.mul(c, d))
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return self._new(quot)

    def evaluate(self, point: Sequence) -> FieldElement:
        F = self.ring.field
        vals = [F.convert(p) for p in point]
        total = F.zero
        for e, c in self.data.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = F.mul(t, F.normalize(v**k))
            total = F.add(total, t)
        return F.element(total)

    # ring changes
    def embed(self, ring: PolynomialRing, positions: Sequence[int]) -> Polynomial:
        """Map into ``ring``, sending variable i to variable ``positions[i]``."""
        data = {}
        for e, c in self.data.items():
            new = [0] * ring.n
            for i, k in enumerate(e):
                new[positions[i]] += k
            data[tuple(new)] = c
        return Polynomial(ring, data)

    def change_field(self, ring: PolynomialRing) -> Polynomial:
        F = ring.field
        data = {}
        for e, c in self.data.items():
            v = F.convert(c)
            if v:
                data[e] = v
        return Polynomial(ring, data)

    # comparison / printing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.data == other.data
        other = self._check(other) if other is not None else None
        return other is not None and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.data.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring}, {format_polynomial(self)!r})"


def _format_monomial(e, names) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text: descending terms, ``^`` powers, no ``*`` after coefficients."""
    if f.is_zero():
        return "0"
    F = f.ring.field
    out = []
    for c, e in f.terms(order):
        raw = c.value
        negative = F.characteristic == 0 and raw < 0
        mag = -raw if negative else raw
        mono = _format_monomial(e, f.ring.variables)
        coeff = F.format(mag)
        if mono:
            body = mono if coeff == "1" else coeff + mono
        else:
            body = coeff
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


# -- gradings ----------------------------------------------------------------

ZERO_DEGREE = "zero"
"""Returned by :meth:`GradingMap.is_homogeneous` for the zero polynomial."""


class GradingMap:
    """A Z^m-grading of k[x_1..x_n] by an integer weight matrix (m rows, n columns).

    Column j is deg(x_j). Degrees are tuples, compared lexicographically.
    """

    def __init__(self, weights: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(w) for w in row) for row in weights)
        if not rows or not rows[0]:
            raise UsageError("a grading needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise UsageError("grading matrix rows have different lengths")
        self.weights = rows
        self.m = len(rows)
        self.n = len(rows[0])

    @classmethod
    def standard(cls, n: int) -> GradingMap:
        return cls([[1] * n])

    @classmethod
    def fine(cls, n: int) -> GradingMap:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def parse(cls, text: str) -> GradingMap:
        import json

        try:
            data = json.loads(text)
        except ValueError as exc:
            raise ParseError(f"grading must be an integer matrix literal like [[1,1]]: {exc}") from None
        if not (
            isinstance(data, list)
            and data
            and all(isinstance(r, list) and all(type(w) is int for w in r) for r in data)
        ):
            raise ParseError("grading must be a nonempty list of integer rows")
        return cls(data)

    def __eq__(self, other):
        return isinstance(other, GradingMap) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"GradingMap({[list(r) for r in self.weights]})"

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.weights) + "]"

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.weights)

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for row in self.weights for w in row)

    def check_ring(self, ring: PolynomialRing):
        if ring.n != self.n:
            raise UsageError(f"grading has {self.n} columns but {ring} has {ring.n} variables")

    def degree(self, e: Monomial) -> tuple:
        if len(e) != self.n:
            raise UsageError(f"monomial {e} has {len(e)} exponents, grading expects {self.n}")
        return tuple(sum(w * x for w, x in zip(row, e)) for row in self.weights)

    def components(self, f: Polynomial) -> dict:
        """Homogeneous components of ``f`` keyed by degree, in increasing degree order."""
        self.check_ring(f.ring)
        parts: dict = {}
        for e, c in f.data.items():
            parts.setdefault(self.degree(e), {})[e] = c
        return {d: Polynomial(f.ring, parts[d]) for d in sorted(parts)}

    def is_homogeneous(self, f: Polynomial):
        """The common degree of all terms, :data:`ZERO_DEGREE` for 0, else ``None``."""
        self.check_ring(f.ring)
        if f.is_zero():
            return ZERO_DEGREE
        degs = {self.degree(e) for e in f.data}
        return degs.pop() if len(degs) == 1 else None


def degree_of(mono: Monomial, W: GradingMap) -> tuple:
    return W.degree(tuple(mono))


def homogeneous_components(f: Polynomial, W: GradingMap) -> dict:
    return W.components(f)


def is_homogeneous(f: Polynomial, W: GradingMap):
    return W.is_homogeneous(f)
