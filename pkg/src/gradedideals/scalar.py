"""Exact coefficient fields: the rationals QQ and prime fields GF(p).

Polynomial code works on *raw* values (``Fraction`` for QQ, ``int`` in
``[0, p)`` for GF(p)) through the field object, and wraps them in
:class:`FieldElement` only at the public surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import ParseError, UsageError

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class Field:
    """Base class; subclasses implement the raw-value arithmetic."""

    name = "?"

    def __call__(self, value) -> FieldElement:
        return FieldElement(self.convert(value), self)

    def __repr__(self):
        return self.name

    __str__ = __repr__

    # raw arithmetic (overridden where the default is wrong)
    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def element(self, raw) -> FieldElement:
        return FieldElement(raw, self)


class RationalField(Field):
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    name = "QQ"
    characteristic = 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise UsageError(f"cannot convert {value.field} element to QQ")
            return value.value
        if isinstance(value, bool):
            raise UsageError("booleans are not field elements")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse_raw(value)
        raise UsageError(f"cannot convert {value!r} to QQ")

    def normalize(self, a):
        return a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def format(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse_raw(self, text: str):
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ParseError(f"not a rational number: {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(num, den)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class PrimeField(Field):
    """GF(p) for a prime p < 2**31; residues are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
            raise UsageError(f"GF(p) needs a prime p < 2^31, got {p!r}")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise UsageError(f"cannot convert {value.field} element to {self}")
            return value.value
        if isinstance(value, bool):
            raise UsageError("booleans are not field elements")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.parse_raw(value)
        raise UsageError(f"cannot convert {value!r} to {self}")

    def normalize(self, a):
        return a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return pow(a, -1, self.p)

    def format(self, a) -> str:
        return str(a)

    def parse_raw(self, text: str):
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ParseError(f"not an element of {self}: {text!r}")
        return self.convert(Fraction(int(m.group(1)), int(m.group(2) or 1)))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """``"QQ"`` or ``"GF(p)"``."""
    text = text.strip()
    if text == "QQ":
        return QQ
    m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", text)
    if m:
        return GF(int(m.group(1)))
    raise ParseError(f"unknown field {text!r}; expected QQ or GF(p)")


@dataclass(frozen=True)
class FieldElement:
    """An immutable element of QQ or GF(p)."""

    value: Any
    field: Field

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(f"mixed-field operation: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.convert(other)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.sub(self.value, b), self.field)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.sub(b, self.value), self.field)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.div(self.value, b), self.field)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field.div(b, self.value), self.field)

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def invert(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        b = self._coerce(other)
        return b is not None and b == self.value

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field}({self})"


def invert(a: FieldElement) -> FieldElement:
    return a.invert()
