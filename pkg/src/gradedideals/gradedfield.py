"""Graded fields k0[G'] (G' a subgroup of Z^m) and graded modules presented over them.

A homogeneous element of k0[G'] is ``c * e(v)`` with c in k0 and v in G';
every nonzero one is a unit. That is all Gaussian elimination needs, so a
module presented by a degree-consistent matrix is free, with explicit
degree-labelled generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ParseError, PreconditionError, UsageError
from .scalar import Field, FieldElement, parse_field

Vector = tuple


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def hermite_normal_form(vectors: Sequence[Sequence[int]], m: int | None = None) -> list:
    """Row-style HNF of the integer span of ``vectors``.

    Rows are in echelon form with positive pivots; entries above a pivot lie
    in [0, pivot). Zero rows are dropped.
    """
    rows = [list(map(int, v)) for v in vectors]
    if m is None:
        m = len(rows[0]) if rows else 0
    if any(len(r) != m for r in rows):
        raise UsageError("lattice generators must all have the same length")
    r = 0
    for col in range(m):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][col]))
            others = [i for i in nz if i != p]
            if not others:
                break
            for i in others:
                q = rows[i][col] // rows[p][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[p])]
        nz = [i for i in range(r, len(rows)) if rows[i][col]]
        if not nz:
            continue
        p = nz[0]
        rows[r], rows[p] = rows[p], rows[r]
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        piv = rows[r][col]
        for k in range(r):
            q = rows[k][col] // piv
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r]]


@dataclass(frozen=True)
class SupportLattice:
    """A subgroup of Z^m, stored by its Hermite normal form basis."""

    ambient_rank: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, g: Sequence[int]) -> bool:
        g = list(g)
        if len(g) != self.ambient_rank:
            raise UsageError(f"vector {tuple(g)} is not in Z^{self.ambient_rank}")
        for row in self.basis:
            col = next(i for i, a in enumerate(row) if a)
            if g[col] % row[col]:
                return False
            q = g[col] // row[col]
            g = [a - q * b for a, b in zip(g, row)]
        return not any(g)

    __contains__ = contains


def support_lattice(degrees: Sequence[Sequence[int]], m: int | None = None) -> SupportLattice:
    degrees = [tuple(d) for d in degrees]
    if m is None:
        if not degrees:
            raise UsageError("ambient rank needed for an empty generator list")
        m = len(degrees[0])
    return SupportLattice(m, tuple(hermite_normal_form(degrees, m)))


def membership_in_support(g: Sequence[int], L: SupportLattice) -> bool:
    return L.contains(g)


@dataclass(frozen=True)
class GradedFieldPresentation:
    """k = k0[G'] with G' = ``lattice`` inside Z^m."""

    base_field: Field
    lattice: SupportLattice

    @classmethod
    def create(cls, base_field: Field, ambient_rank: int, support_generators=()) -> GradedFieldPresentation:
        return cls(base_field, support_lattice(list(support_generators), ambient_rank))

    @property
    def ambient_rank(self) -> int:
        return self.lattice.ambient_rank

    def element(self, coeff, degree) -> Homogeneous:
        degree = tuple(degree)
        c = self.base_field.convert(coeff)
        if c and degree not in self.lattice:
            raise PreconditionError(f"degree {degree} is outside the support lattice")
        return Homogeneous(FieldElement(c, self.base_field), degree)

    def one(self) -> Homogeneous:
        return Homogeneous(self.base_field(1), (0,) * self.ambient_rank)


@dataclass(frozen=True)
class Homogeneous:
    """``coeff * e(degree)``; a zero coefficient means the zero element (degree kept as a label)."""

    coeff: FieldElement
    degree: Vector

    def __bool__(self):
        return bool(self.coeff)

    def __mul__(self, other: Homogeneous) -> Homogeneous:
        return Homogeneous(self.coeff * other.coeff, _vadd(self.degree, other.degree))

    def inverse(self) -> Homogeneous:
        if not self.coeff:
            raise ZeroDivisionError("zero is not a unit")
        return Homogeneous(self.coeff.invert(), tuple(-d for d in self.degree))

    def __add__(self, other: Homogeneous) -> Homogeneous:
        if self.coeff and other.coeff and self.degree != other.degree:
            raise PreconditionError(f"sum of elements of degrees {self.degree} and {other.degree}")
        degree = self.degree if self.coeff else other.degree
        return Homogeneous(self.coeff + other.coeff, degree)

    def __neg__(self):
        return Homogeneous(-self.coeff, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def is_one(self) -> bool:
        return self.coeff == 1 and not any(self.degree)

    def __str__(self):
        if not self.coeff:
            return "0"
        return f"{self.coeff}*e({','.join(map(str, self.degree))})"


class HomogeneousMatrix:
    """Presentation matrix of a graded module: columns are relations on the row generators.

    Entry (i, j) must be zero or homogeneous of degree ``row_degrees[i] - col_degrees[j]``.
    """

    def __init__(self, k: GradedFieldPresentation, row_degrees, col_degrees, entries):
        self.k = k
        self.row_degrees = [tuple(d) for d in row_degrees]
        self.col_degrees = [tuple(d) for d in col_degrees]
        m = k.ambient_rank
        for d in self.row_degrees + self.col_degrees:
            if len(d) != m:
                raise UsageError(f"degree label {d} is not in Z^{m}")
        self.rows = len(self.row_degrees)
        self.cols = len(self.col_degrees)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise UsageError(f"entries do not form a {self.rows}x{self.cols} matrix")
        F = k.base_field
        self.entries = []
        for i, row in enumerate(entries):
            out = []
            for j, a in enumerate(row):
                want = _vsub(self.row_degrees[i], self.col_degrees[j])
                if a is None or a == 0 or (isinstance(a, Homogeneous) and not a):
                    out.append(Homogeneous(F(0), want))
                    continue
                if not isinstance(a, Homogeneous):
                    raise UsageError(f"entry ({i},{j}) is not a homogeneous element")
                if a.coeff.field != F:
                    raise UsageError(f"entry ({i},{j}) is over {a.coeff.field}, expected {F}")
                if a.degree != want:
                    raise PreconditionError(
                        f"entry ({i},{j}) has degree {a.degree}, expected {want} (non-homogeneous matrix)"
                    )
                if a.degree not in k.lattice:
                    raise PreconditionError(f"entry ({i},{j}) has degree {a.degree} outside the support")
                out.append(a)
            self.entries.append(out)

    def copy(self) -> HomogeneousMatrix:
        return HomogeneousMatrix(self.k, self.row_degrees, self.col_degrees, [list(r) for r in self.entries])

    def permuted(self, row_perm, col_perm) -> HomogeneousMatrix:
        """Rows and columns reordered (with their degree labels)."""
        return HomogeneousMatrix(
            self.k,
            [self.row_degrees[i] for i in row_perm],
            [self.col_degrees[j] for j in col_perm],
            [[self.entries[i][j] for j in col_perm] for i in row_perm],
        )

    def scalar_rows(self) -> list:
        return [[a.coeff.value for a in row] for row in self.entries]

    def is_degree_consistent(self) -> bool:
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if a and a.degree != _vsub(self.row_degrees[i], self.col_degrees[j]):
                    return False
        return True


@dataclass
class FreeModuleReport:
    """The module presented by A is free on ``generator_rows`` with the given degrees."""

    rank: int
    free_rank: int
    generator_rows: list
    generator_degrees: list
    pivots: list = field(default_factory=list)
    reduced: HomogeneousMatrix | None = None
    unit_pivots_only: bool = True


def graded_free_basis(A: HomogeneousMatrix) -> FreeModuleReport:
    """Column-echelon reduction of A using homogeneous (hence unit) pivots only."""
    M = A.copy()
    k = M.k
    pivots = []
    unit_only = True
    used_rows: list = []
    pc = 0
    for i in range(M.rows):
        j = next((c for c in range(pc, M.cols) if M.entries[i][c]), None)
        if j is None:
            continue
        for r in range(M.rows):
            M.entries[r][pc], M.entries[r][j] = M.entries[r][j], M.entries[r][pc]
        M.col_degrees[pc], M.col_degrees[j] = M.col_degrees[j], M.col_degrees[pc]
        piv = M.entries[i][pc]
        inv = piv.inverse()
        unit_only = unit_only and (piv * inv).is_one()
        pivots.append((i, pc, piv))
        # normalize the pivot column, then clear row i elsewhere
        for r in range(M.rows):
            M.entries[r][pc] = M.entries[r][pc] * inv
        M.col_degrees[pc] = _vadd(M.col_degrees[pc], piv.degree)
        for c in range(M.cols):
            if c == pc or not M.entries[i][c]:
                continue
            mult = M.entries[i][c]
            for r in range(M.rows):
                M.entries[r][c] = M.entries[r][c] - mult * M.entries[r][pc]
        if not M.is_degree_consistent():
            raise AssertionError("elimination broke degree consistency")
        used_rows.append(i)
        pc += 1
    rest = [i for i in range(M.rows) if i not in used_rows]
    return FreeModuleReport(
        rank=len(pivots),
        free_rank=M.rows - len(pivots),
        generator_rows=rest,
        generator_degrees=[M.row_degrees[i] for i in rest],
        pivots=pivots,
        reduced=M,
        unit_pivots_only=unit_only,
    )


def specialized_rank(A: HomogeneousMatrix, point: Sequence) -> int:
    """Rank over k0 after substituting e(v) -> prod(point[i] ** v[i]) (point entries nonzero)."""
    from .linalg import rank

    F = A.k.base_field
    pt = [F.convert(t) for t in point]
    if any(not t for t in pt):
        raise UsageError("specialization point must have nonzero coordinates")
    rows = []
    for row in A.entries:
        vec = {}
        for j, a in enumerate(row):
            if a:
                v = a.coeff.value
                for t, d in zip(pt, a.degree):
                    v = F.mul(v, F.normalize(F.inv(t) ** -d if d < 0 else t**d))
                vec[j] = v
        rows.append(vec)
    return rank(rows, F)


# -- text format ---------------------------------------------------------------

_HEADER_RE = re.compile(r"gfield\s+(QQ|GF\(\s*\d+\s*\))\s+rank\s+(\d+)\s+support\s*\((.*)\)\s*$")
_ENTRY_RE = re.compile(r"([+-]?\d+(?:/\d+)?)\*e\(([^)]*)\)|([+-]?0)")


def _parse_vector(text: str, m: int) -> tuple:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        v = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad integer vector {text!r}") from None
    if len(v) != m:
        raise ParseError(f"vector ({text}) should have {m} entries")
    return v


def _parse_vector_list(text: str, m: int) -> list:
    text = text.strip()
    if not text:
        return []
    out = []
    for piece in text.split(";"):
        piece = piece.strip()
        if piece.startswith("(") and piece.endswith(")"):
            piece = piece[1:-1]
        out.append(_parse_vector(piece, m))
    return out


def parse_matrix(text: str) -> HomogeneousMatrix:
    """Parse the ``gfield`` text format (header, rowdeg, coldeg, one line of entries per row)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty matrix description")
    h = _HEADER_RE.match(lines[0])
    if not h:
        raise ParseError(f"bad gfield header {lines[0]!r}")
    F = parse_field(h.group(1))
    m = int(h.group(2))
    k = GradedFieldPresentation.create(F, m, _parse_vector_list(h.group(3), m))
    if len(lines) < 3 or not lines[1].startswith("rowdeg") or not lines[2].startswith("coldeg"):
        raise ParseError("expected 'rowdeg' and 'coldeg' lines after the header")
    rowdeg = _parse_vector_list(lines[1][len("rowdeg"):], m)
    coldeg = _parse_vector_list(lines[2][len("coldeg"):], m)
    body = lines[3:]
    if len(body) != len(rowdeg):
        raise ParseError(f"expected {len(rowdeg)} entry rows, found {len(body)}")
    entries = []
    for ln in body:
        row = []
        for tok in ln.split():
            mt = _ENTRY_RE.fullmatch(tok)
            if not mt:
                raise ParseError(f"bad entry {tok!r}; expected c*e(v) or 0")
            if mt.group(3) is not None:
                row.append(None)
            else:
                num, _, den = mt.group(1).partition("/")
                c = Fraction(int(num), int(den or 1))
                row.append(Homogeneous(F(c), _parse_vector(mt.group(2), m)))
        if len(row) != len(coldeg):
            raise ParseError(f"row {ln!r} has {len(row)} entries, expected {len(coldeg)}")
        entries.append(row)
    return HomogeneousMatrix(k, rowdeg, coldeg, entries)


def _fmt_vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def format_matrix(A: HomogeneousMatrix) -> str:
    k = A.k
    lines = [
        f"gfield {k.base_field} rank {k.ambient_rank} support ("
        + "; ".join(",".join(map(str, v)) for v in k.lattice.basis)
        + ")",
        "rowdeg " + "; ".join(_fmt_vec(d) for d in A.row_degrees),
        "coldeg " + "; ".join(_fmt_vec(d) for d in A.col_degrees),
    ]
    for row in A.entries:
        lines.append(" ".join(str(a) for a in row))
    return "\n".join(lines) + "\n"
