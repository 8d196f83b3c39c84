"""Session files: a ring, a grading and named ideals, point sets and matrices.

One declaration per line, ``#`` starts a comment::

    ring QQ[x,y]
    order grevlex
    grading [[1,1]]
    ideal I = x^2, x*y, y^3, x - y^2
    points P = (0,1); (0,2); (0,3)
    matrix A = gfield GF(7) rank 2 support (1,0; 0,1) | rowdeg (0,0) | coldeg (1,0) | 3*e(-1,0)

A matrix is the ``gfield`` text format with `` | `` in place of newlines.
Names must be declared before they are referenced, and ideals need a ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, UsageError
from .gradedfield import HomogeneousMatrix, format_matrix, parse_matrix
from .idealops import Ideal
from .parser import split_top_level
from .ring import GREVLEX, GradingMap, MonomialOrder, PolynomialRing

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DECL_RE = re.compile(r"(ideal|points|matrix)\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)")


def parse_points(text: str) -> list:
    """``(a,b); (c,d)`` with integer or rational coordinates."""
    pts = []
    for piece, _ in split_top_level(text, ";"):
        piece = piece.strip()
        if not piece:
            continue
        m = re.fullmatch(r"\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)", piece)
        if not m:
            raise ParseError(f"bad point {piece!r}; expected (a,b)")
        try:
            pts.append((Fraction(m.group(1)), Fraction(m.group(2))))
        except ValueError:
            raise ParseError(f"bad coordinates in {piece!r}") from None
    if not pts:
        raise ParseError("a point configuration needs at least one point")
    return pts


def format_points(points) -> str:
    return "; ".join(f"({a},{b})" for a, b in points)


def format_ideal(I: Ideal) -> str:
    """Generators by increasing total degree, ties broken by decreasing grevlex leading term."""
    gens = sorted(
        I.generators,
        key=lambda g: (g.total_degree(), tuple(-k for k in GREVLEX.key(g.leading_monomial(GREVLEX)))),
    )
    return ", ".join(str(g) for g in gens) if gens else "0"


@dataclass
class Session:
    ring: PolynomialRing | None = None
    order: MonomialOrder = GREVLEX
    grading: GradingMap | None = None
    ideals: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)

    def names(self) -> set:
        return set(self.ideals) | set(self.points) | set(self.matrices)

    def _lookup(self, table: dict, kind: str, ref: str):
        name = ref[1:] if ref.startswith("@") else ref
        if name not in table:
            raise UsageError(f"no {kind} named {name!r} in the session")
        return table[name]

    def ideal(self, ref: str) -> Ideal:
        return self._lookup(self.ideals, "ideal", ref)

    def point_set(self, ref: str) -> list:
        return self._lookup(self.points, "point configuration", ref)

    def matrix(self, ref: str) -> HomogeneousMatrix:
        return self._lookup(self.matrices, "matrix", ref)

    def __eq__(self, other):
        return isinstance(other, Session) and format_session(self) == format_session(other)


def parse_session(text: str) -> Session:
    s = Session()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            _declare(s, line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.message}", exc.position, exc.text) from None
        except UsageError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    return s


def _declare(s: Session, line: str):
    word, _, rest = line.partition(" ")
    rest = rest.strip()
    if word == "ring":
        if s.ring is not None:
            raise UsageError("the ring is declared twice")
        s.ring = PolynomialRing.from_string(rest).with_order(s.order)
        return
    if word == "order":
        s.order = MonomialOrder.parse(rest)
        if s.ring is not None:
            s.ring = s.ring.with_order(s.order)
        return
    if word == "grading":
        s.grading = GradingMap.parse(rest)
        if s.ring is not None:
            s.grading.check_ring(s.ring)
        return
    m = _DECL_RE.fullmatch(line)
    if not m:
        raise ParseError(f"unrecognized declaration {line!r}")
    kind, name, body = m.groups()
    if name in s.names():
        raise UsageError(f"{name!r} is declared twice")
    if kind == "ideal":
        if s.ring is None:
            raise UsageError(f"ideal {name!r} is declared before the ring")
        s.ideals[name] = Ideal.parse(s.ring, body)
    elif kind == "points":
        s.points[name] = parse_points(body)
    else:
        s.matrices[name] = parse_matrix(body.replace("|", "\n"))


def format_session(s: Session) -> str:
    lines = []
    if s.ring is not None:
        lines.append(f"ring {s.ring}")
    lines.append(f"order {s.order}")
    if s.grading is not None:
        lines.append(f"grading {s.grading}")
    for name, I in s.ideals.items():
        lines.append(f"ideal {name} = {', '.join(str(g) for g in I.generators)}")
    for name, P in s.points.items():
        lines.append(f"points {name} = {format_points(P)}")
    for name, A in s.matrices.items():
        lines.append(f"matrix {name} = " + " | ".join(format_matrix(A).strip().splitlines()))
    return "\n".join(lines) + "\n"
