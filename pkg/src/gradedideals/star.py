"""The largest graded subideal I* of an ideal I.

``star`` is exact: homogenize every generator with one auxiliary variable per
grading row (x_j -> u^deg(x_j) x_j), clear negative u-powers, saturate by the
product of the u's and eliminate them. ``star_truncated_oracle`` computes the
same thing degree by degree with linear algebra and serves as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError, UsageError
from .idealops import Ideal, eliminate_front, fresh_names
from .linalg import nullspace
from .ring import ZERO_DEGREE, GradingMap, Polynomial, PolynomialRing


@dataclass
class StarResult:
    """I* plus, for each of its generators, the degree at which it is a homogeneous member of I."""

    star_ideal: Ideal
    witness: dict = field(default_factory=dict)

    @property
    def generators(self):
        return self.star_ideal.generators


def star(I: Ideal, W: GradingMap) -> StarResult:
    R = I.ring
    W.check_ring(R)
    m = W.m
    names = fresh_names(R, "z", 1) + fresh_names(R, "u", m)
    T = PolynomialRing(R.field, tuple(names) + R.variables)
    k = m + 1
    gens = []
    for f in I.generators:
        degs = {e: W.degree(e) for e in f.data}
        low = [min(d[i] for d in degs.values()) for i in range(m)]
        data = {}
        for e, c in f.data.items():
            shift = tuple(degs[e][i] - low[i] for i in range(m))
            data[(0,) + shift + e] = c
        gens.append(Polynomial(T, data))
    if gens:
        gens.append(T.one - T.monomial((1,) * k + (0,) * R.n))
    J = eliminate_front(gens, k, R)
    result = StarResult(J)
    gb = I.groebner()
    for g in J.generators:
        deg = W.is_homogeneous(g)
        if deg is None or deg == ZERO_DEGREE or not gb.contains(g):
            raise AssertionError(f"star produced {g}, which is not a homogeneous element of I")
        result.witness[g] = deg
    return result


def is_graded(I: Ideal, W: GradingMap) -> bool:
    """True iff every homogeneous component of every reduced basis element lies in I."""
    W.check_ring(I.ring)
    gb = I.groebner()
    for g in gb:
        parts = W.components(g)
        if len(parts) > 1 and not all(gb.contains(p) for p in parts.values()):
            return False
    return True


def _total_weight_table(W: GradingMap) -> list:
    col = [sum(W.column(j)) for j in range(W.n)]
    if not W.is_nonnegative() or any(c <= 0 for c in col):
        raise PreconditionError(
            "the truncated oracle needs nonnegative weights with every variable of positive weight"
        )
    return col


def monomials_up_to_weight(weights: list, D: int):
    """All exponent tuples e with sum(weights[j] * e[j]) <= D."""
    n = len(weights)

    def rec(j, budget):
        if j == n:
            yield ()
            return
        for a in range(budget // weights[j] + 1):
            for rest in rec(j + 1, budget - a * weights[j]):
                yield (a,) + rest

    if D < 0:
        return
    yield from rec(0, D)


def default_truncation(I: Ideal, W: GradingMap) -> int:
    col = _total_weight_table(W)
    top = max(
        (sum(c * x for c, x in zip(col, e)) for g in I.generators for e in g.data), default=0
    )
    return top + 2


def star_truncated_oracle(I: Ideal, W: GradingMap, D: int | None = None) -> Ideal:
    """Ideal generated by bases of I ∩ R_g over all degrees g of total weight <= D."""
    R = I.ring
    W.check_ring(R)
    col = _total_weight_table(W)
    if D is None:
        D = default_truncation(I, W)
    F = R.field
    gb = I.groebner()
    by_degree: dict = {}
    for e in monomials_up_to_weight(col, D):
        by_degree.setdefault(W.degree(e), []).append(e)
    found = []
    for deg in sorted(by_degree):
        monos = by_degree[deg]
        index: dict = {}
        columns = []
        for e in monos:
            nf = gb.reduce(R.monomial(e))
            columns.append({index.setdefault(t, len(index)): c for t, c in nf.data.items()})
        rows: dict = {}
        for j, colvec in enumerate(columns):
            for i, c in colvec.items():
                rows.setdefault(i, {})[j] = c
        for vec in nullspace(list(rows.values()), len(monos), F):
            found.append(Polynomial(R, {monos[j]: c for j, c in vec.items()}))
    return Ideal(R, found).canonical()


@dataclass
class PrimeStarReport:
    prime: Ideal
    star_ideal: Ideal
    graded: bool
    is_prime: bool
    reason: str


def star_of_prime_check(p: Ideal, W: GradingMap) -> PrimeStarReport:
    """Compute p* for a known prime p and certify that it is a graded prime.

    Certification covers the cases that arise for point ideals and principal
    primes: p* = 0, p* generated by linear forms, or p* = p.
    """
    R = p.ring
    if p.is_unit():
        raise UsageError("the unit ideal is not prime")
    ps = star(p, W).star_ideal
    graded = is_graded(ps, W)
    gb = ps.groebner()
    if gb.is_zero():
        prime, reason = True, "p* = 0 and R is a domain"
    elif all(g.total_degree() == 1 for g in gb):
        prime, reason = True, "p* is generated by linear forms"
    elif ps == p:
        prime, reason = True, "p* = p, which is prime by hypothesis"
    else:
        prime, reason = False, "no primality certificate for this p*"
    return PrimeStarReport(p, ps, graded, prime, reason)


def point_line_form(ring: PolynomialRing, a, b) -> Polynomial:
    """b*x - a*y: generator of (x - a, y - b)* for a point away from the origin."""
    x, y = ring.gens[:2]
    return ring.constant(b) * x - ring.constant(a) * y


__all__ = [
    "StarResult",
    "star",
    "is_graded",
    "star_truncated_oracle",
    "star_of_prime_check",
    "PrimeStarReport",
    "default_truncation",
    "monomials_up_to_weight",
]
