"""Zero-dimensional quotients R/I: standard monomials, m-primary tests, socles.

Here m is always the ideal generated by all variables. The socle of R/I is
computed as the common kernel of the multiplication maps x_i on the
standard-monomial basis; for an m-primary I its rank is the index of
reducibility of I.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, PreconditionError
from .idealops import Ideal, quotient
from .linalg import EchelonSpace, nullspace
from .ring import GREVLEX, MonomialOrder, Polynomial, monomial_divides


@dataclass
class QuotientBasis:
    ideal: Ideal
    standard_monomials: list
    order: MonomialOrder = GREVLEX

    @property
    def dim(self) -> int:
        return len(self.standard_monomials)

    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.standard_monomials)}

    def coordinates(self, f: Polynomial) -> dict:
        """Coordinates of the normal form of ``f`` on the standard monomials."""
        idx = self.index()
        nf = self.ideal.groebner(self.order).reduce(f)
        return {idx[e]: c for e, c in nf.data.items()}


@dataclass
class SocleBasis:
    elements: list
    quotient: QuotientBasis

    @property
    def rank(self) -> int:
        return len(self.elements)

    def spans(self, f: Polynomial) -> bool:
        """True iff the class of ``f`` modulo I lies in the socle."""
        F = self.quotient.ideal.ring.field
        space = EchelonSpace(F)
        for e in self.elements:
            space.insert(self.quotient.coordinates(e))
        return space.contains(self.quotient.coordinates(f))


def is_zero_dimensional(I: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    gb = I.groebner(order)
    if gb.is_unit():
        return True
    n = I.ring.n
    pure = set()
    for lm in gb.leading_monomials:
        support = [i for i in range(n) if lm[i]]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == n


def standard_monomials(I: Ideal, order: MonomialOrder = GREVLEX) -> QuotientBasis:
    """Monomials outside the leading-term ideal, in increasing order."""
    if not is_zero_dimensional(I, order):
        raise DimensionError(f"({I}) is not zero-dimensional")
    gb = I.groebner(order)
    lms = gb.leading_monomials
    n = I.ring.n
    if gb.is_unit():
        return QuotientBasis(I, [], order)
    seen = set()
    stack = [(0,) * n]
    while stack:
        e = stack.pop()
        if e in seen or any(monomial_divides(lm, e) for lm in lms):
            continue
        seen.add(e)
        for i in range(n):
            stack.append(e[:i] + (e[i] + 1,) + e[i + 1 :])
    key = order.keyfunc()
    return QuotientBasis(I, sorted(seen, key=key), order)


def is_m_primary(I: Ideal) -> bool:
    """Proper, and every variable nilpotent modulo I (x_i^(dim+1) ∈ I)."""
    if I.is_unit() or not is_zero_dimensional(I):
        return False
    N = standard_monomials(I).dim + 1
    return all(g**N in I for g in I.ring.gens)


def multiplication_matrices(Q: QuotientBasis) -> list:
    """For each variable, its matrix on the standard basis as a list of sparse columns."""
    R = Q.ideal.ring
    mats = []
    for x in R.gens:
        mats.append([Q.coordinates(x * R.monomial(e)) for e in Q.standard_monomials])
    return mats


def _require_m_primary(I: Ideal):
    if not is_m_primary(I):
        raise PreconditionError(f"({I}) is not primary to the maximal ideal of the variables")


def socle(I: Ideal) -> SocleBasis:
    _require_m_primary(I)
    Q = standard_monomials(I)
    R = I.ring
    rows = []
    for cols in multiplication_matrices(Q):
        by_row: dict = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                by_row.setdefault(r, {})[c] = v
        rows.extend(by_row.values())
    # highest standard monomial first, so each kernel vector is pinned at a top monomial
    d = Q.dim
    flipped = [{d - 1 - c: v for c, v in row.items()} for row in rows]
    elements = []
    for vec in nullspace(flipped, d, R.field):
        f = Polynomial(R, {Q.standard_monomials[d - 1 - c]: v for c, v in vec.items()})
        elements.append(f.monic(GREVLEX))
    elements.sort(key=lambda f: GREVLEX.key(f.leading_monomial(GREVLEX)), reverse=True)
    return SocleBasis(elements, Q)


def socle_rank_via_quotient(I: Ideal) -> int:
    """dim (I : m)/I, computed through the ideal quotient."""
    _require_m_primary(I)
    m = Ideal(I.ring, I.ring.gens)
    return standard_monomials(I).dim - standard_monomials(quotient(I, m)).dim


def index_of_reducibility_primary(I: Ideal) -> int:
    return socle(I).rank


def is_irreducible_primary(I: Ideal) -> bool:
    return socle(I).rank == 1
