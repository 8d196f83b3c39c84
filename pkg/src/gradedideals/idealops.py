"""Ideals and the standard ideal operations, all reduced to Groebner bases."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import UsageError
from .groebner import GroebnerBasis, buchberger
from .ring import GREVLEX, MonomialOrder, Polynomial, PolynomialRing, elimination_order


class Ideal:
    """An ideal given by generators, with Groebner bases cached per monomial order."""

    def __init__(self, ring: PolynomialRing, generators: Iterable = ()):
        gens = []
        for g in generators:
            g = ring(g)
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: dict = {}

    @classmethod
    def parse(cls, ring: PolynomialRing, text: str) -> Ideal:
        from .parser import parse_polynomial_list

        return cls(ring, parse_polynomial_list(text, ring))

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, ring=self.ring)
            self._gb[order] = gb
        return gb

    def reduce(self, f) -> Polynomial:
        return self.groebner().reduce(self.ring(f))

    def __contains__(self, f) -> bool:
        return self.reduce(f).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return all(g in self for g in other.generators)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def canonical(self) -> Ideal:
        """The same ideal generated by its reduced grevlex basis."""
        J = Ideal(self.ring, self.groebner().elements)
        J._gb[GREVLEX] = self.groebner()
        return J

    def __add__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __and__(self, other: Ideal) -> Ideal:
        return intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.groebner().elements))

    def __str__(self):
        return ", ".join(map(str, self.generators)) if self.generators else "0"

    def __repr__(self):
        return f"Ideal({self.ring}, [{self}])"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise UsageError(f"ring mismatch: {I.ring} vs {J.ring}")


def fresh_names(ring: PolynomialRing, stem: str, count: int) -> list:
    """``count`` variable names starting with ``stem`` that are not used by ``ring``."""
    names, i = [], 0
    taken = set(ring.variables)
    while len(names) < count:
        name = f"{stem}{i}" if i else stem
        if name not in taken:
            names.append(name)
        i += 1
    return names


def eliminate_front(gens: Sequence[Polynomial], k: int, target: PolynomialRing) -> Ideal:
    """Contract the ideal of ``gens`` (first ``k`` variables eliminated) into ``target``.

    The variables after the first ``k`` must be exactly those of ``target``, in order.
    """
    big = gens[0].ring if gens else None
    if big is None:
        return Ideal(target)
    gb = buchberger(gens, elimination_order(k), ring=big)
    out = []
    for g in gb:
        if all(not any(e[:k]) for e in g.data):
            out.append(Polynomial(target, {e[k:]: c for e, c in g.data.items()}))
    return Ideal(target, out)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    R = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(R)
    (t,) = fresh_names(R, "t", 1)
    T = PolynomialRing(R.field, (t,) + R.variables)
    pos = list(range(1, R.n + 1))
    tt = T.gen(0)
    gens = [tt * f.embed(T, pos) for f in I.generators]
    gens += [(T.one - tt) * g.embed(T, pos) for g in J.generators]
    return eliminate_front(gens, 1, R)


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = ∩_j (I : j), with (I : f) = (I ∩ (f)) / f."""
    _same_ring(I, J)
    R = I.ring
    result = None
    for f in J.generators:
        inter = intersect(I, Ideal(R, [f]))
        part = Ideal(R, [g.exact_div(f) for g in inter.groebner()])
        result = part if result is None else intersect(result, part)
    if result is None:
        return Ideal(R, [R.one])
    return result


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞) by eliminating z from I + (1 - z*f)."""
    R = I.ring
    f = R(f)
    if f.is_zero():
        raise UsageError("cannot saturate by the zero polynomial")
    if f.is_constant():
        return Ideal(R, I.generators)
    (z,) = fresh_names(R, "z", 1)
    T = PolynomialRing(R.field, (z,) + R.variables)
    pos = list(range(1, R.n + 1))
    gens = [g.embed(T, pos) for g in I.generators]
    gens.append(T.one - T.gen(0) * f.embed(T, pos))
    return eliminate_front(gens, 1, R)


def eliminate(I: Ideal, variables: Iterable[str]) -> Ideal:
    """I ∩ k[remaining variables], returned as an ideal of the original ring."""
    R = I.ring
    drop = [R.index(v) if isinstance(v, str) else int(v) for v in variables]
    drop = sorted(set(drop))
    if not drop:
        return Ideal(R, I.generators)
    keep = [i for i in range(R.n) if i not in drop]
    perm = drop + keep  # new position p holds old variable perm[p]
    T = PolynomialRing(R.field, [R.variables[i] for i in perm])
    where = {old: new for new, old in enumerate(perm)}
    gens = [g.embed(T, [where[i] for i in range(R.n)]) for g in I.generators]
    k = len(drop)
    if not gens:
        return Ideal(R)
    gb = buchberger(gens, elimination_order(k), ring=T)
    out = []
    for g in gb:
        if all(not any(e[:k]) for e in g.data):
            data = {}
            for e, c in g.data.items():
                new = [0] * R.n
                for p, x in enumerate(e):
                    new[perm[p]] = x
                data[tuple(new)] = c
            out.append(Polynomial(R, data))
    return Ideal(R, out)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.groebner().elements == J.groebner().elements


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return f in I


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return I + J


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return I * J
