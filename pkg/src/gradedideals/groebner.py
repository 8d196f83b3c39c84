"""Buchberger's algorithm (Gebauer-Moeller criteria, sugar selection), normal forms, membership."""

from __future__ import annotations

import heapq
from operator import add, ge, sub
from typing import Sequence

from .errors import UsageError
from .ring import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    coprime,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)


def _negkey(key, m):
    return tuple(-k for k in key(m))


def reduce_data(p: dict, basis: Sequence, key, F, full: bool = True) -> dict:
    """Reduce the coefficient dict ``p`` by ``basis``.

    ``basis`` is a sequence of (leading monomial, monic data dict). The highest
    reducible term is always reduced first, by the first basis element whose
    leading monomial divides it. With ``full=False`` only the leading term is
    made irreducible.
    """
    p = dict(p)
    heap = [(_negkey(key, m), m) for m in p]
    heapq.heapify(heap)
    out = {}
    modulus = F.characteristic
    degs = [sum(lm) for lm, _ in basis]
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        dm = sum(m)
        for (lm, g), dl in zip(basis, degs):
            if dl <= dm and all(map(ge, m, lm)):
                q = tuple(map(sub, m, lm))
                for e, d in g.items():
                    if e == lm:
                        continue
                    t = tuple(map(add, e, q))
                    old = p.get(t)
                    if old is None:
                        p[t] = (-c * d) % modulus if modulus else -c * d
                        heapq.heappush(heap, (_negkey(key, t), t))
                    else:
                        v = (old - c * d) % modulus if modulus else old - c * d
                        if v:
                            p[t] = v
                        else:
                            del p[t]
                break
        else:
            out[m] = c
            if not full:
                out.update(p)
                return out
    return out


def _monic(data: dict, lm, F) -> dict:
    inv = F.inv(data[lm])
    if inv == F.one:
        return data
    return {e: F.mul(c, inv) for e, c in data.items()}


def _spoly(f: dict, lf, g: dict, lg, F) -> dict:
    lcm = monomial_lcm(lf, lg)
    qf, qg = monomial_div(lcm, lf), monomial_div(lcm, lg)
    out = {}
    for e, c in f.items():
        out[tuple(x + y for x, y in zip(e, qf))] = c
    for e, c in g.items():
        t = tuple(x + y for x, y in zip(e, qg))
        v = F.sub(out.get(t, F.zero), c)
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial, descending."""

    def __init__(self, ring: PolynomialRing, order: MonomialOrder, elements: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        key = order.keyfunc()
        self.elements = tuple(sorted(elements, key=lambda g: key(max(g.data, key=key)), reverse=True))
        self.leading_monomials = tuple(max(g.data, key=key) for g in self.elements)
        self._pairs = tuple(zip(self.leading_monomials, (g.data for g in self.elements)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}], order={self.order})"

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self) -> bool:
        return not self.elements

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise UsageError(f"ring mismatch: {f.ring} vs {self.ring}")
        return Polynomial(self.ring, reduce_data(f.data, self._pairs, self.order.keyfunc(), self.ring.field))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    __contains__ = contains

    def spolynomials_reduce_to_zero(self) -> bool:
        """Buchberger's criterion, checked pair by pair without any criteria."""
        F = self.ring.field
        key = self.order.keyfunc()
        pairs = self._pairs
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                s = _spoly(pairs[i][1], pairs[i][0], pairs[j][1], pairs[j][0], F)
                if reduce_data(s, pairs, key, F):
                    return False
        return True

    def is_reduced(self) -> bool:
        F = self.ring.field
        for lm, g in self._pairs:
            if g[lm] != F.one:
                return False
            for lm2, _ in self._pairs:
                if lm2 is lm:
                    continue
                if any(monomial_divides(lm2, e) for e in g):
                    return False
        return True


def _update(G, B, h, lms):
    """Gebauer-Moeller installation of the new basis element ``h``."""
    lh = lms[h]
    C = list(G)
    D = []
    while C:
        g1 = C.pop(0)
        L1 = monomial_lcm(lh, lms[g1])
        if coprime(lh, lms[g1]) or not any(
            monomial_divides(monomial_lcm(lh, lms[g2]), L1) for g2 in C + D
        ):
            D.append(g1)
    E = [(g, h) for g in D if not coprime(lh, lms[g])]
    B_new = []
    for g1, g2, L in B:
        if (
            not monomial_divides(lh, L)
            or monomial_lcm(lms[g1], lh) == L
            or monomial_lcm(lms[g2], lh) == L
        ):
            B_new.append((g1, g2, L))
    B_new.extend((g, hh, monomial_lcm(lms[g], lms[hh])) for g, hh in E)
    G_new = [g for g in G if not monomial_divides(lh, lms[g])]
    G_new.append(h)
    return G_new, B_new


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX, ring=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise UsageError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise UsageError(f"ring mismatch: {g.ring} vs {ring}")
    F = ring.field
    key = order.keyfunc()
    one = (0,) * ring.n

    polys: list = []
    lms: list = []
    sugar: list = []
    G: list = []
    B: list = []

    def basis_pairs():
        return [(lms[i], polys[i]) for i in G]

    def install(data, sug):
        nonlocal G, B
        lm = max(data, key=key)
        polys.append(_monic(data, lm, F))
        lms.append(lm)
        sugar.append(max(sug, max(sum(e) for e in data)))
        G, B = _update(G, B, len(polys) - 1, lms)

    def pair_sugar(i, j, L):
        d = sum(L)
        return max(sugar[i] + d - sum(lms[i]), sugar[j] + d - sum(lms[j]))

    unit = GroebnerBasis(ring, order, [ring.one])
    for f in sorted((g for g in gens if g.data), key=lambda g: key(max(g.data, key=key))):
        h = reduce_data(f.data, basis_pairs(), key, F, full=False)
        if h:
            if max(h, key=key) == one:
                return unit
            install(h, 0)

    # sugar strategy: lowest sugar first, ties by the smallest lcm
    while B:
        best = min(range(len(B)), key=lambda t: (pair_sugar(*B[t]), key(B[t][2]), B[t][0], B[t][1]))
        i, j, L = B.pop(best)
        sug = pair_sugar(i, j, L)
        s = _spoly(polys[i], lms[i], polys[j], lms[j], F)
        h = reduce_data(s, basis_pairs(), key, F, full=False)
        if h:
            if max(h, key=key) == one:
                return unit
            install(h, sug)

    # minimal basis, then interreduce
    minimal = []
    for i in sorted(G, key=lambda t: key(lms[t])):
        if not any(monomial_divides(lms[k], lms[i]) for k in minimal):
            minimal.append(i)
    reduced = []
    for i in minimal:
        others = [(lms[k], polys[k]) for k in minimal if k != i]
        data = reduce_data(polys[i], others, key, F)
        reduced.append(Polynomial(ring, _monic(data, lms[i], F)))
    return GroebnerBasis(ring, order, reduced)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(f)
