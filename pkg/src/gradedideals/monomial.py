"""Monomial ideals and their irredundant irreducible decompositions.

A monomial ideal is irreducible iff it is generated by pure powers of
variables. Decomposition splits a mixed generator m = u*v (u, v coprime)
into (G + u) ∩ (G + v) until only pure powers remain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, UsageError
from .idealops import Ideal
from .ring import PolynomialRing, monomial_divides, monomial_lcm


def minimalize(gens: Iterable) -> tuple:
    """Minimal generators (an antichain under divisibility), sorted."""
    out: list = []
    for g in sorted(set(map(tuple, gens)), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


class MonomialIdeal:
    """A monomial ideal of k[x_1..x_n], stored by its minimal generators."""

    def __init__(self, n: int, generators: Iterable = ()):
        gens = [tuple(g) for g in generators]
        if any(len(g) != n or min(g, default=0) < 0 for g in gens):
            raise UsageError(f"bad exponent vectors for {n} variables: {gens}")
        self.n = n
        self.minimal_generators = minimalize(gens)

    @classmethod
    def from_ideal(cls, I: Ideal) -> MonomialIdeal:
        gens = []
        for g in I.generators:
            if not g.is_monomial():
                raise PreconditionError(f"{g} is not a monomial")
            gens.append(next(iter(g.data)))
        return cls(I.ring.n, gens)

    def to_ideal(self, ring: PolynomialRing) -> Ideal:
        return Ideal(ring, [ring.monomial(e) for e in self.minimal_generators])

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.minimal_generators == other.minimal_generators
        )

    def __hash__(self):
        return hash((self.n, self.minimal_generators))

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.minimal_generators)})"

    def format(self, names: Sequence[str]) -> str:
        from .ring import _format_monomial

        gens = sorted(self.minimal_generators, key=lambda e: (sum(e), tuple(-a for a in e)))
        return "(" + ", ".join(_format_monomial(e, names) or "1" for e in gens) + ")"

    def contains(self, e) -> bool:
        return any(monomial_divides(g, e) for g in self.minimal_generators)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains(g) for g in other.minimal_generators)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(
            self.n, [monomial_lcm(a, b) for a in self.minimal_generators for b in other.minimal_generators]
        )

    def is_unit(self) -> bool:
        return (0,) * self.n in self.minimal_generators

    def is_irreducible(self) -> bool:
        """Pure powers only (the zero ideal counts as irreducible; the unit ideal does not)."""
        if self.is_unit():
            return False
        return all(sum(1 for x in g if x) == 1 for g in self.minimal_generators)

    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.minimal_generators for x in g)

    def is_m_primary(self) -> bool:
        pure = {i for g in self.minimal_generators for i in range(self.n) if g[i] and sum(1 for x in g if x) == 1}
        return not self.is_unit() and len(pure) == self.n

    def exponent_vector(self) -> tuple:
        """For an irreducible ideal: a_i with x_i^{a_i} a generator, 0 if x_i is absent."""
        a = [0] * self.n
        for g in self.minimal_generators:
            (i,) = [k for k in range(self.n) if g[k]]
            a[i] = g[i]
        return tuple(a)


def intersect_all(ideals: Sequence[MonomialIdeal], n: int) -> MonomialIdeal:
    result = MonomialIdeal(n, [(0,) * n])
    for J in ideals:
        result = result.intersect(J)
    return result


@dataclass
class IrreducibleDecomposition:
    ideal: MonomialIdeal
    components: list

    @property
    def count(self) -> int:
        return len(self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect_all(self.components, self.ideal.n)


def _split(gens: tuple, n: int, leaves: list):
    for g in gens:
        support = [i for i in range(n) if g[i]]
        if len(support) >= 2:
            i = support[0]
            u = tuple(g[i] if k == i else 0 for k in range(n))
            v = tuple(0 if k == i else g[k] for k in range(n))
            rest = [h for h in gens if h != g]
            _split(minimalize(rest + [u]), n, leaves)
            _split(minimalize(rest + [v]), n, leaves)
            return
    leaves.append(MonomialIdeal(n, gens))


def irreducible_decomposition(I: MonomialIdeal) -> IrreducibleDecomposition:
    n = I.n
    if I.is_unit():
        return IrreducibleDecomposition(I, [])
    leaves: list = []
    _split(I.minimal_generators, n, leaves)
    unique = list(dict.fromkeys(leaves))
    # a component containing another one is redundant
    kept = [
        C for C in unique if not any(D != C and C.contains_ideal(D) for D in unique)
    ]
    for i, C in enumerate(kept):
        others = intersect_all(kept[:i] + kept[i + 1 :], n)
        if C.contains_ideal(others):
            raise AssertionError(f"component {C} is redundant after pruning")
    kept.sort(key=lambda C: C.exponent_vector())
    return IrreducibleDecomposition(I, kept)


def index_of_reducibility_monomial(I: MonomialIdeal) -> int:
    return irreducible_decomposition(I).count


def minimal_primes_squarefree(I: MonomialIdeal) -> list:
    """Minimal primes of a squarefree monomial ideal, as sorted tuples of variable indices."""
    if not I.is_squarefree():
        raise PreconditionError("minimal_primes_squarefree needs squarefree generators")
    if I.is_unit():
        return []
    primes = [
        tuple(i for i, a in enumerate(C.exponent_vector()) if a)
        for C in irreducible_decomposition(I).components
    ]
    return sorted(primes, key=lambda p: (len(p), p))
