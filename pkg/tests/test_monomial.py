import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedideals import PolynomialRing, QQ
from gradedideals.artinian import index_of_reducibility_primary
from gradedideals.errors import PreconditionError, UsageError
from gradedideals.harness import random_m_primary_monomial_ideal
from gradedideals.monomial import (
    MonomialIdeal,
    index_of_reducibility_monomial,
    intersect_all,
    irreducible_decomposition,
    minimal_primes_squarefree,
)

from oracles import box, monomial_in


def M(*gens):
    return MonomialIdeal(len(gens[0]), gens)


def test_minimal_generators_form_an_antichain():
    I = M((2, 0), (2, 1), (1, 1), (0, 3), (0, 4))
    assert I.minimal_generators == ((0, 3), (1, 1), (2, 0))
    with pytest.raises(UsageError):
        MonomialIdeal(2, [(1, 2, 3)])
    with pytest.raises(UsageError):
        MonomialIdeal(2, [(-1, 2)])


def test_decomposition_examples():
    dec = irreducible_decomposition(M((2, 0), (1, 1), (0, 3)))
    assert dec.components == [M((1, 0), (0, 3)), M((2, 0), (0, 1))]
    dec = irreducible_decomposition(M((4, 0), (2, 2), (0, 4)))
    assert dec.components == [M((2, 0), (0, 4)), M((4, 0), (0, 2))]
    dec = irreducible_decomposition(M((3, 0), (0, 5)))
    assert dec.count == 1 and dec.components == [M((3, 0), (0, 5))]


def test_index_of_reducibility_examples():
    assert index_of_reducibility_monomial(M((2, 0), (1, 1), (0, 3))) == 2
    assert index_of_reducibility_monomial(M((4, 0), (2, 2), (0, 4))) == 2
    assert index_of_reducibility_monomial(M((1, 0), (0, 1))) == 1


def test_unit_and_formatting():
    assert irreducible_decomposition(MonomialIdeal(2, [(0, 0)])).count == 0
    assert M((2, 0), (0, 1)).format(["x", "y"]) == "(y, x^2)"
    assert M((1, 0), (0, 3)).format(["x", "y"]) == "(x, y^3)"


def _random_monomial_ideal(rng, n, gens, power):
    return MonomialIdeal(n, [tuple(rng.randint(0, power) for _ in range(n)) for _ in range(gens)])


@pytest.mark.parametrize("seed", range(25))
def test_decomposition_is_correct_and_irredundant(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    I = _random_monomial_ideal(rng, n, rng.randint(1, 4), 3)
    if I.is_unit():
        return
    dec = irreducible_decomposition(I)
    for C in dec.components:
        assert C.is_irreducible()
    # brute-force membership on a box that contains every corner
    for e in box(n, 5):
        inside_all = all(monomial_in(e, C.minimal_generators) for C in dec.components)
        assert monomial_in(e, I.minimal_generators) == inside_all
    for i, C in enumerate(dec.components):
        others = intersect_all(dec.components[:i] + dec.components[i + 1 :], n)
        assert not C.contains_ideal(others)


@pytest.mark.parametrize("seed", range(20))
def test_decomposition_count_matches_socle_rank(seed):
    rng = random.Random(seed)
    I = random_m_primary_monomial_ideal(rng, max_vars=3, max_power=5)
    R = PolynomialRing(QQ, ["x", "y", "z"][: I.n])
    assert index_of_reducibility_monomial(I) == index_of_reducibility_primary(I.to_ideal(R))


def _minimal_covers(n, supports):
    covers = []
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if all(set(S) & s for s in supports) and not any(set(c) <= set(S) for c in covers):
                covers.append(S)
    return sorted(covers, key=lambda c: (len(c), c))


def test_minimal_primes_examples():
    assert minimal_primes_squarefree(M((1, 1))) == [(0,), (1,)]
    assert minimal_primes_squarefree(M((1, 1, 0), (1, 0, 1))) == [(0,), (1, 2)]
    assert minimal_primes_squarefree(M((1, 0))) == [(0,)]
    with pytest.raises(PreconditionError):
        minimal_primes_squarefree(M((2, 1)))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(st.tuples(*[st.integers(0, 1)] * n), min_size=1, max_size=5)
    )
)
def test_minimal_primes_are_minimal_vertex_covers(gens):
    n = len(gens[0])
    I = MonomialIdeal(n, gens)
    if I.is_unit():
        assert minimal_primes_squarefree(I) == []
        return
    supports = [{i for i in range(n) if g[i]} for g in I.minimal_generators]
    primes = minimal_primes_squarefree(I)
    assert primes == _minimal_covers(n, supports)
    assert len(primes) == index_of_reducibility_monomial(I)


@pytest.mark.parametrize("seed", range(30))
def test_random_m_primary_generator_bounds(seed):
    I = random_m_primary_monomial_ideal(random.Random(seed))
    assert 1 <= I.n <= 3 and I.is_m_primary()
    pure = [g for g in I.minimal_generators if sum(1 for a in g if a) == 1]
    assert all(max(g) <= 6 for g in pure)
