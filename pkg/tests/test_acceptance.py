"""Acceptance criteria 1-8, each at its stated tolerance (exact) and runtime bound.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
terminal summary.
"""

import time

import pytest

from gradedideals import Ideal, PolynomialRing, QQ
from gradedideals.artinian import index_of_reducibility_primary, is_m_primary, socle
from gradedideals.harness import (
    DEFAULT_SEED,
    PointConfiguration,
    gradedfield_suite,
    groebner_soundness_suite,
    monomial_cross_suite,
    star_laws_suite,
    theorem51_check,
    point_configuration_suite,
)
from gradedideals.idealops import ideal_equal
from gradedideals.ring import GradingMap
from gradedideals.star import is_graded, star


class Criterion:
    def __init__(self, number, title, limit, log):
        self.number, self.title, self.limit, self.log = number, title, limit, log
        self.failures = []

    def check(self, name, ok):
        if not ok:
            self.failures.append(name)

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed >= self.limit:
            self.failures.append(f"runtime {elapsed:.2f}s exceeds {self.limit}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number} {status}: {self.title} ({elapsed:.2f}s, limit {self.limit}s)"
        if self.failures:
            line += " -- " + "; ".join(self.failures[:5])
        print(line)
        self.log.append(line)
        assert not self.failures, line
        return False


@pytest.fixture(scope="module")
def R():
    return PolynomialRing(QQ, ["x", "y"])


@pytest.fixture(scope="module")
def pool():
    """Every ideal touched by criteria 1-6, for the soundness criterion."""
    return []


def test_criterion_1_tail_ideal(R, pool, acceptance_log):
    with Criterion(1, "I = (x^2, xy, y^3, x - y^2): I*, socle ranks, ir", 1.0, acceptance_log) as c:
        I = Ideal.parse(R, "x^2, x*y, y^3, x - y^2")
        S = star(I, GradingMap.standard(2)).star_ideal
        pool += [I, S]
        c.check("I* = (x^2, xy, y^3)", ideal_equal(S, Ideal.parse(R, "x^2, x*y, y^3")))
        c.check("I m-primary", is_m_primary(I))
        c.check("I* m-primary", is_m_primary(S))
        c.check("rank soc(I) = 1", socle(I).rank == 1)
        c.check("rank soc(I*) = 2", socle(S).rank == 2)
        c.check("ir(I) = 1", index_of_reducibility_primary(I) == 1)
        c.check("ir(I*) = 2", index_of_reducibility_primary(S) == 2)


def test_criterion_2_quartic(R, pool, acceptance_log):
    with Criterion(2, "I = (x^4, x^2y^2, y^4, x^3y - xy^3): I*, socles, ir", 1.0, acceptance_log) as c:
        I = Ideal.parse(R, "x^4, x^2*y^2, y^4, x^3*y - y^3*x")
        # the binomial is homogeneous for the standard grading; the expected
        # I* is the largest subideal graded for the fine Z^2-grading
        c.check("I graded for the standard grading", is_graded(I, GradingMap.standard(2)))
        S = star(I, GradingMap.fine(2)).star_ideal
        pool += [I, S]
        c.check("I* = (x^4, x^2y^2, y^4)", ideal_equal(S, Ideal.parse(R, "x^4, x^2*y^2, y^4")))
        c.check("I m-primary", is_m_primary(I))
        c.check("I* m-primary", is_m_primary(S))
        soc_S = socle(S)
        c.check("rank soc(I*) = 2", soc_S.rank == 2)
        c.check("soc(I*) spanned by x^3y, xy^3", soc_S.spans(R("x^3*y")) and soc_S.spans(R("x*y^3")))
        soc_I = socle(I)
        c.check("rank soc(I) = 3", soc_I.rank == 3)
        for rep in ("x^3*y", "x^3 - x*y^2", "x^2*y - y^3"):
            c.check(f"{rep} in soc(I)", soc_I.spans(R(rep)))
        c.check("ir(I) = 3 > 2 = ir(I*)", index_of_reducibility_primary(I) == 3 and index_of_reducibility_primary(S) == 2)


def test_criterion_3_collinear_points(R, pool, acceptance_log):
    with Criterion(3, "I = (x, (y-1)...(y-r)), r = 1, 2, 3", 1.0, acceptance_log) as c:
        y = R("y")
        for r in (1, 2, 3):
            poly = R.one
            for a in range(1, r + 1):
                poly = poly * (y - a)
            I = Ideal(R, [R("x"), poly])
            S = star(I, GradingMap.standard(2)).star_ideal
            pool += [I, S]
            c.check(f"r={r} I* = (x)", ideal_equal(S, Ideal.parse(R, "x")))
            rep = theorem51_check(PointConfiguration([(0, a) for a in range(1, r + 1)]))
            c.check(f"r={r} same ideal as the points", ideal_equal(rep.ideal, I))
            c.check(f"r={r} ir(I) = r", rep.ir_I == r)
            c.check(f"r={r} ir(I*) = 1", rep.ir_Istar == 1)
            c.check(f"r={r} bijective iff r = 1", rep.bijective == (r == 1))


def _suite_criterion(c, res, expected_checks):
    c.check(f"{len(res.records)} checks, expected at least {expected_checks}", len(res.records) >= expected_checks)
    for r in res.failures:
        c.check(f"{r.name}: expected {r.expected}, got {r.got}", False)


def test_criterion_4_point_configurations(pool, acceptance_log):
    with Criterion(4, "200 random point configurations: ir(I) >= ir(I*), equality iff injective, I* predicted", 120.0, acceptance_log) as c:
        res = point_configuration_suite(DEFAULT_SEED, 200)
        pool += res.ideals
        _suite_criterion(c, res, 200 * 3)


def test_criterion_5_monomial_cross_validation(pool, acceptance_log):
    with Criterion(5, "100 random m-primary monomial ideals: decomposition count = socle rank", 60.0, acceptance_log) as c:
        res = monomial_cross_suite(DEFAULT_SEED, 100)
        pool += res.ideals
        _suite_criterion(c, res, 100)


def test_criterion_6_star_laws(pool, acceptance_log):
    with Criterion(6, "star laws over GF(32003): 100 ideals, 50 intersection pairs, truncated oracle", 300.0, acceptance_log) as c:
        res = star_laws_suite(DEFAULT_SEED, 100, 50)
        pool += res.ideals
        _suite_criterion(c, res, 100 * 5 + 50)


def test_criterion_7_graded_field(acceptance_log):
    with Criterion(7, "100 random homogeneous matrices over GF(p)[Z^2]: unit pivots, rank-nullity, shuffles", 30.0, acceptance_log) as c:
        res = gradedfield_suite(DEFAULT_SEED, 100)
        _suite_criterion(c, res, 100 * 3)


def test_criterion_8_groebner_soundness(pool, acceptance_log):
    # the stated bound is zero failures; no runtime bound is given
    with Criterion(8, "Groebner soundness on the ideals of criteria 1-6 and 50 membership pairs", 600.0, acceptance_log) as c:
        c.check("ideal pool from criteria 1-6 is populated", len(pool) > 700)
        res = groebner_soundness_suite(pool, DEFAULT_SEED, 50)
        _suite_criterion(c, res, 50)
