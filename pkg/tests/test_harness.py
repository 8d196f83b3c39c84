import json
import random
from fractions import Fraction

import pytest

from gradedideals import Ideal, UsageError
from gradedideals.harness import (
    PointConfiguration,
    SuiteResult,
    direction,
    gradedfield_suite,
    ideal_of_points,
    monomial_cross_suite,
    random_point_configuration,
    render,
    reproduce_paper_examples,
    theorem51_check,
    truncated_membership_oracle,
)
from gradedideals.idealops import ideal_equal
from gradedideals.scalar import QQ


def test_ideal_of_a_single_point():
    P = PointConfiguration([(1, 2)])
    I = ideal_of_points(P)
    assert ideal_equal(I, Ideal.parse(P.ring(), "x - 1, y - 2"))


def test_ideal_of_collinear_points():
    P = PointConfiguration([(0, 1), (0, 2), (0, 3)])
    I = ideal_of_points(P)
    assert ideal_equal(I, Ideal.parse(P.ring(), "x, (y - 1)*(y - 2)*(y - 3)"))


def test_ideal_of_points_vanishes_exactly_on_the_points():
    P = PointConfiguration([(1, 1), (2, 2)])
    R = P.ring()
    I = ideal_of_points(P)
    for g in I.generators:
        for a, b in P.points:
            assert g.evaluate([a, b]) == 0
    for a, b in [(1, 2), (2, 1), (3, 3), (0, 1)]:
        assert any(g.evaluate([Fraction(a), Fraction(b)]) != 0 for g in I.generators)
    # radical with two minimal primes: the product of the point ideals is strictly smaller
    assert R.parse("(x - 1)*(x - 2)") in I


def test_bad_configurations():
    with pytest.raises(UsageError):
        PointConfiguration([(1, 1), (1, 1)])
    with pytest.raises(UsageError):
        PointConfiguration([(0, 0), (1, 1)])
    with pytest.raises(UsageError):
        PointConfiguration([(Fraction(1, 2), 1), (Fraction(2, 4), 1)])


def test_direction_is_projective():
    F = QQ
    assert direction(F, Fraction(2), Fraction(4)) == direction(F, Fraction(-1), Fraction(-2))
    assert direction(F, Fraction(0), Fraction(3)) == direction(F, Fraction(0), Fraction(-1))
    assert direction(F, Fraction(1), Fraction(1)) != direction(F, Fraction(2), Fraction(3))


def test_collinear_points_collapse():
    rep = theorem51_check(PointConfiguration([(0, 1), (0, 2), (0, 3)]))
    assert (rep.ir_I, rep.ir_Istar, rep.bijective) == (3, 1, False)
    assert ideal_equal(rep.star_ideal, Ideal.parse(rep.star_ideal.ring, "x"))
    assert rep.consistent


def test_two_directions_stay_apart():
    rep = theorem51_check(PointConfiguration([(1, 1), (2, 3)]))
    assert (rep.ir_I, rep.ir_Istar, rep.bijective) == (2, 2, True)
    R = rep.star_ideal.ring
    assert ideal_equal(rep.star_ideal, Ideal.parse(R, "(x - y)*(3*x - 2*y)"))
    assert rep.consistent
    for _, r in rep.details:
        assert r.graded and r.is_prime


def test_same_direction_merges():
    rep = theorem51_check(PointConfiguration([(1, 1), (2, 2)]))
    assert (rep.ir_I, rep.ir_Istar, rep.bijective) == (2, 1, False)
    assert ideal_equal(rep.star_ideal, Ideal.parse(rep.star_ideal.ring, "x - y"))


@pytest.mark.parametrize("seed", range(15))
def test_random_configurations(seed):
    P = random_point_configuration(random.Random(seed))
    assert 1 <= len(P) <= 6
    assert all(-5 <= a <= 5 and -5 <= b <= 5 for a, b in P.points)
    rep = theorem51_check(P, per_point=False)
    assert rep.ir_I >= rep.ir_Istar
    assert rep.consistent


def test_worked_examples_all_pass():
    res = reproduce_paper_examples()
    assert res.passed, res.table(failures_only=True)
    names = " ".join(r.name for r in res.records)
    for label in ("tail-ideal", "quartic", "collinear r=1", "collinear r=2", "collinear r=3"):
        assert label in names


def test_suite_result_rendering():
    res = SuiteResult("demo", seed=7)
    res.check("one", 1, 1)
    res.check("two", 2, 3)
    res.check("three", True, False, passed=True)
    assert not res.passed and len(res.failures) == 1
    text = render([res])
    assert "PASS  one" in text and "FAIL  two: expected 2, got 3" in text
    assert "2/3 checks passed" in text
    assert "one" not in render([res], failures_only=True).split("\n", 1)[1]
    data = json.loads(render([res], "json"))
    assert data[0]["failures"] == 1 and data[0]["seed"] == 7
    assert data[0]["records"][1] == {"name": "two", "expected": 2, "got": 3, "pass": False}


def test_small_suites_are_deterministic():
    a = monomial_cross_suite(5, 10)
    b = monomial_cross_suite(5, 10)
    assert a.passed and [r.as_dict() for r in a.records] == [r.as_dict() for r in b.records]
    assert gradedfield_suite(5, 10).passed


def test_truncated_membership_oracle(Rxy):
    I = Ideal.parse(Rxy, "x^2 - y, x*y")
    assert truncated_membership_oracle(Rxy.parse("y^2"), I, 3)
    assert not truncated_membership_oracle(Rxy.parse("y^2"), I, 2)
    assert not truncated_membership_oracle(Rxy.parse("x"), I, 6)
