from fractions import Fraction

import pytest

from gradedideals.errors import ParseError, UsageError
from gradedideals.idealops import ideal_equal
from gradedideals.session import format_points, format_session, parse_points, parse_session

SAMPLE = """# sample session
ring QQ[x,y]
order grevlex
grading [[1,1]]
ideal I = x^2, x*y, y^3, x - y^2   # tail ideal
ideal J = x^4, x^2*y^2, y^4, x^3*y - y^3*x
points P = (0,1); (0,2); (0,3)
points Q = (1/2,-3); (2,2)
matrix A = gfield GF(7) rank 2 support (1,0; 0,1) | rowdeg (0,0); (1,0) | coldeg (-1,0) | 3*e(1,0) | 2*e(2,0)
"""


def test_parse_sample():
    s = parse_session(SAMPLE)
    assert str(s.ring) == "QQ[x,y]"
    assert s.grading.weights == ((1, 1),)
    assert set(s.ideals) == {"I", "J"}
    assert len(s.ideal("@I").generators) == 4
    assert s.point_set("Q") == [(Fraction(1, 2), Fraction(-3)), (Fraction(2), Fraction(2))]
    A = s.matrix("@A")
    assert A.rows == 2 and A.cols == 1


def test_round_trip():
    s = parse_session(SAMPLE)
    text = format_session(s)
    again = parse_session(text)
    assert again == s
    assert format_session(again) == text
    for name in s.ideals:
        assert ideal_equal(s.ideals[name], again.ideals[name])


def test_points_round_trip():
    pts = parse_points("(1,2); (-1/3, 4) ;(0,5)")
    assert pts == [(1, 2), (Fraction(-1, 3), 4), (0, 5)]
    assert parse_points(format_points(pts)) == pts
    for bad in ("", "(1,2", "(1,2,3)", "(a,b)"):
        with pytest.raises(ParseError):
            parse_points(bad)


def test_errors_name_the_line():
    with pytest.raises(UsageError, match="line 1"):
        parse_session("ideal I = x")
    with pytest.raises(UsageError, match="line 3.*twice"):
        parse_session("ring QQ[x]\nideal I = x\npoints I = (1,1)")
    with pytest.raises(UsageError, match="twice"):
        parse_session("ring QQ[x]\nring QQ[y]")
    with pytest.raises(ParseError, match="line 2"):
        parse_session("ring QQ[x,y]\nideal I = x^2 +")
    with pytest.raises(ParseError, match="line 1"):
        parse_session("polynomial f = x")


def test_missing_reference():
    s = parse_session(SAMPLE)
    with pytest.raises(UsageError, match="no ideal named 'K'"):
        s.ideal("@K")
    with pytest.raises(UsageError):
        s.matrix("@I")


def test_order_applies_to_ring():
    s = parse_session("order lex\nring QQ[x,y]\nideal I = y^4 + x^2")
    assert str(s.ideal("I").generators[0]) == "x^2 + y^4"
    assert str(s.order) == "lex"
