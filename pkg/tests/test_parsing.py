import pytest

from dres import DppeSystem, ParseError, op, parse_coefficient, parse_system
from dres.ratfunc import RatFunc, T, UniPoly

from fixtures import intro_system, sec5_system, sec31_system


def test_parse_intro_example():
    text = """
    x1 = u1 + u2 + u2'
    x2 = t*u1' + u2''
    x3 = u1 + u2'
    """
    assert parse_system(text) == intro_system()


def test_parse_d_notation_and_apostrophes_agree():
    a = parse_system("x1 = u1''\nx2 = u1")
    b = parse_system("x1 = d(u1,2)\nx2 = d(u1,0)")
    assert a == b


def test_parse_rational_coefficients():
    s = parse_system("x1 = (t^2+1)/(t-1)*u1''\nx2 = u1 + 3/2*t")
    assert s.ops[0][0] == op(0, 0, -RatFunc(UniPoly([1, 0, 1]), UniPoly([-1, 1])))
    assert s.a[1] == RatFunc(3, 2) * T


def test_parse_nonlinearity_diagnostic():
    with pytest.raises(ParseError) as e:
        parse_system("x1 = u1*u2\nx2 = u1")
    assert e.value.line == 1 and "nonlinear" in e.value.message
    with pytest.raises(ParseError, match="power"):
        parse_system("x1 = u1^2\nx2 = u1")


def test_parse_unknown_symbol():
    with pytest.raises(ParseError, match="unknown symbol"):
        parse_system("x1 = w + u1\nx2 = u1")
    with pytest.raises(ParseError, match="right-hand side"):
        parse_system("x1 = x2 + u1\nx2 = u1")


def test_parse_non_contiguous_indices():
    with pytest.raises(ParseError, match="contiguous"):
        parse_system("x1 = u1\nx3 = u1")
    with pytest.raises(ParseError, match="duplicate"):
        parse_system("x1 = u1\nx1 = u1")


def test_parse_empty_column():
    with pytest.raises(ParseError, match="u1 does not occur"):
        parse_system("x1 = u2\nx2 = u2\nx3 = u2")
    with pytest.raises(ParseError, match="out of range"):
        parse_system("x1 = u2\nx2 = u2")


def test_parse_division_rules():
    with pytest.raises(ParseError, match="divide"):
        parse_system("x1 = t/u1\nx2 = u1")
    with pytest.raises(ParseError, match="division by zero"):
        parse_system("x1 = u1/0\nx2 = u1")


def test_parse_constant_only_system_rejected():
    with pytest.raises(ValueError):
        parse_system("x1 = t\nx2 = u1")


def test_round_trip_fixture_systems():
    for s in (intro_system(), sec31_system(), sec5_system()):
        assert parse_system(str(s)) == s


def test_parse_coefficient():
    assert parse_coefficient("(t^2+1)/(t-1)") == RatFunc(UniPoly([1, 0, 1]), UniPoly([-1, 1]))
    assert parse_coefficient("-t") == -T
    assert parse_coefficient("3/2*t") == RatFunc(3, 2) * T
    with pytest.raises(ParseError):
        parse_coefficient("u1 + 1")


def test_parse_comments_and_order():
    text = "# comment\nx2 = u1'  # trailing\nx1 = u1\n"
    s = parse_system(text)
    assert s.ops[0][0] == op(-1)
    assert s.ops[1][0] == op(0, -1)
