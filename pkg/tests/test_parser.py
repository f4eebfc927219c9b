import random

import pytest

from irredcert.parser import PolyParseError, format_poly, parse_poly
from irredcert.polyz import PolyZ


def test_expression_examples():
    assert parse_poly("x^4+1") == PolyZ([1, 0, 0, 0, 1])
    assert parse_poly("97x^4 +76x^3 +78x^2 +4x +2") == PolyZ([2, 4, 78, 76, 97])
    assert parse_poly("-x+2") == PolyZ([2, -1])
    assert parse_poly("7") == PolyZ([7])
    assert parse_poly("3*x^2 - 2*x") == PolyZ([0, -2, 3])
    assert parse_poly("x") == PolyZ([0, 1])
    assert parse_poly("x^2+x+x") == PolyZ([0, 2, 1])


def test_list_examples():
    assert parse_poly("[1,0,0,0,1]") == PolyZ([1, 0, 0, 0, 1])
    assert parse_poly("[2, 4, 78, 76, 97]") == PolyZ([2, 4, 78, 76, 97])
    assert parse_poly("[-2, 1]") == PolyZ([-2, 1])
    assert parse_poly(" [ 0 , 1 ] ") == PolyZ([0, 1])


def test_syntax_error_offsets():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x^2 + + 3")
    assert err.value.offset == 6

    with pytest.raises(PolyParseError):
        parse_poly("")
    with pytest.raises(PolyParseError):
        parse_poly("   ")

    with pytest.raises(PolyParseError) as err:
        parse_poly("x^2 + y")
    assert err.value.offset == 6

    with pytest.raises(PolyParseError):
        parse_poly("[1, 2")
    with pytest.raises(PolyParseError):
        parse_poly("[]")
    with pytest.raises(PolyParseError):
        parse_poly("[1,2] junk")
    with pytest.raises(PolyParseError):
        parse_poly("x^")
    with pytest.raises(PolyParseError):
        parse_poly("2 2")


def test_format_examples():
    assert format_poly(PolyZ([1, 0, 0, 0, 1])) == "x^4+1"
    assert format_poly(PolyZ([2, 4, 78, 76, 97])) == "97x^4+76x^3+78x^2+4x+2"
    assert format_poly(PolyZ()) == "0"
    assert format_poly(PolyZ([0, -1])) == "-x"
    assert format_poly(PolyZ([-3, 0, 1])) == "x^2-3"


def test_round_trip_random():
    rng = random.Random(29)
    for _ in range(300):
        f = PolyZ([rng.randint(-99, 99) for _ in range(rng.randint(0, 9))])
        assert parse_poly(format_poly(f)) == f


def test_grammars_agree():
    rng = random.Random(31)
    for _ in range(200):
        coeffs = [rng.randint(-99, 99) for _ in range(rng.randint(1, 9))]
        as_list = "[" + ",".join(str(c) for c in coeffs) + "]"
        f = PolyZ(coeffs)
        assert parse_poly(as_list) == f
        if f:
            assert parse_poly(format_poly(f)) == parse_poly(as_list)
