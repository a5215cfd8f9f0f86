import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charvar import poisson, relations
from charvar.exprs import BinOp, Coord, Neg, Number, ParseError, Pow, Trace, lower, lower_text, parse
from charvar.polyring import NormalForm, t
from charvar.words import Irreducible
from conftest import random_normal


def test_parse_torus_coefficient():
    nf = lower_text("t3 - 1/3*t1*t2")
    table = poisson.bracket_table(poisson.SurfaceStructure("torus"))
    assert nf == table.entry(1, 2)


def test_parse_trace_atom():
    assert lower_text("tr(x1 x2 x1^-1 x2^-1)") == t(5)
    assert lower_text("tr(x1 x1)") == t(1) ** 2 - 2 * t(-1)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse("t1 +")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse("t1 @ t2")
    assert err.value.position == 3


def test_t5_square_lowers_through_relation():
    expected = NormalForm.from_base(-relations.big_Q()) + NormalForm.from_base(relations.big_P()) * t(5)
    assert lower_text("t5^2") == expected


def test_zero_and_literals():
    assert lower_text("0").is_zero
    assert lower_text("2/3") == NormalForm.constant(Fraction(2, 3))
    assert lower_text("-5") == NormalForm.constant(-5)


def test_precedence():
    assert parse("t1 + t2*t3") == BinOp("+", Coord(1), BinOp("*", Coord(2), Coord(3)))
    assert parse("t1*t2^2") == BinOp("*", Coord(1), Pow(Coord(2), 2))
    assert parse("-t1^2") == Neg(Pow(Coord(1), 2))
    assert parse("(t1 + t2)*t3") == BinOp("*", BinOp("+", Coord(1), Coord(2)), Coord(3))
    assert lower_text("-t1^2") == -(t(1) ** 2)
    assert lower_text("2 - 1 - 1").is_zero  # left associative


def test_rejected_inputs():
    for text in ("t1 ^ -2", "t-5", "t6", "tr(x1", "2//3", "t1 t2", "1/0", ""):
        with pytest.raises(ParseError):
            parse(text)


def test_irreducible_trace_propagates():
    with pytest.raises(Irreducible):
        lower_text("tr(x1 x2^-1 x1^-1 x2^-1 x1 x2)")


def test_explicit_round_trips():
    cases = (
        "t3 - 1/3*t1*t2",
        "-t1^2",
        "tr(x1 x2)*t5 + 2/3",
        "(t1 - t2)*(t1 + t2)",
        "t1*(-t2)",
        "tr()",
    )
    for text in cases:
        ast = parse(text)
        assert parse(ast.to_text()) == ast


@st.composite
def expressions(draw, depth=0):
    options = ["number", "coord", "trace"]
    if depth < 3:
        options += ["neg", "pow", "binop", "binop", "binop"]
    kind = draw(st.sampled_from(options))
    if kind == "number":
        return Number(Fraction(draw(st.integers(0, 40)), draw(st.integers(1, 9))))
    if kind == "coord":
        return Coord(draw(st.sampled_from((1, -1, 2, -2, 3, -3, 4, -4, 5))))
    if kind == "trace":
        word = tuple(draw(st.lists(st.sampled_from((1, -1, 2, -2)), max_size=3)))
        return Trace(word)
    if kind == "neg":
        return Neg(draw(expressions(depth=depth + 1)))
    if kind == "pow":
        return Pow(draw(expressions(depth=depth + 1)), draw(st.integers(0, 3)))
    op = draw(st.sampled_from("+-*"))
    return BinOp(op, draw(expressions(depth=depth + 1)), draw(expressions(depth=depth + 1)))


@settings(max_examples=300, deadline=None)
@given(expressions())
def test_ast_round_trip(ast):
    assert parse(ast.to_text()) == ast


def test_canonical_text_parses_back():
    rng = random.Random(17)
    for _ in range(100):
        x = random_normal(rng)
        assert lower_text(x.text()) == x
