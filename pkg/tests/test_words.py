import pytest
from hypothesis import given
from hypothesis import strategies as st

from caloop.core import Elem8, mul_coords
from caloop.words import (
    Assoc,
    Generator,
    ParseError,
    Power,
    Product,
    evaluate,
    format_canonical,
    parse,
    parse_with_warnings,
)

from support import GOLDEN_WORDS, make_rng, random_coords

coords8 = st.tuples(*[st.integers(min_value=-50, max_value=50)] * 8)


def test_parse_shapes():
    assert parse("assoc(x,x,y)") == Assoc(Generator("x"), Generator("x"), Generator("y"))
    assert parse("(x*y)*x") == Product(Product(Generator("x"), Generator("y")), Generator("x"))
    assert parse("x^3") == Power(Generator("x"), 3)
    assert parse("pow(x,-2)") == Power(Generator("x"), -2)


def test_unknown_identifier():
    with pytest.raises(ParseError, match="unknown identifier 'z'"):
        parse("x*y*z")


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "x*",
        "(x*y",
        "assoc(x,y)",
        "pow(x)",
        "elem[1,2,3]",
        "x^y",
        "2",
        "x^^2",
        "inv()",
        "x&y",
    ],
)
def test_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_error_position_reported():
    with pytest.raises(ParseError) as info:
        parse("x*y*z")
    assert info.value.position == 5


def test_golden_words():
    for text, coords, canonical in GOLDEN_WORDS:
        value = evaluate(parse(text))
        assert tuple(value) == coords, text
        if canonical is not None:
            assert format_canonical(value) == canonical, text


def test_parenthesization_matters():
    left = evaluate(parse("(x*x)*y"))
    right = evaluate(parse("x*(x*y)"))
    assert left != right
    # their left quotient is exactly the first associator generator
    assert right.left_divide(left) == Elem8((0, 0, 1, 0, 0, 0, 0, 0))


def test_product_node_is_homomorphic():
    rng = make_rng(60)
    for _ in range(200):
        a, b = random_coords(rng), random_coords(rng)
        expr = Product(parse(f"elem[{','.join(map(str, a))}]"),
                       parse(f"elem[{','.join(map(str, b))}]"))
        assert tuple(evaluate(expr)) == mul_coords(a, b)


def test_chain_warning():
    _, warnings = parse_with_warnings("x*y*x")
    assert len(warnings) == 1 and "grouped from the left" in warnings[0]
    _, warnings = parse_with_warnings("(x*y)*x")
    assert warnings == []
    _, warnings = parse_with_warnings("x * y")
    assert warnings == []


def test_whitespace_insensitive():
    assert evaluate(parse("  assoc( x , x , y )  ")) == evaluate(parse("assoc(x,x,y)"))


def test_dot_and_juxtaposition_products():
    assert evaluate(parse("x . y")) == evaluate(parse("x*y"))
    assert evaluate(parse("x y")) == evaluate(parse("x*y"))


@given(coords8)
def test_format_round_trip(coords):
    elem = Elem8(coords)
    assert evaluate(parse(format_canonical(elem))) == elem


def test_format_examples():
    assert format_canonical(Elem8((0,) * 8)) == "1"
    assert format_canonical(Elem8((2, 1, -1, 0, 0, 0, 0, 0))) == "(x^2 y . u1^-1)"
    assert format_canonical(Elem8((0, 0, 0, 0, 0, 0, 1, 0))) == "v3"
