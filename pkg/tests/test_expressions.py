from fractions import Fraction

import pytest

from cauchyreal import ParseError, WitnessSearchError, build_real, dyadic, format_expr, parse
from cauchyreal.expressions import (Abs, Add, Div, FromBelow, Max, Min, Mul,
                                    Neg, RatLit, Sub, tokenize)

from oracles import eval_exact


def test_tokenize_positions_and_kinds():
    toks = tokenize("1 + max(2.5, x)")
    assert toks[0] == ("int", Fraction(1), 0)
    assert toks[1] == ("sym", "+", 2)
    assert toks[2] == ("name", "max", 4)
    assert toks[4] == ("dec", Fraction(5, 2), 8)
    assert toks[-1][0] == "end"


def test_tokenize_rejects_stray_character():
    with pytest.raises(ParseError) as info:
        tokenize("1 + $2")
    assert info.value.position == 4


def test_fraction_literals_fold():
    assert parse("1/3 + 1/6") == Add(RatLit(Fraction(1, 3)), RatLit(Fraction(1, 6)))
    assert parse("1/2/3") == Div(RatLit(Fraction(1, 2)), RatLit(Fraction(3)))


def test_division_forms_stay_divisions():
    assert parse("1/(1-1)") == Div(RatLit(Fraction(1)),
                                   Sub(RatLit(Fraction(1)), RatLit(Fraction(1))))
    # zero denominator cannot be a literal; it falls back to division
    assert parse("1/0") == Div(RatLit(Fraction(1)), RatLit(Fraction(0)))
    assert parse("(1)/3") == Div(RatLit(Fraction(1)), RatLit(Fraction(3)))


def test_precedence_and_associativity():
    assert parse("1+2*3") == Add(RatLit(Fraction(1)),
                                 Mul(RatLit(Fraction(2)), RatLit(Fraction(3))))
    assert parse("1-2-3") == Sub(Sub(RatLit(Fraction(1)), RatLit(Fraction(2))),
                                 RatLit(Fraction(3)))
    assert parse("-2*max(1, 3/2)") == Mul(Neg(RatLit(Fraction(2))),
                                          Max(RatLit(Fraction(1)), RatLit(Fraction(3, 2))))
    assert parse("2 - - 3") == Sub(RatLit(Fraction(2)), Neg(RatLit(Fraction(3))))


def test_decimals_are_exact():
    assert parse("3.14") == RatLit(Fraction(157, 50))
    assert parse("-0.125") == Neg(RatLit(Fraction(1, 8)))


def test_functions_and_below():
    assert parse("abs(-4/9)") == Abs(Neg(RatLit(Fraction(4, 9))))
    assert parse("min(1, 2)") == Min(RatLit(Fraction(1)), RatLit(Fraction(2)))
    assert parse("below(1/2)") == FromBelow(Fraction(1, 2))
    assert parse("below(-2)") == FromBelow(Fraction(-2))
    assert parse("below(2.5)") == FromBelow(Fraction(5, 2))


def test_syntax_error_positions():
    with pytest.raises(ParseError) as info:
        parse("1 + * 2")
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse("max(1)")
    assert info.value.position == 5
    with pytest.raises(ParseError) as info:
        parse("")
    assert "end of input" in str(info.value)
    with pytest.raises(ParseError):
        parse("spam(1)")
    with pytest.raises(ParseError):
        parse("1 2")
    with pytest.raises(ParseError):
        parse("below(1 + 2)")


def test_round_trip_on_corpus(corpus):
    for entry in corpus:
        printed = format_expr(entry.node)
        assert parse(printed) == entry.node


def test_round_trip_keeps_divisions_divisions():
    node = parse("(1)/3")
    assert parse(format_expr(node)) == node


def test_build_real_matches_oracle(corpus):
    for entry in corpus:
        point = entry.build()
        for k in (4, 24):
            eps = dyadic(k)
            assert abs(point.approximate(eps) - entry.value) <= eps


def test_build_real_from_below_rule():
    point = build_real(parse("below(5)"))
    eps = dyadic(6)
    assert point.approximate(eps) == 5 - eps / 2


def test_build_real_witness_failure():
    with pytest.raises(WitnessSearchError) as info:
        build_real(parse("1/(1-1)"), witness_fuel=72)
    assert info.value.fuel == 72


def test_div_node_fuel_override():
    # denominator 2^-10 needs stages near 12; a budget of 3 cannot see it
    tiny = Fraction(1, 1024)
    starved = Div(RatLit(Fraction(1)), FromBelow(tiny), witness_fuel=3)
    with pytest.raises(WitnessSearchError):
        build_real(starved, witness_fuel=200)
    fed = Div(RatLit(Fraction(1)), FromBelow(tiny), witness_fuel=20)
    point = build_real(fed, witness_fuel=3)
    eps = dyadic(8)
    assert abs(point.approximate(eps) - 1024) <= eps


def test_eval_exact_agrees_on_frozen_values():
    assert eval_exact(parse("2/7 + 3.5 * (1 - 2/3)")) == Fraction(61, 42)
    assert eval_exact(parse("1/2/3")) == Fraction(1, 6)
    assert eval_exact(parse("min(max(below(-2), -1), max(below(2), 1))")) == -1
