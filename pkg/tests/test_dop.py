"""Tests for the generalized bilinear operators."""
import pytest

from hirota.dop import (BilinearOpSpec, alpha_pow, apply_combination, apply_operator, kdvlike_operator,
                        parse_operator)
from hirota.errors import InvalidParameterError, ParseError, UnknownVariableError
from hirota.exactpoly import MultiPoly
from hirota.kdvlike import T


@pytest.mark.parametrize("p, m, expected", [
    (2, 0, 1), (2, 1, -1), (2, 2, 1), (2, 3, -1),
    (3, 1, -1), (3, 2, 1), (3, 3, 1), (3, 4, -1), (3, 5, 1), (3, 6, 1),
    (5, 4, 1), (5, 3, -1), (5, 5, 1),
])
def test_alpha_pow(p, m, expected):
    assert alpha_pow(p, m) == expected


def test_alpha_pow_invalid():
    with pytest.raises(InvalidParameterError):
        alpha_pow(1, 2)
    with pytest.raises(InvalidParameterError):
        alpha_pow(3, -1)


def test_mixed_operator_identity(random_xt):
    """D_{3,x} D_{3,t} f.f == 2 (f f_xt - f_x f_t)."""
    op = BilinearOpSpec(3, (('x', 1), ('t', 1)))
    for _ in range(20):
        f = random_xt(x_degree=6, t_degree=6, density=0.2)
        f_x, f_t = f.derive('x'), f.derive('t')
        assert apply_operator(op, f, f) == (f * f_x.derive('t') - f_x * f_t) * 2


def test_fourth_power_identity(random_xt):
    """D_{3,x}^4 f.f == 6 f_xx^2: the third and first derivatives cancel."""
    op = BilinearOpSpec(3, (('x', 4),))
    for _ in range(20):
        f = random_xt(x_degree=6, t_degree=6, density=0.2)
        f_xx = f.derive('x').derive('x')
        assert apply_operator(op, f, f) == f_xx * f_xx * 6


def test_classical_fourth_power(random_xt):
    """The p = 2 operator is the classical Hirota derivative."""
    op = BilinearOpSpec(2, (('x', 4),))
    for _ in range(20):
        f = random_xt(x_degree=6, t_degree=6, density=0.2)
        d = [f]
        for _ in range(4):
            d.append(d[-1].derive('x'))
        assert apply_operator(op, f, f) == (f * d[4] - d[1] * d[3] * 4 + d[2] * d[2] * 3) * 2


def test_classical_odd_order_vanishes(random_xt):
    for n in (1, 3, 5):
        f = random_xt(x_degree=6)
        assert apply_operator(BilinearOpSpec(2, (('x', n),)), f, f).is_zero()


def test_bilinearity(random_xt):
    op = BilinearOpSpec(3, (('x', 2), ('t', 1)))
    f1, f2, g = random_xt(), random_xt(), random_xt()
    assert apply_operator(op, f1 + f2, g) == apply_operator(op, f1, g) + apply_operator(op, f2, g)
    assert apply_operator(op, f1, g * 3) == apply_operator(op, f1, g) * 3


def test_kdvlike_combination_is_twice_t(random_xt):
    for _ in range(20):
        f = random_xt(x_degree=6, t_degree=6, density=0.2)
        assert apply_combination(kdvlike_operator(), f, f) == T(f) * 2


def test_examples(symbols):
    x, t, _ = symbols
    assert apply_operator(parse_operator("D(3;x^4)"), x ** 3, x ** 3) == 216 * x ** 2
    f = x ** 3 + t
    assert apply_operator(parse_operator("D(3;x^1,t^1)"), f, f) == -6 * x ** 2
    assert apply_operator(parse_operator("D(3;x^0)"), x + t, x + t) == (x + t) ** 2
    g = x ** 2 * t + x
    assert apply_operator(parse_operator("D(2;x^1,t^1)"), g, g) == 2 * x ** 2


def test_unknown_variable():
    x = MultiPoly.var('x')
    with pytest.raises(UnknownVariableError):
        apply_operator(BilinearOpSpec(3, (('y', 1),)), x, x)


@pytest.mark.parametrize("text, p, factors", [
    ("D(3;x^1,t^1)", 3, (('x', 1), ('t', 1))),
    (" D( 2 ; x^4 ) ", 2, (('x', 4),)),
    ("D(7;t^2,x^3,y^1)", 7, (('t', 2), ('x', 3), ('y', 1))),
])
def test_parse_operator(text, p, factors):
    op = parse_operator(text)
    assert op.p == p
    assert op.factors == factors


@pytest.mark.parametrize("text", [
    "D(3)", "D(1;x^2)", "E(3;x^1)", "D(3;x)", "D(3;x^1,x^2)", "D(3;x^-1)", "",
])
def test_parse_operator_rejects(text):
    with pytest.raises(ParseError):
        parse_operator(text)


def test_spec_str_and_order():
    op = BilinearOpSpec(3, (('x', 1), ('t', 1)))
    assert str(op) == "D(3;x^1,t^1)"
    assert op.order == 2
    assert parse_operator(str(op)) == op
