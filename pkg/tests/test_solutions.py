"""Tests for the classification of polynomial and rational solutions."""
from fractions import Fraction

import pytest

from hirota.enums import Verdict
from hirota.errors import PreconditionError
from hirota.exactpoly import MultiPoly
from hirota.kdvlike import T
from hirota.leading import Certificate
from hirota.sampling import random_rational_point
from hirota.solutions import (RationalSolution, SolutionFamily, classify, log_derivative, rational_solution,
                              residual_scale, verify_kdvlike)


def test_degree_zero():
    family = classify(0)
    assert family.f == 1
    assert family.constants == ()


def test_degree_one(symbols, c):
    x, _, _ = symbols
    family = classify(1)
    assert family.f == x + c(0)
    assert family.constraints == ()
    assert family.constants == ('c0',)


def test_degree_two_has_no_solution():
    result = classify(2)
    assert isinstance(result, Certificate)
    assert result.verdict is Verdict.NOT_EXISTS
    assert result.witness.value == 12


def test_degree_three(symbols, c):
    x, t, _ = symbols
    family = classify(3)
    assert family.f == x ** 3 + c(2) * x ** 2 + c(2) ** 2 * x / 3 + 36 * t + c(0)
    assert family.constraints == (('c1', c(2) ** 2 / 3),)
    assert family.constants == ('c2', 'c0')


def test_degree_four(symbols, c):
    x, t, _ = symbols
    family = classify(4)
    c0 = c(1) * c(3) / 4 - c(2) ** 2 / 12
    assert family.constraints == (('c0', c0),)
    assert family.constants == ('c3', 'c2', 'c1')
    assert family.f == x ** 4 + c(3) * x ** 3 + c(2) * x ** 2 + (144 * t + c(1)) * x + 36 * c(3) * t + c0
    assert T(family.f).is_zero()


@pytest.mark.parametrize("m", range(5, 31))
def test_higher_degrees_have_no_solution(m):
    result = classify(m)
    assert isinstance(result, Certificate)
    assert result.verdict is Verdict.NOT_EXISTS
    assert result.witness.value != 0


def test_negative_degree():
    with pytest.raises(PreconditionError):
        classify(-1)


def test_solutions_satisfy_t_for_any_constants(rng):
    for m in (1, 3, 4):
        family = classify(m)
        point = random_rational_point(rng, family.constants)
        assert T(family.f.compose(point, strict=False)).is_zero()


def test_log_derivative(symbols):
    x, t, _ = symbols
    u = log_derivative(x ** 2 + t)
    assert u.numerator == 4 * x
    assert u.denominator == x ** 2 + t
    assert log_derivative(MultiPoly.constant(5)).is_zero()
    with pytest.raises(PreconditionError):
        log_derivative(MultiPoly.zero())


def test_verify_kdvlike_on_solutions():
    for m in (0, 1, 3, 4):
        u = log_derivative(classify(m).f)
        assert verify_kdvlike(u).is_zero()


def test_verify_kdvlike_rejects(symbols):
    x, _, _ = symbols
    assert verify_kdvlike(RationalSolution(MultiPoly.constant(1), x)) == 3
    assert verify_kdvlike(RationalSolution(MultiPoly.constant(1), MultiPoly.constant(1))) == 3


def test_residual_bridge(random_xt):
    """The residual of u = 2 f_x / f is 16 f^2 T f."""
    for _ in range(5):
        f = random_xt()
        if f.is_zero():
            continue
        assert verify_kdvlike(log_derivative(f)) == residual_scale(f)


def test_rational_solution():
    u = rational_solution(3)
    assert isinstance(u, RationalSolution)
    assert verify_kdvlike(u).is_zero()
    assert isinstance(rational_solution(6), Certificate)


def test_rational_equality(symbols):
    x, t, _ = symbols
    a = RationalSolution(2 * x, x ** 2 + t)
    b = RationalSolution(4 * x * t, 2 * t * (x ** 2 + t))
    assert a.equals(b)
    assert not a.equals(RationalSolution(x, x ** 2 + t))


def test_zero_denominator():
    with pytest.raises(PreconditionError):
        RationalSolution(MultiPoly.var('x'), MultiPoly.zero())


def test_round_trips():
    family = classify(4)
    again = SolutionFamily.from_dict(family.to_dict())
    assert again == family
    u = log_derivative(family.f)
    assert RationalSolution.from_dict(u.to_dict()).equals(u)
    assert family.to_dict()['verdict'] == 'exists'


def test_constraint_values_are_exact(c):
    (name, value), = classify(3).constraints
    assert name == 'c1'
    assert value.coeff_of('c2', 2) == Fraction(1, 3)
