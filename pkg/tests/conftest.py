"""Test configuration and fixtures."""
import json
import logging
from fractions import Fraction

import pytest
import sympy

from hirota.exactpoly import MultiPoly
from hirota.sampling import make_rng, random_poly


@pytest.fixture(scope="function")
def rng():
    """A seeded numpy generator so failures reproduce."""
    return make_rng(20240601)


@pytest.fixture
def symbols():
    """x, t and m as polynomials."""
    x, t, m = MultiPoly.symbols('x', 't', 'm')
    return x, t, m


@pytest.fixture
def c():
    """Factory for constants: c(2) is the polynomial c2."""
    return lambda i: MultiPoly.var(f"c{i}")


@pytest.fixture
def random_xt(rng):
    """Factory drawing random polynomials in x and t."""
    def draw(x_degree=4, t_degree=2, density=0.6):
        return random_poly(rng, ('x', 't'), (x_degree, t_degree), density)
    return draw


@pytest.fixture
def poly_file(tmp_path):
    """Write a polynomial to a JSON file and return its path."""
    def write(p, name='f.json'):
        path = tmp_path / name
        path.write_text(json.dumps(p.to_dict()))
        return str(path)
    return write


@pytest.fixture
def restore_logging():
    """Put the root logger back the way the test found it."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)


def to_sympy(p: MultiPoly):
    """Convert a MultiPoly into a sympy expression."""
    syms = [sympy.Symbol(n) for n in p.vars]
    expr = sympy.Integer(0)
    for exps, coeff in p:
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(syms, exps):
            term *= s ** e
        expr += term
    return expr


@pytest.fixture
def as_sympy():
    """The MultiPoly to sympy converter, as a fixture."""
    return to_sympy
