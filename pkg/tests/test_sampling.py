"""Tests for random polynomial sampling."""
from fractions import Fraction

from hirota.sampling import make_rng, random_monic_in, random_poly, random_rational, random_rational_point


def test_seeded_generators_repeat():
    a = random_poly(make_rng(5), ('x', 't'), (3, 2))
    b = random_poly(make_rng(5), ('x', 't'), (3, 2))
    assert a == b


def test_random_poly_respects_bounds(rng):
    for _ in range(20):
        p = random_poly(rng, ('x', 't'), (3, 1))
        assert p.degree('x') <= 3
        assert p.degree('t') <= 1


def test_density_extremes(rng):
    assert random_poly(rng, ('x',), (4,), density=0.0).is_zero()
    assert len(random_poly(rng, ('x',), (4,), density=1.0)) == 5


def test_random_rational(rng):
    for _ in range(50):
        value = random_rational(rng, nonzero=True)
        assert isinstance(value, Fraction)
        assert value != 0


def test_random_monic(rng):
    for m in range(0, 6):
        f = random_monic_in(rng, m)
        assert f.degree('x') == m
        assert f.leading_coeff('x') == 1


def test_random_point(rng):
    point = random_rational_point(rng, ('c0', 'c1'))
    assert set(point) == {'c0', 'c1'}
