"""Tests for the fundamental families and the Q polynomials."""
import pytest

from hirota.errors import PreconditionError, UnboundConstantError
from hirota.exactpoly import MultiPoly
from hirota.fundsol import FundamentalFamily, alignment, build_family, build_q, specialize
from hirota.kdvlike import B
from hirota.sampling import random_poly, random_rational_point


def test_small_families(symbols, c):
    """Test the coefficient polynomials of the cubic and quartic families."""
    _, t, _ = symbols
    assert build_family(3).P[0] == 36 * t + c(0)
    assert build_family(4).P[1] == 144 * t + c(1)
    assert build_family(4).P[0] == 36 * c(3) * t + c(0)


def test_family_shape():
    """Test constants, length and leading coefficient of a family."""
    fam = build_family(4)
    assert fam.constants == ('c3', 'c2', 'c1', 'c0')
    assert len(fam.P) == 5
    assert fam.P[4] == 1
    assert fam.fbar.degree('x') == 4


def test_degree_zero_family():
    """Test that degree zero gives the constant family."""
    fam = build_family(0)
    assert fam.fbar == 1
    assert fam.constants == ()


@pytest.mark.parametrize("m", range(0, 11))
def test_b_part_vanishes(m):
    """Test B_(m) fbar = 0."""
    fam = build_family(m)
    assert B(fam.fbar, m).is_zero()


@pytest.mark.parametrize("m", range(1, 11))
def test_time_degree_bound(m):
    """Test deg_t P_{m,k} <= floor((m-k)/3)."""
    fam = build_family(m)
    for k, p in enumerate(fam.P):
        assert p.ensure_vars('t').degree('t') <= (m - k) // 3


@pytest.mark.parametrize("m", range(2, 8))
def test_time_multiples_stay_in_kernel(rng, m):
    """Test B_(m)(g fbar) = 0 for random g(t) of degree at most 3."""
    fam = build_family(m)
    for _ in range(3):
        g = random_poly(rng, ('t',), (3,), density=0.8) + 1
        assert B(g * fam.fbar, m).is_zero()


def test_bound_constants(rng):
    """Any values for the constants keep B_(m) fbar = 0."""
    for m in range(2, 7):
        names = [f"c{j}" for j in range(m)]
        fam = build_family(m, random_rational_point(rng, names))
        assert fam.constants == ()
        assert set(fam.fbar.free_variables()) <= {'x', 't'}
        assert B(fam.fbar, m).is_zero()


def test_partial_binding():
    """Test binding only some of the constants."""
    fam = build_family(4, {'c0': 0, 'c2': 1})
    assert fam.constants == ('c3', 'c1')
    assert fam.P[2] == 1
    assert fam.P[0] == 36 * MultiPoly.var('c3') * MultiPoly.var('t')


def test_negative_degree():
    """Test that a negative degree is rejected."""
    with pytest.raises(PreconditionError):
        build_family(-1)


def test_first_q_polynomials(c):
    """Test Q_0, Q_1 and Q_2."""
    assert build_q(0).value == 1
    assert build_q(1).value == c(1)
    assert build_q(2).value == c(2)


def test_q3_leading(symbols):
    """Test the t-leading coefficient of Q_3."""
    _, _, m = symbols
    assert build_q(3).value.coeff_of('t', 1) == m ** 2 * (m - 1) ** 2


@pytest.mark.parametrize("k", range(0, 13))
def test_degree_law(k):
    """Test deg_t Q_k = floor(k/3) and deg_m Q_k = 4 floor(k/3)."""
    assert build_q(k).degree_law_holds()


@pytest.mark.parametrize("k", range(0, 8))
def test_symmetrized_weighting_agrees(k):
    """Test that both weightings of the Q recursion give the same polynomial."""
    assert build_q(k).value == build_q(k, symmetrized=False).value


def test_negative_q_index():
    """Test that a negative index is rejected."""
    with pytest.raises(PreconditionError):
        build_q(-1)


@pytest.mark.parametrize("m", range(1, 9))
def test_q_specializes_to_family(m):
    """Q_k at a concrete degree reproduces P_{m,m-k} under the constant alignment."""
    fam = build_family(m)
    for k in range(0, m + 1):
        assert specialize(build_q(k), m, alignment(m, k)) == fam.P[m - k]


def test_alignment():
    """Test the c_j -> c_{m-j} renaming."""
    assert alignment(5, 3) == {'c1': MultiPoly.var('c4'), 'c2': MultiPoly.var('c3'), 'c3': MultiPoly.var('c2')}
    assert alignment(2, 5) == {'c1': MultiPoly.var('c1'), 'c2': MultiPoly.var('c0')}


def test_specialize_needs_bindings():
    """Test that unbound constants are reported."""
    with pytest.raises(UnboundConstantError):
        specialize(build_q(3), 5, {})
    assert specialize(build_q(0), 7, {}) == 1


def test_specialize_with_numbers():
    """Test specializing with a numeric constant."""
    value = specialize(build_q(3), 3, {'c3': 5})
    assert value == 36 * MultiPoly.var('t') + 5


def test_family_round_trip():
    """Test that a family survives to_dict and from_dict."""
    fam = build_family(5)
    again = FundamentalFamily.from_dict(fam.to_dict())
    assert again.m == fam.m
    assert again.constants == fam.constants
    assert again.P == fam.P
    assert again.fbar == fam.fbar
