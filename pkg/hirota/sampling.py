"""Random generators for polynomials with small rational coefficients."""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exactpoly import MultiPoly, monomials

# Coefficient ranges
NUMERATOR_RANGE = (-9, 10)
DENOMINATORS = (1, 1, 1, 2, 3, 4)
DENSITY = 0.6


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Create a generator; without a seed the configured RANDOM_SEED is used."""
    if seed is None:
        import settings
        seed = settings.RANDOM_SEED
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, nonzero: bool = False) -> Fraction:
    """Draw a small rational number."""
    while True:
        num = int(rng.integers(*NUMERATOR_RANGE))
        den = int(rng.choice(DENOMINATORS))
        value = Fraction(num, den)
        if value or not nonzero:
            return value


def random_poly(rng: np.random.Generator, vars: Sequence[str], degrees: Sequence[int],
                density: float = DENSITY) -> MultiPoly:
    """
    Draw a random polynomial.

    Args:
        rng: Source of randomness.
        vars: Variable table.
        degrees: Per-variable degree bound.
        density: Probability that a monomial is present.

    Returns:
        MultiPoly: Each monomial within the bounds appears with probability
        ``density`` and a small nonzero rational coefficient.
    """
    terms = {}
    for exps in monomials(degrees):
        if rng.random() < density:
            terms[exps] = random_rational(rng, nonzero=True)
    return MultiPoly(vars, terms)


def random_monic_in(rng: np.random.Generator, m: int, x: str = 'x', t: str = 't',
                    t_degree: int = 2) -> MultiPoly:
    """Random polynomial of x-degree exactly m with leading coefficient 1."""
    body = random_poly(rng, (x, t), (m - 1, t_degree)) if m else MultiPoly.zero((x, t))
    return body + MultiPoly.var(x, (x, t)) ** m


def random_rational_point(rng: np.random.Generator, names: Sequence[str]) -> dict:
    """Random rational values for the given names."""
    return {name: random_rational(rng) for name in names}
