"""
Fundamental solutions of the B-part of the KdV-like bilinear equation.

For a fixed x-degree m the monic polynomial fbar = sum_k P_{m,k}(t) x^k with
B_(m) fbar = 0 is obtained by integrating, from k = m - 1 down to 0,

    (m - k) P_k' = sum_{j=k+1}^{m-1} j W(P_j, P_{k+m-j})
                 + 3 sum_{j=k+3}^{m} j (j-1) (k+m+3-j) (k+m+2-j) P_j P_{k+m+3-j}

starting from P_m = 1, with one integration constant per step named after
the x-power it multiplies (c{m-1}, ..., c0).

Treating m as a symbol gives Q_k = P_{m,m-k} in Q[m, t, c1, ..., ck]:

    k Q_k' = sum_{l=1}^{k-1} (k - 2l)/2 W(Q_l, Q_{k-l})
           + 3 sum_{l=0}^{k-3} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) Q_l Q_{k-l-3}

with Q_0 = 1 and constants c_k. The unsymmetrized first sum with weight
(m - l) is kept as an independent construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple, Union

from .constants import M, T, X, constant_name
from .errors import PreconditionError, UnboundConstantError
from .exactpoly import MultiPoly, wronskian_t
from .logging_config import get_logger

logger = get_logger(__name__)

Binding = Union[int, Fraction, MultiPoly]


@dataclass(frozen=True)
class FundamentalFamily:
    """
    Monic generator of the solutions of B_(m) f = 0 of x-degree m.

    Args:
        m (int): x-degree.
        constants (tuple): Names of the free integration constants, highest x-power first.
        P (tuple): ``P[k]`` is the coefficient of ``x**k``; ``P[m] == 1``.
        fbar (MultiPoly): The assembled polynomial sum_k P[k] x^k.
    """
    m: int
    constants: Tuple[str, ...]
    P: Tuple[MultiPoly, ...]
    fbar: MultiPoly

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'constants': list(self.constants),
            'P': [p.to_dict() for p in self.P],
            'fbar': self.fbar.to_dict()
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'FundamentalFamily':
        return cls(
            m=int(data['m']),
            constants=tuple(data['constants']),
            P=tuple(MultiPoly.from_dict(p) for p in data['P']),
            fbar=MultiPoly.from_dict(data['fbar'])
        )


@dataclass(frozen=True)
class QPoly:
    """Q_k as a polynomial in m, t and the constants c1..ck."""
    k: int
    value: MultiPoly

    @property
    def q(self) -> int:
        return self.k // 3

    def degree_law_holds(self) -> bool:
        """deg_t Q_k == floor(k/3) and deg_m Q_k == 4 floor(k/3)."""
        v = self.value.ensure_vars(M, T)
        return v.degree(T) == self.q and v.degree(M) == 4 * self.q


def build_family(m: int, constants: Optional[Mapping[str, Binding]] = None) -> FundamentalFamily:
    """
    Integrate the P recursion down from P_m = 1.

    Args:
        m (int): x-degree, m >= 0.
        constants (Mapping, optional): Values for some integration constants
            (by name, e.g. ``{'c0': 0}``); the rest stay symbolic.

    Returns:
        FundamentalFamily: The family with B_(m) fbar = 0.

    Raises:
        PreconditionError: If m is negative.
    """
    if m < 0:
        raise PreconditionError(f"degree must be non-negative, got {m}")
    constants = dict(constants or {})
    names = tuple(constant_name(k) for k in range(m - 1, -1, -1))
    free = tuple(n for n in names if n not in constants)
    table = (T,) + free

    P: Dict[int, MultiPoly] = {m: MultiPoly.constant(1, table)}
    for k in range(m - 1, -1, -1):
        rhs = MultiPoly.zero(table)
        for j in range(k + 1, m):
            rhs = rhs + wronskian_t(P[j], P[k + m - j], T) * j
        for j in range(k + 3, m + 1):
            weight = j * (j - 1) * (k + m + 3 - j) * (k + m + 2 - j)
            rhs = rhs + P[j] * P[k + m + 3 - j] * (3 * weight)
        name = constant_name(k)
        c = constants[name] if name in constants else MultiPoly.var(name, table)
        P[k] = (rhs / (m - k)).integrate(T) + c
        logger.debug(f"P_{m},{k} = {P[k]}")

    x = MultiPoly.var(X)
    fbar = MultiPoly.zero((X,) + table)
    for k in range(m + 1):
        fbar = fbar + P[k] * x ** k
    return FundamentalFamily(m, free, tuple(P[k] for k in range(m + 1)), fbar)


@lru_cache(maxsize=None)
def _q_value(k: int, symmetrized: bool) -> MultiPoly:
    if k < 0:
        raise PreconditionError(f"Q index must be non-negative, got {k}")
    base = (M, T)
    if k == 0:
        return MultiPoly.constant(1, base)
    m = MultiPoly.var(M, base)
    integrand = MultiPoly.zero(base)
    for l in range(1, k):
        if symmetrized:
            weight = Fraction(k - 2 * l, 2)
            if not weight:
                continue
        else:
            weight = m - l
        integrand = integrand + wronskian_t(_q_value(l, symmetrized), _q_value(k - l, symmetrized), T) * weight
    for l in range(0, k - 2):
        weight = (m - l) * (m - l - 1) * (m + (l - k + 3)) * (m + (l - k + 2)) * 3
        integrand = integrand + _q_value(l, symmetrized) * _q_value(k - l - 3, symmetrized) * weight
    value = (integrand / k).integrate(T) + MultiPoly.var(constant_name(k), base)
    logger.debug(f"Q_{k} built with {len(value)} terms")
    return value


def build_q(k: int, symmetrized: bool = True) -> QPoly:
    """
    Build Q_k with m symbolic.

    Args:
        k (int): Index, k >= 0.
        symmetrized (bool): Use the (k - 2l)/2 weighting of the Wronskian sum
            (default); False uses the (m - l) weighting.

    Returns:
        QPoly: Q_k over (m, t, c1, ..., ck).

    Raises:
        PreconditionError: If k is negative.
    """
    return QPoly(k, _q_value(k, symmetrized))


def alignment(m_value: int, k: int) -> Dict[str, MultiPoly]:
    """Map the Q constants c_j (j <= min(k, m)) onto the family constants c{m-j}."""
    return {constant_name(j): MultiPoly.var(constant_name(m_value - j))
            for j in range(1, min(k, m_value) + 1)}


def specialize(q: QPoly, m_value: int, constants: Mapping[str, Binding]) -> MultiPoly:
    """
    Substitute a concrete degree and bindings for the constants of Q_k.

    Args:
        q (QPoly): The symbolic Q_k.
        m_value (int): Degree to substitute for m.
        constants (Mapping): Binding for every constant c1..ck that occurs.

    Returns:
        MultiPoly: A polynomial in t (and whatever the bindings introduce).

    Raises:
        UnboundConstantError: If some occurring constant has no binding.
    """
    occurring = [n for n in q.value.free_variables() if n not in (M, T)]
    missing = [n for n in occurring if n not in constants]
    if missing:
        raise UnboundConstantError(missing)
    mapping: Dict[str, Binding] = {M: m_value}
    mapping.update({n: constants[n] for n in occurring})
    return q.value.compose(mapping, strict=False).ensure_vars(T)
