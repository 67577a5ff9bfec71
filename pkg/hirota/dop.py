"""
Generalized bilinear differential operators.

D_{p,x1}^{n1} ... D_{p,xk}^{nk} f.g expands every factor
(d/dx_i + alpha_p d/dx_i')^{n_i} by the binomial theorem and evaluates the
primed variables at the unprimed ones. The powers of the symbol alpha_p are
collected into one integer exponent per term before the residue rule
alpha_p^r = (-1)^(r mod p) is applied.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Sequence, Tuple

from scipy.special import comb

from .errors import InvalidParameterError, ParseError, UnknownVariableError
from .exactpoly import MultiPoly, multi_derive
from .logging_config import get_logger

logger = get_logger(__name__)

_OPERATOR_RE = re.compile(r'^\s*D\s*\(\s*(\d+)\s*;\s*(.*?)\s*\)\s*$')
_FACTOR_RE = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)\s*\^\s*(\d+)$')


def alpha_pow(p: int, m: int) -> int:
    """
    Evaluate alpha_p ** m as +1 or -1.

    Args:
        p (int): Operator parameter, at least 2.
        m (int): Non-negative exponent.

    Returns:
        int: (-1) ** (m mod p)

    Raises:
        InvalidParameterError: If p < 2 or m < 0.
    """
    if p < 2:
        raise InvalidParameterError(f"p must be at least 2, got {p}")
    if m < 0:
        raise InvalidParameterError(f"alpha exponent must be non-negative, got {m}")
    return -1 if (m % p) % 2 else 1


@dataclass(frozen=True)
class BilinearOpSpec:
    """
    A product D_{p,x1}^{n1} ... D_{p,xk}^{nk}.

    Args:
        p (int): Parameter of the operator (2 is the classical Hirota case).
        factors (tuple): Pairs of (variable name, power).
    """
    p: int
    factors: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple((str(v), int(n)) for v, n in self.factors))
        if self.p < 2:
            raise InvalidParameterError(f"p must be at least 2, got {self.p}")
        names = [v for v, _ in self.factors]
        if len(set(names)) != len(names):
            raise InvalidParameterError(f"repeated variable in {names}")
        if any(n < 0 for _, n in self.factors):
            raise InvalidParameterError("operator powers must be non-negative")

    @property
    def order(self) -> int:
        return sum(n for _, n in self.factors)

    def __str__(self) -> str:
        return f"D({self.p};{','.join(f'{v}^{n}' for v, n in self.factors)})"


def parse_operator(text: str) -> BilinearOpSpec:
    """
    Parse the ``D(p;var^pow[,var^pow]*)`` grammar.

    Raises:
        ParseError: If the text does not follow the grammar.
    """
    match = _OPERATOR_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse operator {text!r}; expected D(p;var^pow,...)")
    p = int(match.group(1))
    factors = []
    for chunk in match.group(2).split(','):
        piece = _FACTOR_RE.match(chunk.strip())
        if not piece:
            raise ParseError(f"bad operator factor {chunk.strip()!r} in {text!r}")
        factors.append((piece.group(1), int(piece.group(2))))
    try:
        return BilinearOpSpec(p, tuple(factors))
    except InvalidParameterError as e:
        raise ParseError(str(e)) from e


def apply_operator(op: BilinearOpSpec, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """
    Apply a bilinear operator to the pair (f, g).

    Args:
        op (BilinearOpSpec): The operator.
        f (MultiPoly): Unprimed argument.
        g (MultiPoly): Primed argument, evaluated back at the unprimed variables.

    Returns:
        MultiPoly: Sum over multi-indices j of
        prod C(n_i, j_i) * alpha_p^(sum j) * d^(n-j) f * d^j g.

    Raises:
        UnknownVariableError: If an operator variable is in neither table.
    """
    f, g = f._union(g)
    for v, _ in op.factors:
        if v not in f.vars:
            raise UnknownVariableError(v, f.vars)

    names = [v for v, _ in op.factors]
    powers = [n for _, n in op.factors]
    f_cache: Dict[Tuple[int, ...], MultiPoly] = {}
    g_cache: Dict[Tuple[int, ...], MultiPoly] = {}

    result = MultiPoly.zero(f.vars)
    for js in product(*(range(n + 1) for n in powers)):
        weight = 1
        for n, j in zip(powers, js):
            weight *= comb(n, j, exact=True)
        weight *= alpha_pow(op.p, sum(js))
        rest = tuple(n - j for n, j in zip(powers, js))
        if rest not in f_cache:
            f_cache[rest] = multi_derive(f, dict(zip(names, rest)))
        if js not in g_cache:
            g_cache[js] = multi_derive(g, dict(zip(names, js)))
        if f_cache[rest] and g_cache[js]:
            result = result + f_cache[rest] * g_cache[js] * weight
    logger.debug(f"applied {op} to polynomials with {len(f)} and {len(g)} terms")
    return result


def apply_combination(ops: Sequence[Tuple[Fraction, BilinearOpSpec]],
                      f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Apply a rational linear combination of operators to (f, g)."""
    result = MultiPoly.zero(f.vars)
    for weight, op in ops:
        result = result + apply_operator(op, f, g) * weight
    return result


def kdvlike_operator(x: str = 'x', t: str = 't') -> Tuple[Tuple[int, BilinearOpSpec], ...]:
    """The bilinear form D_{3,x} D_{3,t} + D_{3,x}^4 of the KdV-like equation."""
    return (
        (1, BilinearOpSpec(3, ((x, 1), (t, 1)))),
        (1, BilinearOpSpec(3, ((x, 4),))),
    )
