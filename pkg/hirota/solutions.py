"""
Classification of polynomial solutions of T f = 0 and the rational
solutions of the KdV-like equation

    u_t + 3/2 (u_x)^2 + 3/2 u^2 u_x + 3/8 u^4 = 0

obtained through u = 2 d/dx log f.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .constants import MIN_CERTIFIED_DEGREE, T as T_VAR, X
from .enums import Verdict
from .errors import PreconditionError, SolverError
from .exactpoly import MultiPoly
from .fundsol import build_family
from .kdvlike import T
from .leading import Certificate, Witness, nonexistence_certificate, remainder_polys
from .logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SolutionFamily:
    """
    Monic polynomial solutions of T f = 0 of one x-degree.

    Args:
        m (int): x-degree.
        f (MultiPoly): Solution in x, t and the remaining free constants.
        constraints (tuple): (constant, value) substitutions applied to the
            fundamental family, in the order they were solved.
        constants (tuple): Free constants left in f.
    """
    m: int
    f: MultiPoly
    constraints: Tuple[Tuple[str, MultiPoly], ...] = field(default_factory=tuple)
    constants: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'verdict': Verdict.EXISTS.value,
            'f': self.f.to_dict(),
            'constraints': [{'constant': name, 'value': value.to_dict()} for name, value in self.constraints],
            'constants': list(self.constants)
        }

    @classmethod
    def from_dict(cls, data) -> 'SolutionFamily':
        return cls(
            m=int(data['m']),
            f=MultiPoly.from_dict(data['f']),
            constraints=tuple((c['constant'], MultiPoly.from_dict(c['value'])) for c in data.get('constraints', [])),
            constants=tuple(data.get('constants', []))
        )


@dataclass(frozen=True)
class RationalSolution:
    """u = numerator / denominator, kept unreduced."""
    numerator: MultiPoly
    denominator: MultiPoly

    def __post_init__(self):
        if self.denominator.is_zero():
            raise PreconditionError("denominator of a rational solution must be nonzero")

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def equals(self, other: 'RationalSolution') -> bool:
        """Cross-multiplied equality."""
        return (self.numerator * other.denominator - other.numerator * self.denominator).is_zero()

    def to_dict(self) -> dict:
        return {'numerator': self.numerator.to_dict(), 'denominator': self.denominator.to_dict()}

    @classmethod
    def from_dict(cls, data) -> 'RationalSolution':
        return cls(MultiPoly.from_dict(data['numerator']), MultiPoly.from_dict(data['denominator']))


def _constraints(remainders) -> List[MultiPoly]:
    pending = []
    for r in remainders:
        pending.extend(c for c in r.ensure_vars(T_VAR).coefficients(T_VAR).values() if c)
    return pending


def _pick(pending: List[MultiPoly], names) -> Tuple[str, MultiPoly]:
    for name in names:
        for p in pending:
            if name not in p.free_variables() or p.degree(name) != 1:
                continue
            slope = p.coeff_of(name, 1)
            if slope.is_constant():
                a = slope.constant_value()
                rest = p - MultiPoly.var(name) * a
                return name, rest / (-a)
    raise SolverError(f"no constraint is affine in a single constant: {', '.join(map(str, pending))}")


def classify(m: int) -> Union[SolutionFamily, Certificate]:
    """
    Classify the polynomial solutions of T f = 0 of x-degree m.

    Degrees up to 4 are solved from the fundamental family: every
    t-coefficient of every remainder must vanish, and each vanishing
    condition is solved for one constant it is affine in. Degrees 5 and
    above are delegated to the nonexistence certificate.

    Args:
        m (int): x-degree, m >= 0.

    Returns:
        SolutionFamily, or a NOT_EXISTS Certificate.

    Raises:
        PreconditionError: If m is negative.
        SolverError: If a constraint cannot be solved or the result fails T f = 0.
    """
    if m < 0:
        raise PreconditionError(f"degree must be non-negative, got {m}")
    if m >= MIN_CERTIFIED_DEGREE:
        return nonexistence_certificate(m)

    fam = build_family(m)
    pending = _constraints(remainder_polys(fam).R.values())
    solved: Dict[str, MultiPoly] = {}
    while pending:
        for p in pending:
            if p.is_constant():
                logger.info(f"m={m}: remainder is the nonzero constant {p.constant_value()}")
                return Certificate(m, Verdict.NOT_EXISTS, Witness('T', p.constant_value()))
        remaining = [n for n in fam.constants if n not in solved]
        name, value = _pick(pending, remaining)
        logger.debug(f"m={m}: {name} = {value}")
        solved = {n: v.compose({name: value}, strict=False) for n, v in solved.items()}
        solved[name] = value
        pending = [q for q in (p.compose({name: value}, strict=False) for p in pending) if q]

    f = fam.fbar.compose(solved, strict=False)
    if not T(f).is_zero():
        raise SolverError(f"m={m}: solved family does not satisfy T f = 0")
    free = tuple(n for n in fam.constants if n not in solved)
    return SolutionFamily(m, f, tuple(solved.items()), free)


def log_derivative(f: MultiPoly, x: str = X) -> RationalSolution:
    """
    u = 2 f_x / f.

    Raises:
        PreconditionError: If f is the zero polynomial.
    """
    if f.is_zero():
        raise PreconditionError("log_derivative of the zero polynomial")
    f = f.ensure_vars(x)
    return RationalSolution(f.derive(x) * 2, f)


def verify_kdvlike(u: RationalSolution, x: str = X, t: str = T_VAR) -> MultiPoly:
    """
    Numerator of the KdV-like residual of u = N/D over the denominator 8 D^4.

    Returns:
        MultiPoly: 8 (N_t D - N D_t) D^2 + 12 (N_x D - N D_x)^2
                   + 12 N^2 (N_x D - N D_x) + 3 N^4, zero iff u solves the equation.
    """
    N = u.numerator.ensure_vars(x, t)
    D = u.denominator.ensure_vars(x, t)
    time = N.derive(t) * D - N * D.derive(t)
    space = N.derive(x) * D - N * D.derive(x)
    N2 = N * N
    return time * D * D * 8 + space * space * 12 + N2 * space * 12 + N2 * N2 * 3


def rational_solution(m: int) -> Union[RationalSolution, Certificate]:
    """The rational solution carried by the degree-m family, or its certificate."""
    result = classify(m)
    if isinstance(result, Certificate):
        return result
    return log_derivative(result.f)


def residual_scale(f: MultiPoly) -> MultiPoly:
    """16 f^2 T f, which equals verify_kdvlike(log_derivative(f))."""
    f = f.ensure_vars(X, T_VAR)
    return f * f * T(f) * Fraction(16)
