"""
Remainder polynomials, leading coefficients and nonexistence certificates.

For the fundamental family of degree m, R_(m) fbar = sum_k R_k x^(2m-k-1)
over m+1 <= k <= 2m-1, where, writing Q_l = P_{m,m-l},

    R_k = sum_{l=k-m}^{m} (k-2l)/2 W(Q_l, Q_{k-l})
        + 3 sum_{l=max(0,k-m-1)}^{min(m-2,k-3)} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) Q_l Q_{k-l-3}.

The t-leading coefficient of Q_k is x_{k,q} (q = floor(k/3)) and
z_q = x_{3q,q} is a polynomial in m alone. The coefficient of t^(q-1) in
R_{3q} only involves the z's:

    Y_q = -3/2 sum_u (q-2u)^2 z_u z_{q-u}
          + 3 sum_u (m-3u)(m-3u-1)(m+3u-3q+3)(m+3u-3q+2) z_u z_{q-u-1}

with u running over the indices 3u admitted by the two summation ranges.
A solution of degree m forces every R_k to vanish, so a nonzero Y or a
nonzero z-combination forced to vanish by the Y identities certifies that
no solution exists.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from scipy.special import factorial

from .constants import MIN_CERTIFIED_DEGREE, M, QUARTIC_BASE, T, X, constant_name
from .enums import ResidueClass, Verdict
from .errors import CertificateError, OutOfScopeError, PreconditionError
from .exactpoly import MultiPoly, wronskian_t
from .fundsol import FundamentalFamily, build_family, build_q
from .kdvlike import R as R_band
from .logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RemainderSet:
    """The remainder polynomials R_k of one family, keyed by k."""
    m: int
    R: Dict[int, MultiPoly]

    def assemble(self) -> MultiPoly:
        """sum_k R_k x^(2m-k-1)."""
        x = MultiPoly.var(X)
        total = MultiPoly.zero((X,))
        for k, r in self.R.items():
            total = total + r * x ** (2 * self.m - k - 1)
        return total


@dataclass(frozen=True)
class Witness:
    """Name of a nonvanishing polynomial and its exact value."""
    poly: str
    value: Fraction

    def to_dict(self) -> dict:
        return {'poly': self.poly, 'value': f"{self.value.numerator}/{self.value.denominator}"}

    @classmethod
    def from_dict(cls, data) -> 'Witness':
        return cls(data['poly'], Fraction(data['value']))


@dataclass(frozen=True)
class Certificate:
    """
    Verdict for a spatial degree.

    Args:
        m (int): The degree.
        verdict (Verdict): EXISTS or NOT_EXISTS.
        witness (Witness, optional): Nonvanishing polynomial for NOT_EXISTS.
        checks (dict): Every evaluated z-combination by name.
        leading (dict): For direct certificates, k -> t-leading coefficient of R_k
            taken from the actual family.
    """
    m: int
    verdict: Verdict
    witness: Optional[Witness] = None
    checks: Dict[str, Fraction] = field(default_factory=dict)
    leading: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is Verdict.NOT_EXISTS and (self.witness is None or self.witness.value == 0):
            raise CertificateError(f"a not_exists certificate for m={self.m} needs a nonzero witness")

    def to_dict(self) -> dict:
        data = {'m': self.m, 'verdict': self.verdict.value}
        if self.witness is not None:
            data['witness'] = self.witness.to_dict()
        if self.checks:
            data['checks'] = {k: f"{v.numerator}/{v.denominator}" for k, v in self.checks.items()}
        if self.leading:
            data['leading'] = {str(k): f"{v.numerator}/{v.denominator}" for k, v in self.leading.items()}
        return data

    @classmethod
    def from_dict(cls, data) -> 'Certificate':
        return cls(
            m=int(data['m']),
            verdict=Verdict(data['verdict']),
            witness=Witness.from_dict(data['witness']) if 'witness' in data else None,
            checks={k: Fraction(v) for k, v in data.get('checks', {}).items()},
            leading={int(k): Fraction(v) for k, v in data.get('leading', {}).items()}
        )


@dataclass(frozen=True)
class FactorizationCheck:
    """Outcome of one leading-coefficient identity."""
    residue: ResidueClass
    s: int
    q: int
    identity: str
    holds: bool


@dataclass(frozen=True)
class PositivityCertificate:
    """
    Taylor shift of m^4 - 8m^3 + 19m^2 - 12m + offset at m = start + n.

    All shifted coefficients non-negative with a positive constant term
    proves the quartic positive for every integer m >= start.
    """
    offset: int
    start: int
    shifted: Tuple[Fraction, ...]

    @property
    def holds(self) -> bool:
        return self.shifted[0] > 0 and all(c >= 0 for c in self.shifted)


# -- remainders ---------------------------------------------------------------

def _remainder_term(Q, m: int, k: int, t: str = T) -> MultiPoly:
    total = MultiPoly.zero(Q(0).vars)
    for l in range(k - m, m + 1):
        weight = Fraction(k - 2 * l, 2)
        if weight:
            total = total + wronskian_t(Q(l), Q(k - l), t) * weight
    for l in range(max(0, k - m - 1), min(m - 2, k - 3) + 1):
        weight = (m - l) * (m - l - 1) * (m + l - k + 3) * (m + l - k + 2)
        total = total + Q(l) * Q(k - l - 3) * (3 * weight)
    return total


def remainder_polys(fam: FundamentalFamily) -> RemainderSet:
    """
    Remainders R_k of a family from the symmetrized sum.

    Args:
        fam (FundamentalFamily): Output of build_family.

    Returns:
        RemainderSet: R_k for m+1 <= k <= 2m-1 (empty for m <= 1).
    """
    m = fam.m

    def Q(l: int) -> MultiPoly:
        return fam.P[m - l]

    R = {k: _remainder_term(Q, m, k) for k in range(m + 1, 2 * m)}
    logger.debug(f"computed {len(R)} remainders for m={m}")
    return RemainderSet(m, R)


def remainder_polys_extracted(fam: FundamentalFamily) -> RemainderSet:
    """Remainders R_k read off the x-coefficients of R_(m) fbar."""
    m = fam.m
    band = R_band(fam.fbar, m)
    return RemainderSet(m, {k: band.coeff_of(X, 2 * m - k - 1).ensure_vars(T)
                            for k in range(m + 1, 2 * m)})


# -- leading polynomials ------------------------------------------------------

@lru_cache(maxsize=None)
def leading_x(k: int) -> MultiPoly:
    """
    Coefficient of t^floor(k/3) in Q_k.

    Returns:
        MultiPoly: Polynomial in m and c1, c2.
    """
    return build_q(k).value.coeff_of(T, k // 3)


@lru_cache(maxsize=None)
def z_poly(q: int) -> MultiPoly:
    """z_q = x_{3q,q}, a polynomial in m only."""
    z = leading_x(3 * q)
    stray = [n for n in z.free_variables() if n != M]
    if stray:
        raise CertificateError(f"z_{q} unexpectedly depends on {stray}")
    return z.with_vars((M,))


@lru_cache(maxsize=None)
def z_recursive(q: int) -> MultiPoly:
    """
    z_q from the leading-term recursion over z_0..z_{q-1}.

    z_q = 1/(3 q^2) [ -3/2 sum_{u=1}^{q-1} (q-2u)^2 z_u z_{q-u}
                      + 3 sum_{u=0}^{q-1} (m-3u)(m-3u-1)(m-3(q-u-1))(m-3(q-u-1)-1) z_u z_{q-1-u} ]
    """
    m = MultiPoly.var(M)
    if q == 0:
        return MultiPoly.constant(1, (M,))
    total = MultiPoly.zero((M,))
    for u in range(1, q):
        total = total + z_recursive(u) * z_recursive(q - u) * Fraction(-3 * (q - 2 * u) ** 2, 2)
    for u in range(q):
        v = q - u - 1
        weight = (m - 3 * u) * (m - 3 * u - 1) * (m - 3 * v) * (m - 3 * v - 1) * 3
        total = total + z_recursive(u) * z_recursive(v) * weight
    return total / (3 * q * q)


def inverse_factorial(q: int) -> Fraction:
    """1/q! as an exact rational."""
    return Fraction(1, int(factorial(q, exact=True)))


def z_combination(offset: int) -> MultiPoly:
    """z_2 + offset * z_1."""
    return z_poly(2) + z_poly(1) * offset


def quartic(offset: int) -> MultiPoly:
    """m^4 - 8m^3 + 19m^2 - 12m + offset."""
    m = MultiPoly.var(M)
    total = MultiPoly.constant(offset, (M,))
    for power, c in zip(range(4, -1, -1), QUARTIC_BASE):
        total = total + m ** power * c
    return total


def quartic_positivity(offset: int, start: int) -> PositivityCertificate:
    """Shift the quartic to m = start + n and collect the coefficients in n."""
    n = MultiPoly.var('n')
    shifted = quartic(offset).substitute(M, n + start).ensure_vars('n')
    coeffs = tuple(shifted.coeff_of('n', i).constant_value() for i in range(5))
    return PositivityCertificate(offset, start, coeffs)


def quartic_sweep(offset: int, start: int, stop: int) -> bool:
    """Evaluate the quartic at every integer in [start, stop] and check positivity."""
    a, b, c, d, e = QUARTIC_BASE
    e += offset
    return all((((a * m + b) * m + c) * m + d) * m + e > 0 for m in range(start, stop + 1))


# -- remainder leading coefficients -------------------------------------------

def leading_y(k: int, m_value: int) -> Union[Fraction, MultiPoly]:
    """
    Coefficient of t^(floor(k/3) - 1) in R_k for the degree-m family.

    Args:
        k (int): Remainder index, m+1 <= k <= 2m-1 and k >= 3.
        m_value (int): Degree of the family.

    Returns:
        Fraction when the coefficient is free of constants (always for k = 0 mod 3),
        otherwise a MultiPoly in the family constants.

    Raises:
        PreconditionError: If k is outside the remainder range.
    """
    if not (m_value + 1 <= k <= 2 * m_value - 1) or k < 3:
        raise PreconditionError(f"k={k} is outside the remainder range of m={m_value}")
    fam = _symbolic_family(m_value)
    r = _remainder_term(lambda l: fam.P[m_value - l], m_value, k)
    value = r.coeff_of(T, k // 3 - 1)
    return value.constant_value() if value.is_constant() else value


@lru_cache(maxsize=None)
def _symbolic_family(m_value: int) -> FundamentalFamily:
    return build_family(m_value)


@lru_cache(maxsize=None)
def _zero_family(m_value: int) -> FundamentalFamily:
    return build_family(m_value, {constant_name(j): 0 for j in range(m_value)})


def leading_y_direct(m_value: int) -> Dict[int, Fraction]:
    """
    t-leading coefficients of R_{3q} for every 3q in the remainder range,
    read off the x-coefficients of R_(m) fbar = T fbar - B_(m) fbar.
    """
    fam = _zero_family(m_value)
    band = R_band(fam.fbar, m_value)
    values = {}
    for k in range(m_value + 1, 2 * m_value):
        if k % 3 == 0:
            r = band.coeff_of(X, 2 * m_value - k - 1).ensure_vars(T)
            values[k] = r.coeff_of(T, k // 3 - 1).constant_value()
    return values


def Y_polynomial(q: int, m_value: int) -> MultiPoly:
    """
    Y_q as a polynomial in m through the z's, with the index layout and the
    integer weights of degree m_value.

    Evaluating at m = m_value gives the t^(q-1) coefficient of R_{3q}.
    """
    k = 3 * q
    total = MultiPoly.zero((M,))
    for u in range(q + 1):
        l = 3 * u
        if k - m_value <= l <= m_value and q - 2 * u:
            total = total + z_poly(u) * z_poly(q - u) * Fraction(-3 * (q - 2 * u) ** 2, 2)
    for u in range(q):
        l = 3 * u
        if max(0, k - m_value - 1) <= l <= min(m_value - 2, k - 3):
            weight = (m_value - l) * (m_value - l - 1) * (m_value + l - k + 3) * (m_value + l - k + 2)
            total = total + z_poly(u) * z_poly(q - u - 1) * (3 * weight)
    return total


def _identities(s: int) -> List[Tuple[ResidueClass, int, int, str, MultiPoly]]:
    z = z_poly
    found = []
    if s >= 2:
        found.append((ResidueClass.ZERO, 3 * s, 2 * s - 1, f"Y_{2*s-1} = -3 z_{s-1} (z_{s} - 36 z_{s-1})",
                      z(s - 1) * (z(s) - z(s - 1) * 36) * -3))
        found.append((ResidueClass.ONE, 3 * s + 1, 2 * s - 1, f"Y_{2*s-1} = -3 z_{s-1} (z_{s} - 144 z_{s-1})",
                      z(s - 1) * (z(s) - z(s - 1) * 144) * -3))
    if s >= 3:
        found.append((ResidueClass.ZERO, 3 * s, 2 * s - 2, f"Y_{2*s-2} = -12 z_{s-2} (z_{s} - 90 z_{s-1})",
                      z(s - 2) * (z(s) - z(s - 1) * 90) * -12))
        found.append((ResidueClass.ONE, 3 * s + 1, 2 * s - 2, f"Y_{2*s-2} = -12 z_{s-2} (z_{s} - 252 z_{s-1})",
                      z(s - 2) * (z(s) - z(s - 1) * 252) * -12))
    if s >= 1:
        found.append((ResidueClass.TWO, 3 * s + 2, 2 * s + 1, f"Y_{2*s+1} = 12 z_{s}^2",
                      z(s) * z(s) * 12))
    return found


def factorization_checks(s: int) -> List[FactorizationCheck]:
    """
    Verify the leading-coefficient factorizations for one value of s.

    Each identity is checked as an exact polynomial identity in m, with the
    index layout of the smallest degree in the residue class that uses s.

    Returns:
        list: One FactorizationCheck per identity available at this s.
    """
    report = []
    for residue, m_value, q, text, claimed in _identities(s):
        holds = (Y_polynomial(q, m_value) - claimed).is_zero()
        logger.debug(f"{text} (m={m_value}): {'holds' if holds else 'FAILS'}")
        report.append(FactorizationCheck(residue, s, q, text, holds))
    return report


# -- certificates ---------------------------------------------------------------

_CLASS_CHECKS = {
    ResidueClass.TWO: ((('z1', 0),), 'z1'),
    ResidueClass.ZERO: ((('z1', None), ('z2', 0), ('z2-36z1', -36), ('z2+36z1', 36)), 'z2-36z1'),
    ResidueClass.ONE: ((('z1', None), ('z2', 0), ('z2-144z1', -144), ('z2+144z1', 144)), 'z2-144z1'),
}


def _check_value(name: str, offset: Optional[int], m_value: int) -> Fraction:
    if name == 'z1':
        return z_poly(1).evaluate({M: m_value})
    return z_combination(offset).evaluate({M: m_value})


def nonexistence_certificate(m_value: int, direct: bool = False) -> Certificate:
    """
    Certify that no polynomial solution of x-degree m_value exists.

    Args:
        m_value (int): Degree, at least 5.
        direct (bool): Also recompute the t-leading coefficients of R_{3q}
            from the family itself and cross-check them against Y_q.

    Returns:
        Certificate: NOT_EXISTS with the class witness.

    Raises:
        OutOfScopeError: If m_value < 5.
        CertificateError: If a check vanishes or the two paths disagree.
    """
    if m_value < MIN_CERTIFIED_DEGREE:
        raise OutOfScopeError(f"degrees below {MIN_CERTIFIED_DEGREE} are classified explicitly, got {m_value}")
    residue = ResidueClass.of(m_value)
    entries, witness_name = _CLASS_CHECKS[residue]
    checks = {name: _check_value(name, offset, m_value) for name, offset in entries}
    zeros = [name for name, value in checks.items() if value == 0]
    if zeros:
        raise CertificateError(f"m={m_value}: {', '.join(zeros)} vanish")

    leading = {}
    if direct:
        leading = leading_y_direct(m_value)
        for k, value in leading.items():
            formula = Y_polynomial(k // 3, m_value).evaluate({M: m_value})
            if value != formula:
                raise CertificateError(f"m={m_value}, k={k}: direct {value} != formula {formula}")
        if not any(leading.values()):
            raise CertificateError(f"m={m_value}: every leading remainder coefficient vanishes")

    cert = Certificate(m_value, Verdict.NOT_EXISTS, Witness(witness_name, checks[witness_name]),
                       checks, leading)
    logger.debug(f"m={m_value}: not_exists via {witness_name} = {checks[witness_name]}")
    return cert


def witness_positivity(residue: ResidueClass) -> Optional[PositivityCertificate]:
    """Positivity of the witness quartic over the first certified degree of the class."""
    if residue is ResidueClass.TWO:
        return None
    offset = -72 if residue is ResidueClass.ZERO else -288
    start = MIN_CERTIFIED_DEGREE + (residue.value - MIN_CERTIFIED_DEGREE) % 3
    return quartic_positivity(offset, start)
