"""
The quadratic operator T of the KdV-like bilinear equation and its split
T = B_(m) + R_(m) into x-degree bands.

T f = W_t(f_x, f) + 3 (f_xx)^2 = f f_xt - f_x f_t + 3 (f_xx)^2, which is half
of (D_{3,x} D_{3,t} + D_{3,x}^4) f.f. For deg_x f <= m, B_(m) f keeps the
x-powers >= m - 1 of T f and R_(m) f keeps the powers <= m - 2.

Both bands are available two ways: by extracting x-coefficients of the
directly computed T f, and by summing the coefficient formula
    [x^p] T f = sum_j j W(f_j, f_{p+1-j})
              + 3 sum_j j (j-1) (p+4-j) (p+3-j) f_j f_{p+4-j}
over the coefficient profile f = sum_j f_j(t) x^j.
"""

from dataclasses import dataclass

from .constants import T as T_VAR, X
from .errors import PreconditionError
from .exactpoly import MultiPoly, wronskian_t


@dataclass(frozen=True)
class CoefficientProfile:
    """
    The coefficients f_0(t), ..., f_m(t) of a polynomial in x.

    Args:
        m (int): x-degree bound.
        coeffs (list): ``coeffs[j]`` multiplies ``x**j``; length ``m + 1``.
        x (str): Name of the spatial variable.
    """
    m: int
    coeffs: tuple
    x: str = X

    def __getitem__(self, j: int) -> MultiPoly:
        if 0 <= j <= self.m:
            return self.coeffs[j]
        return MultiPoly.zero(self.coeffs[0].vars if self.coeffs else ())

    def assemble(self) -> MultiPoly:
        """Rebuild sum_j f_j x^j."""
        x = MultiPoly.var(self.x)
        total = MultiPoly.zero((self.x,))
        for j, c in enumerate(self.coeffs):
            total = total + c * x ** j
        return total


def profile(f: MultiPoly, m: int, x: str = X, t: str = T_VAR) -> CoefficientProfile:
    """
    Split f into its x-coefficients f_0..f_m.

    Raises:
        PreconditionError: If deg_x f > m.
    """
    f = f.ensure_vars(x, t)
    _check_degree(f, m, x)
    table = f.coeff_of(x, 0).vars
    by_power = f.coefficients(x)
    coeffs = tuple(by_power.get(j, MultiPoly.zero(table)) for j in range(m + 1))
    return CoefficientProfile(m, coeffs, x)


def _check_degree(f: MultiPoly, m: int, x: str) -> None:
    if m < 0:
        raise PreconditionError(f"degree bound must be non-negative, got {m}")
    if f.degree(x) > m:
        raise PreconditionError(f"deg_{x} f = {f.degree(x)} exceeds the bound m = {m}")


def T(f: MultiPoly, x: str = X, t: str = T_VAR) -> MultiPoly:
    """
    Apply the quadratic operator T f = f f_xt - f_x f_t + 3 f_xx^2.

    Args:
        f (MultiPoly): Polynomial in x, t and optional constants.

    Returns:
        MultiPoly: T f.
    """
    f = f.ensure_vars(x, t)
    f_x = f.derive(x)
    f_xx = f_x.derive(x)
    return wronskian_t(f_x, f, t) + f_xx * f_xx * 3


def B(f: MultiPoly, m: int, x: str = X, t: str = T_VAR) -> MultiPoly:
    """
    Band of T f with x-degree >= m - 1.

    Raises:
        PreconditionError: If deg_x f > m.
    """
    f = f.ensure_vars(x, t)
    _check_degree(f, m, x)
    return T(f, x, t).band(x, low=m - 1)


def R(f: MultiPoly, m: int, x: str = X, t: str = T_VAR) -> MultiPoly:
    """
    Band of T f with x-degree <= m - 2.

    Raises:
        PreconditionError: If deg_x f > m.
    """
    f = f.ensure_vars(x, t)
    _check_degree(f, m, x)
    return T(f, x, t).band(x, high=m - 2)


def t_coefficient(prof: CoefficientProfile, p: int, t: str = T_VAR) -> MultiPoly:
    """
    The coefficient of x^p in T f from the double-sum formula.

    Args:
        prof (CoefficientProfile): Coefficients of f.
        p (int): Power of x, 0 <= p <= 2m - 1.

    Returns:
        MultiPoly: Polynomial in t and the constants.
    """
    m = prof.m
    total = MultiPoly.zero(prof[0].vars)
    # x-derivative pairs: j + (p + 1 - j) - 1 = p
    for j in range(max(1, p + 1 - m), min(m, p + 1) + 1):
        total = total + wronskian_t(prof[j], prof[p + 1 - j], t) * j
    for j in range(max(2, p + 4 - m), min(m, p + 2) + 1):
        weight = j * (j - 1) * (p + 4 - j) * (p + 3 - j)
        if weight:
            total = total + prof[j] * prof[p + 4 - j] * (3 * weight)
    return total


def _formula_band(f: MultiPoly, m: int, powers, x: str, t: str) -> MultiPoly:
    prof = profile(f, m, x, t)
    xv = MultiPoly.var(x)
    total = MultiPoly.zero((x,))
    for p in powers:
        c = t_coefficient(prof, p, t)
        if c:
            total = total + c * xv ** p
    return total


def B_formula(f: MultiPoly, m: int, x: str = X, t: str = T_VAR) -> MultiPoly:
    """B_(m) f assembled from the coefficient formula."""
    return _formula_band(f, m, range(max(m - 1, 0), 2 * m), x, t)


def R_formula(f: MultiPoly, m: int, x: str = X, t: str = T_VAR) -> MultiPoly:
    """R_(m) f assembled from the coefficient formula."""
    return _formula_band(f, m, range(0, m - 1), x, t)
