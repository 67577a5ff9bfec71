"""
Exact sparse multivariate polynomials over the rationals.

A MultiPoly carries an ordered table of variable names and a sparse map from
exponent vectors (one entry per table name) to Fraction coefficients. Every
symbolic object in the package is a MultiPoly: the unknown f(x, t), the
coefficient polynomials P and Q, the z-polynomials in m and all residuals.

Values are immutable. Binary operations between polynomials over different
tables promote both operands to the union table (left operand's order first,
then the right operand's new names). Equality is by variable name, so the
same polynomial written over two tables compares equal.
"""

import re
from fractions import Fraction
from itertools import product
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .enums import ArithOp
from .errors import ParseError, UnknownVariableError

Rational = Fraction
Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

_COEFF_RE = re.compile(r'^-?\d+(?:/\d+)?$')


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class MultiPoly:
    """
    Sparse multivariate polynomial with rational coefficients.

    Args:
        vars (Sequence[str]): Ordered, distinct variable names.
        terms (Mapping[tuple, Fraction], optional): Exponent vector to coefficient.
            Zero coefficients are dropped.

    Raises:
        ValueError: If names repeat or an exponent vector has the wrong length
            or a negative entry.
    """

    __slots__ = ('_vars', '_index', '_terms', '_key')

    def __init__(self, vars: Sequence[str] = (), terms: Optional[Mapping[Exponents, Scalar]] = None):
        names = tuple(vars)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self._vars = names
        self._index = {name: i for i, name in enumerate(names)}
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(names):
                raise ValueError(f"exponent vector {exps} does not match table {names}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = _as_fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self._terms = {e: c for e, c in clean.items() if c}
        self._key = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str] = ()) -> 'MultiPoly':
        return cls(vars)

    @classmethod
    def constant(cls, value: Scalar, vars: Sequence[str] = ()) -> 'MultiPoly':
        """Create the constant polynomial ``value`` over the given table."""
        names = tuple(vars)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def var(cls, name: str, vars: Optional[Sequence[str]] = None) -> 'MultiPoly':
        """
        Create the polynomial consisting of a single variable.

        Args:
            name (str): Variable to create.
            vars (Sequence[str], optional): Table to build over; ``name`` is
                appended when missing. Defaults to ``(name,)``.
        """
        names = tuple(vars) if vars is not None else (name,)
        if name not in names:
            names = names + (name,)
        exps = tuple(1 if n == name else 0 for n in names)
        return cls(names, {exps: 1})

    @classmethod
    def symbols(cls, *names: str) -> Tuple['MultiPoly', ...]:
        """Create one variable polynomial per name, all over the same table."""
        return tuple(cls.var(name, names) for name in names)

    # -- basic accessors --------------------------------------------------

    @property
    def vars(self) -> Tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        """
        Return the value of a constant polynomial.

        Raises:
            ValueError: If the polynomial involves any variable.
        """
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self._vars), Fraction(0))

    def free_variables(self) -> Tuple[str, ...]:
        """Names that occur with a positive exponent, in table order."""
        used = [False] * len(self._vars)
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self._vars, used) if u)

    def degree(self, v: str) -> int:
        """Degree in ``v``; the zero polynomial has degree -1."""
        i = self._position(v)
        if not self._terms:
            return -1
        return max(exps[i] for exps in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def _position(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVariableError(v, self._vars) from None

    # -- table handling ---------------------------------------------------

    def with_vars(self, vars: Sequence[str]) -> 'MultiPoly':
        """
        Re-express the polynomial over a larger (or reordered) table.

        Raises:
            UnknownVariableError: If a variable in use is missing from ``vars``.
        """
        names = tuple(vars)
        if names == self._vars:
            return self
        index = {n: i for i, n in enumerate(names)}
        for n in self.free_variables():
            if n not in index:
                raise UnknownVariableError(n, names)
        positions = [(index[n], i) for i, n in enumerate(self._vars) if n in index]
        terms = {}
        for exps, coeff in self._terms.items():
            new = [0] * len(names)
            for j, i in positions:
                new[j] = exps[i]
            terms[tuple(new)] = coeff
        return MultiPoly(names, terms)

    def ensure_vars(self, *names: str) -> 'MultiPoly':
        """Append any missing names to the table."""
        missing = tuple(n for n in names if n not in self._index)
        if not missing:
            return self
        return self.with_vars(self._vars + missing)

    def _union(self, other: 'MultiPoly') -> Tuple['MultiPoly', 'MultiPoly']:
        if other._vars == self._vars:
            return self, other
        table = self._vars + tuple(n for n in other._vars if n not in self._index)
        return self.with_vars(table), other.with_vars(table)

    def _coerce(self, other) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            return other
        if _is_scalar(other):
            return MultiPoly.constant(other, self._vars)
        return None

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly(self._vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> 'MultiPoly':
        return self

    def __add__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._union(other)
        terms = dict(a._terms)
        for exps, coeff in b._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return MultiPoly(a._vars, terms)

    def __radd__(self, other) -> 'MultiPoly':
        return self.__add__(other)

    def __sub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'MultiPoly':
        if _is_scalar(other):
            scale = Fraction(other)
            return MultiPoly(self._vars, {e: c * scale for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._union(other)
        terms: Dict[Exponents, Fraction] = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                terms[exps] = terms.get(exps, Fraction(0)) + ca * cb
        return MultiPoly(a._vars, terms)

    def __rmul__(self, other) -> 'MultiPoly':
        return self.__mul__(other)

    def __truediv__(self, other) -> 'MultiPoly':
        if not _is_scalar(other):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1, self._vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- equality ---------------------------------------------------------

    def _canonical(self) -> frozenset:
        if self._key is None:
            key = set()
            for exps, coeff in self._terms.items():
                mono = tuple(sorted((n, e) for n, e in zip(self._vars, exps) if e))
                key.add((mono, coeff))
            self._key = frozenset(key)
        return self._key

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        # constants hash like the scalar they compare equal to
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._canonical())

    # -- calculus ---------------------------------------------------------

    def derive(self, v: str) -> 'MultiPoly':
        """
        Exact partial derivative with respect to ``v``.

        Raises:
            UnknownVariableError: If ``v`` is not in the table.
        """
        i = self._position(v)
        terms = {}
        for exps, coeff in self._terms.items():
            e = exps[i]
            if e:
                new = exps[:i] + (e - 1,) + exps[i + 1:]
                terms[new] = coeff * e
        return MultiPoly(self._vars, terms)

    def integrate(self, v: str) -> 'MultiPoly':
        """
        Antiderivative in ``v`` with zero constant of integration.

        Raises:
            UnknownVariableError: If ``v`` is not in the table.
        """
        i = self._position(v)
        terms = {}
        for exps, coeff in self._terms.items():
            e = exps[i]
            new = exps[:i] + (e + 1,) + exps[i + 1:]
            terms[new] = coeff / (e + 1)
        return MultiPoly(self._vars, terms)

    # -- coefficients -----------------------------------------------------

    def coeff_of(self, v: str, power: int) -> 'MultiPoly':
        """
        Polynomial multiplying ``v**power``, over the table without ``v``.

        Raises:
            UnknownVariableError: If ``v`` is not in the table.
        """
        i = self._position(v)
        rest = self._vars[:i] + self._vars[i + 1:]
        terms = {exps[:i] + exps[i + 1:]: coeff
                 for exps, coeff in self._terms.items() if exps[i] == power}
        return MultiPoly(rest, terms)

    def coefficients(self, v: str) -> Dict[int, 'MultiPoly']:
        """Map each power of ``v`` that occurs to its coefficient polynomial."""
        i = self._position(v)
        rest = self._vars[:i] + self._vars[i + 1:]
        grouped: Dict[int, Dict[Exponents, Fraction]] = {}
        for exps, coeff in self._terms.items():
            grouped.setdefault(exps[i], {})[exps[:i] + exps[i + 1:]] = coeff
        return {p: MultiPoly(rest, t) for p, t in sorted(grouped.items())}

    def leading_coeff(self, v: str) -> 'MultiPoly':
        """Coefficient of the highest power of ``v``; zero for the zero polynomial."""
        d = self.degree(v)
        if d < 0:
            i = self._position(v)
            return MultiPoly(self._vars[:i] + self._vars[i + 1:])
        return self.coeff_of(v, d)

    def band(self, v: str, low: Optional[int] = None, high: Optional[int] = None) -> 'MultiPoly':
        """Keep only terms whose degree in ``v`` lies in ``[low, high]``."""
        i = self._position(v)
        terms = {exps: coeff for exps, coeff in self._terms.items()
                 if (low is None or exps[i] >= low) and (high is None or exps[i] <= high)}
        return MultiPoly(self._vars, terms)

    # -- substitution -----------------------------------------------------

    def substitute(self, v: str, value: Union[Scalar, 'MultiPoly']) -> 'MultiPoly':
        """
        Replace ``v`` by a rational or a polynomial.

        Raises:
            UnknownVariableError: If ``v`` is not in the table.
        """
        return self.compose({v: value})

    def compose(self, mapping: Mapping[str, Union[Scalar, 'MultiPoly']],
                strict: bool = True) -> 'MultiPoly':
        """
        Simultaneously substitute several variables.

        Args:
            mapping: Variable name to replacement value.
            strict (bool): Raise on names missing from the table; when False
                they are ignored.

        Returns:
            MultiPoly: The substituted polynomial. Replaced names leave the table
            unless the replacement values reintroduce them.

        Raises:
            UnknownVariableError: If ``strict`` and a name is not in the table.
        """
        active = {}
        for name, value in mapping.items():
            if name not in self._index:
                if strict:
                    raise UnknownVariableError(name, self._vars)
                continue
            active[name] = value
        if not active:
            return self
        keep = tuple(n for n in self._vars if n not in active)
        keep_idx = [self._index[n] for n in keep]
        sub = [(self._index[n], v) for n, v in active.items()]

        grouped: Dict[Exponents, Dict[Exponents, Fraction]] = {}
        for exps, coeff in self._terms.items():
            key = tuple(exps[i] for i, _ in sub)
            rest = tuple(exps[i] for i in keep_idx)
            grouped.setdefault(key, {})[rest] = coeff

        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(slot: int, e: int) -> 'MultiPoly':
            cached = powers.get((slot, e))
            if cached is None:
                value = sub[slot][1]
                if _is_scalar(value):
                    cached = MultiPoly.constant(Fraction(value) ** e, keep)
                else:
                    cached = value ** e
                powers[(slot, e)] = cached
            return cached

        result = MultiPoly.zero(keep)
        for key, rest_terms in grouped.items():
            piece = MultiPoly(keep, rest_terms)
            for slot, e in enumerate(key):
                if e:
                    piece = piece * power(slot, e)
            result = result + piece
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """
        Evaluate at a full rational point.

        Raises:
            ValueError: If some free variable has no value.
        """
        missing = [n for n in self.free_variables() if n not in values]
        if missing:
            raise ValueError(f"no value for {', '.join(missing)}")
        total = Fraction(0)
        point = [Fraction(values.get(n, 0)) for n in self._vars]
        for exps, coeff in self._terms.items():
            term = coeff
            for x, e in zip(point, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    # -- rendering --------------------------------------------------------

    def _display_order(self) -> Iterable[Tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]) == 0, tuple(-e for e in item[0])))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for exps, coeff in self._display_order():
            mono = '*'.join(n if e == 1 else f"{n}^{e}" for n, e in zip(self._vars, exps) if e)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            sign = '-' if coeff < 0 else '+'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self._vars!r}, {str(self)!r})"

    def to_latex(self) -> str:
        """Render as a LaTeX expression (display only)."""
        if not self._terms:
            return '0'
        out = ''
        for n, (exps, coeff) in enumerate(self._display_order()):
            mono = ''.join(latex_symbol(v) + ('' if e == 1 else f"^{{{e}}}")
                           for v, e in zip(self._vars, exps) if e)
            magnitude = abs(coeff)
            if magnitude.denominator != 1:
                scalar = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            elif magnitude != 1 or not mono:
                scalar = str(magnitude.numerator)
            else:
                scalar = ''
            body = scalar + mono
            if n == 0:
                out = ('-' if coeff < 0 else '') + body
            else:
                out += ('-' if coeff < 0 else '+') + body
        return out

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        """Canonical JSON-ready form with terms sorted by exponent vector."""
        return {
            'vars': list(self._vars),
            'terms': [{'coeff': f"{c.numerator}/{c.denominator}", 'exps': list(e)}
                      for e, c in sorted(self._terms.items())]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'MultiPoly':
        """
        Build a polynomial from its JSON form.

        Raises:
            ParseError: If the structure or a coefficient is malformed.
        """
        try:
            names = [str(n) for n in data['vars']]
            terms = {}
            for term in data['terms']:
                exps = tuple(int(e) for e in term['exps'])
                coeff = _parse_coeff(term['coeff'])
                if exps in terms:
                    raise ParseError(f"repeated exponent vector {list(exps)}")
                terms[exps] = coeff
            return cls(names, terms)
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"malformed polynomial: {e}") from e


def _parse_coeff(raw) -> Fraction:
    # only "num/den" strings and plain integers; no decimals or floats
    if isinstance(raw, int) and not isinstance(raw, bool):
        return Fraction(raw)
    if isinstance(raw, str) and _COEFF_RE.match(raw):
        return Fraction(raw)
    raise ParseError(f"coefficient must be an integer or 'num/den', got {raw!r}")


def latex_symbol(name: str) -> str:
    """Render ``c12`` as ``c_{12}``; other names pass through."""
    head = name.rstrip('0123456789')
    tail = name[len(head):]
    if head and tail:
        return f"{head}_{{{tail}}}"
    return name


def arith(a: MultiPoly, b: MultiPoly, which: ArithOp) -> MultiPoly:
    """
    Apply a ring operation after promoting both operands to a common table.

    Args:
        a (MultiPoly): Left operand.
        b (MultiPoly): Right operand.
        which (ArithOp): ADD, SUB or MUL.

    Returns:
        MultiPoly: The exact result.
    """
    if which is ArithOp.ADD:
        return a + b
    if which is ArithOp.SUB:
        return a - b
    if which is ArithOp.MUL:
        return a * b
    raise ValueError(f"unsupported operation {which}")


def derive(f: MultiPoly, v: str) -> MultiPoly:
    return f.derive(v)


def integrate(f: MultiPoly, v: str) -> MultiPoly:
    return f.integrate(v)


def coeff_of(f: MultiPoly, v: str, power: int) -> MultiPoly:
    return f.coeff_of(v, power)


def substitute(f: MultiPoly, v: str, value: Union[Scalar, MultiPoly]) -> MultiPoly:
    return f.substitute(v, value)


def wronskian_t(g: MultiPoly, h: MultiPoly, v: str) -> MultiPoly:
    """
    Partial Wronskian ``g_v * h - g * h_v``.

    Args:
        g (MultiPoly): First entry.
        h (MultiPoly): Second entry.
        v (str): Differentiation variable; entries free of it count as constants in it.

    Returns:
        MultiPoly: The Wronskian, antisymmetric in ``g`` and ``h``.
    """
    g, h = g.ensure_vars(v)._union(h)
    return g.derive(v) * h - g * h.derive(v)


def multi_derive(f: MultiPoly, orders: Mapping[str, int]) -> MultiPoly:
    """Apply ``derive`` repeatedly, ``orders[v]`` times per variable."""
    for v, n in orders.items():
        for _ in range(n):
            f = f.derive(v)
    return f


def monomials(degrees: Sequence[int]) -> Iterator[Exponents]:
    """All exponent vectors bounded componentwise by ``degrees``."""
    return product(*(range(d + 1) for d in degrees))
