#!/usr/bin/env python3
"""
Exact algebra for the Pascal geometry toolkit
Rational scalars, sparse multivariate polynomials, arc polynomials in t and t-adic limits
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp

from core.errors import IndeterminateLimitError
from utils.helpers import safe_log

# Exact scalar; always reduced with positive denominator.
Rational = Fraction

# Canonical variable order; anything else sorts after these, by name.
VARIABLE_ORDER = ('a', 'b', 'c', 'd', 'e', 'f', 't')

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]


def variable_key(name: str) -> Tuple[int, str]:
    """Sort key placing a < b < ... < f < t < auxiliaries (alphabetical)"""
    if name in VARIABLE_ORDER:
        return VARIABLE_ORDER.index(name), ''
    return len(VARIABLE_ORDER), name


def _normalize_monomial(monomial: Iterable[Tuple[str, int]]) -> Monomial:
    exponents: Dict[str, int] = {}
    for name, exp in monomial:
        if exp < 0:
            raise ValueError(f"Negative exponent for {name}")
        if exp:
            exponents[name] = exponents.get(name, 0) + exp
    return tuple(sorted(exponents.items(), key=lambda item: variable_key(item[0])))


def _multiply_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    return _normalize_monomial(m1 + m2)


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class UniPoly:
    """Univariate polynomial with rational coefficients (coefficient of t^k at index k)"""

    __slots__ = ('_coeffs', 'var')

    def __init__(self, coefficients: Sequence[Scalar] = (), var: str = 't'):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)
        self.var = var

    @classmethod
    def constant(cls, value: Scalar, var: str = 't') -> 'UniPoly':
        return cls([value], var)

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1, var: str = 't') -> 'UniPoly':
        return cls([0] * power + [coeff], var)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    def valuation(self) -> Optional[int]:
        """Order of vanishing at t = 0; None for the zero polynomial"""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def to_multipoly(self) -> 'MultiPoly':
        return MultiPoly({((self.var, k),): c for k, c in enumerate(self._coeffs)})

    def _coerce(self, other: Any) -> Optional['UniPoly']:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other, self.var)
        return None

    def __add__(self, other: Any) -> 'UniPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = max(len(self._coeffs), len(rhs._coeffs))
        return UniPoly([self.coefficient(k) + rhs.coefficient(k) for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> 'UniPoly':
        return UniPoly([-c for c in self._coeffs], self.var)

    def __sub__(self, other: Any) -> 'UniPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> 'UniPoly':
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> 'UniPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self._coeffs) + len(rhs._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            if not x:
                continue
            for j, y in enumerate(rhs._coeffs):
                out[i + j] += x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'UniPoly':
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = UniPoly.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        return hash((self.var, self._coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return str(self.to_multipoly())


class MultiPoly:
    """
    Sparse multivariate polynomial over the rationals

    Terms map sorted (variable, exponent) tuples to nonzero Fractions; the
    variable universe is whatever the terms mention, so operands with
    different variables combine without declaration.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Iterable[Tuple[str, int]], Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            key = _normalize_monomial(monomial)
            cleaned[key] = cleaned.get(key, Fraction(0)) + Fraction(coeff)
        self._terms: Dict[Monomial, Fraction] = {m: c for m, c in cleaned.items() if c}

    @classmethod
    def constant(cls, value: Scalar) -> 'MultiPoly':
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> 'MultiPoly':
        return cls({((name, 1),): 1})

    @classmethod
    def variables(cls, names: str) -> Tuple['MultiPoly', ...]:
        """Generators for a whitespace-separated list of names"""
        return tuple(cls.variable(name) for name in names.split())

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variable_names(self) -> Tuple[str, ...]:
        names = {name for monomial in self._terms for name, _ in monomial}
        return tuple(sorted(names, key=variable_key))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exp for _, exp in monomial) for monomial in self._terms)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self._terms), default=-1)

    def coefficient(self, monomial: Iterable[Tuple[str, int]]) -> Fraction:
        return self._terms.get(_normalize_monomial(monomial), Fraction(0))

    @staticmethod
    def _coerce(other: Any) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, UniPoly):
            return other.to_multipoly()
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other: Any) -> 'MultiPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in rhs._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coeff
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> 'MultiPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> 'MultiPoly':
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> 'MultiPoly':
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                key = _multiply_monomials(m1, m2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = MultiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, values: Mapping[str, Any]) -> Any:
        """
        Evaluate at ring elements (ints, Fractions, UniPolys, ...)

        Args:
            values: Binding for every variable of the polynomial

        Returns:
            The value, in whatever ring the bindings live in
        """
        total: Any = 0
        for monomial, coeff in self._terms.items():
            term: Any = coeff.numerator if coeff.denominator == 1 else coeff
            for name, exp in monomial:
                value = values[name]
                term = term * (value if exp == 1 else value ** exp)
            total = total + term
        return total

    def substitute(self, bindings: Mapping[str, Any]) -> 'MultiPoly':
        """
        Compose with the given bindings; unbound variables pass through

        Args:
            bindings: Map variable -> MultiPoly, UniPoly or rational scalar

        Returns:
            The composed polynomial (a MultiPoly, possibly constant)
        """
        converted = {name: self._coerce(value) for name, value in bindings.items()}
        for name, value in converted.items():
            if value is None:
                raise TypeError(f"Cannot substitute {bindings[name]!r} for {name}")
        powers: Dict[Tuple[str, int], MultiPoly] = {}

        def power_of(name: str, exp: int) -> MultiPoly:
            key = (name, exp)
            if key not in powers:
                powers[key] = converted[name] ** exp
            return powers[key]

        result = MultiPoly()
        for monomial, coeff in self._terms.items():
            term = MultiPoly.constant(coeff)
            passthrough = []
            for name, exp in monomial:
                if name in converted:
                    term = term * power_of(name, exp)
                else:
                    passthrough.append((name, exp))
            if passthrough:
                term = term * MultiPoly({tuple(passthrough): 1})
            result = result + term
        return result

    def as_unipoly(self, var: str = 't') -> UniPoly:
        """Reinterpret a polynomial in the single variable `var` (or a constant)"""
        coeffs: Dict[int, Fraction] = {}
        for monomial, coeff in self._terms.items():
            exps = dict(monomial)
            if set(exps) - {var}:
                raise ValueError(f"Polynomial involves variables other than {var}: {self}")
            coeffs[exps.get(var, 0)] = coeff
        size = max(coeffs, default=-1) + 1
        return UniPoly([coeffs.get(k, 0) for k in range(size)], var)

    def _sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        names = self.variable_names

        def key(item):
            exps = dict(item[0])
            return tuple(-exps.get(name, 0) for name in names)

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coeff in self._sorted_terms():
            body = "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in monomial)
            magnitude = abs(coeff)
            if body and magnitude == 1:
                text = body
            elif body:
                text = f"{_format_scalar(magnitude)}*{body}"
            else:
                text = _format_scalar(magnitude)
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign} {text}")
        rendered = " ".join(parts)
        return rendered[2:] if rendered.startswith("+ ") else "-" + rendered[2:]

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def poly_arith(lhs: MultiPoly, rhs: MultiPoly, op: str) -> MultiPoly:
    """Exact ring operation by name ('add', 'sub' or 'mul')"""
    if op == 'add':
        return lhs + rhs
    if op == 'sub':
        return lhs - rhs
    if op == 'mul':
        return lhs * rhs
    raise ValueError(f"Unknown polynomial operation: {op}")


def substitute(p: MultiPoly, bindings: Mapping[str, Any]) -> Union[MultiPoly, UniPoly]:
    """
    Substitute and, when the result only involves one arc variable, return it as a UniPoly

    Args:
        p: Polynomial to substitute into
        bindings: Map variable -> UniPoly, MultiPoly or rational

    Returns:
        UniPoly if every binding was a scalar or a UniPoly in the same variable
        and every variable of p was bound; otherwise a MultiPoly
    """
    composed = p.substitute(bindings)
    arc_vars = {b.var for b in bindings.values() if isinstance(b, UniPoly)}
    only_arcs = all(isinstance(b, (UniPoly, int, Fraction)) for b in bindings.values())
    if only_arcs and len(arc_vars) <= 1 and set(p.variable_names) <= set(bindings):
        return composed.as_unipoly(arc_vars.pop() if arc_vars else 't')
    return composed


def t_strip(triple: Sequence[UniPoly]) -> Tuple[int, List[Fraction]]:
    """
    Cancel the common power of t from a projective triple and set t = 0

    Args:
        triple: Three arc polynomials

    Returns:
        (v, limit) with v the minimum valuation and limit the t^v coefficients

    Raises:
        IndeterminateLimitError: if all three polynomials are zero
    """
    valuations = [p.valuation() for p in triple]
    finite = [v for v in valuations if v is not None]
    if not finite:
        safe_log("t_strip called on an all-zero triple", "WARNING")
        raise IndeterminateLimitError("indeterminate limit")
    v = min(finite)
    return v, [p.coefficient(v) for p in triple]


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Exact rank of a rational matrix"""
    if not rows:
        return 0
    matrix = sp.Matrix([[sp.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows])
    return matrix.rank()


@dataclass(frozen=True)
class IdentityCheck:
    """One symbolic identity checked by verify_prop22_identities"""
    name: str
    passed: bool
    residual: str


def prop22_polynomials() -> Dict[str, MultiPoly]:
    """The auxiliary polynomials P0, P1, Q0, Q1 and delta = det M of the decomposition u_i = P_i*delta + Q_i"""
    a, b, c, d, e, f = MultiPoly.variables('a b c d e f')
    delta = (b * d - c * e) - (a * d - c * f) + (a * e - b * f)
    return {
        'P0': b * f - b * e + c * e,
        'Q0': (e - f) * (b - c) * (a * e + b * d - b * f - c * e),
        'P1': -(c + f),
        'Q1': (f - e) * (b - c) * (a - c + d - f),
        'delta': delta,
    }


# Conditions under which u0, u1, u2 vanish simultaneously, as variable substitutions.
PROP22_CONDITIONS: Dict[str, Dict[str, str]] = {
    'C1': {'b': 'a', 'c': 'a'},
    'C2': {'e': 'd', 'f': 'd'},
    'C3': {'b': 'a', 'f': 'e'},
    'C4': {'c': 'b', 'e': 'd'},
    'C5': {'c': 'a', 'f': 'd'},
    'C6': {'f': 'a', 'e': 'b', 'd': 'c'},
}


def verify_prop22_identities() -> List[IdentityCheck]:
    """
    Check the decomposition of the Pascal coordinates and their common zero conditions

    Returns:
        One IdentityCheck per identity; the final control check expects a
        nonzero residual (a = b alone does not kill u0)
    """
    from core.pascal import pascal_formula

    formula = pascal_formula()
    aux = prop22_polynomials()
    u = {'u0': formula.u0, 'u1': formula.u1, 'u2': formula.u2}

    checks: List[IdentityCheck] = []
    identities = [
        ('u0 = P0*delta + Q0', u['u0'] - (aux['P0'] * aux['delta'] + aux['Q0'])),
        ('u1 = P1*delta + Q1', u['u1'] - (aux['P1'] * aux['delta'] + aux['Q1'])),
        ('u2 = delta', u['u2'] - aux['delta']),
    ]
    for name, residual in identities:
        checks.append(IdentityCheck(name, residual.is_zero(), str(residual)))

    for condition, mapping in PROP22_CONDITIONS.items():
        bindings = {var: MultiPoly.variable(target) for var, target in mapping.items()}
        for key, poly in u.items():
            residual = poly.substitute(bindings)
            checks.append(IdentityCheck(f"{key} vanishes under {condition}", residual.is_zero(), str(residual)))

    control = u['u0'].substitute({'b': MultiPoly.variable('a')})
    checks.append(IdentityCheck("u0 survives a = b alone", not control.is_zero(), str(control)))

    failed = [check.name for check in checks if not check.passed]
    if failed:
        safe_log(f"Decomposition identities failed: {failed}", "ERROR")
    else:
        safe_log(f"All {len(checks)} decomposition identities verified")
    return checks
