"""Sparse bivariate polynomials over Q.

A polynomial is a map ``(i, j) -> c`` meaning ``c * y**i * x**j``: the
y-exponent comes first, matching the y-major monomial order used for every
basis in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

Monomial = Tuple[int, int]  # (y-exponent, x-exponent)
Scalar = Union[int, Fraction]


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer and refuses arithmetic.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MINUS_INFINITY"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()


class BiPoly:
    """Immutable element of Q[x, y]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = Fraction(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "BiPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, y_exp: int, x_exp: int, coeff: Scalar = 1) -> "BiPoly":
        return cls({(y_exp, x_exp): coeff})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @classmethod
    def y(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    # mapping-ish access

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in the canonical (y-exponent, x-exponent) ascending order."""
        for m in sorted(self._terms):
            yield m, self._terms[m]

    def coeff(self, y_exp: int, x_exp: int) -> Fraction:
        return self._terms.get((y_exp, x_exp), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def degree(self):
        """Total degree, or ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(i + j for i, j in self._terms)

    def y_degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(i for i, _ in self._terms)

    def min_y_exponent(self):
        """Largest k with y**k dividing self (``None`` for zero)."""
        if not self._terms:
            return None
        return min(i for i, _ in self._terms)

    def divisible_by_y_power(self, k: int) -> bool:
        return all(i >= k for i, _ in self._terms)

    # equality / hashing

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring structure

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return BiPoly._raw({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "BiPoly":
        c = Fraction(c)
        if not c:
            return BiPoly.zero()
        return BiPoly._raw({m: c * v for m, v in self._terms.items()})

    def shift_y(self, k: int) -> "BiPoly":
        """Multiply by y**k."""
        return BiPoly._raw({(i + k, j): c for (i, j), c in self._terms.items()})

    def exact_div_y(self, k: int) -> "BiPoly":
        """Divide by y**k; raises ValueError when y**k does not divide self."""
        if not self.divisible_by_y_power(k):
            raise ValueError(f"y^{k} does not divide the polynomial")
        return BiPoly._raw({(i - k, j): c for (i, j), c in self._terms.items()})

    def __repr__(self):
        from .parsing import render_poly

        return f"BiPoly({render_poly(self)!r})"

    def __str__(self):
        from .parsing import render_poly

        return render_poly(self)


def _coerce(value) -> Optional[BiPoly]:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.const(value)
    return None


def add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def scale(c: Scalar, p: BiPoly) -> BiPoly:
    return p.scale(c)


# calculus


def partial_x(p: BiPoly) -> BiPoly:
    return BiPoly._raw({(i, j - 1): c * j for (i, j), c in p._terms.items() if j})


def partial_y(p: BiPoly) -> BiPoly:
    return BiPoly._raw({(i - 1, j): c * i for (i, j), c in p._terms.items() if i})


def euler_y(p: BiPoly) -> BiPoly:
    """y * d/dy: multiplies each monomial by its y-exponent."""
    return BiPoly._raw({(i, j): c * i for (i, j), c in p._terms.items() if i})


def antiderivative_x(p: BiPoly) -> BiPoly:
    """Antiderivative in x with zero integration constant."""
    return BiPoly._raw({(i, j + 1): c / (j + 1) for (i, j), c in p._terms.items()})


def antiderivative_y(p: BiPoly) -> BiPoly:
    """Antiderivative in y with zero integration constant."""
    return BiPoly._raw({(i + 1, j): c / (i + 1) for (i, j), c in p._terms.items()})


# y-adic decomposition


class YAdicSplit(NamedTuple):
    """``p == sum(y**i * low[i]) + high`` with ``low[i]`` in Q[x] and y**(n-1) | high."""

    low: Tuple[BiPoly, ...]
    high: BiPoly

    def reassemble(self) -> BiPoly:
        total = self.high
        for i, part in enumerate(self.low):
            total = total + part.shift_y(i)
        return total


def y_adic_split(p: BiPoly, n: int) -> YAdicSplit:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    low: List[Dict[Monomial, Fraction]] = [{} for _ in range(n - 1)]
    high: Dict[Monomial, Fraction] = {}
    for (i, j), c in p._terms.items():
        if i < n - 1:
            low[i][(0, j)] = c
        else:
            high[(i, j)] = c
    return YAdicSplit(tuple(BiPoly._raw(t) for t in low), BiPoly._raw(high))


# grading


def monomial_weight(m: Monomial, wx: int = 1, wy: int = 1) -> int:
    i, j = m
    return wy * i + wx * j


def weight_components(p: BiPoly, wx: int = 1, wy: int = 1) -> Dict[int, BiPoly]:
    parts: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in p._terms.items():
        parts.setdefault(monomial_weight(m, wx, wy), {})[m] = c
    return {w: BiPoly._raw(parts[w]) for w in sorted(parts)}


def is_homogeneous(p: BiPoly, wx: int = 1, wy: int = 1) -> Optional[int]:
    """The common weight of all terms, or None (also None for zero)."""
    weights = {monomial_weight(m, wx, wy) for m in p._terms}
    if len(weights) == 1:
        return weights.pop()
    return None


def monomial_basis(w: int, y_le: Optional[int] = None, y_ge: Optional[int] = None) -> List[Monomial]:
    """Total-degree-``w`` monomials ordered by ascending y-exponent.

    ``y_le`` / ``y_ge`` restrict the y-exponent. Negative ``w`` gives [].
    """
    if w < 0:
        return []
    lo = 0 if y_ge is None else max(0, y_ge)
    hi = w if y_le is None else min(w, y_le)
    return [(i, w - i) for i in range(lo, hi + 1)]


def from_monomials(monos: Iterable[Monomial]) -> List[BiPoly]:
    return [BiPoly.monomial(i, j) for i, j in monos]
