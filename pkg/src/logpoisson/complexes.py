"""The classical and logarithmic Poisson cochain complexes on Q[x, y].

Both complexes have the shape ``0 -> A -> A^2 -> A -> 0``. Degree-1 cochains
are coefficient pairs: w.r.t. (d/dx, y d/dy) in the logarithmic complex and
(d/dx, d/dy) in the classical one. Degree-2 cochains are the coefficient of
the top wedge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from . import loggeom
from .loggeom import LogOneForm
from .polynomial import BiPoly, euler_y, is_homogeneous, partial_x, partial_y

Pair = Tuple[BiPoly, BiPoly]
Payload = Union[BiPoly, Pair]

LOG = "log"
CLASSICAL = "classical"


class NotHomogeneous(ValueError):
    pass


class UnsupportedDegree(ValueError):
    pass


@dataclass(frozen=True)
class ComplexSpec:
    variant: str
    n: Optional[int] = None
    phi: Optional[BiPoly] = None

    def __post_init__(self):
        if self.variant == LOG:
            if self.n is None or self.n < 2:
                raise ValueError(f"n must be >= 2, got {self.n}")
        elif self.variant == CLASSICAL:
            if self.phi is None:
                raise ValueError("classical complex needs phi")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    @classmethod
    def logarithmic(cls, n: int) -> "ComplexSpec":
        return cls(LOG, n=n)

    @classmethod
    def classical(cls, phi: BiPoly) -> "ComplexSpec":
        """Classical complex of {x, y} = phi. ``n`` is filled in when phi == y**n."""
        n = None
        terms = phi.terms
        if len(terms) == 1:
            ((i, j), c), = terms.items()
            if j == 0 and c == 1 and i >= 2:
                n = i
        return cls(CLASSICAL, n=n, phi=phi)

    @classmethod
    def classical_yn(cls, n: int) -> "ComplexSpec":
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        return cls.classical(BiPoly.monomial(n, 0))

    @property
    def is_log(self) -> bool:
        return self.variant == LOG

    def label(self) -> str:
        if self.is_log:
            return f"log(n={self.n})"
        return f"classical(phi={self.phi})"


@dataclass(frozen=True)
class CochainElement:
    degree: int
    payload: Payload
    spec: ComplexSpec = field(compare=True)

    def __post_init__(self):
        if self.degree == 1:
            if not (isinstance(self.payload, tuple) and len(self.payload) == 2):
                raise TypeError("degree-1 cochains carry a pair of polynomials")
        elif self.degree in (0, 2):
            if not isinstance(self.payload, BiPoly):
                raise TypeError(f"degree-{self.degree} cochains carry a single polynomial")
        else:
            raise UnsupportedDegree(f"no cochains in degree {self.degree}")

    def is_zero(self) -> bool:
        if self.degree == 1:
            return self.payload[0].is_zero() and self.payload[1].is_zero()
        return self.payload.is_zero()

    def __str__(self):
        return render_cochain(self)


# differentials


def d1(spec: ComplexSpec, f: BiPoly) -> Pair:
    if spec.is_log:
        n = spec.n
        return (partial_y(f).shift_y(n), -partial_x(f).shift_y(n - 1))
    phi = spec.phi
    return (phi * partial_y(f), -(phi * partial_x(f)))


def d2(spec: ComplexSpec, a: Pair) -> BiPoly:
    a1, a2 = a
    if spec.is_log:
        n = spec.n
        inner = partial_x(a1) + euler_y(a2) - a2.scale(n - 1)
        return inner.shift_y(n - 1)
    phi = spec.phi
    return phi * (partial_x(a1) + partial_y(a2)) - a1 * partial_x(phi) - a2 * partial_y(phi)


def differential(c: CochainElement) -> Optional[CochainElement]:
    """Apply the complex differential; None when the target is the zero space."""
    if c.degree == 0:
        return CochainElement(1, d1(c.spec, c.payload), c.spec)
    if c.degree == 1:
        return CochainElement(2, d2(c.spec, c.payload), c.spec)
    return None


def _as_functional(c: CochainElement) -> Callable[[Sequence[LogOneForm]], BiPoly]:
    """View a log cochain as an alternating A-multilinear function of log 1-forms."""
    if c.degree == 0:
        return lambda forms: c.payload
    a1, a2 = c.payload
    derivation = loggeom.LogDerivation(a1, a2, c.spec.n)
    return lambda forms: loggeom.pairing(derivation, forms[0])


def d_generic(spec: ComplexSpec, c: CochainElement) -> CochainElement:
    """Differential evaluated literally from the alternating-sum formula.

    ``dF(w_1..w_{p+1}) = sum_i (-1)^(i-1) H(w_i) F(..^w_i..)
    + sum_{i<j} (-1)^(i+j) F([w_i, w_j], ..^w_i..^w_j..)``
    with H the logarithmic Hamiltonian map and [,] the Koszul bracket, on
    the basis forms (dx, dy/y).
    """
    if not spec.is_log:
        raise ValueError("the generic differential is defined for the logarithmic complex")
    if c.degree >= 2:
        raise UnsupportedDegree("C^3 = 0: there is no differential out of degree 2")
    n = spec.n
    F = _as_functional(c)
    p = c.degree

    def dF(forms: Sequence[LogOneForm]) -> BiPoly:
        total = BiPoly.zero()
        for i in range(p + 1):
            rest = [w for k, w in enumerate(forms) if k != i]
            term = loggeom.apply(loggeom.ham_tilde(forms[i]), F(rest))
            total = total + (term if i % 2 == 0 else -term)
        for i, j in combinations(range(p + 1), 2):
            rest = [w for k, w in enumerate(forms) if k not in (i, j)]
            term = F([loggeom.koszul(forms[i], forms[j])] + rest)
            # 1-based sign (-1)^(i+j) is the same for 0-based indices
            total = total + (term if (i + j) % 2 == 0 else -term)
        return total

    w1, w2 = loggeom.omega1(n), loggeom.omega2(n)
    if p == 0:
        return CochainElement(1, (dF([w1]), dF([w2])), spec)
    return CochainElement(2, dF([w1, w2]), spec)


# grading

# weight of each basis slot: (first, second) for degree 1, top for degree 2
_SLOT_WEIGHTS = {
    LOG: {0: (0,), 1: (-1, 0), 2: (-1,)},
    CLASSICAL: {0: (0,), 1: (-1, -1), 2: (-2,)},
}


def slot_weights(spec: ComplexSpec, degree: int) -> Tuple[int, ...]:
    if degree not in (0, 1, 2):
        return ()
    return _SLOT_WEIGHTS[spec.variant][degree]


def weight_shift(spec: ComplexSpec) -> int:
    if spec.is_log:
        return spec.n - 2
    w = is_homogeneous(spec.phi)
    if w is None:
        raise NotHomogeneous(f"phi = {spec.phi} is not homogeneous")
    return w - 2


def element_weight(c: CochainElement) -> Optional[int]:
    """Weight of a homogeneous cochain; None for the zero cochain."""
    parts = c.payload if c.degree == 1 else (c.payload,)
    weights = set()
    for poly, slot in zip(parts, slot_weights(c.spec, c.degree)):
        if poly.is_zero():
            continue
        w = is_homogeneous(poly)
        if w is None:
            raise NotHomogeneous(f"coefficient {poly} is not homogeneous")
        weights.add(w + slot)
    if len(weights) > 1:
        raise NotHomogeneous(f"cochain mixes weights {sorted(weights)}")
    return weights.pop() if weights else None


# d o d = 0


@dataclass
class ComplexCheck:
    spec: ComplexSpec
    checked: int = 0
    failures: List[BiPoly] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_complex(spec: ComplexSpec, samples: Iterable[BiPoly] = (), max_weight: Optional[int] = None) -> ComplexCheck:
    """Check d2(d1(f)) == 0 on the samples and on every monomial of degree <= max_weight."""
    report = ComplexCheck(spec)
    polys = list(samples)
    if max_weight is not None:
        polys += [BiPoly.monomial(i, w - i) for w in range(max_weight + 1) for i in range(w + 1)]
    for f in polys:
        report.checked += 1
        if not d2(spec, d1(spec, f)).is_zero():
            report.failures.append(f)
    return report


# the canonical isomorphisms between coordinates and (log) multivector fields


def to_derivation(spec: ComplexSpec, a: Pair):
    if spec.is_log:
        return loggeom.LogDerivation(a[0], a[1], spec.n)
    return loggeom.OrdinaryDerivation(a[0], a[1])


def from_derivation(D) -> Pair:
    if isinstance(D, loggeom.LogDerivation):
        return (D.a, D.b)
    return (D.f, D.g)


# rendering

_SLOT_NAMES = {
    LOG: {1: ("δ¹", "δ²"), 2: ("δ¹∧δ²",)},
    CLASSICAL: {1: ("∂x", "∂y"), 2: ("∂x∧∂y",)},
}


def _times(poly: BiPoly, name: str) -> str:
    if poly == 1:
        return name
    if poly == -1:
        return f"-{name}"
    text = str(poly)
    if len(poly) > 1:
        text = f"({text})"
    return f"{text}·{name}"


def render_cochain(c: CochainElement) -> str:
    if c.degree == 0:
        return str(c.payload)
    names = _SLOT_NAMES[c.spec.variant][c.degree]
    parts = c.payload if c.degree == 1 else (c.payload,)
    pieces = [_times(p, name) for p, name in zip(parts, names) if not p.is_zero()]
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out
