"""Logarithmic vector fields and 1-forms along the divisor y**n = 0.

Derivations are stored in the basis (d1, d2) = (d/dx, y d/dy) and 1-forms in
the dual basis (w1, w2) = (dx, dy/y).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polynomial import BiPoly, euler_y, partial_x, partial_y

__all__ = [
    "NotLogarithmic",
    "LogDerivation",
    "LogOneForm",
    "OrdinaryDerivation",
    "apply",
    "pairing",
    "ham_tilde",
    "ham_classical",
    "poisson_bracket",
    "to_log",
    "to_ordinary",
    "koszul_base",
    "koszul",
    "d_tilde",
    "sn_bracket_pi_f",
    "omega1",
    "omega2",
]


class NotLogarithmic(ValueError):
    """The derivation does not preserve the ideal (y**n)."""


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


@dataclass(frozen=True)
class LogDerivation:
    a: BiPoly  # coefficient of d/dx
    b: BiPoly  # coefficient of y d/dy
    n: int

    def __add__(self, other: "LogDerivation") -> "LogDerivation":
        return LogDerivation(self.a + other.a, self.b + other.b, self.n)

    def __neg__(self) -> "LogDerivation":
        return LogDerivation(-self.a, -self.b, self.n)

    def __sub__(self, other: "LogDerivation") -> "LogDerivation":
        return self + (-other)

    def times(self, f: BiPoly) -> "LogDerivation":
        return LogDerivation(f * self.a, f * self.b, self.n)

    def coords(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class LogOneForm:
    a: BiPoly  # coefficient of dx
    b: BiPoly  # coefficient of dy/y
    n: int

    def __add__(self, other: "LogOneForm") -> "LogOneForm":
        return LogOneForm(self.a + other.a, self.b + other.b, self.n)

    def __neg__(self) -> "LogOneForm":
        return LogOneForm(-self.a, -self.b, self.n)

    def __sub__(self, other: "LogOneForm") -> "LogOneForm":
        return self + (-other)

    def times(self, f: BiPoly) -> "LogOneForm":
        return LogOneForm(f * self.a, f * self.b, self.n)

    def coords(self):
        return (self.a, self.b)

    def component(self, i: int) -> BiPoly:
        return self.a if i == 1 else self.b

    @classmethod
    def zero(cls, n: int) -> "LogOneForm":
        return cls(BiPoly.zero(), BiPoly.zero(), n)


@dataclass(frozen=True)
class OrdinaryDerivation:
    f: BiPoly  # coefficient of d/dx
    g: BiPoly  # coefficient of d/dy

    def __call__(self, h: BiPoly) -> BiPoly:
        return self.f * partial_x(h) + self.g * partial_y(h)


def omega1(n: int) -> LogOneForm:
    return LogOneForm(BiPoly.const(1), BiPoly.zero(), n)


def omega2(n: int) -> LogOneForm:
    return LogOneForm(BiPoly.zero(), BiPoly.const(1), n)


def basis_form(i: int, n: int) -> LogOneForm:
    return omega1(n) if i == 1 else omega2(n)


def apply(D: LogDerivation, f: BiPoly) -> BiPoly:
    """D(f) = a * df/dx + b * y df/dy."""
    return D.a * partial_x(f) + D.b * euler_y(f)


def pairing(D: LogDerivation, w: LogOneForm) -> BiPoly:
    """Contraction with <d_i, w_j> = delta_ij."""
    return D.a * w.a + D.b * w.b


def ham_tilde(w: LogOneForm) -> LogDerivation:
    """Logarithmic Hamiltonian map: a w1 + b w2  ->  y**(n-1) (a d2 - b d1)."""
    n = w.n
    _check_n(n)
    return LogDerivation(-w.b.shift_y(n - 1), w.a.shift_y(n - 1), n)


def poisson_bracket(f: BiPoly, g: BiPoly, phi: BiPoly) -> BiPoly:
    """{f, g} = phi * (f_x g_y - f_y g_x)."""
    return phi * (partial_x(f) * partial_y(g) - partial_y(f) * partial_x(g))


def ham_classical(f: BiPoly, phi: BiPoly) -> OrdinaryDerivation:
    """Hamiltonian vector field {f, .} = phi (f_x d/dy - f_y d/dx)."""
    return OrdinaryDerivation(-(phi * partial_y(f)), phi * partial_x(f))


def to_log(D: OrdinaryDerivation, n: int) -> LogDerivation:
    if not D.g.divisible_by_y_power(1):
        raise NotLogarithmic(f"d/dy coefficient {D.g} is not divisible by y")
    return LogDerivation(D.f, D.g.exact_div_y(1), n)


def to_ordinary(D: LogDerivation) -> OrdinaryDerivation:
    return OrdinaryDerivation(D.a, D.b.shift_y(1))


@lru_cache(maxsize=None)
def koszul_base(i: int, j: int, n: int) -> LogOneForm:
    """[w_i, w_j] on basis forms: only [w1, w2] = (n-1) y**(n-1) w2 and its negative survive."""
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError("basis indices must be 1 or 2")
    _check_n(n)
    if i == j:
        return LogOneForm.zero(n)
    c = BiPoly.monomial(n - 1, 0, n - 1)
    if (i, j) == (1, 2):
        return LogOneForm(BiPoly.zero(), c, n)
    return LogOneForm(BiPoly.zero(), -c, n)


def koszul(alpha: LogOneForm, beta: LogOneForm) -> LogOneForm:
    """Koszul bracket of logarithmic 1-forms.

    Expands bilinearly from the basis values using
    ``[a w_i, c w_j] = a c [w_i, w_j] + a H(w_i)(c) w_j - c H(w_j)(a) w_i``.
    """
    if alpha.n != beta.n:
        raise ValueError("operands live over different divisors")
    n = alpha.n
    out = LogOneForm.zero(n)
    for i in (1, 2):
        a = alpha.component(i)
        if a.is_zero():
            continue
        for j in (1, 2):
            c = beta.component(j)
            if c.is_zero():
                continue
            out = out + koszul_base(i, j, n).times(a * c)
            out = out + basis_form(j, n).times(a * apply(ham_tilde(basis_form(i, n)), c))
            out = out - basis_form(i, n).times(c * apply(ham_tilde(basis_form(j, n)), a))
    return out


def d_tilde(f: BiPoly, n: int) -> LogOneForm:
    """Logarithmic differential f_x dx + (y f_y) dy/y."""
    return LogOneForm(partial_x(f), euler_y(f), n)


def sn_bracket_pi_f(f: BiPoly, n: int) -> LogDerivation:
    """Schouten bracket [pi, f] for pi = y**n d/dx ^ d/dy.

    Built from the contraction of df into pi, rewritten in the logarithmic
    basis; the sign is chosen so the result equals the first differential.
    """
    _check_n(n)
    contraction = ham_classical(f, BiPoly.monomial(n, 0))
    return -to_log(contraction, n)
