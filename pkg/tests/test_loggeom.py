import random

import pytest
from hypothesis import given, settings, strategies as st

from logpoisson import loggeom as lg
from logpoisson.loggeom import LogDerivation, LogOneForm, NotLogarithmic, OrdinaryDerivation
from logpoisson.polynomial import BiPoly
from logpoisson.verify import random_form, random_poly

from conftest import P, polys

x, y = BiPoly.x(), BiPoly.y()
Z = BiPoly.zero()
ONE = BiPoly.const(1)
NS = [2, 3, 4, 5]


def form(a, b, n):
    return LogOneForm(P(a) if isinstance(a, str) else a, P(b) if isinstance(b, str) else b, n)


def test_apply_examples():
    d1 = LogDerivation(ONE, Z, 2)
    d2 = LogDerivation(Z, ONE, 2)
    for k in range(5):
        assert lg.apply(d2, y**k) == (y**k).scale(k)
    assert lg.apply(d1, x**2) == 2 * x
    assert lg.apply(LogDerivation(x, ONE, 2), x * y) == 2 * x * y


@given(polys(), polys(), polys(), polys())
def test_apply_leibniz(a, b, f, g):
    D = LogDerivation(a, b, 3)
    assert lg.apply(D, f * g) == lg.apply(D, f) * g + f * lg.apply(D, g)


@pytest.mark.parametrize("n", NS)
def test_log_derivations_preserve_ideal(n):
    rng = random.Random(n)
    for _ in range(20):
        D = LogDerivation(random_poly(rng, 3, 4), random_poly(rng, 3, 4), n)
        assert lg.apply(D, BiPoly.monomial(n, 0) * random_poly(rng, 3, 4)).divisible_by_y_power(n)


def test_pairing_is_kronecker():
    n = 3
    for i in (1, 2):
        for j in (1, 2):
            D = LogDerivation(ONE if i == 1 else Z, ONE if i == 2 else Z, n)
            assert lg.pairing(D, lg.basis_form(j, n)) == BiPoly.const(int(i == j))


def test_ham_tilde_examples():
    assert lg.ham_tilde(lg.omega1(2)).coords() == (Z, y)
    assert lg.ham_tilde(lg.omega2(2)).coords() == (-y, Z)
    assert lg.ham_tilde(form("x", "y", 2)).coords() == (-(y**2), x * y)
    for n in NS:
        yn1 = BiPoly.monomial(n - 1, 0)
        assert lg.ham_tilde(lg.omega1(n)).coords() == (Z, yn1)
        assert lg.ham_tilde(lg.omega2(n)).coords() == (-yn1, Z)


def test_ham_classical_examples():
    for n in NS:
        yn = BiPoly.monomial(n, 0)
        H = lg.ham_classical(x, yn)
        assert (H.f, H.g) == (Z, yn)
        H = lg.ham_classical(BiPoly.const(7), yn)
        assert (H.f, H.g) == (Z, Z)
    H = lg.ham_classical(y, y**2)
    assert (H.f, H.g) == (-(y**2), Z)


def test_to_log_examples():
    for n in NS:
        yn = BiPoly.monomial(n, 0)
        assert lg.to_log(OrdinaryDerivation(Z, yn), n).coords() == (Z, BiPoly.monomial(n - 1, 0))
    f = P("x^2 + 3*y")
    assert lg.to_log(OrdinaryDerivation(f, Z), 2).coords() == (f, Z)
    with pytest.raises(NotLogarithmic):
        lg.to_log(OrdinaryDerivation(Z, ONE), 2)


@given(polys(), polys(), polys())
def test_to_ordinary_round_trip_and_action(a, b, h):
    D = LogDerivation(a, b, 2)
    O = lg.to_ordinary(D)
    assert lg.to_log(O, 2) == D
    assert O(h) == lg.apply(D, h)


def test_koszul_base_examples():
    assert lg.koszul(lg.omega2(2), lg.omega2(2)) == LogOneForm.zero(2)
    assert lg.koszul(lg.omega1(3), lg.omega2(3)) == form(Z, "2*y^2", 3)
    assert lg.koszul(lg.omega2(2), lg.omega1(2)) == form(Z, "-y", 2)
    for n in NS:
        expected = LogOneForm(Z, BiPoly.monomial(n - 1, 0, n - 1), n)
        assert lg.koszul(lg.omega1(n), lg.omega2(n)) == expected
        assert lg.koszul_base(1, 2, n) == expected


def test_koszul_leibniz_example():
    assert lg.koszul(form("x", "0", 2), lg.omega2(2)) == form("y", "x*y", 2)


@pytest.mark.parametrize("n", NS)
def test_koszul_antisymmetry_and_jacobi(n):
    rng = random.Random(f"test/{n}")
    k = lg.koszul
    for _ in range(30):
        a, b, c = (random_form(rng, n, 3, 4) for _ in range(3))
        assert k(a, a) == LogOneForm.zero(n)
        assert k(a, b) == -k(b, a)
        assert k(a, k(b, c)) + k(b, k(c, a)) + k(c, k(a, b)) == LogOneForm.zero(n)


@pytest.mark.parametrize("n", NS)
def test_koszul_of_exact_forms(n):
    rng = random.Random(f"exact/{n}")
    yn = BiPoly.monomial(n, 0)
    for _ in range(20):
        u, v = random_poly(rng, 3, 4), random_poly(rng, 3, 4)
        lhs = lg.koszul(lg.d_tilde(u, n), lg.d_tilde(v, n))
        assert lhs == lg.d_tilde(lg.poisson_bracket(u, v, yn), n)


def test_koszul_needs_same_n():
    with pytest.raises(ValueError):
        lg.koszul(lg.omega1(2), lg.omega2(3))


def test_d_tilde_examples():
    assert lg.d_tilde(x, 2) == form("1", "0", 2)
    assert lg.d_tilde(y**2, 2) == form("0", "2*y^2", 2)
    assert lg.d_tilde(BiPoly.const(4), 2) == LogOneForm.zero(2)


def test_sn_bracket_examples():
    assert lg.sn_bracket_pi_f(BiPoly.const(3), 2).coords() == (Z, Z)
    assert lg.sn_bracket_pi_f(x, 2).coords() == (Z, -y)
    assert lg.sn_bracket_pi_f(y, 2).coords() == (y**2, Z)


@settings(max_examples=50)
@given(polys(), st.sampled_from(NS))
def test_sn_bracket_is_minus_ham_of_differential(f, n):
    assert lg.sn_bracket_pi_f(f, n) == -lg.ham_tilde(lg.d_tilde(f, n))
