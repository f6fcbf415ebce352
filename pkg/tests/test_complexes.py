import random

import pytest

from logpoisson.complexes import (
    CochainElement,
    ComplexSpec,
    NotHomogeneous,
    UnsupportedDegree,
    check_complex,
    d1,
    d2,
    d_generic,
    differential,
    element_weight,
    weight_shift,
)
from logpoisson.polynomial import BiPoly
from logpoisson.verify import random_poly

from conftest import P

x, y = BiPoly.x(), BiPoly.y()
Z = BiPoly.zero()
ONE = BiPoly.const(1)
NS = [2, 3, 4, 5]
LOG = {n: ComplexSpec.logarithmic(n) for n in NS}


def test_spec_validation():
    with pytest.raises(ValueError):
        ComplexSpec.logarithmic(1)
    with pytest.raises(ValueError):
        ComplexSpec.classical_yn(1)
    with pytest.raises(ValueError):
        ComplexSpec("other", n=2)
    assert ComplexSpec.classical(P("y^4")).n == 4
    assert ComplexSpec.classical(P("x + y^2")).n is None


def test_d1_examples():
    assert d1(LOG[2], x) == (Z, -y)
    assert d1(LOG[3], BiPoly.const(5)) == (Z, Z)
    for n in NS:
        assert d1(ComplexSpec.classical_yn(n), y) == (BiPoly.monomial(n, 0), Z)


def test_d2_examples():
    assert d2(LOG[2], (Z, y)).is_zero()
    assert d2(LOG[4], (Z, Z)).is_zero()
    assert d2(LOG[3], (x, Z)) == y**2
    assert d2(ComplexSpec.classical(y**2), (Z, ONE)) == -2 * y


def test_d2_d1_examples():
    assert d2(LOG[2], d1(LOG[2], y)).is_zero()
    cl = ComplexSpec.classical(x + y**2)
    assert d2(cl, d1(cl, x * y)).is_zero()
    for spec in list(LOG.values()) + [cl]:
        assert d2(spec, d1(spec, Z)).is_zero()


def test_differential_on_cochains():
    c = CochainElement(0, x, LOG[2])
    dc = differential(c)
    assert dc.degree == 1 and dc.payload == (Z, -y)
    assert differential(dc).is_zero()
    assert differential(CochainElement(2, x, LOG[2])) is None


def test_cochain_validation():
    with pytest.raises(TypeError):
        CochainElement(1, x, LOG[2])
    with pytest.raises(TypeError):
        CochainElement(2, (x, y), LOG[2])
    with pytest.raises(UnsupportedDegree):
        CochainElement(3, x, LOG[2])


def test_generic_examples():
    assert d_generic(LOG[2], CochainElement(0, x, LOG[2])).payload == (Z, -y)
    assert d_generic(LOG[3], CochainElement(1, (x, Z), LOG[3])).payload == y**2
    assert d_generic(LOG[2], CochainElement(0, BiPoly.const(2), LOG[2])).payload == (Z, Z)
    with pytest.raises(UnsupportedDegree):
        d_generic(LOG[2], CochainElement(2, x, LOG[2]))
    with pytest.raises(ValueError):
        cl = ComplexSpec.classical(y**2)
        d_generic(cl, CochainElement(0, x, cl))


@pytest.mark.parametrize("n", NS)
def test_generic_matches_closed_form(n):
    spec = LOG[n]
    rng = random.Random(f"generic/{n}")
    for _ in range(25):
        f = random_poly(rng, 5, 6)
        assert d_generic(spec, CochainElement(0, f, spec)).payload == d1(spec, f)
        a = (random_poly(rng, 5, 6), random_poly(rng, 5, 6))
        assert d_generic(spec, CochainElement(1, a, spec)).payload == d2(spec, a)


def test_weights():
    assert element_weight(CochainElement(1, (ONE, Z), LOG[2])) == -1
    # weight(x) + (n - 2) with n = 2
    assert element_weight(CochainElement(1, d1(LOG[2], x), LOG[2])) == 1
    cl = ComplexSpec.classical(y**2)
    assert element_weight(CochainElement(2, ONE, cl)) == -2
    assert element_weight(CochainElement(0, Z, cl)) is None
    with pytest.raises(NotHomogeneous):
        element_weight(CochainElement(1, (ONE, ONE), LOG[2]))
    with pytest.raises(NotHomogeneous):
        weight_shift(ComplexSpec.classical(x + y**2))


@pytest.mark.parametrize("n", NS)
def test_differentials_shift_weight_by_n_minus_2(n):
    for spec in (LOG[n], ComplexSpec.classical_yn(n)):
        s = weight_shift(spec)
        assert s == n - 2
        for w in range(6):
            for i in range(w + 1):
                m = BiPoly.monomial(i, w - i)
                img = CochainElement(1, d1(spec, m), spec)
                assert element_weight(img) in (None, w + s)
                for pair in ((m, Z), (Z, m)):
                    c = CochainElement(1, pair, spec)
                    top = CochainElement(2, d2(spec, pair), spec)
                    assert element_weight(top) in (None, element_weight(c) + s)


def test_check_complex():
    for spec in LOG.values():
        assert check_complex(spec, max_weight=12).ok
    rng = random.Random(0)
    samples = [random_poly(rng, 6, dense=True) for _ in range(20)]
    for phi in ("y^2", "x + y^2", "x^2*y - 1"):
        report = check_complex(ComplexSpec.classical(P(phi)), samples)
        assert report.ok and report.checked == 20


def test_rendering():
    spec = LOG[2]
    assert str(CochainElement(1, (y, Z), spec)) == "y·δ¹"
    assert str(CochainElement(1, (x, ONE), spec)) == "x·δ¹ + δ²"
    assert str(CochainElement(1, (x + y, -ONE), spec)) == "(x + y)·δ¹ - δ²"
    assert str(CochainElement(2, ONE, spec)) == "δ¹∧δ²"
    assert str(CochainElement(2, ONE, ComplexSpec.classical(y**2))) == "∂x∧∂y"
    assert str(CochainElement(1, (Z, Z), spec)) == "0"
