import pytest

from logpoisson import linalg
from logpoisson.cohomology import (
    WeightWindow,
    coboundary_columns,
    cohomology_at,
    compare_variants,
    dimension_table,
    from_coords,
    graded_basis,
    h1_family,
    matrix_of_d,
    mu,
    predicted_dims,
    predicted_log_dims,
    to_coords,
    verify_b3_complement,
    verify_d1_kernel,
    verify_h1_family,
    verify_z2_structure,
)
from logpoisson.complexes import CochainElement, ComplexSpec, NotHomogeneous, d2
from logpoisson.linalg import RatMatrix
from logpoisson.polynomial import BiPoly

x, y = BiPoly.x(), BiPoly.y()
Z = BiPoly.zero()
ONE = BiPoly.const(1)
NS = [2, 3, 4, 5]


def texts(cochains):
    return [str(c) for c in cochains]


def test_graded_basis_examples():
    for n in NS:
        assert texts(graded_basis(ComplexSpec.logarithmic(n), 1, -1)) == ["δ¹"]
        assert graded_basis(ComplexSpec.logarithmic(n), 3, 7) == []
    assert [c.payload for c in graded_basis(ComplexSpec.logarithmic(2), 0, 2)] == [x**2, x * y, y**2]
    assert texts(graded_basis(ComplexSpec.classical(y**2), 2, -2)) == ["∂x∧∂y"]


def test_matrix_example():
    spec = ComplexSpec.logarithmic(2)
    assert texts(graded_basis(spec, 1, 0)) == ["x·δ¹", "y·δ¹", "δ²"]
    assert [c.payload for c in graded_basis(spec, 2, 0)] == [x, y]
    assert matrix_of_d(spec, 1, 0) == RatMatrix.from_dense([[0, 0, 0], [1, 0, -1]])
    for s in (spec, ComplexSpec.classical_yn(3)):
        M = matrix_of_d(s, 0, 0)
        assert M.cols == 1 and M.nnz == 0


def test_coords_round_trip():
    spec = ComplexSpec.logarithmic(3)
    c = CochainElement(1, (x * y + 2 * x**2, 3 * y), spec)
    v = to_coords(c, 1)
    assert from_coords(spec, 1, 1, v) == c
    with pytest.raises(NotHomogeneous):
        to_coords(c, 2)


def test_cohomology_examples():
    log2 = ComplexSpec.logarithmic(2)
    assert cohomology_at(log2, 0, 0).dimH == 1
    r = cohomology_at(log2, 1, 0, representatives=True)
    assert r.dimH == 2 and r.match
    assert texts(r.representatives) == ["y·δ¹", "x·δ¹ + δ²"]
    for n in NS:
        spec = ComplexSpec.logarithmic(n)
        assert cohomology_at(spec, 2, 30).dimH == n - 1
        assert cohomology_at(spec, 4, 3).dimH == 0


def test_classical_representatives():
    r = cohomology_at(ComplexSpec.classical_yn(2), 1, 0, representatives=True)
    assert texts(r.representatives) == ["y·∂x", "x·∂x + y·∂y"]


@pytest.mark.parametrize("n", NS)
def test_representatives_are_cocycles_not_coboundaries(n):
    spec = ComplexSpec.logarithmic(n)
    for k in (1, 2):
        for w in range(-2, 8):
            r = cohomology_at(spec, k, w, representatives=True)
            assert len(r.representatives) == r.dimH
            image = coboundary_columns(spec, k, w)
            for c in r.representatives:
                if k == 1:
                    assert d2(spec, c.payload).is_zero()
                assert not linalg.membership(to_coords(c, w), image)


def test_predicted_examples():
    assert [predicted_log_dims(2, 1, w) for w in (-1, 0, 1, 2, 3)] == [1, 2, 1, 1, 1]
    assert predicted_log_dims(3, 2, 1) == 2
    for n in NS:
        for w in (-2, -1, 1, 2, 9):
            assert predicted_log_dims(n, 0, w) == 0
        assert predicted_log_dims(n, 5, 4) == 0
    with pytest.raises(ValueError):
        predicted_log_dims(1, 0, 0)
    assert predicted_dims(ComplexSpec.classical(x + y**2), 1, 0) is None


def test_mu_examples():
    for n in NS:
        assert mu(ONE, n) == (x.scale(n - 1), ONE)
        yn1 = BiPoly.monomial(n - 1, 0)
        assert mu(yn1, n) == (Z, yn1)
        assert mu(Z, n) == (Z, Z)


def test_h1_family_size_matches_prediction():
    for n in NS:
        for w in range(-2, 10):
            assert len(h1_family(n, w)) == predicted_log_dims(n, 1, w)


@pytest.mark.parametrize("n", NS)
def test_structure_checks(n):
    window = range(-2, 12)
    for check in (
        verify_d1_kernel(n, window),
        verify_h1_family(n, window),
        verify_z2_structure(n, window),
        verify_b3_complement(n, window),
    ):
        assert check.ok, check.failures[:3]
        assert check.checked > 0


@pytest.mark.parametrize("n", NS)
def test_classical_matches_log(n):
    rep = compare_variants(n, range(-2, 12))
    assert rep.cells_ok and rep.totals_ok


def test_dimension_table_is_job_independent():
    specs = [ComplexSpec.logarithmic(3), ComplexSpec.classical_yn(3)]
    serial = dimension_table(specs, range(-2, 6), (0, 1, 2, 3), jobs=1)
    parallel = dimension_table(specs, range(-2, 6), (0, 1, 2, 3), jobs=4)
    assert [r.row() for r in serial] == [r.row() for r in parallel]
    assert all(r.match for r in serial)


def test_weight_window():
    assert list(WeightWindow(-1, 2)) == [-1, 0, 1, 2]
    assert len(WeightWindow()) == 28
    with pytest.raises(ValueError):
        WeightWindow(3, 2)
