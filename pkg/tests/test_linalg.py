from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from logpoisson.linalg import (
    ImageNotInKernel,
    KernelBasis,
    RatMatrix,
    Span,
    complement_basis,
    kernel,
    membership,
    quotient_dim,
    rank,
)

entries = st.fractions(min_value=-5, max_value=5, max_denominator=3)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    data = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix.from_dense(data) if r else RatMatrix(0, c)


def e(*idx):
    return {i: Fraction(1) for i in idx}


def test_examples():
    I = RatMatrix.from_dense([[1, 0], [0, 1]])
    assert rank(I) == 2 and len(kernel(I)) == 0
    Zm = RatMatrix(3, 4)
    assert rank(Zm) == 0 and len(kernel(Zm)) == 4
    M = RatMatrix.from_dense([[1, 2], [2, 4]])
    assert rank(M) == 1
    (v,) = kernel(M).vectors
    assert v[0] / v[1] == Fraction(-2)


def test_quotient_examples():
    k2 = KernelBasis((e(0), e(1)), 3)
    assert quotient_dim(k2, []) == 2
    assert quotient_dim(k2, [e(0), e(1)]) == 0
    assert complement_basis(k2, [e(0), e(1)]) == []
    k3 = KernelBasis((e(0), e(1), e(0, 2)), 3)
    assert quotient_dim(k3, [e(1)]) == 2
    assert complement_basis(k3, [e(1)]) == [e(0), e(0, 2)]


def test_image_outside_kernel_is_an_error():
    with pytest.raises(ImageNotInKernel):
        quotient_dim(KernelBasis((e(0),), 2), [e(1)])


def test_membership_examples():
    assert membership({}, [])
    assert not membership(e(1), [e(0)])
    assert membership({0: 2, 1: 2}, [e(0, 1)])


def test_sparse_accessors():
    M = RatMatrix(2, 3, {(0, 1): Fraction(1, 2), (1, 2): 0})
    assert M.nnz == 1 and M[0, 1] == Fraction(1, 2) and M[1, 2] == 0
    assert M.column(1) == {0: Fraction(1, 2)}
    assert M.transpose()[1, 0] == Fraction(1, 2)
    assert M.apply({1: 4}) == {0: 2}
    with pytest.raises(IndexError):
        RatMatrix(1, 1, {(1, 0): 1})


@given(matrices())
def test_rank_transpose(M):
    assert rank(M) == rank(M.transpose())


@given(matrices())
def test_kernel(M):
    K = kernel(M)
    assert len(K) == M.cols - rank(M)
    for v in K:
        assert M.apply(v) == {}
    assert len(Span.of(K.vectors)) == len(K)


@given(matrices())
def test_bareiss_agrees_with_span(M):
    assert rank(M) == len(Span.of(M.columns())) == len(Span.of(M.transpose().columns()))


@given(st.lists(st.dictionaries(st.integers(0, 5), entries, max_size=4), max_size=6))
def test_span_add_reports_growth(vectors):
    s = Span()
    for v in vectors:
        before = len(s)
        grew = s.add(v)
        assert len(s) == before + int(grew)
        assert s.contains(v)
