import pytest
from hypothesis import given, settings, strategies as st

from plusalg.complexes import (
    ChainComplex,
    ComplexMap,
    complex_from_columns,
    direct_sum,
    homology,
    induced_map,
    suspension,
)
from plusalg.errors import DegreeRangeError, DimensionError, InvariantViolation
from plusalg.linalg import QQ, SparseMatrix

from oracles import dense_rank


@st.composite
def two_step_complexes(draw):
    """C_0 <- C_1 <- C_2 with d_1 random and d_2 random inside ker d_1."""
    n0 = draw(st.integers(0, 4))
    n1 = draw(st.integers(1, 5))
    n2 = draw(st.integers(0, 4))
    d1 = [[draw(st.integers(-2, 2)) for _ in range(n1)] for _ in range(n0)]
    m1 = SparseMatrix.from_dense(QQ, d1) if n0 else SparseMatrix.zero(QQ, 0, n1)
    from plusalg.linalg import decompose

    ker = decompose(m1).kernel.vectors
    cols = []
    for _ in range(n2):
        coeffs = [draw(st.integers(-2, 2)) for _ in ker]
        v = {}
        for c, k in zip(coeffs, ker):
            for i, x in k.items():
                v[i] = v.get(i, 0) + c * x
        cols.append({i: x for i, x in v.items() if x})
    m2 = SparseMatrix.from_columns(QQ, n1, cols)
    return ChainComplex(QQ, {0: n0, 1: n1, 2: n2}, {1: m1, 2: m2})


@settings(max_examples=80, deadline=None)
@given(two_step_complexes())
def test_homology_matches_rank_formula(c):
    h = homology(c)
    r1 = dense_rank(c.differential(1).to_dense()) if c.dim(0) else 0
    r2 = dense_rank(c.differential(2).to_dense()) if c.dim(1) and c.dim(2) else 0
    assert h.dims[0] == c.dim(0) - r1
    assert h.dims[1] == c.dim(1) - r1 - r2
    assert h.dims[2] == c.dim(2) - r2
    assert sum((-1) ** k * v for k, v in h.dims.items()) == c.euler_characteristic()


@settings(max_examples=40, deadline=None)
@given(two_step_complexes(), st.integers(-3, 3))
def test_suspension_shifts_homology(c, n):
    s = suspension(c, n)
    assert {k + n: v for k, v in homology(c).dims.items()} == homology(s).dims


@settings(max_examples=40, deadline=None)
@given(two_step_complexes())
def test_identity_induces_identity(c):
    f = ComplexMap.identity(c)
    for n, m in induced_map(f).items():
        d = homology(c, [n]).dims[n]
        assert m == SparseMatrix.identity(QQ, d)


@settings(max_examples=40, deadline=None)
@given(two_step_complexes(), two_step_complexes())
def test_direct_sum_adds_homology(a, b):
    s = direct_sum(a, b)
    ha, hb, hs = homology(a), homology(b), homology(s)
    for n in hs.dims:
        assert hs.dims[n] == ha.dims.get(n, 0) + hb.dims.get(n, 0)


def test_representatives_are_cycles_and_independent():
    c = complex_from_columns(QQ, {0: 2, 1: 3, 2: 1}, {1: [{0: 1}, {0: 1}, {}], 2: [{0: 1, 1: -1}]})
    h = homology(c, representatives=True)
    assert h.dims == {0: 1, 1: 1, 2: 0}
    (z,) = h.representatives[1]
    assert not c.differential(1).apply(z)


def test_d_squared_violation_names_degree():
    with pytest.raises(InvariantViolation, match="degree 2"):
        complex_from_columns(QQ, {0: 1, 1: 1, 2: 1}, {1: [{0: 1}], 2: [{0: 1}]})


def test_shape_mismatch():
    with pytest.raises(DimensionError):
        ChainComplex(QQ, {0: 1, 1: 2}, {1: SparseMatrix.zero(QQ, 2, 2)})


def test_top_truncated_hides_top_degree():
    c = ChainComplex(QQ, {0: 1, 1: 1}, {1: SparseMatrix.zero(QQ, 1, 1)}, top_truncated=True)
    assert homology(c).dims == {0: 1}
    with pytest.raises(DegreeRangeError):
        homology(c, [1])


def test_chain_map_check():
    a = complex_from_columns(QQ, {0: 1, 1: 1}, {1: [{0: 1}]})
    with pytest.raises(InvariantViolation):
        ComplexMap(a, a, {0: SparseMatrix.identity(QQ, 1), 1: SparseMatrix.zero(QQ, 1, 1)})


def test_report_serialization():
    c = complex_from_columns(QQ, {0: 2, 1: 1}, {1: [{0: 1}]})
    h = homology(c)
    assert h.to_tsv() == "degree\tdimension\n0\t1\n1\t0\n"
    assert '"dimension": 1' in h.to_json()
