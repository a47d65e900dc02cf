from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plusalg.algebra import (
    AlgebraMorphism,
    Ideal,
    Module,
    StructureConstantAlgebra,
    abelian_algebra,
    commutator_algebra,
    derivations,
    generated_ideal,
    indecomposables,
    is_central_kernel,
    is_perfect,
    perfect_radical,
    quotient_map,
    square_ideal,
    square_zero_check,
    uce,
)
from plusalg.errors import DimensionError, InvariantViolation
from plusalg.linalg import GF, QQ, SparseMatrix
from plusalg.matrices import MatrixAlgebraSpec, dual_numbers, full_matrix_ring, ground_ring, sl

from builders import affine_line, gl2, heisenberg, leibniz_2, random_lie_algebra, sl2, sl2_module_sum
from oracles import ce_homology, perfect_radical_dim


def test_kind_identities_are_checked():
    # [x, y] = x, [y, x] = x is not antisymmetric
    with pytest.raises(InvariantViolation):
        StructureConstantAlgebra("lie", QQ, 2, {(0, 1): {0: 1}, (1, 0): {0: 1}})
    # x x = y, y x = x: not associative ((xx)x = yx = x, x(xx) = xy = 0)
    with pytest.raises(InvariantViolation):
        StructureConstantAlgebra("associative", QQ, 2, {(0, 0): {1: 1}, (1, 0): {0: 1}})
    # a Leibniz algebra that is not Lie passes as leibniz only
    leibniz_2()
    with pytest.raises(InvariantViolation):
        StructureConstantAlgebra("lie", QQ, 2, {(1, 1): {0: 1}})


def test_products_out_of_range():
    with pytest.raises(DimensionError):
        StructureConstantAlgebra("lie", QQ, 2, {(0, 2): {0: 1}})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_lie_algebras_satisfy_jacobi(seed):
    a = random_lie_algebra(seed)
    assert a.identity_defect() is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_perfect_radical_matches_dense_oracle(seed):
    a = random_lie_algebra(seed)
    assert perfect_radical(a).dim == perfect_radical_dim(a)


def test_perfect_radical_examples():
    assert perfect_radical(sl2()).dim == 3
    assert perfect_radical(gl2()).dim == 3
    assert perfect_radical(heisenberg()).dim == 0
    assert perfect_radical(affine_line()).dim == 0
    assert is_perfect(sl2_module_sum())


def test_square_and_indecomposables():
    assert square_ideal(heisenberg()).dim == 1
    assert indecomposables(heisenberg()).dim == 2
    assert indecomposables(gl2()).dim == 1
    assert indecomposables(sl2()).dim == 0


def test_ideal_checks_closure():
    g = sl2()
    with pytest.raises(InvariantViolation):
        Ideal(g, [{0: Fraction(1)}])
    i = generated_ideal(g, [{0: Fraction(1)}])
    assert i.dim == 3


def test_quotient_map_is_morphism_with_right_kernel():
    g = gl2()
    b, f = quotient_map(g, perfect_radical(g))
    assert b.dim == 1 and b.is_abelian()
    assert f.rank == 1 and f.is_surjective()


def test_morphism_check_rejects_non_homomorphisms():
    g = sl2()
    m = SparseMatrix.identity(QQ, 3).scale(Fraction(2))
    with pytest.raises(InvariantViolation):
        AlgebraMorphism(g, g, m)


def test_derivations_of_sl2_are_inner():
    g = sl2()
    assert derivations(g, Module.adjoint(g)).dim == 3
    h = heisenberg()
    assert derivations(h, Module.adjoint(h)).dim == 6
    # into the trivial module: dim of the dual of g / [g, g]
    assert derivations(g).dim == 0
    assert derivations(h).dim == 2


def test_module_check():
    g = sl2()
    Module.adjoint(g).check()
    bad = [SparseMatrix.identity(QQ, 1)] * 3
    with pytest.raises(InvariantViolation):
        Module(g, 1, bad)


def test_unit_of_associative_algebras():
    r = dual_numbers()
    assert r.unit == {0: 1}
    assert full_matrix_ring(QQ, 2).unit == {0: 1, 3: 1}
    nil = StructureConstantAlgebra("associative", QQ, 1, {})
    assert nil.unit is None


def test_commutator_algebra_is_lie():
    m = commutator_algebra(full_matrix_ring(QQ, 2))
    assert m.kind == "lie"
    assert ce_homology(m, 2) == {0: 1, 1: 1, 2: 0}


def test_uce_of_sl2_is_trivial():
    e = uce(sl2())
    assert e.kernel_dim == 0
    assert e.algebra.dim == 3


def test_uce_of_sl3_over_dual_numbers_has_kernel_hc1():
    # HC_1 of the dual numbers is zero, so the extension is trivial
    g = sl(MatrixAlgebraSpec(dual_numbers(), 3, "lie"))
    e = uce(g)
    assert e.kernel_dim == 0
    assert is_central_kernel(e.map)


def test_uce_kernel_equals_h2_for_perfect_non_semisimple():
    g = sl2_module_sum()
    e = uce(g)
    assert e.kernel_dim == ce_homology(g, 2)[2]
    assert square_zero_check(e.map).is_square_zero
    assert is_central_kernel(e.map)
    assert is_perfect(e.algebra)


def test_leibniz_uce_of_sl3():
    g = sl(MatrixAlgebraSpec(ground_ring(QQ), 3, "leibniz"))
    e = uce(g, "leibniz")
    assert e.algebra.kind == "leibniz"
    assert e.kernel_dim == 0
    assert is_central_kernel(e.map)


def test_uce_needs_perfect():
    with pytest.raises(InvariantViolation):
        uce(heisenberg())


def test_square_zero_requires_surjection():
    g = sl2()
    f = AlgebraMorphism(abelian_algebra(QQ, 1), g, SparseMatrix.zero(QQ, 3, 1))
    with pytest.raises(InvariantViolation):
        square_zero_check(f)


def test_prime_field_algebras():
    g = sl(MatrixAlgebraSpec(ground_ring(GF(3)), 2, "lie"))
    assert g.identity_defect() is None
    # over F_2, [e, f] = h and [h, e] = 2e = 0: sl_2 is nilpotent
    g2 = sl(MatrixAlgebraSpec(ground_ring(GF(2)), 2, "lie"))
    assert perfect_radical(g2).dim == 0
