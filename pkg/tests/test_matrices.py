import pytest

from plusalg.algebra import uce
from plusalg.errors import DimensionError, InvariantViolation
from plusalg.linalg import GF, QQ
from plusalg.matrices import (
    MatrixAlgebraSpec,
    commutator_subspace,
    dual_numbers,
    full_matrix_ring,
    gl,
    ground_ring,
    matrix_ring,
    product_ring,
    sl,
    sl_with_inclusion,
    steinberg_verify,
    trace_map,
    truncated_polynomial_ring,
    upper_triangular_ring,
)

from oracles import commutator_quotient_dim


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gl_and_sl_dimensions_over_q(n):
    spec = MatrixAlgebraSpec(ground_ring(QQ), n, "lie")
    assert gl(spec).dim == n * n
    assert sl(spec).dim == n * n - 1


@pytest.mark.parametrize(
    "base,extra",
    [(dual_numbers(), 2), (truncated_polynomial_ring(QQ, 3), 3), (upper_triangular_ring(QQ, 2), 2)],
)
def test_sl_codimension_is_abelianization(base, extra):
    # sl_n(R) is the kernel of gl_n(R) -> R/[R, R]
    assert commutator_quotient_dim(base) == extra
    spec = MatrixAlgebraSpec(base, 3, "lie")
    assert gl(spec).dim - sl(spec).dim == extra


def test_commutator_subspace_of_m2():
    assert commutator_subspace(full_matrix_ring(QQ, 2)).dim == 3


def test_trace_is_surjective_and_kills_sl():
    spec = MatrixAlgebraSpec(dual_numbers(), 3, "lie")
    t = trace_map(spec)
    assert t.is_surjective()
    s, inc = sl_with_inclusion(spec)
    assert (t.matrix @ inc.matrix).is_zero()


def test_leibniz_kind_is_kept():
    g = sl(MatrixAlgebraSpec(ground_ring(QQ), 3, "leibniz"))
    assert g.kind == "leibniz" and g.dim == 8


def test_spec_validation():
    with pytest.raises(DimensionError):
        MatrixAlgebraSpec(ground_ring(QQ), 0, "lie")
    with pytest.raises(ValueError):
        MatrixAlgebraSpec(ground_ring(QQ), 2, "jordan")
    with pytest.raises(InvariantViolation):
        MatrixAlgebraSpec(sl(MatrixAlgebraSpec(ground_ring(QQ), 2)), 2)


@pytest.mark.parametrize("base", [ground_ring(QQ), dual_numbers()])
def test_steinberg_relations_in_uce_of_sl3(base):
    spec = MatrixAlgebraSpec(base, 3, "lie")
    rep = steinberg_verify(spec, uce(sl(spec)))
    assert rep.ok, rep.violations[:3]
    assert rep.checked["b"] > 0 and rep.checked["c"] > 0


def test_steinberg_needs_rank_three():
    spec = MatrixAlgebraSpec(ground_ring(QQ), 2, "lie")
    with pytest.raises(InvariantViolation):
        steinberg_verify(spec, uce(sl(spec)))


def test_matrix_ring_and_products():
    m = matrix_ring(dual_numbers(), 2)
    assert m.dim == 8 and m.unit is not None
    p = product_ring(dual_numbers(), ground_ring(QQ))
    assert p.dim == 3
    assert p.unit == {0: 1, 2: 1}


def test_small_prime_base():
    g = gl(MatrixAlgebraSpec(ground_ring(GF(5)), 2, "lie"))
    assert g.field.characteristic == 5 and g.identity_defect() is None
