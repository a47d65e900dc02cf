import pytest
from hypothesis import given, settings, strategies as st

from plusalg.complexes import homology
from plusalg.errors import BudgetExceeded, InvariantViolation
from plusalg.linalg import GF, QQ
from plusalg.matrices import (
    MatrixAlgebraSpec,
    dual_numbers,
    full_matrix_ring,
    ground_ring,
    product_ring,
    sl,
    truncated_polynomial_ring,
    upper_triangular_ring,
)
from plusalg.theories import (
    ce_complex,
    cyclic_class,
    cyclic_complex,
    hochschild_complex,
    homology_dim,
    leibniz_complex,
    stability_sweep,
    theory_homology,
)

from builders import affine_line, gl2, heisenberg, leibniz_2, random_lie_algebra, sl2
from oracles import ce_homology, cyclic_homology, hochschild_homology, leibniz_homology

RINGS = {
    "Q": lambda: ground_ring(QQ),
    "Q[eps]": lambda: dual_numbers(QQ),
    "Q[t]/t^3": lambda: truncated_polynomial_ring(QQ, 3),
    "M2": lambda: full_matrix_ring(QQ, 2),
    "T2": lambda: upper_triangular_ring(QQ, 2),
}


def test_ce_of_sl2():
    assert theory_homology("ce", sl2(), 3).as_tuple() == (1, 0, 0, 1)


@pytest.mark.parametrize("make", [heisenberg, affine_line, gl2])
def test_ce_matches_oracle(make):
    g = make()
    assert theory_homology("ce", g, 3).dims == ce_homology(g, 3)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 5000))
def test_ce_matches_oracle_random(seed):
    g = random_lie_algebra(seed, max_dim=6)
    assert theory_homology("ce", g, 2).dims == ce_homology(g, 2)


@pytest.mark.parametrize("make", [heisenberg, sl2, gl2, leibniz_2])
def test_leibniz_matches_oracle(make):
    g = make()
    assert theory_homology("leibniz", g, 2).dims == leibniz_homology(g, 2)


@pytest.mark.parametrize("name", sorted(RINGS))
def test_hochschild_and_cyclic_match_oracle(name):
    r = RINGS[name]()
    top = 2 if r.dim == 4 else 3
    assert theory_homology("hochschild", r, top).dims == hochschild_homology(r, top)
    assert theory_homology("cyclic", r, top).dims == cyclic_homology(r, top)


def test_cyclic_of_ground_field_is_periodic():
    assert theory_homology("cyclic", ground_ring(QQ), 5).as_tuple() == (1, 0, 1, 0, 1, 0)


def test_connes_representatives():
    assert cyclic_class((0, 1)) == ((0, 1), 1)
    # rotation in degree 1 carries the sign (-1)^1
    assert cyclic_class((1, 0)) == ((0, 1), -1)
    # (x, x) in degree 1 is fixed by an odd rotation, so it vanishes
    assert cyclic_class((0, 0))[1] == 0
    assert cyclic_class((0, 0, 0))[1] != 0


def test_cyclic_needs_characteristic():
    r = ground_ring(GF(2))
    with pytest.raises(InvariantViolation):
        cyclic_complex(r, 3)


def test_complexes_have_square_zero_differentials():
    for c in (
        ce_complex(gl2(), 3),
        leibniz_complex(gl2(), 3),
        hochschild_complex(upper_triangular_ring(QQ, 2), 3),
        cyclic_complex(truncated_polynomial_ring(QQ, 3), 3),
    ):
        c.check()


def test_kind_requirements():
    with pytest.raises(InvariantViolation):
        ce_complex(leibniz_2(), 2)
    with pytest.raises(InvariantViolation):
        hochschild_complex(sl2(), 2)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        hochschild_complex(full_matrix_ring(QQ, 2), 4, budget=100)


def test_sweep_reports_truncation():
    t = stability_sweep(dual_numbers(), "lie", range(2, 6), 2, budget=200)
    assert t.truncated
    assert t.rows[-1].truncated
    assert "TRUNCATED" in t.to_tsv()


def test_sweep_small_rows():
    t = stability_sweep(dual_numbers(), "lie", range(2, 4), 2)
    assert [r.matrix_dim for r in t.rows] == [0, 0]
    assert t.ring_dim == 0 and t.last_two_agree


def test_products_add_up():
    r, s = dual_numbers(), upper_triangular_ring(QQ, 2)
    p = product_ring(r, s)
    for th in ("hochschild", "cyclic"):
        for k in range(3):
            assert homology_dim(th, p, k) == homology_dim(th, r, k) + homology_dim(th, s, k)


def test_sl_over_prime_field():
    g = sl(MatrixAlgebraSpec(ground_ring(GF(3)), 2, "lie"))
    h = homology(ce_complex(g, 2), [0, 1, 2])
    assert h.dims == ce_homology(g, 2, p=3)
