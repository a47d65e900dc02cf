from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from plusalg.errors import InvariantViolation, TruncationError
from plusalg.freealg import (
    FreeAlgebra,
    Gen,
    Generator,
    Lin,
    QuasiFreePresentation,
    admissibility_probe,
    binary,
    complete_weight,
    decomposable_classes,
    hurewicz,
    pi0,
    pi0_modulo,
    quillen_homology,
)
from plusalg.linalg import GF, QQ
from plusalg.operads import classical_operad

from oracles import witt


def free_on(op_name, k, field=QQ, degree=0):
    op = classical_operad(op_name, field=field)
    gens = [Generator(f"g{i}", degree) for i in range(k)]
    return QuasiFreePresentation(op, gens, {}, name=f"free{k}")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pi0_of_free_lie_is_witt(k):
    rep = pi0(free_on("lie", k), 4)
    assert rep.graded == [witt(k, n) for n in range(1, 5)]


@pytest.mark.parametrize("k", [1, 2])
def test_pi0_of_free_as_and_com(k):
    assert pi0(free_on("as", k), 4).graded == [k**n for n in range(1, 5)]
    assert pi0(free_on("com", k), 4).graded == [comb(n + k - 1, k - 1) for n in range(1, 5)]


def test_free_lie_on_one_degree_zero_generator():
    # only the generator itself survives: [x, x] = 0
    assert pi0(free_on("lie", 1), 3).graded == [1, 0, 0]


def test_free_leibniz_on_one_generator():
    # x, [x, x], [[x, x], x], ... the left-normed powers
    assert pi0(free_on("leib", 1), 4).graded == [1, 1, 1, 1]


def test_odd_generator_coinvariants():
    lie = classical_operad("lie")
    odd = FreeAlgebra(lie, [Generator("x", 1)], 3)
    even = FreeAlgebra(lie, [Generator("x", 2)], 3)
    assert odd.coinvariant_dim((0, 0)) == 1
    assert odd.coinvariant_dim((0, 0, 0)) == 0
    assert even.coinvariant_dim((0, 0)) == 0
    com = FreeAlgebra(classical_operad("com"), [Generator("x", 1)], 3)
    assert com.coinvariant_dim((0, 0)) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from(["com", "as"]))
def test_koszul_sign_rule(da, db, name):
    op = classical_operad(name)
    alg = FreeAlgebra(op, [Generator("a", da), Generator("b", db)], 2)
    a, b = alg.generator("a"), alg.generator("b")
    ab = alg.theta(2, {0: 1}, [a, b])
    ba = alg.theta(2, {0: 1}, [b, a])
    if name == "com":
        sign = -1 if da * db % 2 else 1
        assert ab == {k: sign * v for k, v in ba.items()}
    else:
        # a b and b a are independent in the free associative algebra
        assert len(ab) == len(ba) == 1 and set(ab) != set(ba)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4))
def test_differential_squares_to_zero_on_truncation(d, w):
    # a free contractible pair on top of a free Lie algebra: x (d), y (d+1), d y = x
    p = QuasiFreePresentation(
        classical_operad("lie"), [Generator("z", 0), Generator("x", d), Generator("y", d + 1)], {"y": Gen("x")}
    )
    c = p.truncated_complex(w, d + 2)
    c.check()


def test_presentation_validation():
    lie = classical_operad("lie")
    with pytest.raises(InvariantViolation, match="unique"):
        QuasiFreePresentation(lie, [("x", 0), ("x", 1)])
    with pytest.raises(InvariantViolation, match="negative"):
        QuasiFreePresentation(lie, [("x", -1)])
    with pytest.raises(InvariantViolation, match="degree"):
        QuasiFreePresentation(lie, [("x", 0), ("y", 3)], {"y": Gen("x")})
    with pytest.raises(InvariantViolation, match="unknown"):
        QuasiFreePresentation(lie, [("x", 0)], {"q": Gen("x")})


def test_d_squared_violation_is_detected():
    op = classical_operad("as")
    gens = [("a", 0), ("x", 1), ("y", 2)]
    with pytest.raises(InvariantViolation, match="d\\^2"):
        QuasiFreePresentation(op, gens, {"x": Gen("a"), "y": Gen("x")})
    # d y = x - x a is not closed either: d(d y) = a - a a
    with pytest.raises(InvariantViolation, match="d\\^2"):
        QuasiFreePresentation(op, gens, {"x": Gen("a"), "y": Gen("x") - binary(Gen("x"), Gen("a"))})


def test_quillen_homology_of_contractible_pair():
    p = QuasiFreePresentation(classical_operad("com"), [("x", 1), ("y", 2)], {"y": Gen("x")})
    assert quillen_homology(p, range(4)).dims == {0: 0, 1: 0, 2: 0, 3: 0}
    # the linear part sees only the generator term
    q = QuasiFreePresentation(classical_operad("com"), [("a", 0), ("b", 0), ("x", 1)], {"x": binary(Gen("a"), Gen("b"))})
    assert quillen_homology(q).dims == {0: 2, 1: 1}


def test_pi0_modulo_and_decomposables():
    p = free_on("lie", 2)
    x, y = Gen("g0"), Gen("g1")
    assert pi0_modulo(p, 3, [binary(x, y)]) == 2
    assert pi0_modulo(p, 3, [x]) == 1
    assert decomposable_classes(p, 3) == 2


def test_relation_in_degree_one():
    # Com on a, b modulo a b = 0
    op = classical_operad("com")
    p = QuasiFreePresentation(op, [("a", 0), ("b", 0), ("r", 1)], {"r": binary(Gen("a"), Gen("b"))})
    assert pi0(p, 3).graded == [2, 2, 2]


def test_complete_weight():
    p = QuasiFreePresentation(classical_operad("lie"), [("x", 3)])
    assert complete_weight(p, 6) == 2
    assert complete_weight(free_on("lie", 1), 3) is None
    with pytest.raises(TruncationError):
        hurewicz(free_on("lie", 1), 3)


def test_hurewicz_for_free_lie_on_degree_three():
    p = QuasiFreePresentation(classical_operad("lie"), [("x", 3)])
    h = hurewicz(p, 8)
    v = h.range_verdict()
    assert h.connectivity == 2
    assert v["iso_ok"] and v["epi_ok"]
    # [x, x] lives in degree 6 = 2n + 2 and is killed by the map
    assert v["first_non_injective"] == 6
    assert h.pi.dims[6] == 1 and h.hq.dims[6] == 0


def test_hurewicz_with_a_differential():
    op = classical_operad("as")
    p = QuasiFreePresentation(op, [Generator("a", 2), Generator("b", 5, 2)], {"b": binary(Gen("a"), Gen("a"))})
    h = hurewicz(p, 9)
    v = h.range_verdict()
    assert h.connectivity == 1
    assert v["iso_ok"] and v["epi_ok"]
    assert v["first_non_injective"] == 7
    assert h.pi.dims[5] == 0 and h.hq.dims[5] == 1


@pytest.mark.parametrize(
    "field,name,expected",
    [
        (GF(2), "com", (2, 4)),
        (GF(2), "lie", (2, 4)),
        (GF(3), "com", (3, 5)),
        (GF(3), "lie", (3, 5)),
        (GF(2), "as", None),
        (QQ, "com", None),
        (QQ, "lie", None),
    ],
)
def test_admissibility_probe(field, name, expected):
    op = classical_operad(name, field=field)
    rep = admissibility_probe(op, None, 1, 3, 5)
    assert rep.first_difference == expected
    assert rep.obstruction == (expected is not None)


def test_probe_weight_bound():
    with pytest.raises(TruncationError):
        admissibility_probe(classical_operad("com", arity_max=3), None, 1, 4, 3)


def test_linear_combinations_evaluate():
    p = free_on("as", 2)
    alg = p.algebra(2)
    e = 2 * Gen("g0") - Gen("g1") + Lin([(3, Gen("g1"))])
    v = e.evaluate(alg)
    assert v == {((0,), 0): 2, ((1,), 0): 2}
