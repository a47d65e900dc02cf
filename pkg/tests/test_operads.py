import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from plusalg.errors import DimensionError, InvariantViolation, TruncationError
from plusalg.linalg import GF, QQ
from plusalg.operads import (
    SigmaModule,
    adjacent_word,
    block_perm_left,
    block_perm_right,
    check_may_axioms,
    classical_operad,
    evaluate,
    free_operad,
    identity_perm,
    perm_compose,
    perm_inverse,
    perm_sign,
    transposition,
)

from builders import gl2
from oracles import catalan, double_factorial_odd, operad_dim

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


@settings(max_examples=100)
@given(perms)
def test_adjacent_word_rebuilds_permutation(s):
    n = len(s)
    cur = identity_perm(n)
    for j in adjacent_word(s):
        cur = perm_compose(transposition(n, j), cur)
    assert cur == s


@settings(max_examples=100)
@given(perms)
def test_inverse_and_sign(s):
    n = len(s)
    assert perm_compose(s, perm_inverse(s)) == identity_perm(n)
    inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if s[i] > s[j])
    assert perm_sign(s) == (-1) ** inversions


@settings(max_examples=60)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.permutations(list(range(n))).map(tuple), st.integers(0, n - 1))), st.integers(1, 3))
def test_block_permutation_sizes(si, m):
    s, i = si
    p, big = block_perm_left(s, i, m)
    assert s[p] == i
    assert sorted(big) == list(range(len(s) + m - 1))
    t = tuple(range(m))
    assert block_perm_right(len(s), i, t) == identity_perm(len(s) + m - 1)


@pytest.mark.parametrize("name", ["com", "as", "lie", "leib"])
def test_classical_dimensions(name):
    op = classical_operad(name)
    for n in range(1, 6):
        assert op.dim(n) == operad_dim(name, n)


@pytest.mark.parametrize("name", ["com", "as", "lie", "leib"])
def test_may_axioms_hold(name):
    rep = check_may_axioms(classical_operad(name), arity_bound=4)
    assert rep.ok, rep.failures[:3]
    assert rep.checked["associativity"] > 0


def test_may_axioms_over_f2():
    assert check_may_axioms(classical_operad("lie", field=GF(2)), arity_bound=4).ok


def test_unknown_operad():
    with pytest.raises(ValueError):
        classical_operad("pre-lie")


def test_lie_words_expand_to_brackets():
    op = classical_operad("lie")
    # [[x0, x1], x2] = x0x1x2 - x1x0x2 - x2x0x1 + x2x1x0
    for b in range(op.dim(3)):
        v = op.expand(3, b)
        assert sum(v.values()) == 0
        assert op.coordinates(3, v, check=True) == {b: 1}


def test_evaluation_matches_algebra_product():
    g = gl2()
    lie = classical_operad("lie")
    x, y = {0: 1}, {1: 1}
    assert evaluate(lie, 2, {0: 1}, g, [x, y]) == g.mul(x, y)
    with pytest.raises(DimensionError):
        evaluate(lie, 2, {0: 1}, g, [x])


@pytest.mark.parametrize("sign", [False, True])
def test_free_on_symmetric_or_antisymmetric_binary(sign):
    op = free_operad(SigmaModule.trivial(QQ, 2, sign=sign), arity_max=5)
    assert [op.dim(n) for n in range(1, 6)] == [1] + [double_factorial_odd(n) for n in range(2, 6)]


def test_free_on_regular_binary_counts_planar_trees():
    op = free_operad(SigmaModule.regular(QQ, 2), arity_max=4)
    assert [op.dim(n) for n in range(2, 5)] == [catalan(n - 1) * factorial(n) for n in range(2, 5)]


def test_free_on_ternary_generator():
    op = free_operad(SigmaModule.trivial(QQ, 3), arity_max=5)
    assert [op.dim(n) for n in range(1, 6)] == [1, 0, 1, 0, 10]


def test_free_operad_axioms():
    op = free_operad(SigmaModule.trivial(QQ, 2), arity_max=4)
    assert check_may_axioms(op, arity_bound=4).ok


def test_free_operad_bounds_and_degrees():
    with pytest.raises(TruncationError):
        free_operad(SigmaModule.trivial(QQ, 2), arity_max=9)
    with pytest.raises(TruncationError):
        free_operad(SigmaModule.trivial(QQ, 2), arity_max=4).dim(5)
    odd = SigmaModule(QQ, {2: ([1], [SigmaModule.trivial(QQ, 2).components[2][1][0]])})
    with pytest.raises(InvariantViolation):
        free_operad(odd)


def test_sigma_module_checks_relations():
    m = SigmaModule.trivial(QQ, 2).components[2][1][0].scale(2)
    with pytest.raises(InvariantViolation):
        SigmaModule(QQ, {2: ([0], [m])})
    with pytest.raises(DimensionError):
        SigmaModule(QQ, {1: ([0], [])})
