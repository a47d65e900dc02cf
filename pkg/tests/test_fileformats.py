from pathlib import Path

import pytest

from plusalg.errors import ParseError
from plusalg.fileformats import (
    load_algebra,
    load_operad,
    load_otree,
    load_presentation,
    parse_algebra,
    parse_expression,
    parse_operad,
    parse_otree,
    parse_presentation,
    write_algebra,
)
from plusalg.freealg import pi0
from plusalg.linalg import GF
from plusalg.operads import classical_operad
from plusalg.theories import theory_homology

from builders import gl2, heisenberg, leibniz_2

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.mark.parametrize("path", sorted(DATA.glob("*.alg")), ids=lambda p: p.stem)
def test_shipped_algebras_round_trip(path):
    a = load_algebra(path)
    b = parse_algebra(write_algebra(a))
    assert (b.kind, b.dim, b.products, b.labels) == (a.kind, a.dim, a.products, a.labels)


@pytest.mark.parametrize("make", [gl2, heisenberg, leibniz_2, lambda: gl2(GF(5))])
def test_written_algebras_round_trip(make):
    a = make()
    b = parse_algebra(write_algebra(a))
    assert b.products == a.products and b.field == a.field


def test_lie_products_are_completed_by_antisymmetry():
    text = "format = 1\nkind = lie\ndim = 2\nbasis = h e\nproducts:\n  h e e 1\n"
    a = parse_algebra(text)
    assert a.mul_basis(1, 0) == {1: -1}


def _err(fn, text):
    with pytest.raises(ParseError) as ei:
        fn(text, path="t.txt")
    return ei.value


def test_errors_carry_line_and_column():
    e = _err(parse_algebra, "kind = lie\n")
    assert "format" in str(e)
    e = _err(parse_algebra, "format = 1\nkind = lie\ndim = 2\nbasis = a b\nproducts:\n  a b q 1\n")
    assert e.line == 6 and str(e).startswith("t.txt:6:")
    e = _err(parse_algebra, "format = 1\nkind = lie\ndim = x\n")
    assert e.line == 3
    e = _err(parse_algebra, "format = 2\nkind = lie\n")
    assert "version" in str(e)
    e = _err(parse_algebra, "format = 1\nkind = lie\nkind = lie\n")
    assert "repeated" in str(e)


def test_identity_violation_is_a_parse_error():
    text = "format = 1\nkind = lie\ndim = 2\nbasis = a b\nproducts:\n  a b a 1\n  b a a 1\n"
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_missing_file():
    with pytest.raises(ParseError, match="cannot read"):
        load_algebra(DATA / "nope.alg")


def test_operad_files():
    op = load_operad(DATA / "free_binary.op")
    assert [op.dim(n) for n in range(2, 5)] == [2, 12, 120]
    op = parse_operad("format = 1\noperad = free\narity_max = 4\ngenerator arity=2 rep=trivial\n")
    assert [op.dim(n) for n in range(2, 5)] == [1, 3, 15]
    assert parse_operad("format = 1\noperad = lie\nscalars = Fp:3\n").field.characteristic == 3
    e = _err(parse_operad, "format = 1\noperad = free\ngenerator arity=2 rep=weird\n")
    assert e.line == 3


def test_tree_files():
    op, t = load_otree(DATA / "lie_minimal.tree")
    assert op.name == "lie" and len(t.even_vertices()) == 21
    op, t = load_otree(DATA / "as_mixed.tree")
    assert set(t.labels) == {"m", "mop", "t"}
    e = _err(parse_otree, "format = 1\noperad = lie\nlabel br arity=2 vec=0:1\ntree = {br({}, {}) br({}, {}}\n")
    assert e.line == 4 and e.column is not None
    e = _err(parse_otree, "format = 1\noperad = lie\nlabel br arity=2 vec=0:1\ntree = {zz({}, {}) br({}, {})}\n")
    assert "zz" in str(e)


def test_expressions():
    lie = classical_operad("lie")
    e = parse_expression("2*[x, [x, y]] - y", lie)
    assert e.generators() == {"x", "y"}
    with pytest.raises(ParseError) as ei:
        parse_expression("[x, y", lie)
    assert ei.value.column is not None


def test_presentation_files():
    p = load_presentation(DATA / "as_ab.pres")
    assert [g.name for g in p.generators] == ["a", "b"]
    assert p.generator("b").weight == 2
    p = load_presentation(DATA / "lie_x3.pres")
    assert p.generators[0].degree == 3
    text = "format = 1\noperad = com\ngenerators:\n  a 0\n  b 0\n  r 1\ndifferentials:\n  r = a*b\n"
    assert pi0(parse_presentation(text), 2).graded == [2, 2]
    e = _err(parse_presentation, "format = 1\noperad = com\ngenerators:\n  a 0\n  r 1\ndifferentials:\n  r = a*c\n")
    assert e.line == 7
    e = _err(parse_presentation, "format = 1\noperad = com\ngenerators:\n  a 0\n  r 2\ndifferentials:\n  r = a\n")
    assert "degree" in str(e)


def test_shipped_data_matches_library():
    a = load_algebra(DATA / "sl2_Q.alg")
    assert theory_homology("ce", a, 3).as_tuple() == (1, 0, 0, 1)
