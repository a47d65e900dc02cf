"""Plain-text input formats: algebras, operads, O-trees and quasi-free presentations.

All formats share a line grammar: UTF-8, ``#`` starts a comment, ``key = value``
header lines, and indented blocks introduced by ``section:``.  Every file starts
with ``format = 1``.  Scalars are integers or ``p/q``; the scalar domain is
``Q`` or ``Fp:<p>``.

Algebra::

    format = 1
    name = sl2_Q
    kind = lie            # lie | leibniz | associative
    scalars = Q
    dim = 3
    basis = e h f
    products:
      e f h 1             # [e, f] = 1 h; basis labels or 0-based indices
      h e e 2

For ``kind = lie`` a product listed for only one order is extended by antisymmetry.

Operad::

    format = 1
    operad = free         # com | as | lie | leib | free
    scalars = Q
    arity_max = 4
    generator arity=2 rep=regular

O-tree::

    format = 1
    operad = lie          # or: operad_file = some.op (relative to this file)
    label m arity=2 vec=0:1
    tree = {m({}, {}) m({}, {})}

Even vertices are ``{ .. }`` holding odd vertices; an odd vertex is ``label(even, ..)``.

Presentation::

    format = 1
    operad = as
    scalars = Q
    generators:
      a 2
      b 5 weight=2
    differentials:
      b = a*a

Expressions: ``c*e``, ``e + e``, ``e - e``, ``[e, e]`` and ``e*e`` (the arity-2
basis element 0), ``o<k>_<b>(e, .., e)`` for basis element b of O(k), and generator names.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import StructureConstantAlgebra
from .errors import ParseError
from .freealg import Gen, Generator, Lin, Op, QuasiFreePresentation
from .linalg import QQ, field_from_name, format_scalar
from .operads import SigmaModule, classical_operad, free_operad
from .plus import EvenVertex, Label, OddVertex, OTree

FORMAT_VERSION = "1"


class _Lines:
    """Comment-stripped lines with header fields and sections."""

    def __init__(self, text: str, path=None):
        self.path = path
        self.header: Dict[str, Tuple[str, int]] = {}
        self.sections: Dict[str, List[Tuple[str, int]]] = {}
        self.directives: List[Tuple[str, int]] = []
        current = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            indented = line[0] in " \t"
            body = line.strip()
            if indented and current is not None:
                self.sections[current].append((body, lineno))
                continue
            current = None
            if body.endswith(":") and "=" not in body:
                current = body[:-1].strip()
                if current in self.sections:
                    self.error(f"section {current!r} repeated", lineno)
                self.sections[current] = []
            elif "=" in body and not body.startswith(("label ", "generator ")):
                k, v = body.split("=", 1)
                k = k.strip()
                if k in self.header:
                    self.error(f"field {k!r} repeated", lineno)
                self.header[k] = (v.strip(), lineno)
            else:
                self.directives.append((body, lineno))
        fmt = self.header.get("format")
        if fmt is None:
            self.error("missing 'format = 1' header", 1)
        if fmt[0] != FORMAT_VERSION:
            self.error(f"unsupported format version {fmt[0]!r}", fmt[1])

    def error(self, msg, line=None, column=None):
        raise ParseError(msg, self.path, line, column)

    def get(self, key, default=None, required=False) -> Optional[str]:
        if key in self.header:
            return self.header[key][0]
        if required:
            self.error(f"missing field {key!r}", 1)
        return default

    def line_of(self, key) -> int:
        return self.header.get(key, ("", 1))[1]

    def int_field(self, key, default=None) -> int:
        v = self.get(key, None if default is not None else None, required=default is None)
        if v is None:
            return default
        try:
            return int(v)
        except ValueError:
            self.error(f"field {key!r} must be an integer, got {v!r}", self.line_of(key))

    def field(self):
        name = self.get("scalars", "Q")
        try:
            return field_from_name(name)
        except ValueError as e:
            self.error(str(e), self.line_of("scalars"))


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", path) from None


def _scalar(field, tok: str, lines: _Lines, lineno: int):
    try:
        return field(Fraction(tok))
    except (ValueError, ZeroDivisionError) as e:
        lines.error(f"bad scalar {tok!r}: {e}", lineno)


# ---------------------------------------------------------------------------
# algebras


def parse_algebra(text: str, path=None) -> StructureConstantAlgebra:
    L = _Lines(text, path)
    kind = L.get("kind", required=True)
    kinds = {"lie": "lie", "leibniz": "leibniz", "associative": "associative", "assoc": "associative"}
    if kind not in kinds:
        L.error(f"unknown kind {kind!r}", L.line_of("kind"))
    kind = kinds[kind]
    field = L.field()
    dim = L.int_field("dim")
    basis = (L.get("basis") or "").split() or [f"b{i}" for i in range(dim)]
    if len(basis) != dim:
        L.error(f"basis lists {len(basis)} labels but dim = {dim}", L.line_of("basis"))
    if len(set(basis)) != len(basis):
        L.error("basis labels must be distinct", L.line_of("basis"))
    index = {b: i for i, b in enumerate(basis)}

    def ref(tok, lineno):
        if tok in index:
            return index[tok]
        if tok.isdigit() and int(tok) < dim:
            return int(tok)
        L.error(f"unknown basis element {tok!r}", lineno)

    prods: Dict[Tuple[int, int], dict] = {}
    for body, lineno in L.sections.get("products", []):
        toks = body.split()
        if len(toks) != 4:
            L.error(f"product lines have the form 'x y z c', got {body!r}", lineno)
        i, j, k = (ref(t, lineno) for t in toks[:3])
        c = _scalar(field, toks[3], L, lineno)
        v = prods.setdefault((i, j), {})
        v[k] = v.get(k, 0) + c
    if kind == "lie":
        for (i, j), v in list(prods.items()):
            if (j, i) not in prods:
                prods[(j, i)] = {k: -c for k, c in v.items()}
    prods = {ij: {k: c for k, c in v.items() if c} for ij, v in prods.items()}
    for s in L.sections:
        if s != "products":
            L.error(f"unknown section {s!r}")
    try:
        return StructureConstantAlgebra(kind, field, dim, prods, basis, L.get("name", ""))
    except ValueError as e:
        raise ParseError(f"algebra is invalid: {e}", path) from None


def load_algebra(path) -> StructureConstantAlgebra:
    return parse_algebra(_read(path), path)


def write_algebra(a: StructureConstantAlgebra) -> str:
    lines = [
        f"format = {FORMAT_VERSION}",
        f"name = {a.name or 'unnamed'}",
        f"kind = {a.kind}",
        f"scalars = {a.field.name if a.field is QQ else 'Fp:%d' % a.field.characteristic}",
        f"dim = {a.dim}",
        "basis = " + " ".join(a.labels),
        "products:",
    ]
    for (i, j) in sorted(a.products):
        for k, c in sorted(a.products[(i, j)].items()):
            lines.append(f"  {a.labels[i]} {a.labels[j]} {a.labels[k]} {format_scalar(c)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# operads


_KV = re.compile(r"(\w+)=(\S+)")


def parse_operad(text: str, path=None):
    L = _Lines(text, path)
    name = L.get("operad", required=True).lower()
    field = L.field()
    arity_max = L.int_field("arity_max", 5)
    if name != "free":
        for body, lineno in L.directives:
            L.error(f"unexpected line {body!r} for a classical operad", lineno)
        try:
            return classical_operad(name, arity_max, field)
        except ValueError as e:
            L.error(str(e), L.line_of("operad"))
    comps: Dict[int, Tuple[list, list]] = {}
    for body, lineno in L.directives:
        if not body.startswith("generator"):
            L.error(f"unexpected line {body!r}", lineno)
        kv = dict(_KV.findall(body))
        try:
            k = int(kv["arity"])
        except (KeyError, ValueError):
            L.error("generator lines need arity=<k>", lineno)
        rep = kv.get("rep", "regular")
        deg = int(kv.get("degree", "0"))
        if rep == "regular":
            m = SigmaModule.regular(field, k)
        elif rep in ("trivial", "sign"):
            m = SigmaModule.trivial(field, k, 1, sign=rep == "sign")
        else:
            L.error(f"unknown representation {rep!r}", lineno)
        degs, mats = m.components[k]
        old = comps.get(k)
        if old is None:
            comps[k] = ([deg] * len(degs), list(mats))
        else:
            from .linalg import SparseMatrix

            # block sum of two representations
            od, om = old
            n0 = len(od)
            newm = []
            for A, B in zip(om, mats):
                cols = [dict(A.column(c)) for c in range(A.shape[1])]
                cols += [{n0 + r: v for r, v in B.column(c).items()} for c in range(B.shape[1])]
                newm.append(SparseMatrix._trusted(field, n0 + len(degs), n0 + len(degs), cols))
            comps[k] = (od + [deg] * len(degs), newm)
    if not comps:
        L.error("a free operad needs at least one generator line")
    try:
        return free_operad(SigmaModule(field, comps), arity_max)
    except ValueError as e:
        raise ParseError(str(e), path) from None


def load_operad(path):
    return parse_operad(_read(path), path)


# ---------------------------------------------------------------------------
# O-trees


def _parse_vec(field, s: str, L: _Lines, lineno: int) -> dict:
    out = {}
    for part in s.split(","):
        if ":" not in part:
            L.error(f"vector entries look like index:coefficient, got {part!r}", lineno)
        b, c = part.split(":", 1)
        out[int(b)] = _scalar(field, c, L, lineno)
    return out


def _parse_tree(s: str, labels, L: _Lines, lineno: int, col0: int) -> EvenVertex:
    pos = [0]

    def err(msg):
        L.error(msg, lineno, col0 + pos[0] + 1)

    def ws():
        while pos[0] < len(s) and s[pos[0]] in " \t,":
            pos[0] += 1

    def even():
        ws()
        if pos[0] >= len(s) or s[pos[0]] != "{":
            err("expected '{'")
        pos[0] += 1
        v = EvenVertex()
        while True:
            ws()
            if pos[0] >= len(s):
                err("unclosed '{'")
            if s[pos[0]] == "}":
                pos[0] += 1
                return v
            v.children.append(odd())

    def odd():
        m = re.compile(r"[A-Za-z_]\w*").match(s, pos[0])
        if not m:
            err("expected a label name")
        name = m.group(0)
        if name not in labels:
            err(f"unknown label {name!r}")
        pos[0] = m.end()
        ws()
        if pos[0] >= len(s) or s[pos[0]] != "(":
            err("expected '('")
        pos[0] += 1
        o = OddVertex(name)
        while True:
            ws()
            if pos[0] >= len(s):
                err("unclosed '('")
            if s[pos[0]] == ")":
                pos[0] += 1
                return o
            o.children.append(even())

    root = even()
    ws()
    if pos[0] != len(s):
        err("trailing characters after the tree")
    return root


def parse_otree(text: str, path=None):
    """Returns (operad, tree)."""
    L = _Lines(text, path)
    if "operad_file" in L.header:
        base = os.path.dirname(path) if path else "."
        op = load_operad(os.path.join(base, L.get("operad_file")))
    else:
        op = classical_operad(L.get("operad", required=True), L.int_field("arity_max", 5), L.field())
    labels = {}
    for body, lineno in L.directives:
        if not body.startswith("label "):
            L.error(f"unexpected line {body!r}", lineno)
        parts = body.split()
        if len(parts) < 2:
            L.error("label lines need a name", lineno)
        kv = dict(_KV.findall(body))
        try:
            k = int(kv["arity"])
        except (KeyError, ValueError):
            L.error("label lines need arity=<k>", lineno)
        vec = _parse_vec(op.field, kv.get("vec", "0:1"), L, lineno)
        labels[parts[1]] = Label(parts[1], k, vec)
    if "tree" not in L.header:
        L.error("missing field 'tree'")
    raw = L.get("tree")
    lineno = L.line_of("tree")
    root = _parse_tree(raw, labels, L, lineno, 0)
    try:
        t = OTree(root, labels, L.get("name", os.path.basename(path) if path else ""))
        t.check(op)
    except ValueError as e:
        raise ParseError(str(e), path, lineno) from None
    return op, t


def load_otree(path):
    return parse_otree(_read(path), path)


# ---------------------------------------------------------------------------
# expressions and presentations

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(o\d+_\d+)|([A-Za-z_][\w.']*)|(.))")


def parse_expression(s: str, op, L: Optional[_Lines] = None, lineno=None, col0=0):
    toks = []
    for m in _TOKEN.finditer(s):
        if m.group(0).strip() == "":
            continue
        kind = next(i for i in range(1, 5) if m.group(i) is not None)
        toks.append((kind, m.group(kind), m.start(kind)))
    pos = [0]

    def err(msg):
        col = col0 + (toks[pos[0]][2] if pos[0] < len(toks) else len(s)) + 1
        raise ParseError(msg, L.path if L else None, lineno, col)

    def peek(val=None):
        if pos[0] >= len(toks):
            return None
        t = toks[pos[0]]
        return t if val is None or t[1] == val else None

    def take(val):
        if not peek(val):
            err(f"expected {val!r}")
        pos[0] += 1

    def expr():
        terms = []
        sign = 1
        if peek("-"):
            sign = -1
            pos[0] += 1
        elif peek("+"):
            pos[0] += 1
        terms.append((sign, product()))
        while peek("+") or peek("-"):
            sign = 1 if toks[pos[0]][1] == "+" else -1
            pos[0] += 1
            terms.append((sign, product()))
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else Lin(terms)

    def product():
        left = factor()
        while peek("*"):
            pos[0] += 1
            right = factor()
            if isinstance(right, Fraction):
                err("scalars go in front of a product")
            if isinstance(left, Fraction):
                left = Lin([(left, right)])
            else:
                left = Op({0: 1}, [left, right], "m")
        if isinstance(left, Fraction):
            err("a bare scalar is not an element")
        return left

    def factor():
        t = peek()
        if t is None:
            err("unexpected end of expression")
        kind, val, _ = t
        if kind == 1:
            pos[0] += 1
            return Fraction(val)
        if kind == 2:
            pos[0] += 1
            k, b = map(int, val[1:].split("_"))
            take("(")
            args = [expr()]
            while peek(","):
                pos[0] += 1
                args.append(expr())
            take(")")
            if len(args) != k:
                err(f"{val} takes {k} arguments, got {len(args)}")
            return Op({b: 1}, args, val)
        if kind == 3:
            pos[0] += 1
            return Gen(val)
        if val == "[":
            pos[0] += 1
            a = expr()
            take(",")
            b = expr()
            take("]")
            return Op({0: 1}, [a, b], "br")
        if val == "(":
            pos[0] += 1
            e = expr()
            take(")")
            return e
        err(f"unexpected {val!r}")

    e = expr()
    if pos[0] != len(toks):
        err("trailing input")
    return e


def parse_presentation(text: str, path=None) -> QuasiFreePresentation:
    L = _Lines(text, path)
    op = classical_operad(L.get("operad", required=True), L.int_field("arity_max", 5), L.field())
    gens = []
    for body, lineno in L.sections.get("generators", []):
        parts = body.split()
        if len(parts) < 2:
            L.error("generator lines look like 'name degree [weight=w]'", lineno)
        kv = dict(_KV.findall(body))
        try:
            gens.append(Generator(parts[0], int(parts[1]), int(kv.get("weight", 1))))
        except ValueError:
            L.error(f"bad generator line {body!r}", lineno)
    names = {g.name for g in gens}
    d = {}
    for body, lineno in L.sections.get("differentials", []):
        if "=" not in body:
            L.error("differential lines look like 'name = expression'", lineno)
        lhs, rhs = body.split("=", 1)
        col = body.index("=") + 1
        name = lhs.strip()
        if name not in names:
            L.error(f"differential given for unknown generator {name!r}", lineno, 1)
        e = parse_expression(rhs, op, L, lineno, col)
        unknown = sorted(e.generators() - names)
        if unknown:
            L.error(f"unknown generator {unknown[0]!r} in d({name})", lineno, col + rhs.index(unknown[0]) + 1)
        d[name] = e
    try:
        return QuasiFreePresentation(op, gens, d, name=L.get("name", os.path.basename(path) if path else ""))
    except ValueError as e:
        raise ParseError(f"presentation is invalid: {e}", path) from None


def load_presentation(path) -> QuasiFreePresentation:
    return parse_presentation(_read(path), path)


__all__ = [
    "parse_algebra",
    "load_algebra",
    "write_algebra",
    "parse_operad",
    "load_operad",
    "parse_otree",
    "load_otree",
    "parse_expression",
    "parse_presentation",
    "load_presentation",
]
