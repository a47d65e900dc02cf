"""O-trees, their telescopes and cones, cofibers along maps out of a telescope, and the
degree-0 plus construction.

Paths name the even-level vertices: the root is ``x``; the t-th successor of the
j-th odd successor of ``x.I`` is ``x.I.j.t`` (1-based).  A vertex at level 2r has
stage r.  The telescope truncated at ``r_max`` has generators x_I (degree 0) for
stages <= r_max and y_I (degree 1) for stages < r_max, with
d y_I = x_I - phi(x_I), phi(x_I) = sum_j theta(o_j; x_{I.j.1}, .., x_{I.j.k_j}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    Ideal,
    StructureConstantAlgebra,
    indecomposables,
    perfect_radical,
    quotient_map,
)
from .complexes import ChainComplex, homology
from .errors import InvariantViolation, TruncationError
from .freealg import (
    ZERO,
    FormalElement,
    Gen,
    Generator,
    Lin,
    Op,
    QuasiFreePresentation,
    pi0,
    pi0_modulo,
    quillen_homology,
)
from .linalg import SparseMatrix, rank
from .operads import Operad

Path = Tuple[Tuple[int, int], ...]


@dataclass
class Label:
    name: str
    arity: int
    vec: Dict[int, object]


@dataclass
class EvenVertex:
    children: List["OddVertex"] = field(default_factory=list)


@dataclass
class OddVertex:
    label: str
    children: List[EvenVertex] = field(default_factory=list)


class OTree:
    """A leveled rooted tree with operad labels on its odd-level vertices.

    Even vertices without successors are frontier vertices of a finite piece of
    tree; every other even vertex needs at least two successors.
    """

    def __init__(self, root: EvenVertex, labels: Mapping[str, Label], name: str = ""):
        self.root = root
        self.labels = dict(labels)
        self.name = name
        self.check()

    def check(self, operad: Optional[Operad] = None):
        for path, v in self.even_vertices():
            if len(v.children) == 1:
                raise InvariantViolation(f"even vertex {path_name('x', path)} has a single successor")
            for j, o in enumerate(v.children, start=1):
                lab = self.labels.get(o.label)
                if lab is None:
                    raise InvariantViolation(f"unknown label {o.label!r}")
                if lab.arity < 2:
                    raise InvariantViolation(f"label {lab.name} has arity {lab.arity} < 2")
                if lab.arity != len(o.children):
                    raise InvariantViolation(
                        f"label {lab.name} of arity {lab.arity} sits on a vertex with {len(o.children)} successors"
                    )
        if operad is not None:
            for lab in self.labels.values():
                dim = operad.dim(lab.arity)
                for b in lab.vec:
                    if not 0 <= b < dim:
                        raise InvariantViolation(f"label {lab.name}: basis index {b} outside O({lab.arity})")
                if any(operad.degree(lab.arity, b) != 0 for b in lab.vec):
                    raise InvariantViolation(f"label {lab.name} is not of degree 0")

    def even_vertices(self, max_stage: Optional[int] = None) -> List[Tuple[Path, EvenVertex]]:
        """All even vertices in (stage, path) order."""
        out = []
        layer = [((), self.root)]
        stage = 0
        while layer and (max_stage is None or stage <= max_stage):
            out.extend(layer)
            nxt = []
            for path, v in layer:
                for j, o in enumerate(v.children, start=1):
                    for t, w in enumerate(o.children, start=1):
                        nxt.append((path + ((j, t),), w))
            layer = nxt
            stage += 1
        return out

    def vertex(self, path: Path) -> EvenVertex:
        v = self.root
        for j, t in path:
            v = v.children[j - 1].children[t - 1]
        return v

    @property
    def depth(self) -> int:
        return max(len(p) for p, _ in self.even_vertices())

    def to_string(self) -> str:
        def even(v):
            return "{" + " ".join(odd(o) for o in v.children) + "}"

        def odd(o):
            return o.label + "(" + ", ".join(even(w) for w in o.children) + ")"

        return even(self.root)

    def __repr__(self):
        return f"OTree({self.name or self.to_string()})"


def path_name(prefix: str, path: Path) -> str:
    return prefix + "".join(f".{j}.{t}" for j, t in path)


def uniform_otree(valences: Sequence[int], labels: Sequence[Label], name: str = "") -> OTree:
    """Each even vertex at stage s < len(valences) gets valences[s] odd successors,
    labeled by cycling through ``labels``."""
    counter = [0]

    def build(stage):
        v = EvenVertex()
        if stage < len(valences):
            for _ in range(valences[stage]):
                lab = labels[counter[0] % len(labels)]
                counter[0] += 1
                v.children.append(OddVertex(lab.name, [build(stage + 1) for _ in range(lab.arity)]))
        return v

    return OTree(build(0), {lab.name: lab for lab in labels}, name)


def standard_labels(operad: Operad) -> List[Label]:
    """Binary operations used by the generated tree family (and one ternary one)."""
    one = operad.field.one
    labs = [Label("m", 2, {0: one})]
    if operad.dim(2) > 1:
        labs.append(Label("m_op", 2, {1: one}))
    return labs


def otree_family(operad: Operad) -> List[OTree]:
    """Small deterministic family: binary labels, valences 2-3, depth <= 3."""
    labs = standard_labels(operad)
    ternary = Label("t", 3, {0: operad.field.one})
    shapes = [
        ([2], labs[:1]),
        ([3], labs),
        ([2, 2], labs),
        ([2, 3], labs[:1]),
        ([3, 2], labs),
        ([2, 2, 2], labs[:1]),
    ]
    out = [uniform_otree(v, l, name=f"{operad.name}-" + "".join(map(str, v)) + f"-{len(l)}") for v, l in shapes]
    if operad.arity_max >= 3:
        out.append(uniform_otree([2, 2], [labs[0], ternary], name=f"{operad.name}-22-ternary"))
    return out


# ---------------------------------------------------------------------------
# telescope and cone


def _phi(tree: OTree, path: Path, v: EvenVertex, prefix: str = "x", subst=None) -> FormalElement:
    """phi(x_path) = sum_j theta(o_j; x_{path.j.1}, ..); ``subst(k, name)`` may rewrite the k-th argument."""
    terms = []
    for j, o in enumerate(v.children, start=1):
        lab = tree.labels[o.label]
        args = []
        for t in range(1, lab.arity + 1):
            nm = path_name(prefix, path + ((j, t),))
            args.append(subst(t - 1, nm) if subst else Gen(nm))
        terms.append((1, Op(lab.vec, args, lab.name)))
    return Lin(terms)


class TelescopePresentation(QuasiFreePresentation):
    def __init__(self, operad: Operad, tree: OTree, r_max: int):
        if r_max < 0:
            raise ValueError("r_max must be non-negative")
        tree.check(operad)
        self.tree = tree
        self.r_max = r_max
        verts = tree.even_vertices(r_max)
        for path, v in verts:
            if len(path) < r_max and not v.children:
                raise InvariantViolation(
                    f"vertex {path_name('x', path)} has no successors but lies below stage {r_max}"
                )
        self.x_paths = [p for p, _ in verts]
        self.y_paths = [p for p, _ in verts if len(p) < r_max]
        gens = [Generator(path_name("x", p), 0) for p in self.x_paths]
        gens += [Generator(path_name("y", p), 1) for p in self.y_paths]
        d = {}
        for p in self.y_paths:
            d[path_name("y", p)] = Gen(path_name("x", p)) - _phi(tree, p, tree.vertex(p))
        arity = max([lab.arity for lab in tree.labels.values()] + [1])
        if arity > operad.arity_max:
            raise TruncationError(f"labels of arity {arity} exceed the operad bound {operad.arity_max}")
        super().__init__(operad, gens, d, name=f"U[{tree.name or 'tree'}, r<={r_max}]", check_weight=arity)

    def stage(self, name: str) -> int:
        return name.count(".") // 2

    def phi(self, path: Path) -> FormalElement:
        return _phi(self.tree, path, self.tree.vertex(path))


def otree_telescope(operad: Operad, tree: OTree, r_max: int) -> TelescopePresentation:
    return TelescopePresentation(operad, tree, r_max)


def cone_presentation(u: TelescopePresentation) -> QuasiFreePresentation:
    """Adds xbar_I (degree 1, d = x_I) and ybar_I (degree 2, d = y_I - xbar_I - u_I),
    u_I = -sum_j theta(o_j; xbar_{I.j.1}, x_{I.j.2}, ..), so that d u_I = -phi(x_I)."""
    if not isinstance(u, TelescopePresentation):
        raise TypeError("cone_presentation expects a telescope presentation")
    tree = u.tree
    extra = [Generator(path_name("xbar", p), 1) for p in u.x_paths]
    extra += [Generator(path_name("ybar", p), 2) for p in u.y_paths]
    d = {path_name("xbar", p): Gen(path_name("x", p)) for p in u.x_paths}
    for p in u.y_paths:
        first_bar = _phi(tree, p, tree.vertex(p), subst=lambda k, nm: Gen("xbar" + nm[1:]) if k == 0 else Gen(nm))
        d[path_name("ybar", p)] = Gen(path_name("y", p)) - Gen(path_name("xbar", p)) + first_bar
    c = u.with_generators(extra, d, name=f"cone({u.name})")
    c.telescope = u
    return c


# ---------------------------------------------------------------------------
# cofiber along a map out of a telescope


class CofiberPresentation(QuasiFreePresentation):
    pass


def check_chain_map(a: QuasiFreePresentation, u: TelescopePresentation, f: Mapping[str, FormalElement], weight_max: int):
    alg = a.algebra(weight_max)
    images = {}
    for g in u.generators:
        e = f.get(g.name, ZERO).evaluate(alg)
        for key in e:
            if alg.key_degree(key) != g.degree:
                raise InvariantViolation(f"f({g.name}) has a term of degree {alg.key_degree(key)}, expected {g.degree}")
        images[g.name] = e
    for g in u.generators:
        if g.name not in u.differential:
            continue
        lhs = a.d(images[g.name], weight_max)
        # f(d g) evaluated by substituting images into the formal differential
        rhs = _substitute(u.differential[g.name], f).evaluate(alg)
        diff = dict(lhs)
        for k, c in rhs.items():
            diff[k] = diff.get(k, 0) - c
            if not diff[k]:
                del diff[k]
        if diff:
            raise InvariantViolation(f"f does not commute with d on {g.name}: defect {alg.format_element(diff)}")
    return images


def _substitute(e: FormalElement, f: Mapping[str, FormalElement]) -> FormalElement:
    if isinstance(e, Gen):
        return f.get(e.name, ZERO)
    if isinstance(e, Op):
        return Op(e.vec, [_substitute(x, f) for x in e.args], e.label)
    if isinstance(e, Lin):
        return Lin([(c, _substitute(t, f)) for c, t in e.terms])
    raise TypeError(f"cannot substitute into {e!r}")


def cofiber_presentation(
    a: QuasiFreePresentation, u: TelescopePresentation, f: Mapping[str, FormalElement], weight_max: int = 3
) -> CofiberPresentation:
    """A coproduct free(xbar_I, ybar_I) with d xbar_I = f(x_I) and
    d ybar_I = f(y_I) - xbar_I + sum_j theta(o_j; xbar_{I.j.1}, f(x_{I.j.2}), ..)."""
    if a.operad is not u.operad:
        raise InvariantViolation("the algebra and the telescope must live over the same operad object")
    check_chain_map(a, u, f, weight_max)
    names = {g.name for g in a.generators}
    extra = [Generator(path_name("xbar", p), 1) for p in u.x_paths]
    extra += [Generator(path_name("ybar", p), 2) for p in u.y_paths]
    clash = names & {g.name for g in extra}
    if clash:
        raise InvariantViolation(f"generator names {sorted(clash)} already used in the algebra")
    d = dict(a.differential)
    for p in u.x_paths:
        d[path_name("xbar", p)] = f.get(path_name("x", p), ZERO)
    tree = u.tree

    def sub(k, nm):
        return Gen("xbar" + nm[1:]) if k == 0 else f.get(nm, ZERO)

    for p in u.y_paths:
        rest = _phi(tree, p, tree.vertex(p), subst=sub)
        d[path_name("ybar", p)] = f.get(path_name("y", p), ZERO) - Gen(path_name("xbar", p)) + rest
    c = CofiberPresentation(a.operad, list(a.generators) + extra, d, name=f"cofiber({a.name})")
    c.source = a
    c.telescope = u
    c.killed = [f.get(path_name("x", p), ZERO) for p in u.x_paths]
    return c


@dataclass
class CofiberLaw:
    weight_max: int
    pi0_algebra: int
    pi0_cofiber: int
    pi0_quotient: int

    @property
    def holds(self) -> bool:
        return self.pi0_cofiber == self.pi0_quotient

    def summary(self) -> str:
        return (
            f"dim pi0(A) = {self.pi0_algebra}, dim pi0(C) = {self.pi0_cofiber}, "
            f"dim pi0(A)/<a> = {self.pi0_quotient} (weights <= {self.weight_max})"
        )


def cofiber_pi0_law(c: CofiberPresentation, weight_max: int) -> CofiberLaw:
    """pi_0 of the cofiber against pi_0(A) modulo the ideal generated by the classes f(x_I)."""
    return CofiberLaw(
        weight_max,
        pi0(c.source, weight_max).dim,
        pi0(c, weight_max).dim,
        pi0_modulo(c.source, weight_max, c.killed),
    )


# ---------------------------------------------------------------------------
# checks on telescopes and cones


@dataclass
class TelescopeReport:
    r_max: int
    hq_low_stages: int  # homology of the Quillen complex restricted to stages < r_max
    hq: Dict[int, int]
    top_stage: int  # number of stage-r_max vertices
    transition_rank: Optional[int]  # rank of H^Q_0(U_{r-1}) -> H^Q_0(U_r)

    @property
    def ok(self) -> bool:
        return (
            self.hq_low_stages == 0
            and all(v == 0 for k, v in self.hq.items() if k >= 1)
            and self.hq.get(0, 0) == self.top_stage
            and (self.transition_rank in (None, 0))
        )


def telescope_report(operad: Operad, tree: OTree, r_max: int) -> TelescopeReport:
    """Quillen homology of the truncated telescope, split by stage, and the transition map."""
    u = otree_telescope(operad, tree, r_max)
    c = u.quillen_complex()
    h = homology(c)
    deg0 = [g.name for g in u.generators if g.degree == 0]
    deg1 = [g.name for g in u.generators if g.degree == 1]
    low0 = [j for j, nm in enumerate(deg0) if u.stage(nm) < r_max]
    low1 = [j for j, nm in enumerate(deg1) if u.stage(nm) < r_max]
    pos0 = {j: k for k, j in enumerate(low0)}
    d1 = c.differential(1) if deg1 else None
    cols = []
    for j in low1:
        col = d1.column(j)
        if any(i not in pos0 for i in col):
            raise InvariantViolation("low stages do not span a subcomplex of the Quillen complex")
        cols.append({pos0[i]: v for i, v in col.items()})
    low = ChainComplex(
        operad.field, {0: len(low0), 1: len(low1)}, {1: SparseMatrix._trusted(operad.field, len(low0), len(low1), cols)}
    )
    low_hq = sum(homology(low).dims.values())
    top = sum(1 for p in u.x_paths if len(p) == r_max)
    trans = None
    if r_max >= 1:
        # classes of the stage r_max-1 vertices (which span H^Q_0 of the previous
        # telescope) inside H^Q_0 of this one
        idx0 = {nm: j for j, nm in enumerate(deg0)}
        prev = [{idx0[path_name("x", p)]: operad.field.one} for p in u.x_paths if len(p) == r_max - 1]
        bnd = list(d1.columns) if d1 is not None else []
        both = SparseMatrix._trusted(operad.field, len(deg0), len(bnd) + len(prev), bnd + prev)
        trans = rank(both) - (rank(d1) if d1 is not None else 0)
    return TelescopeReport(r_max, low_hq, dict(h.dims), top, trans)


@dataclass
class ConeReport:
    pi0: List[int]
    hq: Dict[int, int]

    @property
    def ok(self) -> bool:
        return all(v == 0 for v in self.pi0) and all(v == 0 for v in self.hq.values())


def cone_report(u: TelescopePresentation, weight_max: int = 2) -> ConeReport:
    c = cone_presentation(u)
    return ConeReport(pi0(c, weight_max).graded, dict(quillen_homology(c).dims))


# ---------------------------------------------------------------------------
# degree 0


@dataclass
class PlusReport:
    source: StructureConstantAlgebra
    radical: Ideal
    result: StructureConstantAlgebra
    q_source: int
    q_result: int

    def summary(self) -> str:
        return (
            f"dim A = {self.source.dim}, dim P(A) = {self.radical.dim}, dim A/P(A) = {self.result.dim}, "
            f"dim Q(A) = {self.q_source}, dim Q(A/P(A)) = {self.q_result}"
        )


def plus_pi0(a: StructureConstantAlgebra) -> StructureConstantAlgebra:
    """A / P(A): the degree-0 shadow of the plus construction."""
    b, _ = quotient_map(a, perfect_radical(a))
    b.name = f"{a.name}+" if a.name else ""
    return b


def plus_report(a: StructureConstantAlgebra) -> PlusReport:
    rad = perfect_radical(a)
    b = plus_pi0(a)
    return PlusReport(a, rad, b, indecomposables(a).dim, indecomposables(b).dim)


__all__ = [
    "Label",
    "EvenVertex",
    "OddVertex",
    "OTree",
    "path_name",
    "uniform_otree",
    "standard_labels",
    "otree_family",
    "TelescopePresentation",
    "otree_telescope",
    "cone_presentation",
    "CofiberPresentation",
    "cofiber_presentation",
    "check_chain_map",
    "CofiberLaw",
    "cofiber_pi0_law",
    "TelescopeReport",
    "telescope_report",
    "ConeReport",
    "cone_report",
    "PlusReport",
    "plus_pi0",
    "plus_report",
]
