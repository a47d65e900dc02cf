"""Free algebras S(O, V) on graded generators, quasi-free presentations, Quillen homology, pi_0,
the Hurewicz map and the admissibility probe.

A basis element of S(O, V) in weight n is a pair ``(s, c)``: ``s`` a sorted tuple
of generator indices and ``c`` an index into the coinvariant quotient

    O(n) / span{ act(o, t) - eps(t) o : t permutes equal entries of s }

where eps = -1 for swapping two equal odd generators.  A general term
``o (x) (x_{g_0}, .., x_{g_{n-1}})`` is brought to this form by a stable sort:
if g_k = s_{sigma(k)} then o (x) g = kappa * act(o, sigma) (x) s, kappa the
Koszul sign of the odd entries.

Weight truncation keeps weights <= weight_max and is a quotient complex, because
the differential never lowers weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .complexes import ChainComplex, ComplexMap, HomologyReport, homology, induced_map
from .errors import BudgetExceeded, DimensionError, InvariantViolation, TruncationError
from .linalg import SparseMatrix, decompose, quotient_basis, vec_axpy
from .operads import Operad, perm_inverse

Key = Tuple[Tuple[int, ...], int]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    weight: int = 1


class FreeAlgebra:
    """The weight-truncated free O-algebra on ``generators``."""

    def __init__(self, operad: Operad, generators: Sequence[Generator], weight_max: int):
        self.operad = operad
        self.field = operad.field
        self.generators = list(generators)
        self.weight_max = weight_max
        self.index = {g.name: k for k, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise InvariantViolation("generator names must be unique")
        for g in self.generators:
            if g.weight < 1:
                raise InvariantViolation(f"generator {g.name} needs a positive weight")
        self.odd = [g.degree % 2 == 1 for g in self.generators]
        self._coinv: Dict[tuple, object] = {}

    # -- bookkeeping
    def key_weight(self, key: Key) -> int:
        return sum(self.generators[i].weight for i in key[0])

    def key_degree(self, key: Key) -> int:
        return sum(self.generators[i].degree for i in key[0])

    def _pattern(self, s: Tuple[int, ...]):
        rel = tuple((j, -1 if self.odd[s[j]] else 1) for j in range(len(s) - 1) if s[j] == s[j + 1])
        return (len(s), rel)

    def coinvariants(self, s: Tuple[int, ...]):
        pat = self._pattern(s)
        q = self._coinv.get(pat)
        if q is None:
            n, rel = pat
            op = self.operad
            dim = op.dim(n)
            vecs = []
            one = self.field.one
            for j, eps in rel:
                t = tuple(j + 1 if k == j else j if k == j + 1 else k for k in range(n))
                for b in range(dim):
                    v = op.act(n, {b: one}, t)
                    vec_axpy(v, -eps * one, {b: one})
                    if v:
                        vecs.append(v)
            q = quotient_basis(dim, vecs, field=self.field)
            self._coinv[pat] = q
        return q

    def coinvariant_dim(self, s) -> int:
        return self.coinvariants(tuple(s)).dim

    def lift(self, key: Key) -> Tuple[int, dict, Tuple[int, ...]]:
        s, c = key
        q = self.coinvariants(s)
        return len(s), {q.complement[c]: self.field.one}, s

    # -- canonical forms
    def canonical(self, n: int, o: dict, seq: Sequence[int], coef=1) -> dict:
        """The element o (x) (x_seq) of S(O, V) as a combination of basis keys."""
        if not o:
            return {}
        w = sum(self.generators[i].weight for i in seq)
        if w > self.weight_max:
            return {}
        order = sorted(range(n), key=lambda k: seq[k])
        s = tuple(seq[k] for k in order)
        sigma = perm_inverse(tuple(order))
        # Koszul sign: odd entries whose relative order changes
        odd_pos = [k for k in range(n) if self.odd[seq[k]]]
        inv = 0
        for a in range(len(odd_pos)):
            for b in range(a + 1, len(odd_pos)):
                if sigma[odd_pos[a]] > sigma[odd_pos[b]]:
                    inv += 1
        kappa = -1 if inv % 2 else 1
        o2 = self.operad.act(n, o, sigma) if sigma != tuple(range(n)) else o
        q = self.coinvariants(s)
        proj = q.project(o2)
        c = coef * kappa
        return {(s, j): c * v for j, v in proj.items()}

    def generator(self, name: str) -> dict:
        i = self.index[name]
        if self.generators[i].weight > self.weight_max:
            return {}
        return {((i,), 0): self.field.one}

    def theta(self, k: int, o: dict, args: Sequence[Mapping]) -> dict:
        """theta(o; args) for o in O(k) and elements args of this algebra."""
        if len(args) != k:
            raise DimensionError(f"arity {k} applied to {len(args)} arguments")
        out: dict = {}
        items = [list(a.items()) for a in args]
        for combo in itertools.product(*items):
            coef = self.field.one
            w = 0
            for key, c in combo:
                coef = coef * c
                w += self.key_weight(key)
            if w > self.weight_max:
                continue
            parts = []
            seq: List[int] = []
            for key, _ in combo:
                n, ov, s = self.lift(key)
                parts.append((n, ov))
                seq.extend(s)
            total, g = self.operad.gamma(k, o, parts)
            for key, c in self.canonical(total, g, seq, coef).items():
                vec_axpy(out, c, {key: 1})
        return out

    def insert(self, key: Key, i: int, y: Mapping) -> dict:
        """Replace the i-th generator of the basis element ``key`` by the element y."""
        n, o, s = self.lift(key)
        out: dict = {}
        base_w = self.key_weight(key) - self.generators[s[i]].weight
        for ykey, c in y.items():
            if base_w + self.key_weight(ykey) > self.weight_max:
                continue
            m, oy, sy = self.lift(ykey)
            comp = self.operad.compose(n, o, i, m, oy)
            seq = s[:i] + sy + s[i + 1:]
            for k2, v in self.canonical(n + m - 1, comp, seq, c).items():
                vec_axpy(out, v, {k2: 1})
        return out

    def derivation(self, dgen: Mapping[int, dict], key: Key) -> dict:
        """Extend d from generators: d(o; x_0..x_{n-1}) = sum_i (-1)^{|x_0|+..+|x_{i-1}|} o(.., d x_i, ..)."""
        s = key[0]
        out: dict = {}
        sign = 1
        for i, g in enumerate(s):
            dg = dgen.get(g)
            if dg:
                vec_axpy(out, sign, self.insert(key, i, dg))
            if self.odd[g]:
                sign = -sign
        return out

    # -- enumeration
    def multisets(self, weight: int, degree: Optional[int] = None) -> List[Tuple[int, ...]]:
        """Sorted generator tuples of exactly this weight (and degree, if given)."""
        gens = self.generators
        out = []

        def rec(start, w_left, d_left, acc):
            if w_left == 0:
                if degree is None or d_left == 0:
                    out.append(tuple(acc))
                return
            for i in range(start, len(gens)):
                g = gens[i]
                if g.weight > w_left:
                    continue
                if degree is not None and g.degree > d_left:
                    continue
                acc.append(i)
                rec(i, w_left - g.weight, None if degree is None else d_left - g.degree, acc)
                acc.pop()

        rec(0, weight, degree, [])
        return out

    def basis(self, degree: int, weight: Optional[int] = None, budget: Optional[int] = None) -> List[Key]:
        weights = [weight] if weight is not None else range(1, self.weight_max + 1)
        keys = []
        for w in weights:
            for s in self.multisets(w, degree):
                if len(s) > self.operad.arity_max:
                    raise TruncationError(
                        f"weight {w} needs arity {len(s)} beyond the operad bound {self.operad.arity_max}"
                    )
                keys.extend((s, c) for c in range(self.coinvariant_dim(s)))
                if budget is not None and len(keys) > budget:
                    raise BudgetExceeded(f"degree {degree} basis exceeds the budget of {budget}")
        return keys

    def key_label(self, key: Key) -> str:
        s, c = key
        names = ",".join(self.generators[i].name for i in s)
        if len(s) == 1:
            return names
        return f"o{c}({names})"

    def format_element(self, v: Mapping) -> str:
        if not v:
            return "0"
        return " + ".join(f"{c}*{self.key_label(k)}" for k, c in sorted(v.items()))


# ---------------------------------------------------------------------------
# formal elements


class FormalElement:
    """Expression for an element of a free algebra: generators, operad operations and linear combinations."""

    def evaluate(self, alg: FreeAlgebra) -> dict:
        raise NotImplementedError

    def __add__(self, other):
        return Lin([(1, self), (1, other)])

    def __sub__(self, other):
        return Lin([(1, self), (-1, other)])

    def __neg__(self):
        return Lin([(-1, self)])

    def __rmul__(self, c):
        return Lin([(c, self)])

    def generators(self) -> set:
        raise NotImplementedError


class Gen(FormalElement):
    def __init__(self, name: str):
        self.name = name

    def evaluate(self, alg):
        if self.name not in alg.index:
            raise InvariantViolation(f"unknown generator {self.name!r}")
        return alg.generator(self.name)

    def generators(self):
        return {self.name}

    def __repr__(self):
        return self.name


class Op(FormalElement):
    """theta(vec; args) with vec in O(len(args))."""

    def __init__(self, vec: Mapping[int, object], args: Sequence[FormalElement], label: str = "op"):
        self.vec = dict(vec)
        self.args = list(args)
        self.label = label

    def evaluate(self, alg):
        k = len(self.args)
        vec = {b: (c if alg.field.contains(c) else alg.field(c)) for b, c in self.vec.items()}
        return alg.theta(k, vec, [a.evaluate(alg) for a in self.args])

    def generators(self):
        out = set()
        for a in self.args:
            out |= a.generators()
        return out

    def __repr__(self):
        return f"{self.label}(" + ", ".join(map(repr, self.args)) + ")"


class Lin(FormalElement):
    def __init__(self, terms: Sequence[Tuple[object, FormalElement]]):
        self.terms = list(terms)

    def evaluate(self, alg):
        out: dict = {}
        for c, t in self.terms:
            c = c if alg.field.contains(c) else alg.field(c)
            vec_axpy(out, c, t.evaluate(alg))
        return out

    def generators(self):
        out = set()
        for _, t in self.terms:
            out |= t.generators()
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({t!r})" for c, t in self.terms)


ZERO = Lin([])


def binary(left: FormalElement, right: FormalElement, label="op2") -> Op:
    """The arity-2 operation with basis index 0 (x0 x1, [x0, x1] or the commutative product)."""
    return Op({0: 1}, [left, right], label)


# ---------------------------------------------------------------------------
# quasi-free presentations


class QuasiFreePresentation:
    """Free O-algebra on graded generators with a differential given on generators."""

    def __init__(
        self,
        operad: Operad,
        generators: Sequence[Union[Generator, Tuple]],
        differential: Mapping[str, FormalElement] = None,
        name: str = "",
        check_weight: int = 3,
    ):
        gens = [g if isinstance(g, Generator) else Generator(*g) for g in generators]
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise InvariantViolation("generator names must be unique")
        for g in gens:
            if g.degree < 0:
                raise InvariantViolation(f"generator {g.name} has negative degree {g.degree}")
        self.operad = operad
        self.field = operad.field
        self.generators = gens
        self.differential = dict(differential or {})
        for k in self.differential:
            if k not in names:
                raise InvariantViolation(f"differential given for unknown generator {k!r}")
        self.name = name
        self._algebras: Dict[int, FreeAlgebra] = {}
        self._dgen: Dict[int, Dict[int, dict]] = {}
        self.check(check_weight)

    def generator(self, name) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def algebra(self, weight_max: int) -> FreeAlgebra:
        if weight_max not in self._algebras:
            self._algebras[weight_max] = FreeAlgebra(self.operad, self.generators, weight_max)
        return self._algebras[weight_max]

    def dgen(self, weight_max: int) -> Dict[int, dict]:
        if weight_max not in self._dgen:
            alg = self.algebra(weight_max)
            self._dgen[weight_max] = {
                alg.index[name]: expr.evaluate(alg) for name, expr in self.differential.items()
            }
        return self._dgen[weight_max]

    def d(self, element: Mapping, weight_max: int) -> dict:
        alg = self.algebra(weight_max)
        dg = self.dgen(weight_max)
        out: dict = {}
        for key, c in element.items():
            vec_axpy(out, c, alg.derivation(dg, key))
        return out

    def check(self, weight_max: int = 3):
        """Degrees drop by one and d^2 = 0 on every generator, within the weight truncation."""
        if not self.generators:
            return
        wmax = max(weight_max, max(g.weight for g in self.generators))
        alg = self.algebra(wmax)
        dg = self.dgen(wmax)
        for i, g in enumerate(self.generators):
            v = dg.get(i, {})
            if g.degree == 0 and v:
                raise InvariantViolation(f"generator {g.name} of degree 0 has a nonzero differential")
            for key in v:
                if alg.key_degree(key) != g.degree - 1:
                    raise InvariantViolation(
                        f"d({g.name}) has a term {alg.key_label(key)} of degree {alg.key_degree(key)}, expected {g.degree - 1}"
                    )
            dd = self.d(v, wmax)
            if dd:
                raise InvariantViolation(f"d^2 != 0 on generator {g.name}: {alg.format_element(dd)}")

    def linear_part(self, name: str) -> Dict[int, object]:
        """Coefficients of generators in d(name): the part surviving in the indecomposables."""
        wmax = max(g.weight for g in self.generators)
        dg = self.dgen(max(wmax, 1))
        i = self.algebra(max(wmax, 1)).index[name]
        return {key[0][0]: c for key, c in dg.get(i, {}).items() if len(key[0]) == 1}

    def is_weight_homogeneous(self, weight_max: int = 3) -> bool:
        alg = self.algebra(weight_max)
        dg = self.dgen(weight_max)
        for i, v in dg.items():
            w = self.generators[i].weight
            if any(alg.key_weight(k) != w for k in v):
                return False
        return True

    def truncated_complex(
        self, weight_max: int, max_degree: int, weight: Optional[int] = None, budget: Optional[int] = None
    ) -> ChainComplex:
        """Degrees 0..max_degree+1 of S_{<= weight_max} (or the single weight ``weight``)."""
        alg = self.algebra(weight_max)
        dg = self.dgen(weight_max)
        keys = {k: alg.basis(k, weight, budget) for k in range(0, max_degree + 2)}
        index = {k: {key: j for j, key in enumerate(keys[k])} for k in keys}
        ds = {}
        for k in range(1, max_degree + 2):
            cols = []
            for key in keys[k]:
                v = alg.derivation(dg, key)
                col = {}
                for k2, c in v.items():
                    j = index[k - 1].get(k2)
                    if j is None:
                        raise InvariantViolation("differential leaves the selected weight; presentation is not homogeneous")
                    col[j] = c
                cols.append(col)
            ds[k] = SparseMatrix._trusted(self.field, len(keys[k - 1]), len(keys[k]), cols)
        dims = {k: len(keys[k]) for k in keys}
        labels = {k: [alg.key_label(x) for x in keys[k]] for k in keys}
        c = ChainComplex(self.field, dims, ds, labels, top_truncated=True, check=True)
        c.basis_keys = keys
        return c

    def quillen_complex(self) -> ChainComplex:
        """One basis element per generator, differential = linear part of d."""
        if not self.generators:
            return ChainComplex(self.field, {0: 0})
        top = max(g.degree for g in self.generators)
        by_deg = {k: [g for g in self.generators if g.degree == k] for k in range(0, top + 1)}
        pos = {g.name: (g.degree, j) for k in by_deg for j, g in enumerate(by_deg[k])}
        ds = {}
        for k in range(1, top + 1):
            cols = []
            for g in by_deg[k]:
                lin = self.linear_part(g.name)
                cols.append({pos[self.generators[i].name][1]: c for i, c in lin.items()})
            ds[k] = SparseMatrix._trusted(self.field, len(by_deg[k - 1]), len(by_deg[k]), cols)
        labels = {k: [g.name for g in by_deg[k]] for k in by_deg}
        return ChainComplex(self.field, {k: len(v) for k, v in by_deg.items()}, ds, labels)

    def with_generators(self, extra: Sequence[Generator], extra_d: Mapping[str, FormalElement], name="") -> "QuasiFreePresentation":
        d = dict(self.differential)
        d.update(extra_d)
        return QuasiFreePresentation(self.operad, list(self.generators) + list(extra), d, name or self.name)

    def describe(self) -> str:
        lines = [f"presentation {self.name} over {self.operad.name}"]
        for g in self.generators:
            rhs = self.differential.get(g.name)
            lines.append(f"  {g.name} (degree {g.degree}): d = {rhs!r}" if rhs is not None else f"  {g.name} (degree {g.degree})")
        return "\n".join(lines)


def quillen_homology(p: QuasiFreePresentation, degrees: Iterable[int] = None) -> HomologyReport:
    c = p.quillen_complex()
    if degrees is None:
        return homology(c)
    degrees = list(degrees)
    dims = {}
    hr = homology(c, [k for k in degrees if c.lo <= k <= c.hi])
    for k in degrees:
        dims[k] = hr.dims.get(k, 0)
    return HomologyReport(dims, name=f"HQ({p.name})")


# ---------------------------------------------------------------------------
# pi_0


@dataclass
class Pi0Report:
    weight_max: int
    cumulative: List[int]  # dim pi_0 of S_{<= w}, w = 1..weight_max
    graded: List[int]
    keys: List[Key] = field(default_factory=list)
    boundaries: object = None

    @property
    def dim(self) -> int:
        return self.cumulative[-1] if self.cumulative else 0

    def to_tsv(self) -> str:
        lines = ["weight\tgraded_dim\tcumulative_dim"]
        for w, (g, c) in enumerate(zip(self.graded, self.cumulative), start=1):
            lines.append(f"{w}\t{g}\t{c}")
        return "\n".join(lines) + "\n"


def _pi0_space(p: QuasiFreePresentation, w: int, extra_relations=None):
    alg = p.algebra(w)
    dg = p.dgen(w)
    keys0 = alg.basis(0)
    idx = {k: j for j, k in enumerate(keys0)}
    rels = []
    for key in alg.basis(1):
        v = alg.derivation(dg, key)
        if v:
            rels.append({idx[k]: c for k, c in v.items()})
    if extra_relations:
        for v in extra_relations(alg):
            v = {idx[k]: c for k, c in v.items() if k in idx}
            if v:
                rels.append(v)
    return keys0, rels


def pi0(p: QuasiFreePresentation, weight_max: int) -> Pi0Report:
    """Degree-0 part modulo d(degree 1), weight by weight up to ``weight_max``."""
    cum = []
    last = None
    for w in range(1, weight_max + 1):
        keys0, rels = _pi0_space(p, w)
        if rels:
            r = decompose(SparseMatrix._trusted(p.field, len(keys0), len(rels), rels)).rank
        else:
            r = 0
        cum.append(len(keys0) - r)
        last = (keys0, rels)
    graded = [c - (cum[k - 1] if k else 0) for k, c in enumerate(cum)]
    rep = Pi0Report(weight_max, cum, graded)
    if last is not None:
        rep.keys = last[0]
        rep.boundaries = last[1]
    return rep


def pi0_modulo(p: QuasiFreePresentation, weight_max: int, elements: Sequence[FormalElement]) -> int:
    """dim of pi_0(p) / ideal generated by ``elements`` (degree 0), truncated at weight_max."""

    def ideal(alg: FreeAlgebra):
        deg0 = [i for i, g in enumerate(alg.generators) if g.degree == 0]
        out = []
        for e in elements:
            a = e.evaluate(alg)
            if not a:
                continue
            out.append(a)
            for k in range(2, alg.weight_max + 1):
                if k > alg.operad.arity_max:
                    break
                for zs in itertools.combinations_with_replacement(deg0, k - 1):
                    args = [a] + [{((z,), 0): alg.field.one} for z in zs]
                    for b in range(alg.operad.dim(k)):
                        v = alg.theta(k, {b: alg.field.one}, args)
                        if v:
                            out.append(v)
        return out

    keys0, rels = _pi0_space(p, weight_max, ideal)
    r = decompose(SparseMatrix._trusted(p.field, len(keys0), len(rels), rels)).rank if rels else 0
    return len(keys0) - r


def decomposable_classes(p: QuasiFreePresentation, weight_max: int) -> int:
    """dim of the indecomposables Q(pi_0) computed inside the truncated pi_0."""
    keys0, rels = _pi0_space(p, weight_max)
    idx = {k: j for j, k in enumerate(keys0)}
    dec = [{idx[k]: p.field.one} for k in keys0 if len(k[0]) >= 2]
    allv = rels + dec
    r = decompose(SparseMatrix._trusted(p.field, len(keys0), len(allv), allv)).rank if allv else 0
    return len(keys0) - r


# ---------------------------------------------------------------------------
# Hurewicz


@dataclass
class HurewiczReport:
    pi: HomologyReport
    hq: HomologyReport
    maps: Dict[int, SparseMatrix]
    connectivity: int
    weight_max: int
    complete_through: int

    def rank(self, k) -> int:
        return decompose(self.maps[k]).rank if k in self.maps else 0

    def injective(self, k) -> bool:
        return self.rank(k) == self.pi.dims[k]

    def surjective(self, k) -> bool:
        return self.rank(k) == self.hq.dims[k]

    def bijective(self, k) -> bool:
        return self.injective(k) and self.surjective(k)

    def range_verdict(self) -> Dict[str, object]:
        """Compare with: pi_k = 0 for k <= n implies iso for k <= 2n+1 and epi at 2n+2."""
        n = self.connectivity
        iso_up_to = 2 * n + 1
        epi_at = 2 * n + 2
        degs = sorted(self.maps)
        iso_ok = all(self.bijective(k) for k in degs if k <= iso_up_to)
        epi_ok = self.surjective(epi_at) if epi_at in self.maps else None
        first_non_inj = next((k for k in degs if not self.injective(k)), None)
        return {
            "connectivity": n,
            "iso_through": iso_up_to,
            "iso_ok": iso_ok,
            "epi_degree": epi_at,
            "epi_ok": epi_ok,
            "first_non_injective": first_non_inj,
        }

    def to_tsv(self) -> str:
        lines = ["degree\tpi\tHQ\trank\tinjective\tsurjective"]
        for k in sorted(self.maps):
            lines.append(
                f"{k}\t{self.pi.dims[k]}\t{self.hq.dims[k]}\t{self.rank(k)}\t{int(self.injective(k))}\t{int(self.surjective(k))}"
            )
        return "\n".join(lines) + "\n"


def complete_weight(p: QuasiFreePresentation, max_degree: int) -> Optional[int]:
    """Smallest weight bound making degrees <= max_degree+1 exact, or None with degree-0 generators."""
    ratios = [Fraction(g.degree, g.weight) for g in p.generators]
    if not ratios:
        return 1
    r = min(ratios)
    if r <= 0:
        return None
    w = 1
    while r * (w + 1) <= max_degree + 1:
        w += 1
    return w


def hurewicz(p: QuasiFreePresentation, max_degree: int, weight_max: Optional[int] = None) -> HurewiczReport:
    """pi_* of the truncated algebra, H^Q_*, and the map induced by projecting to generators."""
    for g in p.generators:
        if g.degree < 0:
            raise InvariantViolation("the Hurewicz map needs generators in non-negative degrees")
    auto = complete_weight(p, max_degree)
    if weight_max is None:
        if auto is None:
            raise TruncationError("degree-0 generators: give weight_max explicitly")
        weight_max = auto
    c = p.truncated_complex(weight_max, max_degree)
    q = p.quillen_complex()
    # pad the Quillen complex to the same degree range
    dims = {k: q.dim(k) for k in range(0, max_degree + 2)}
    ds = {k: q.differential(k) for k in range(1, max_degree + 2) if k in q.d}
    for k in range(1, max_degree + 2):
        if k not in ds:
            ds[k] = SparseMatrix.zero(p.field, dims[k - 1], dims[k])
    qpad = ChainComplex(p.field, dims, ds, top_truncated=True)
    # projection onto generators
    gpos = {}
    for k in range(0, max_degree + 2):
        j = 0
        for i, g in enumerate(p.generators):
            if g.degree == k:
                gpos[i] = j
                j += 1
    maps = {}
    for k in range(0, max_degree + 2):
        cols = []
        for key in c.basis_keys[k]:
            s = key[0]
            cols.append({gpos[s[0]]: p.field.one} if len(s) == 1 else {})
        maps[k] = SparseMatrix._trusted(p.field, qpad.dim(k), c.dim(k), cols)
    f = ComplexMap(c, qpad, maps, check=True)
    degs = list(range(0, max_degree + 1))
    pi = homology(c, degs)
    hq = homology(qpad, degs)
    ind = induced_map(f, degs)
    conn = -1
    for k in degs:
        if pi.dims[k] == 0:
            conn = k
        else:
            break
    complete = max_degree if auto is not None and weight_max >= auto else -1
    return HurewiczReport(pi, hq, ind, conn, weight_max, complete)


# ---------------------------------------------------------------------------
# admissibility probe


@dataclass
class ProbeReport:
    verdict: str
    first_difference: Optional[Tuple[Optional[int], int]]
    base: Dict[Tuple[Optional[int], int], int]
    extended: Dict[Tuple[Optional[int], int], int]
    mode: str

    @property
    def obstruction(self) -> bool:
        return self.first_difference is not None

    def to_tsv(self) -> str:
        lines = ["weight\tdegree\tbase\twith_W"]
        for key in sorted(self.extended, key=lambda t: (t[0] or 0, t[1])):
            w, k = key
            lines.append(f"{'all' if w is None else w}\t{k}\t{self.base.get(key, 0)}\t{self.extended[key]}")
        return "\n".join(lines) + f"\n# verdict: {self.verdict}\n"


def admissibility_probe(
    operad: Operad,
    a: Optional[QuasiFreePresentation],
    d: int,
    weight_max: int,
    degree_max: int,
) -> ProbeReport:
    """Compare H_* of A and of A coproduct S(O, W_d), W_d = (w_x in degree d, w_y in degree d+1, d w_y = w_x)."""
    if weight_max > operad.arity_max:
        raise TruncationError(f"weight {weight_max} exceeds the operad's arity bound {operad.arity_max}")
    if a is None:
        a = QuasiFreePresentation(operad, [], {}, name="0")
    names = {g.name for g in a.generators}
    wx, wy = "w_x", "w_y"
    while wx in names or wy in names:
        wx, wy = wx + "'", wy + "'"
    b = a.with_generators([Generator(wx, d), Generator(wy, d + 1)], {wy: Gen(wx)}, name=f"{a.name}+W{d}")
    homogeneous = a.is_weight_homogeneous(weight_max) if a.generators else True

    def table(p):
        out = {}
        if not p.generators:
            return {(w if homogeneous else None, k): 0 for w in range(1, weight_max + 1) for k in range(degree_max + 1)}
        weights = range(1, weight_max + 1) if homogeneous else [None]
        for w in weights:
            c = p.truncated_complex(weight_max, degree_max, weight=w)
            h = homology(c, range(0, degree_max + 1))
            for k, v in h.dims.items():
                out[(w, k)] = v
        return out

    base = table(a)
    ext = table(b)
    first = None
    for key in sorted(ext, key=lambda t: (t[1], t[0] or 0)):
        if ext[key] != base.get(key, 0):
            first = key
            break
    verdict = "no obstruction within bounds" if first is None else "obstruction"
    return ProbeReport(verdict, first, base, ext, "per-weight" if homogeneous else "filtered")


__all__ = [
    "Generator",
    "FreeAlgebra",
    "FormalElement",
    "Gen",
    "Op",
    "Lin",
    "ZERO",
    "binary",
    "QuasiFreePresentation",
    "quillen_homology",
    "pi0",
    "pi0_modulo",
    "decomposable_classes",
    "Pi0Report",
    "hurewicz",
    "HurewiczReport",
    "complete_weight",
    "admissibility_probe",
    "ProbeReport",
]
