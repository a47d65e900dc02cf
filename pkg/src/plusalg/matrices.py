"""Matrix algebras gl_n(R), sl_n(R), the trace to R/[R,R], and Steinberg relations in uce(sl_n(R)).

Basis of gl_n(R): e_ij (x) r_k at index (i*n + j)*dim(R) + k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from .algebra import (
    AlgebraMorphism,
    CentralExtension,
    StructureConstantAlgebra,
    kernel_of,
    subalgebra,
)
from .errors import DimensionError, InvariantViolation
from .linalg import QQ, SparseMatrix, SubspaceBasis, decompose, quotient_basis, vec_axpy


@dataclass(frozen=True)
class MatrixAlgebraSpec:
    base: StructureConstantAlgebra
    n: int
    kind: str = "lie"

    def __post_init__(self):
        if self.base.kind != "associative":
            raise InvariantViolation("matrix algebras need an associative base algebra")
        if self.n < 1:
            raise DimensionError("matrix size must be positive")
        if self.kind not in ("lie", "leibniz"):
            raise ValueError(f"matrix algebra kind must be lie or leibniz, not {self.kind!r}")

    def index(self, i: int, j: int, k: int) -> int:
        return (i * self.n + j) * self.base.dim + k

    def unpack(self, idx: int) -> Tuple[int, int, int]:
        ij, k = divmod(idx, self.base.dim)
        i, j = divmod(ij, self.n)
        return i, j, k


def _label(spec, i, j, k):
    return f"E{i + 1}{j + 1}.{spec.base.labels[k]}"


def gl(spec: MatrixAlgebraSpec) -> StructureConstantAlgebra:
    """[a e_ij, b e_kl] = d_jk ab e_il - d_li ba e_kj."""
    r = spec.base
    n, d = spec.n, r.dim
    prods: Dict[Tuple[int, int], dict] = {}
    for (a, b), v in r.products.items():
        for i, j, l in product(range(n), repeat=3):
            # e_ij a * e_jl b = e_il ab
            x = spec.index(i, j, a)
            y = spec.index(j, l, b)
            w = prods.setdefault((x, y), {})
            vec_axpy(w, r.field.one, {spec.index(i, l, m): c for m, c in v.items()})
            w2 = prods.setdefault((y, x), {})
            vec_axpy(w2, -r.field.one, {spec.index(i, l, m): c for m, c in v.items()})
    prods = {k: v for k, v in prods.items() if v}
    labels = [_label(spec, *spec.unpack(t)) for t in range(n * n * d)]
    name = f"gl{n}({r.name})" if r.name else f"gl{n}"
    return StructureConstantAlgebra(spec.kind, r.field, n * n * d, prods, labels, name, check=True)


def commutator_subspace(r: StructureConstantAlgebra) -> SubspaceBasis:
    """[R,R] = span{ab - ba}."""
    vecs = []
    for (a, b), v in r.products.items():
        w = dict(v)
        vec_axpy(w, -r.field.one, r.mul_basis(b, a))
        if w:
            vecs.append(w)
    if not vecs:
        return SubspaceBasis._trusted(r.field, r.dim, [])
    return decompose(SparseMatrix._trusted(r.field, r.dim, len(vecs), vecs)).image


def abelianization_target(spec: MatrixAlgebraSpec):
    r = spec.base
    q = quotient_basis(r.dim, commutator_subspace(r))
    labels = [f"[{r.labels[c]}]" for c in q.complement]
    target = StructureConstantAlgebra(spec.kind, r.field, q.dim, {}, labels, f"{r.name}/[R,R]")
    return target, q


def trace_map(spec: MatrixAlgebraSpec) -> AlgebraMorphism:
    """tr: gl_n(R) -> R/[R,R] (abelian)."""
    r = spec.base
    source = gl(spec)
    target, q = abelianization_target(spec)
    cols = []
    for t in range(source.dim):
        i, j, k = spec.unpack(t)
        cols.append(q.project({k: r.field.one}) if i == j else {})
    return AlgebraMorphism(source, target, SparseMatrix._trusted(r.field, target.dim, source.dim, cols), check=True)


def sl_basis(spec: MatrixAlgebraSpec) -> List[dict]:
    """Off-diagonal e_ij r, diagonal differences (e_ii - e_nn) r, and e_nn c for c in [R,R]."""
    r = spec.base
    n, d = spec.n, r.dim
    one = r.field.one
    vecs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                for k in range(d):
                    vecs.append({spec.index(i, j, k): one})
    for i in range(n - 1):
        for k in range(d):
            vecs.append({spec.index(i, i, k): one, spec.index(n - 1, n - 1, k): -one})
    for c in commutator_subspace(r).vectors:
        vecs.append({spec.index(n - 1, n - 1, k): v for k, v in c.items()})
    return vecs


def sl_labels(spec: MatrixAlgebraSpec, vecs) -> List[str]:
    r = spec.base
    n = spec.n
    labels = []
    for v in vecs:
        keys = sorted(v)
        i, j, k = spec.unpack(keys[0])
        if i != j:
            labels.append(_label(spec, i, j, k))
        elif len(keys) == 2 and spec.unpack(keys[1])[:2] == (n - 1, n - 1) and i != n - 1:
            labels.append(f"H{i + 1}.{r.labels[k]}")
        else:
            labels.append(f"C{len(labels)}")
    return labels


def sl_with_inclusion(spec: MatrixAlgebraSpec) -> Tuple[StructureConstantAlgebra, AlgebraMorphism]:
    g = gl(spec)
    vecs = sl_basis(spec)
    tr = trace_map(spec)
    for v in vecs:
        if tr(v):
            raise InvariantViolation("sl basis vector has nonzero trace")
    ker_dim = kernel_of(tr).dim
    if ker_dim != len(vecs):
        raise InvariantViolation(f"sl basis has {len(vecs)} vectors but the trace kernel has dimension {ker_dim}")
    r = spec.base
    name = f"sl{spec.n}({r.name})" if r.name else f"sl{spec.n}"
    s, inc = subalgebra(g, vecs, labels=sl_labels(spec, vecs), name=name)
    s.check()
    return s, AlgebraMorphism(s, g, inc, check=False)


def sl(spec: MatrixAlgebraSpec) -> StructureConstantAlgebra:
    """Kernel of the trace, in the basis of ``sl_basis``."""
    return sl_with_inclusion(spec)[0]


# ---------------------------------------------------------------------------
# Steinberg relations


@dataclass
class SteinbergReport:
    checked: Dict[str, int]
    violations: List[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        counts = ", ".join(f"{k}: {v}" for k, v in sorted(self.checked.items()))
        status = "all relations hold" if self.ok else f"{len(self.violations)} violations"
        return f"{status} ({counts})"


def _sl_coords(spec: MatrixAlgebraSpec, s_inc: AlgebraMorphism):
    basis = SubspaceBasis._trusted(s_inc.source.field, s_inc.target.dim, list(s_inc.matrix.columns))
    return basis.coordinates


def steinberg_verify(spec: MatrixAlgebraSpec, ext: CentralExtension, lift=None) -> SteinbergReport:
    """Check relations (a)-(c) for the lifts u_ij(r) = [lift(r e_ik), lift(e_kj)], k the least index not in {i, j}.

    ``lift`` maps an element of sl (coordinates in the sl basis) to the extension;
    defaults to the extension's solver.  Any lift works since the kernel is central.
    """
    n = spec.n
    r = spec.base
    if n < 3:
        raise InvariantViolation("Steinberg relations need n >= 3")
    unit = r.unit
    if unit is None:
        raise InvariantViolation("Steinberg relations need a unital base algebra")
    s, inc = sl_with_inclusion(spec)
    ext_alg = ext.algebra
    if ext.map.target.dim != s.dim:
        raise InvariantViolation("extension does not cover sl of this spec")
    coords = _sl_coords(spec, inc)
    lift = lift or ext.lift
    f = r.field

    def gl_vec(i, j, rv):
        return {spec.index(i, j, k): c for k, c in rv.items()}

    def lifted(i, j, rv):
        c = coords(gl_vec(i, j, rv))
        if c is None:
            raise InvariantViolation("elementary matrix outside sl")
        return lift(c)

    def u(i, j, rv):
        k = min(t for t in range(n) if t not in (i, j))
        return ext_alg.mul(lifted(i, k, rv), lifted(k, j, unit))

    def diff(a, b):
        return any(a.get(t, 0) - b.get(t, 0) for t in set(a) | set(b))

    basis_r = [{k: f.one} for k in range(r.dim)]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    checked = {"a": 0, "b": 0, "c": 0, "image": 0}
    bad: List[str] = []
    U = {}
    for (i, j) in pairs:
        for k, rv in enumerate(basis_r):
            U[(i, j, k)] = u(i, j, rv)
            # the lift maps onto r e_ij
            img = ext.map(U[(i, j, k)])
            want = coords(gl_vec(i, j, rv))
            checked["image"] += 1
            if diff(img, want):
                bad.append(f"image of u_{i + 1}{j + 1}({r.labels[k]}) is not the elementary matrix")
    # (a) linearity: lift a combination directly and compare
    for (i, j) in pairs:
        for k1 in range(r.dim):
            for k2 in range(r.dim):
                m1, m2 = f(2), f(-3)
                comb = {}
                vec_axpy(comb, m1, basis_r[k1])
                vec_axpy(comb, m2, basis_r[k2])
                lhs = u(i, j, comb)
                rhs = {}
                vec_axpy(rhs, m1, U[(i, j, k1)])
                vec_axpy(rhs, m2, U[(i, j, k2)])
                checked["a"] += 1
                if diff(lhs, rhs):
                    bad.append(f"(a) fails for u_{i + 1}{j + 1} on ({r.labels[k1]}, {r.labels[k2]})")
    for (i, j) in pairs:
        for (k, l) in pairs:
            for a in range(r.dim):
                for b in range(r.dim):
                    br = ext_alg.mul(U[(i, j, a)], U[(k, l, b)])
                    if i != l and j != k:
                        checked["b"] += 1
                        if br:
                            bad.append(f"(b) [u_{i + 1}{j + 1}({r.labels[a]}), u_{k + 1}{l + 1}({r.labels[b]})] != 0")
                    elif i != l and j == k:
                        checked["c"] += 1
                        rs = r.mul_basis(a, b)
                        want = {}
                        for m, c in rs.items():
                            vec_axpy(want, c, U[(i, l, m)])
                        if diff(br, want):
                            bad.append(
                                f"(c) [u_{i + 1}{j + 1}({r.labels[a]}), u_{k + 1}{l + 1}({r.labels[b]})] != u_{i + 1}{l + 1}(rs)"
                            )
    return SteinbergReport(checked, bad)


# ---------------------------------------------------------------------------
# some base rings


def truncated_polynomial_ring(field, k: int, var: str = "t", name: str = None) -> StructureConstantAlgebra:
    """field[t]/t^k with basis 1, t, .., t^{k-1}."""
    prods = {}
    for a in range(k):
        for b in range(k):
            if a + b < k:
                prods[(a, b)] = {a + b: field.one}
    labels = ["1"] + [var if a == 1 else f"{var}^{a}" for a in range(1, k)]
    return StructureConstantAlgebra("associative", field, k, prods, labels, name or f"{_fname(field)}[{var}]/{var}^{k}")


def _fname(field):
    return "Q" if field.characteristic == 0 else f"F{field.characteristic}"


def ground_ring(field) -> StructureConstantAlgebra:
    return StructureConstantAlgebra("associative", field, 1, {(0, 0): {0: field.one}}, ["1"], _fname(field))


def dual_numbers(field=QQ) -> StructureConstantAlgebra:
    r = truncated_polynomial_ring(field, 2, "eps", f"{_fname(field)}[eps]")
    return r


def full_matrix_ring(field, n: int) -> StructureConstantAlgebra:
    """M_n(field) as an associative algebra, basis e_ij at index i*n + j."""
    prods = {}
    for i, j, l in product(range(n), repeat=3):
        prods[(i * n + j, j * n + l)] = {i * n + l: field.one}
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return StructureConstantAlgebra("associative", field, n * n, prods, labels, f"M{n}({_fname(field)})")


def matrix_ring(base: StructureConstantAlgebra, n: int) -> StructureConstantAlgebra:
    """M_n(base) as an associative algebra, basis r_k e_ij at index (i*n + j)*dim + k."""
    if base.kind != "associative":
        raise InvariantViolation("matrix rings need an associative base algebra")
    d = base.dim
    prods = {}
    for (a, b), v in base.products.items():
        for i, j, l in product(range(n), repeat=3):
            prods[((i * n + j) * d + a, (j * n + l) * d + b)] = {(i * n + l) * d + m: c for m, c in v.items()}
    labels = [f"E{i + 1}{j + 1}.{base.labels[k]}" for i in range(n) for j in range(n) for k in range(d)]
    return StructureConstantAlgebra("associative", base.field, n * n * d, prods, labels, f"M{n}({base.name})")


def upper_triangular_ring(field, n: int) -> StructureConstantAlgebra:
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {t: k for k, t in enumerate(idx)}
    prods = {}
    for (i, j) in idx:
        for (j2, l) in idx:
            if j == j2:
                prods[(pos[(i, j)], pos[(j2, l)])] = {pos[(i, l)]: field.one}
    labels = [f"e{i + 1}{j + 1}" for (i, j) in idx]
    return StructureConstantAlgebra("associative", field, len(idx), prods, labels, f"T{n}({_fname(field)})")


def product_ring(a: StructureConstantAlgebra, b: StructureConstantAlgebra) -> StructureConstantAlgebra:
    """a x b with componentwise product."""
    if a.field != b.field:
        raise InvariantViolation("product of algebras over different fields")
    off = a.dim
    prods = {k: dict(v) for k, v in a.products.items()}
    for (i, j), v in b.products.items():
        prods[(i + off, j + off)] = {k + off: c for k, c in v.items()}
    labels = [f"{x}@1" for x in a.labels] + [f"{x}@2" for x in b.labels]
    return StructureConstantAlgebra(a.kind, a.field, a.dim + b.dim, prods, labels, f"{a.name}x{b.name}")


__all__ = [
    "MatrixAlgebraSpec",
    "matrix_ring",
    "gl",
    "sl",
    "sl_basis",
    "sl_with_inclusion",
    "trace_map",
    "commutator_subspace",
    "steinberg_verify",
    "SteinbergReport",
    "truncated_polynomial_ring",
    "ground_ring",
    "dual_numbers",
    "full_matrix_ring",
    "upper_triangular_ring",
    "product_ring",
]
