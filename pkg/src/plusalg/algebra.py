"""Finite-dimensional associative, Lie and Leibniz algebras given by structure constants.

Leibniz algebras use the right bracket convention

    [x, [y, z]] = [[x, y], z] - [[x, z], y]

which for an antisymmetric bracket is exactly the Jacobi identity, so Lie
algebras are checked with the same identity plus antisymmetry.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionError, InvariantViolation
from .linalg import (
    SparseMatrix,
    SubspaceBasis,
    decompose,
    format_scalar,
    quotient_basis,
    vec_axpy,
)

KINDS = ("associative", "lie", "leibniz")


def _clean(field, vec) -> dict:
    if isinstance(vec, Mapping):
        items = vec.items()
    else:
        items = vec
    out = {}
    for k, c in items:
        c = c if field.contains(c) else field(c)
        if c:
            out[int(k)] = out.get(int(k), 0) + c
            if not out[int(k)]:
                del out[int(k)]
    return out


class StructureConstantAlgebra:
    """An algebra with basis e_0..e_{dim-1} and products ``products[(i, j)] = e_i e_j``.

    Products are sparse vectors; missing pairs multiply to zero.
    """

    def __init__(
        self,
        kind: str,
        field,
        dim: int,
        products: Mapping[Tuple[int, int], object] = None,
        labels: Sequence[str] = None,
        name: str = "",
        check: bool = True,
    ):
        if kind not in KINDS:
            raise ValueError(f"unknown algebra kind {kind!r}; expected one of {KINDS}")
        self.kind = kind
        self.field = field
        self.dim = int(dim)
        self.name = name
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise DimensionError(f"{len(self.labels)} labels for an algebra of dimension {self.dim}")
        prods: Dict[Tuple[int, int], dict] = {}
        for (i, j), v in (products or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionError(f"product index ({i}, {j}) out of range")
            v = _clean(field, v)
            for k in v:
                if not 0 <= k < self.dim:
                    raise DimensionError(f"product ({i}, {j}) has component {k} out of range")
            if v:
                prods[(int(i), int(j))] = v
        self.products = prods
        self._by_left: Dict[int, List[Tuple[int, dict]]] = {}
        self._by_right: Dict[int, List[Tuple[int, dict]]] = {}
        for (i, j), v in sorted(prods.items()):
            self._by_left.setdefault(i, []).append((j, v))
            self._by_right.setdefault(j, []).append((i, v))
        if check:
            self.check()

    # -- products
    def mul_basis(self, i: int, j: int) -> dict:
        return self.products.get((i, j), {})

    def mul(self, u: Mapping, v: Mapping) -> dict:
        """Bilinear product (bracket) of two vectors."""
        out: dict = {}
        if len(u) * len(v) == 0:
            return out
        for i, a in u.items():
            row = self._by_left.get(i)
            if not row:
                continue
            for j, w in row:
                b = v.get(j)
                if b:
                    vec_axpy(out, a * b, w)
        return out

    def left_matrix(self, i: int) -> SparseMatrix:
        """Matrix of y -> e_i y."""
        cols = [dict(self.mul_basis(i, j)) for j in range(self.dim)]
        return SparseMatrix._trusted(self.field, self.dim, self.dim, cols)

    def right_matrix(self, i: int) -> SparseMatrix:
        """Matrix of y -> y e_i."""
        cols = [dict(self.mul_basis(j, i)) for j in range(self.dim)]
        return SparseMatrix._trusted(self.field, self.dim, self.dim, cols)

    def is_abelian(self) -> bool:
        return not self.products

    def basis_vector(self, i: int) -> dict:
        return {i: self.field.one}

    # -- identities
    def identity_defect(self) -> Optional[Tuple[int, int, int]]:
        """First basis triple violating the kind's identity, or None."""
        if self.kind == "lie":
            for i in range(self.dim):
                if (i, i) in self.products:
                    return (i, i, i)
            for (i, j), v in self.products.items():
                w = self.products.get((j, i), {})
                if any(v.get(k, 0) + w.get(k, 0) for k in set(v) | set(w)):
                    return (i, j, j)
        acc: Dict[Tuple[int, int, int], dict] = {}
        if self.kind == "associative":
            # (xy)z - x(yz)
            for (x, y), v in self.products.items():
                for k, c in v.items():
                    for z, w in self._by_left.get(k, ()):
                        vec_axpy(acc.setdefault((x, y, z), {}), c, w)
            for (y, z), v in self.products.items():
                for k, c in v.items():
                    for x, w in self._by_right.get(k, ()):
                        vec_axpy(acc.setdefault((x, y, z), {}), -c, w)
        else:
            # [x,[y,z]] - [[x,y],z] + [[x,z],y]
            for (y, z), v in self.products.items():
                for k, c in v.items():
                    for x, w in self._by_right.get(k, ()):
                        vec_axpy(acc.setdefault((x, y, z), {}), c, w)
            for (x, y), v in self.products.items():
                for k, c in v.items():
                    for z, w in self._by_left.get(k, ()):
                        vec_axpy(acc.setdefault((x, y, z), {}), -c, w)
            for (x, z), v in self.products.items():
                for k, c in v.items():
                    for y, w in self._by_left.get(k, ()):
                        vec_axpy(acc.setdefault((x, y, z), {}), c, w)
        for t in sorted(acc):
            if acc[t]:
                return t
        return None

    def check(self):
        bad = self.identity_defect()
        if bad is not None:
            names = ", ".join(self.labels[i] for i in bad)
            raise InvariantViolation(f"{self.kind} identity fails on basis triple ({names}) = {bad}")

    # -- associative extras
    @property
    def unit(self) -> Optional[dict]:
        """Two-sided unit as a vector, or None (associative kind only)."""
        if self.kind != "associative":
            return None
        if "_unit" not in self.__dict__:
            self.__dict__["_unit"] = self._find_unit()
        return self.__dict__["_unit"]

    def _find_unit(self):
        n = self.dim
        if n == 0:
            return {}
        # unknown u = sum u_k e_k: u e_i = e_i and e_i u = e_i for all i
        cols = []
        for k in range(n):
            col = {}
            for i in range(n):
                for t, c in self.mul_basis(k, i).items():
                    col[i * n + t] = col.get(i * n + t, 0) + c
                for t, c in self.mul_basis(i, k).items():
                    col[n * n + i * n + t] = col.get(n * n + i * n + t, 0) + c
            cols.append({r: c for r, c in col.items() if c})
        m = SparseMatrix._trusted(self.field, 2 * n * n, n, cols)
        one = self.field.one
        rhs = {i * n + i: one for i in range(n)}
        rhs.update({n * n + i * n + i: one for i in range(n)})
        return decompose(m).solve(rhs)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    # -- conversions
    def as_kind(self, kind: str) -> "StructureConstantAlgebra":
        """Reinterpret: a Lie algebra is a Leibniz algebra; an associative algebra gives its commutator bracket."""
        if kind == self.kind:
            return self
        if self.kind == "lie" and kind == "leibniz":
            return StructureConstantAlgebra("leibniz", self.field, self.dim, self.products, self.labels, self.name, check=False)
        if self.kind == "associative" and kind in ("lie", "leibniz"):
            return commutator_algebra(self, kind)
        raise InvariantViolation(f"cannot view a {self.kind} algebra as {kind}")

    def __repr__(self):
        return f"StructureConstantAlgebra({self.kind!r}, dim={self.dim}, name={self.name!r})"

    def describe(self) -> str:
        lines = [f"{self.name or 'algebra'}: {self.kind}, dim {self.dim}"]
        for (i, j), v in sorted(self.products.items()):
            terms = " + ".join(f"{format_scalar(c)}*{self.labels[k]}" for k, c in sorted(v.items()))
            lines.append(f"  {self.labels[i]} * {self.labels[j]} = {terms}")
        return "\n".join(lines)


def commutator_algebra(a: StructureConstantAlgebra, kind: str = "lie") -> StructureConstantAlgebra:
    prods = {}
    for (i, j), v in a.products.items():
        w = prods.setdefault((i, j), {})
        vec_axpy(w, a.field.one, v)
        w2 = prods.setdefault((j, i), {})
        vec_axpy(w2, -a.field.one, v)
    return StructureConstantAlgebra(kind, a.field, a.dim, prods, a.labels, a.name, check=False)


def abelian_algebra(field, dim: int, kind: str = "lie", labels=None, name="") -> StructureConstantAlgebra:
    return StructureConstantAlgebra(kind, field, dim, {}, labels, name or f"abelian{dim}")


def zero_algebra(field, kind: str) -> StructureConstantAlgebra:
    return StructureConstantAlgebra(kind, field, 0, {}, [], "zero")


# ---------------------------------------------------------------------------
# ideals and morphisms


class Ideal:
    """A two-sided ideal of ``parent`` spanned by ``basis``."""

    def __init__(self, parent: StructureConstantAlgebra, basis, check: bool = True):
        if not isinstance(basis, SubspaceBasis):
            basis = SubspaceBasis(parent.field, parent.dim, basis)
        if basis.ambient_dim != parent.dim:
            raise DimensionError("ideal basis does not live in the parent algebra")
        self.parent = parent
        self.basis = basis
        if check:
            self.check()

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def vectors(self):
        return self.basis.vectors

    def check(self):
        a = self.parent
        for v in self.basis:
            for i in range(a.dim):
                e = {i: a.field.one}
                if not self.basis.contains(a.mul(e, v)) or not self.basis.contains(a.mul(v, e)):
                    raise InvariantViolation(f"subspace is not closed under multiplication by {a.labels[i]}")

    def contains(self, v) -> bool:
        return self.basis.contains(v)

    def is_whole(self) -> bool:
        return self.dim == self.parent.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    @classmethod
    def whole(cls, a):
        one = a.field.one
        return cls(a, SubspaceBasis._trusted(a.field, a.dim, [{i: one} for i in range(a.dim)]), check=False)

    @classmethod
    def zero(cls, a):
        return cls(a, SubspaceBasis._trusted(a.field, a.dim, []), check=False)

    def __repr__(self):
        return f"Ideal(dim={self.dim} in {self.parent!r})"


def _span(field, ambient, vectors) -> SubspaceBasis:
    vectors = [v for v in vectors if v]
    if not vectors:
        return SubspaceBasis._trusted(field, ambient, [])
    return decompose(SparseMatrix._trusted(field, ambient, len(vectors), vectors)).image


def generated_ideal(a: StructureConstantAlgebra, vectors) -> Ideal:
    """Smallest two-sided ideal containing ``vectors``."""
    current = _span(a.field, a.dim, vectors)
    while True:
        new = list(current.vectors)
        for v in current.vectors:
            for i in range(a.dim):
                e = {i: a.field.one}
                new.append(a.mul(e, v))
                new.append(a.mul(v, e))
        nxt = _span(a.field, a.dim, new)
        if nxt.dim == current.dim:
            return Ideal(a, current, check=False)
        current = nxt


def square_ideal(a: StructureConstantAlgebra, i: Ideal = None) -> Ideal:
    """Span of all products of two elements of the ideal (A^2 when i is the whole algebra).

    All kinds handled here are generated by one binary operation, so binary
    products already span the image of every higher evaluation map.
    """
    if i is None:
        return Ideal(a, _span(a.field, a.dim, list(a.products.values())), check=False)
    if i.parent is not a:
        raise InvariantViolation("ideal belongs to a different algebra")
    i.check()
    vecs = i.basis.vectors
    prods = [a.mul(u, v) for u in vecs for v in vecs]
    return Ideal(a, _span(a.field, a.dim, prods), check=True)


def perfect_radical(a: StructureConstantAlgebra) -> Ideal:
    """Limit of A, A^2, (A^2)^2, ...; stabilizes after at most dim A steps."""
    cur = Ideal.whole(a)
    for _ in range(a.dim + 1):
        nxt = square_ideal(a, cur)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
    return cur


def is_perfect(a: StructureConstantAlgebra) -> bool:
    return square_ideal(a).dim == a.dim


class AlgebraMorphism:
    """Linear map between algebras of the same kind that respects products."""

    def __init__(self, source: StructureConstantAlgebra, target: StructureConstantAlgebra, matrix: SparseMatrix, check=True):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionError(f"matrix shape {matrix.shape} does not match {target.dim} x {source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            self.check()

    def __call__(self, v: Mapping) -> dict:
        return self.matrix.apply(v)

    def check(self):
        s, t = self.source, self.target
        f = self.matrix
        for i in range(s.dim):
            fi = f.column(i)
            for j in range(s.dim):
                lhs = f.apply(s.mul_basis(i, j))
                rhs = t.mul(fi, f.column(j))
                if any(lhs.get(k, 0) - rhs.get(k, 0) for k in set(lhs) | set(rhs)):
                    raise InvariantViolation(
                        f"map does not respect the product of ({s.labels[i]}, {s.labels[j]})"
                    )

    @property
    def rank(self) -> int:
        return decompose(self.matrix).rank

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    @classmethod
    def identity(cls, a):
        return cls(a, a, SparseMatrix.identity(a.field, a.dim), check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, SparseMatrix.zero(source.field, target.dim, source.dim))

    def compose(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """self after other."""
        return AlgebraMorphism(other.source, self.target, self.matrix @ other.matrix, check=False)


def kernel_of(f: AlgebraMorphism) -> Ideal:
    return Ideal(f.source, decompose(f.matrix).kernel, check=True)


def quotient_map(a: StructureConstantAlgebra, i: Ideal) -> Tuple[StructureConstantAlgebra, AlgebraMorphism]:
    """The quotient algebra a/i together with the canonical surjection."""
    if i.parent is not a:
        raise InvariantViolation("ideal belongs to a different algebra")
    i.check()
    q = quotient_basis(a.dim, i.basis)
    prods = {}
    for (x, y) in [(x, y) for x in q.complement for y in q.complement]:
        v = q.project(a.mul_basis(x, y))
        if v:
            prods[(q.position[x], q.position[y])] = v
    labels = [a.labels[c] for c in q.complement]
    b = StructureConstantAlgebra(a.kind, a.field, q.dim, prods, labels, f"{a.name}/I" if a.name else "", check=False)
    return b, AlgebraMorphism(a, b, q.projection, check=False)


def quotient(a: StructureConstantAlgebra, i: Ideal) -> StructureConstantAlgebra:
    return quotient_map(a, i)[0]


def subalgebra(a: StructureConstantAlgebra, basis: Sequence[Mapping], labels=None, name="") -> Tuple[StructureConstantAlgebra, SparseMatrix]:
    """Structure constants of a subalgebra in the given basis, plus the inclusion matrix."""
    sb = basis if isinstance(basis, SubspaceBasis) else SubspaceBasis(a.field, a.dim, basis)
    vecs = sb.vectors
    prods = {}
    for x, u in enumerate(vecs):
        for y, v in enumerate(vecs):
            w = a.mul(u, v)
            if not w:
                continue
            c = sb.coordinates(w)
            if c is None:
                raise InvariantViolation("subspace is not closed under the product")
            if c:
                prods[(x, y)] = c
    if labels is None:
        labels = [f"b{k}" for k in range(len(vecs))]
    sub = StructureConstantAlgebra(a.kind, a.field, len(vecs), prods, labels, name, check=False)
    return sub, sb.as_matrix()


def ideal_as_algebra(i: Ideal, name="") -> Tuple[StructureConstantAlgebra, SparseMatrix]:
    return subalgebra(i.parent, i.basis, name=name)


class Indecomposables:
    def __init__(self, a, ideal: Ideal):
        self.algebra = a
        self.square = ideal
        self.quotient = quotient_basis(a.dim, ideal.basis)

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def projection(self) -> SparseMatrix:
        return self.quotient.projection


def indecomposables(a: StructureConstantAlgebra) -> Indecomposables:
    """Q(A) = A / A^2."""
    return Indecomposables(a, square_ideal(a))


# ---------------------------------------------------------------------------
# modules, derivations, square-zero extensions


class Module:
    """A module over ``algebra`` via left action matrices (e_i . m) and right action matrices (m . e_i)."""

    def __init__(self, algebra: StructureConstantAlgebra, dim: int, left=None, right=None, check=True):
        self.algebra = algebra
        self.dim = dim
        f = algebra.field
        zero = SparseMatrix.zero(f, dim, dim)
        self.left = list(left) if left is not None else [zero] * algebra.dim
        if right is None:
            if algebra.kind == "lie" and left is not None:
                right = [-m for m in self.left]
            else:
                right = [zero] * algebra.dim
        self.right = list(right)
        for m in self.left + self.right:
            if m.shape != (dim, dim):
                raise DimensionError("action matrix has the wrong shape")
        if len(self.left) != algebra.dim or len(self.right) != algebra.dim:
            raise DimensionError("need one action matrix per basis element")
        if check:
            self.check()

    @classmethod
    def trivial(cls, algebra, dim=1):
        return cls(algebra, dim, check=False)

    @classmethod
    def adjoint(cls, algebra):
        return cls(
            algebra,
            algebra.dim,
            [algebra.left_matrix(i) for i in range(algebra.dim)],
            [algebra.right_matrix(i) for i in range(algebra.dim)],
            check=False,
        )

    def semidirect(self) -> StructureConstantAlgebra:
        """algebra (+) M with M squaring to zero; M occupies the last dim coordinates."""
        a = self.algebra
        n = a.dim
        prods = {k: dict(v) for k, v in a.products.items()}
        for i in range(n):
            for j, col in enumerate(self.left[i].columns):
                if col:
                    prods[(i, n + j)] = {n + k: c for k, c in col.items()}
            for j, col in enumerate(self.right[i].columns):
                if col:
                    prods[(n + j, i)] = {n + k: c for k, c in col.items()}
        labels = a.labels + [f"m{j}" for j in range(self.dim)]
        return StructureConstantAlgebra(a.kind, a.field, n + self.dim, prods, labels, check=False)

    def check(self):
        ext = self.semidirect()
        bad = ext.identity_defect()
        if bad is not None:
            names = [ext.labels[t] for t in bad]
            raise InvariantViolation(f"action matrices do not define a module: identity fails on {tuple(names)}")


def derivations(a: StructureConstantAlgebra, m: Module = None) -> SubspaceBasis:
    """Linear maps D: a -> M with D(xy) = D(x) y + x D(y).

    A map is encoded as a vector with coordinate ``k * a.dim + i`` holding the
    coefficient of m_k in D(e_i).  Default module: trivial, one-dimensional.
    """
    if m is None:
        m = Module.trivial(a, 1)
    n, dm = a.dim, m.dim
    f = a.field
    # one equation per (i, j, k): coefficient of m_k
    cols = []
    for k0 in range(dm):
        for i0 in range(n):
            # unknown D(e_i0) has m_k0 coefficient; contributions to equations
            col: dict = {}
            # D(e_i e_j) term: for each product (i, j) -> v, v_{i0} * D(e_i0)
            for (i, j), v in a.products.items():
                c = v.get(i0)
                if c:
                    key = (i * n + j) * dm + k0
                    col[key] = col.get(key, 0) + c
            # - D(e_i0) . e_j
            for j in range(n):
                for k, c in m.right[j].column(k0).items():
                    key = (i0 * n + j) * dm + k
                    col[key] = col.get(key, 0) - c
            # - e_i . D(e_i0)
            for i in range(n):
                for k, c in m.left[i].column(k0).items():
                    key = (i * n + i0) * dm + k
                    col[key] = col.get(key, 0) - c
            cols.append({r: c for r, c in col.items() if c})
    mat = SparseMatrix._trusted(f, n * n * dm, n * dm, cols)
    ker = decompose(mat).kernel
    return ker


def derivation_matrix(a: StructureConstantAlgebra, m: Module, vec: Mapping) -> SparseMatrix:
    n = a.dim
    cols = [dict() for _ in range(n)]
    for idx, c in vec.items():
        k, i = divmod(idx, n)
        cols[i][k] = c
    return SparseMatrix._trusted(a.field, m.dim, n, cols)


class SquareZeroReport:
    def __init__(self, is_square_zero: bool, kernel: Ideal):
        self.is_square_zero = is_square_zero
        self.kernel = kernel

    def __bool__(self):
        return self.is_square_zero

    def __repr__(self):
        return f"SquareZeroReport(is_square_zero={self.is_square_zero}, kernel_dim={self.kernel.dim})"


def square_zero_check(f: AlgebraMorphism) -> SquareZeroReport:
    if not f.is_surjective():
        raise InvariantViolation("square-zero check needs a surjective morphism")
    k = kernel_of(f)
    a = f.source
    vecs = k.vectors
    ok = all(not a.mul(u, v) for u in vecs for v in vecs)
    return SquareZeroReport(ok, k)


def is_central_kernel(f: AlgebraMorphism) -> bool:
    a = f.source
    k = kernel_of(f)
    for v in k.vectors:
        for i in range(a.dim):
            e = {i: a.field.one}
            if a.mul(e, v) or a.mul(v, e):
                return False
    return True


# ---------------------------------------------------------------------------
# universal central extension


class CentralExtension:
    def __init__(self, algebra, map, kernel_dim, carrier_labels):
        self.algebra = algebra
        self.map = map
        self.kernel_dim = kernel_dim
        self.carrier_labels = carrier_labels

    def lift(self, v: Mapping) -> dict:
        """Some preimage of v under the structure map."""
        x = decompose(self.map.matrix).solve(v)
        if x is None:
            raise InvariantViolation("vector is not in the image of the extension map")
        return x

    def __repr__(self):
        return f"CentralExtension(dim={self.algebra.dim}, kernel_dim={self.kernel_dim})"


def uce(g: StructureConstantAlgebra, kind: str = None) -> CentralExtension:
    """Universal central extension of a perfect Lie or Leibniz algebra.

    Lie: carrier (g ^ g)/im d_3 of the Chevalley-Eilenberg complex; Leibniz:
    carrier (g (x) g)/im d_3 of the Leibniz complex.  In both cases the bracket is
    [x.y, z.w] = [x,y].[z,w] and the structure map is x.y -> [x,y].
    """
    from .theories import ce_complex, leibniz_complex, wedge_product_vec, tensor_product_vec

    kind = kind or g.kind
    if kind not in ("lie", "leibniz"):
        raise InvariantViolation(f"universal central extensions are built for lie or leibniz, not {kind}")
    if kind == "lie" and g.kind != "lie":
        raise InvariantViolation("a Lie universal central extension needs a Lie algebra")
    if g.kind == "associative":
        raise InvariantViolation("associative algebras have no universal central extension here")
    h = g.as_kind(kind)
    if not is_perfect(h):
        raise InvariantViolation("universal central extension requires a perfect algebra")
    if kind == "lie":
        c = ce_complex(h, 3)
        combine = wedge_product_vec
    else:
        c = leibniz_complex(h, 3)
        combine = tensor_product_vec
    d3 = c.differential(3)
    d2 = c.differential(2)
    basis2 = c.basis_keys[2]
    index2 = {key: k for k, key in enumerate(basis2)}
    q = quotient_basis(len(basis2), decompose(d3).image)
    n = q.dim
    # structure map from d_2, signed so that psi(x.y) = [x,y]
    sign = -1 if kind == "lie" else 1
    psi_cols = []
    for idx in q.complement:
        psi_cols.append({k: sign * v for k, v in d2.column(idx).items()})
    psi_vals = psi_cols
    prods = {}
    for x in range(n):
        for y in range(n):
            v = combine(h, psi_vals[x], psi_vals[y], index2)
            w = q.project(v)
            if w:
                prods[(x, y)] = w
    labels = [c.labels[2][idx] for idx in q.complement]
    ext = StructureConstantAlgebra(kind, g.field, n, prods, labels, f"uce({g.name})" if g.name else "uce", check=True)
    psi = SparseMatrix._trusted(g.field, g.dim, n, psi_cols)
    f = AlgebraMorphism(ext, h, psi, check=True)
    return CentralExtension(ext, f, n - g.dim, labels)


__all__ = [
    "StructureConstantAlgebra",
    "Ideal",
    "AlgebraMorphism",
    "Module",
    "CentralExtension",
    "Indecomposables",
    "abelian_algebra",
    "commutator_algebra",
    "zero_algebra",
    "generated_ideal",
    "square_ideal",
    "perfect_radical",
    "is_perfect",
    "indecomposables",
    "quotient",
    "quotient_map",
    "subalgebra",
    "ideal_as_algebra",
    "kernel_of",
    "derivations",
    "derivation_matrix",
    "square_zero_check",
    "is_central_kernel",
    "uce",
]
