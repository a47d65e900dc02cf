"""Exact scalars and sparse linear algebra over Q and prime fields.

Vectors are plain ``dict`` objects mapping an index to a nonzero scalar.
Matrices are stored column-wise since almost every matrix in this package
is the matrix of a differential, built one basis element at a time.

Elimination works on integer data: rational columns are scaled to primitive
integer vectors and combined fraction-free, prime-field columns are kept as
residues with normalized pivots.  The pivot of a vector is its smallest row
index and columns are streamed in order of (support size, column index), so
every result is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionError, DomainMismatchError

Vector = Dict[int, object]


# ---------------------------------------------------------------------------
# scalars


class FpElement:
    """Residue class modulo a machine-word prime."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise DomainMismatchError(
                    f"cannot combine F_{self.modulus} and F_{other.modulus} scalars"
                )
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.modulus
        if isinstance(other, Fraction):
            raise DomainMismatchError(f"cannot combine F_{self.modulus} scalar with rational {other}")
        return NotImplemented

    def _new(self, r):
        return FpElement(r, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.residue)

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return self._new(pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except DomainMismatchError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"

    def __str__(self):
        return str(self.residue)


class RationalField:
    """The field Q; elements are ``fractions.Fraction``."""

    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, FpElement):
            raise DomainMismatchError(f"prime-field scalar {x!r} given where a rational was expected")
        raise TypeError(f"cannot interpret {x!r} as a rational number")

    def contains(self, x) -> bool:
        return isinstance(x, Fraction) or (isinstance(x, int) and not isinstance(x, bool))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __reduce__(self):
        return (_rational_field, ())


class PrimeField:
    """The field F_p for a prime p below 2**31."""

    def __init__(self, p: int):
        if p < 2 or p >= 2**31 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not a machine-word prime")
        self.characteristic = p
        self.name = f"Fp:{p}"

    @property
    def p(self):
        return self.characteristic

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, FpElement):
            if x.modulus != p:
                raise DomainMismatchError(f"F_{x.modulus} scalar given where F_{p} was expected")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return FpElement(x, p)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{p}")
            return FpElement(x.numerator * pow(x.denominator, -1, p), p)
        if isinstance(x, str):
            return self(Fraction(x.strip()))
        raise TypeError(f"cannot interpret {x!r} as an element of F_{p}")

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.modulus == self.characteristic

    @property
    def zero(self):
        return FpElement(0, self.characteristic)

    @property
    def one(self):
        return FpElement(1, self.characteristic)

    def __repr__(self):
        return f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Fp", self.characteristic))

    def __reduce__(self):
        return (GF, (self.characteristic,))


QQ = RationalField()


def _rational_field():
    return QQ


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown scalar domain {name!r} (expected 'Q' or 'Fp:<p>')")


def format_scalar(x) -> str:
    if isinstance(x, FpElement):
        return str(x.residue)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# sparse vectors


def vec_axpy(y: Vector, a, x: Mapping) -> Vector:
    """y += a*x in place; zero entries are removed."""
    for k, v in x.items():
        s = y.get(k)
        s = a * v if s is None else s + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)
    return y


def vec_scale(a, x: Mapping) -> Vector:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def vec_add(*vs: Mapping) -> Vector:
    out: Vector = {}
    for v in vs:
        vec_axpy(out, 1, v)
    return out


def vec_sub(u: Mapping, v: Mapping) -> Vector:
    return vec_axpy(dict(u), -1, v)


# ---------------------------------------------------------------------------
# matrices


class SparseMatrix:
    """An ``nrows x ncols`` matrix with nonzero entries over one field.

    Treated as immutable after construction.
    """

    __slots__ = ("field", "nrows", "ncols", "_cols")

    def __init__(self, field, nrows: int, ncols: int, columns=None, check: bool = True):
        self.field = field
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionError("matrix dimensions must be non-negative")
        cols: List[dict] = [dict() for _ in range(self.ncols)] if columns is None else []
        if columns is not None:
            if isinstance(columns, Mapping):
                cols = [dict() for _ in range(self.ncols)]
                for j, col in columns.items():
                    if not 0 <= j < self.ncols:
                        raise DimensionError(f"column index {j} out of range for {self.ncols} columns")
                    cols[j] = dict(col)
            else:
                cols = [dict(c) for c in columns]
                if len(cols) != self.ncols:
                    raise DimensionError(f"expected {self.ncols} columns, got {len(cols)}")
        if check:
            coerce = field.__call__
            for j, col in enumerate(cols):
                clean = {}
                for i, v in col.items():
                    if not 0 <= i < self.nrows:
                        raise DimensionError(f"row index {i} out of range for {self.nrows} rows")
                    if not field.contains(v):
                        v = coerce(v)
                    if v:
                        clean[i] = v
                cols[j] = clean
        self._cols = tuple(cols)

    @classmethod
    def _trusted(cls, field, nrows, ncols, cols):
        m = cls.__new__(cls)
        m.field = field
        m.nrows = nrows
        m.ncols = ncols
        m._cols = tuple(cols)
        return m

    # -- constructors
    @classmethod
    def from_dense(cls, field, rows: Sequence[Sequence]):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [dict() for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError("ragged dense matrix")
            for j, v in enumerate(row):
                v = field(v)
                if v:
                    cols[j][i] = v
        return cls._trusted(field, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, field, nrows: int, columns: Sequence[Mapping], check: bool = True):
        return cls(field, nrows, len(columns), list(columns), check=check)

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries: Mapping[Tuple[int, int], object]):
        cols: Dict[int, dict] = {}
        for (i, j), v in entries.items():
            cols.setdefault(j, {})[i] = v
        return cls(field, nrows, ncols, cols)

    @classmethod
    def identity(cls, field, n: int):
        one = field.one
        return cls._trusted(field, n, n, [{j: one} for j in range(n)])

    @classmethod
    def zero(cls, field, nrows: int, ncols: int):
        return cls._trusted(field, nrows, ncols, [dict() for _ in range(ncols)])

    # -- access
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Mapping:
        return self._cols[j]

    @property
    def columns(self) -> Tuple[dict, ...]:
        return self._cols

    def entries(self) -> Dict[Tuple[int, int], object]:
        return {(i, j): v for j, col in enumerate(self._cols) for i, v in col.items()}

    def __getitem__(self, ij):
        i, j = ij
        return self._cols[j].get(i, self.field.zero)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def is_zero(self) -> bool:
        return not any(self._cols)

    def to_dense(self) -> List[list]:
        z = self.field.zero
        rows = [[z] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def rows(self) -> List[dict]:
        out: List[dict] = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    # -- arithmetic
    def _same_field(self, other):
        if self.field != other.field:
            raise DomainMismatchError(f"matrices over {self.field!r} and {other.field!r}")

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix._trusted(self.field, self.ncols, self.nrows, self.rows())

    T = property(transpose)

    def apply(self, v: Mapping) -> Vector:
        out: Vector = {}
        cols = self._cols
        for j, a in v.items():
            if not 0 <= j < self.ncols:
                raise DimensionError(f"vector index {j} out of range for {self.ncols} columns")
            vec_axpy(out, a, cols[j])
        return out

    def __matmul__(self, other):
        if isinstance(other, SparseMatrix):
            self._same_field(other)
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            return SparseMatrix._trusted(
                self.field, self.nrows, other.ncols, [self.apply(c) for c in other._cols]
            )
        return self.apply(other)

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return SparseMatrix._trusted(
            self.field, self.nrows, self.ncols, [vec_add(a, b) for a, b in zip(self._cols, other._cols)]
        )

    def __neg__(self):
        return SparseMatrix._trusted(self.field, self.nrows, self.ncols, [vec_scale(-1, c) for c in self._cols])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        a = self.field(a)
        return SparseMatrix._trusted(self.field, self.nrows, self.ncols, [vec_scale(a, c) for c in self._cols])

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and all(a == b for a, b in zip(self._cols, other._cols))
        )

    __hash__ = None

    def select_columns(self, idx: Sequence[int]) -> "SparseMatrix":
        return SparseMatrix._trusted(self.field, self.nrows, len(idx), [self._cols[j] for j in idx])

    def __repr__(self):
        return f"SparseMatrix({self.field!r}, {self.nrows}x{self.ncols}, nnz={self.nnz})"

    @property
    def rank(self) -> int:
        return decompose(self).rank


def hstack(mats: Sequence[SparseMatrix]) -> SparseMatrix:
    if not mats:
        raise DimensionError("hstack of nothing")
    f = mats[0].field
    n = mats[0].nrows
    cols: List[dict] = []
    for m in mats:
        if m.field != f:
            raise DomainMismatchError("hstack over different fields")
        if m.nrows != n:
            raise DimensionError("hstack with differing row counts")
        cols.extend(m.columns)
    return SparseMatrix._trusted(f, n, len(cols), cols)


# ---------------------------------------------------------------------------
# elimination kernels


def _check_domain(field, cols: Iterable[Mapping]):
    for col in cols:
        for v in col.values():
            if not field.contains(v):
                raise DomainMismatchError(f"entry {v!r} does not belong to {field!r}")


def _int_vector_q(col: Mapping) -> Tuple[Dict[int, int], int]:
    """Scale a rational vector to integers; returns (vector, scale)."""
    den = 1
    for v in col.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return {k: int(v) for k, v in col.items()}, 1
    return {k: v.numerator * (den // v.denominator) for k, v in col.items()}, den


def _int_vector_p(col: Mapping, p: int) -> Dict[int, int]:
    return {k: v.residue for k, v in col.items()}


class _Echelon:
    """Incremental echelon form keyed by pivot row (smallest row index)."""

    def __init__(self, p: int, track: bool):
        self.p = p
        self.track = track
        self.pivots: Dict[int, Tuple[Dict[int, int], Optional[Dict[int, int]]]] = {}

    def reduce(self, vec, hist, scale=1):
        """Reduce ``vec`` against the pivots.

        Invariant maintained: vec == scale*input + M(hist) where M is the
        matrix whose columns produced the pivots.
        """
        pivots = self.pivots
        p = self.p
        track = hist is not None
        while vec:
            r = min(vec)
            piv = pivots.get(r)
            if piv is None:
                break
            pv, ph = piv
            if p:
                b = vec[r]
                for k, v in pv.items():
                    x = (vec.get(k, 0) - b * v) % p
                    if x:
                        vec[k] = x
                    else:
                        vec.pop(k, None)
                if track:
                    for k, v in ph.items():
                        x = (hist.get(k, 0) - b * v) % p
                        if x:
                            hist[k] = x
                        else:
                            hist.pop(k, None)
            else:
                a = pv[r]
                b = vec[r]
                g = gcd(a, b)
                a //= g
                b //= g
                if a < 0:
                    a, b = -a, -b
                if a != 1:
                    vec = {k: a * v for k, v in vec.items()}
                    if track:
                        hist = {k: a * v for k, v in hist.items()}
                    scale *= a
                for k, v in pv.items():
                    x = vec.get(k, 0) - b * v
                    if x:
                        vec[k] = x
                    else:
                        vec.pop(k, None)
                if track:
                    for k, v in ph.items():
                        x = hist.get(k, 0) - b * v
                        if x:
                            hist[k] = x
                        else:
                            hist.pop(k, None)
        return vec, hist, scale

    def insert(self, vec, hist):
        r = min(vec)
        p = self.p
        if p:
            inv = pow(vec[r], -1, p)
            if inv != 1:
                vec = {k: v * inv % p for k, v in vec.items()}
                if hist is not None:
                    hist = {k: v * inv % p for k, v in hist.items()}
        else:
            vals = list(vec.values())
            if hist is not None:
                vals.extend(hist.values())
            g = gcd(*vals)
            if vec[r] < 0:
                g = -g
            if g != 1:
                vec = {k: v // g for k, v in vec.items()}
                if hist is not None:
                    hist = {k: v // g for k, v in hist.items()}
        self.pivots[r] = (vec, hist)
        return r

    def add_column(self, vec, hist):
        """Returns None if vec became a pivot, else the kernel relation."""
        vec, hist, _ = self.reduce(vec, hist)
        if vec:
            self.insert(vec, hist)
            return None
        return hist


def _field_int_cols(m: SparseMatrix):
    f = m.field
    _check_domain(f, m.columns)
    if f.characteristic:
        p = f.characteristic
        return p, [_int_vector_p(c, p) for c in m.columns]
    return 0, [_int_vector_q(c)[0] for c in m.columns]


def _from_ints(field, vec: Mapping[int, int], den: int = 1) -> Vector:
    if field.characteristic:
        p = field.characteristic
        if den != 1:
            inv = pow(den, -1, p)
            return {k: FpElement(v * inv, p) for k, v in vec.items() if v * inv % p}
        return {k: FpElement(v, p) for k, v in vec.items() if v % p}
    if den == 1:
        return {k: Fraction(v) for k, v in vec.items()}
    return {k: Fraction(v, den) for k, v in vec.items()}


def _column_order(cols):
    return sorted(range(len(cols)), key=lambda j: (len(cols[j]), j))


# ---------------------------------------------------------------------------
# subspaces


class SubspaceBasis:
    """A list of linearly independent sparse vectors in ``field^ambient_dim``."""

    def __init__(self, field, ambient_dim: int, vectors: Sequence[Mapping] = (), check: bool = True):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        vecs = []
        for v in vectors:
            v = dict(v)
            for k, x in list(v.items()):
                if not 0 <= k < self.ambient_dim:
                    raise DimensionError(f"vector index {k} outside ambient dimension {self.ambient_dim}")
                if not field.contains(x):
                    x = field(x)
                if x:
                    v[k] = x
                else:
                    del v[k]
            vecs.append(v)
        self.vectors: Tuple[dict, ...] = tuple(vecs)
        if check and vecs:
            r = decompose(self.as_matrix()).rank
            if r != len(vecs):
                raise DimensionError(f"{len(vecs)} vectors span only a {r}-dimensional space")

    @classmethod
    def _trusted(cls, field, ambient_dim, vectors):
        s = cls.__new__(cls)
        s.field = field
        s.ambient_dim = ambient_dim
        s.vectors = tuple(vectors)
        return s

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_matrix(self) -> SparseMatrix:
        return SparseMatrix._trusted(self.field, self.ambient_dim, len(self.vectors), self.vectors)

    @cached_property
    def _decomp(self):
        return decompose(self.as_matrix())

    def coordinates(self, v: Mapping) -> Optional[Vector]:
        """Coefficients expressing ``v`` in this basis, or None if v is outside the span."""
        return self._decomp.solve(v)

    def contains(self, v: Mapping) -> bool:
        return self._decomp.solve(v) is not None

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


class Decomposition:
    """Rank, kernel, image and a solver for one matrix.

    Rank alone is cheap; kernel and solver trigger a second elimination that
    records the column combination behind each pivot.
    """

    def __init__(self, m: SparseMatrix):
        self.matrix = m
        self._p, self._icols = _field_int_cols(m)

    @cached_property
    def _rank_only(self) -> _Echelon:
        ech = _Echelon(self._p, track=False)
        cols = self._icols
        for j in _column_order(cols):
            if cols[j]:
                ech.add_column(dict(cols[j]), None)
        return ech

    @cached_property
    def _tracked(self):
        ech = _Echelon(self._p, track=True)
        cols = self._icols
        kernel = []
        for j in _column_order(cols):
            rel = ech.add_column(dict(cols[j]), {j: 1})
            if rel is not None:
                kernel.append((j, rel))
        kernel.sort(key=lambda t: t[0])
        return ech, [rel for _, rel in kernel]

    @property
    def rank(self) -> int:
        if "_tracked" in self.__dict__:
            return len(self._tracked[0].pivots)
        return len(self._rank_only.pivots)

    @property
    def nullity(self) -> int:
        return self.matrix.ncols - self.rank

    @cached_property
    def kernel(self) -> SubspaceBasis:
        f = self.matrix.field
        _, rels = self._tracked
        return SubspaceBasis._trusted(f, self.matrix.ncols, [_from_ints(f, r) for r in rels])

    @cached_property
    def image(self) -> SubspaceBasis:
        f = self.matrix.field
        ech = self._rank_only if "_tracked" not in self.__dict__ else self._tracked[0]
        vecs = [_from_ints(f, ech.pivots[r][0]) for r in sorted(ech.pivots)]
        return SubspaceBasis._trusted(f, self.matrix.nrows, vecs)

    def solve(self, b: Mapping) -> Optional[Vector]:
        """Some x with matrix @ x == b, or None when b is not in the column space."""
        m = self.matrix
        f = m.field
        _check_domain(f, [b])
        for k in b:
            if not 0 <= k < m.nrows:
                raise DimensionError(f"target index {k} out of range for {m.nrows} rows")
        ech, _ = self._tracked
        if self._p:
            vec = _int_vector_p(b, self._p)
            scale = 1
        else:
            vec, scale = _int_vector_q(b)
        vec, hist, scale = ech.reduce(vec, {}, scale)
        if vec:
            return None
        # scale*b + M(hist) == 0
        neg = {k: -v for k, v in hist.items()}
        return _from_ints(f, neg, scale)

    @property
    def solver(self) -> Callable[[Mapping], Optional[Vector]]:
        return self.solve


def decompose(m: SparseMatrix) -> Decomposition:
    return Decomposition(m)


def rank(m: SparseMatrix) -> int:
    return Decomposition(m).rank


# ---------------------------------------------------------------------------
# reduced row echelon form and quotients


def rref(field, vectors: Iterable[Mapping]) -> Dict[int, Vector]:
    """Fully reduced echelon basis of span(vectors): pivot index -> vector with 1 at the pivot."""
    vectors = list(vectors)
    _check_domain(field, vectors)
    p = field.characteristic
    ech = _Echelon(p, track=False)
    for v in sorted(vectors, key=len):
        iv = _int_vector_p(v, p) if p else _int_vector_q(v)[0]
        if iv:
            ech.add_column(iv, None)
    rows: Dict[int, dict] = {}
    for r, (pv, _) in ech.pivots.items():
        if p:
            rows[r] = dict(pv)
        else:
            a = pv[r]
            rows[r] = {k: Fraction(v, a) for k, v in pv.items()}
    for r in sorted(rows, reverse=True):
        row = rows[r]
        for r2 in sorted(k for k in row if k != r and k in rows):
            c = row.get(r2)
            if not c:
                continue
            other = rows[r2]
            for k, v in other.items():
                x = row.get(k, 0) - c * v
                if p:
                    x %= p
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    if p:
        return {r: {k: FpElement(v, p) for k, v in row.items()} for r, row in rows.items()}
    return rows


class Quotient:
    """The quotient ``field^ambient_dim / span(sub)``.

    The quotient basis is the image of the unit vectors indexed by
    ``complement`` (ambient indices that are not pivots of the subspace).
    """

    def __init__(self, field, ambient_dim: int, pivots: Dict[int, Vector]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.pivots = pivots
        self.complement: List[int] = [i for i in range(ambient_dim) if i not in pivots]
        self.position = {c: k for k, c in enumerate(self.complement)}

    @property
    def dim(self) -> int:
        return len(self.complement)

    @property
    def sub_dim(self) -> int:
        return len(self.pivots)

    def project(self, v: Mapping) -> Vector:
        out: Vector = {}
        pos = self.position
        piv = self.pivots
        for k, a in v.items():
            if k in pos:
                j = pos[k]
                s = out.get(j, 0) + a
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
            else:
                for c, b in piv[k].items():
                    if c == k:
                        continue
                    j = pos[c]
                    s = out.get(j, 0) - a * b
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        return out

    def lift(self, coords: Mapping) -> Vector:
        return {self.complement[j]: a for j, a in coords.items() if a}

    @cached_property
    def projection(self) -> SparseMatrix:
        return SparseMatrix._trusted(
            self.field, self.dim, self.ambient_dim, [self.project({i: self.field.one}) for i in range(self.ambient_dim)]
        )

    def contains(self, v: Mapping) -> bool:
        """True when v lies in the subspace being divided out."""
        return not self.project(v)


def independent_extension(field, base: Iterable[Mapping], candidates: Sequence[Mapping]) -> List[int]:
    """Indices of candidates that, taken greedily in order, are independent modulo span(base)."""
    base = list(base)
    _check_domain(field, base)
    _check_domain(field, candidates)
    p = field.characteristic
    conv = (lambda v: _int_vector_p(v, p)) if p else (lambda v: _int_vector_q(v)[0])
    ech = _Echelon(p, track=False)
    for v in base:
        iv = conv(v)
        if iv:
            ech.add_column(iv, None)
    chosen = []
    for i, v in enumerate(candidates):
        iv = conv(v)
        if not iv:
            continue
        rest, _, _ = ech.reduce(iv, None)
        if rest:
            ech.insert(rest, None)
            chosen.append(i)
    return chosen


def quotient_basis(ambient_dim: int, sub, field=None) -> Quotient:
    """Quotient of the ambient space by the span of ``sub``.

    ``sub`` is a SubspaceBasis or a sequence of vectors (then ``field`` is required).
    Vectors need not be independent.
    """
    if isinstance(sub, SubspaceBasis):
        if sub.ambient_dim != ambient_dim:
            raise DimensionError(f"subspace lives in dimension {sub.ambient_dim}, expected {ambient_dim}")
        field = sub.field
        vecs = sub.vectors
    else:
        if field is None:
            raise TypeError("field is required when sub is a plain list of vectors")
        vecs = [dict(v) for v in sub]
    for v in vecs:
        for k in v:
            if not 0 <= k < ambient_dim:
                raise DimensionError(f"vector index {k} outside ambient dimension {ambient_dim}")
    return Quotient(field, ambient_dim, rref(field, vecs))
