"""Bounded chain complexes of finite-dimensional vector spaces and their homology.

Chains convention: ``d[n]`` maps degree n to degree n-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .errors import DegreeRangeError, DimensionError, InvariantViolation
from .linalg import SparseMatrix, decompose, independent_extension


class ChainComplex:
    """Spaces ``C_lo .. C_hi`` with differentials ``d[n]: C_n -> C_{n-1}``.

    ``top_truncated`` marks complexes cut off above ``hi``: the differential out
    of ``C_{hi+1}`` is unknown, so homology is only reported below ``hi``.
    """

    def __init__(
        self,
        field,
        dims: Mapping[int, int],
        differentials: Mapping[int, SparseMatrix] = None,
        labels: Mapping[int, Sequence[str]] = None,
        top_truncated: bool = False,
        check: bool = True,
    ):
        if not dims:
            raise DimensionError("a chain complex needs at least one degree")
        self.field = field
        self.lo = min(dims)
        self.hi = max(dims)
        self.dims = {n: int(dims.get(n, 0)) for n in range(self.lo, self.hi + 1)}
        self.top_truncated = top_truncated
        differentials = dict(differentials or {})
        self.d: Dict[int, SparseMatrix] = {}
        for n in range(self.lo + 1, self.hi + 1):
            m = differentials.pop(n, None)
            if m is None:
                m = SparseMatrix.zero(field, self.dims[n - 1], self.dims[n])
            if m.shape != (self.dims[n - 1], self.dims[n]):
                raise DimensionError(
                    f"d_{n} has shape {m.shape}, expected {(self.dims[n - 1], self.dims[n])}"
                )
            if m.field != field:
                raise InvariantViolation(f"d_{n} is over {m.field!r}, complex over {field!r}")
            self.d[n] = m
        for n, m in differentials.items():
            if not m.is_zero():
                raise DimensionError(f"differential d_{n} lies outside degrees [{self.lo}, {self.hi}]")
        self.labels = {n: list(labels[n]) for n in labels} if labels else {}
        self._decomps = {}
        if check:
            self.check()

    def check(self):
        for n in range(self.lo + 2, self.hi + 1):
            comp = self.d[n - 1] @ self.d[n]
            if not comp.is_zero():
                raise InvariantViolation(f"d_{n - 1} o d_{n} != 0 (degree {n})")

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def differential(self, n: int) -> SparseMatrix:
        """d_n, including the zero maps at the ends of the range."""
        if n in self.d:
            return self.d[n]
        return SparseMatrix.zero(self.field, self.dim(n - 1), self.dim(n))

    def decomposition(self, n: int):
        if n not in self._decomps:
            self._decomps[n] = decompose(self.differential(n))
        return self._decomps[n]

    def rank(self, n: int) -> int:
        if n not in self.d:
            return 0
        return self.decomposition(n).rank

    def valid_degrees(self) -> range:
        top = self.hi - 1 if self.top_truncated else self.hi
        return range(self.lo, top + 1)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.dims[n] for n in self.dims)

    def __repr__(self):
        dims = ", ".join(f"{n}:{self.dims[n]}" for n in sorted(self.dims))
        return f"ChainComplex({self.field!r}, {{{dims}}})"


@dataclass
class HomologyReport:
    dims: Dict[int, int]
    representatives: Optional[Dict[int, List[dict]]] = None
    name: str = ""

    def __getitem__(self, n):
        return self.dims[n]

    def degrees(self):
        return sorted(self.dims)

    def as_tuple(self):
        return tuple(self.dims[n] for n in self.degrees())

    def to_rows(self):
        return [(n, self.dims[n]) for n in self.degrees()]

    def to_tsv(self) -> str:
        lines = ["degree\tdimension"]
        lines += [f"{n}\t{d}" for n, d in self.to_rows()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"name": self.name, "homology": [{"degree": n, "dimension": d} for n, d in self.to_rows()]}
        return json.dumps(payload, indent=2, sort_keys=True)


def _degree_list(c: ChainComplex, degrees) -> List[int]:
    if degrees is None:
        return list(c.valid_degrees())
    degs = list(degrees)
    valid = c.valid_degrees()
    for n in degs:
        if n not in valid:
            raise DegreeRangeError(
                f"degree {n} outside the computable range [{valid.start}, {valid.stop - 1}] of this complex"
            )
    return degs


def cycles(c: ChainComplex, n: int) -> List[dict]:
    if n == c.lo:
        one = c.field.one
        return [{i: one} for i in range(c.dim(n))]
    return list(c.decomposition(n).kernel.vectors)


def boundaries(c: ChainComplex, n: int) -> List[dict]:
    if n + 1 > c.hi:
        return []
    return list(c.decomposition(n + 1).image.vectors)


def homology(c: ChainComplex, degrees: Iterable[int] = None, representatives: bool = False) -> HomologyReport:
    """dim H_n = dim C_n - rank d_n - rank d_{n+1} for each requested n."""
    degs = _degree_list(c, degrees)
    dims = {}
    reps = {} if representatives else None
    for n in degs:
        dims[n] = c.dim(n) - c.rank(n) - c.rank(n + 1)
        if representatives:
            z = cycles(c, n)
            b = boundaries(c, n)
            chosen = independent_extension(c.field, b, z)
            reps[n] = [z[i] for i in chosen]
            assert len(reps[n]) == dims[n]
    return HomologyReport(dims, reps)


class ComplexMap:
    """A chain map given by matrices ``maps[n]: source_n -> target_n``."""

    def __init__(self, source: ChainComplex, target: ChainComplex, maps: Mapping[int, SparseMatrix], check=True):
        self.source = source
        self.target = target
        self.maps: Dict[int, SparseMatrix] = {}
        for n in range(source.lo, source.hi + 1):
            m = maps.get(n)
            if m is None:
                m = SparseMatrix.zero(source.field, target.dim(n), source.dim(n))
            if m.shape != (target.dim(n), source.dim(n)):
                raise DimensionError(f"f_{n} has shape {m.shape}, expected {(target.dim(n), source.dim(n))}")
            self.maps[n] = m
        if check:
            self.check()

    def component(self, n):
        if n in self.maps:
            return self.maps[n]
        return SparseMatrix.zero(self.source.field, self.target.dim(n), self.source.dim(n))

    def check(self):
        s, t = self.source, self.target
        for n in range(max(s.lo, t.lo) + 1, min(s.hi, t.hi) + 1):
            lhs = t.differential(n) @ self.component(n)
            rhs = self.component(n - 1) @ s.differential(n)
            if lhs != rhs:
                raise InvariantViolation(f"map does not commute with the differentials in degree {n}")

    @classmethod
    def identity(cls, c: ChainComplex):
        return cls(c, c, {n: SparseMatrix.identity(c.field, c.dim(n)) for n in c.dims})

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex):
        return cls(source, target, {})


def induced_map(f: ComplexMap, degrees: Iterable[int] = None) -> Dict[int, SparseMatrix]:
    """Matrices of H_n(f) in the representative bases chosen by ``homology``."""
    s, t = f.source, f.target
    degs = list(degrees) if degrees is not None else [n for n in s.valid_degrees() if n in t.valid_degrees()]
    hs = homology(s, degs, representatives=True)
    ht = homology(t, degs, representatives=True)
    out = {}
    for n in degs:
        reps_t = ht.representatives[n]
        b = boundaries(t, n)
        nb = len(b)
        cols = []
        if reps_t or b:
            basis = SparseMatrix.from_columns(t.field, t.dim(n), b + reps_t, check=False)
            dec = decompose(basis)
        for r in hs.representatives[n]:
            v = f.component(n).apply(r)
            if not v:
                cols.append({})
                continue
            x = dec.solve(v)
            if x is None:
                raise InvariantViolation(f"image of a cycle is not a cycle in degree {n}")
            cols.append({k - nb: a for k, a in x.items() if k >= nb})
        out[n] = SparseMatrix.from_columns(t.field, len(reps_t), cols, check=False)
    return out


def suspension(c: ChainComplex, n: int) -> ChainComplex:
    """Shift degrees up by n; differentials pick up the sign (-1)^n."""
    sign = -1 if n % 2 else 1
    dims = {k + n: v for k, v in c.dims.items()}
    ds = {k + n: (m if sign == 1 else -m) for k, m in c.d.items()}
    labels = {k + n: v for k, v in c.labels.items()}
    return ChainComplex(c.field, dims, ds, labels, top_truncated=c.top_truncated, check=False)


def complex_from_columns(field, basis_sizes: Mapping[int, int], columns: Mapping[int, Sequence[dict]], **kw):
    """Build a complex from the images ``columns[n][j] = d(e_j)`` in degree n-1."""
    ds = {}
    for n, cols in columns.items():
        ds[n] = SparseMatrix.from_columns(field, basis_sizes[n - 1], cols, check=False)
    return ChainComplex(field, basis_sizes, ds, **kw)


def direct_sum(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    lo = min(a.lo, b.lo)
    hi = max(a.hi, b.hi)
    dims = {n: a.dim(n) + b.dim(n) for n in range(lo, hi + 1)}
    ds = {}
    for n in range(lo + 1, hi + 1):
        da, db = a.differential(n), b.differential(n)
        off = a.dim(n - 1)
        cols = [dict(col) for col in da.columns] + [{i + off: v for i, v in col.items()} for col in db.columns]
        ds[n] = SparseMatrix.from_columns(a.field, dims[n - 1], cols, check=False)
    return ChainComplex(a.field, dims, ds, top_truncated=a.top_truncated or b.top_truncated)


__all__ = [
    "ChainComplex",
    "ComplexMap",
    "HomologyReport",
    "homology",
    "induced_map",
    "suspension",
    "cycles",
    "boundaries",
    "complex_from_columns",
    "direct_sum",
]
