"""Chevalley-Eilenberg, Leibniz, Hochschild and Connes cyclic complexes.

Conventions (chains, all degrees start at 0):

* CE:        C_n = Lambda^n g, basis = strictly increasing index tuples,
             d(x_1^...^x_n) = sum_{i<j} (-1)^{i+j} [x_i,x_j]^x_1^..^x_i^..^x_j^..^x_n
* Leibniz:   C_n = g^{(x)n}, lexicographic tuples,
             d(x_1..x_n) = sum_{i<j} (-1)^j x_1..x_{i-1} [x_i,x_j] x_{i+1}..^x_j..x_n
* Hochschild: C_n = R^{(x)(n+1)}, the usual b.
* Connes:    C^lambda_n = C_n / (1 - t),  t(a_0..a_n) = (-1)^n a_n a_0 .. a_{n-1}.

Degree 0 of CE and Leibniz is the ground field, so H_0 = 1.
"""

from __future__ import annotations

import itertools
import json
import os
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .algebra import StructureConstantAlgebra
from .complexes import ChainComplex, homology
from .errors import BudgetExceeded, InvariantViolation
from .linalg import SparseMatrix, vec_axpy

DEFAULT_BUDGET = 250_000
THEORIES = ("ce", "leibniz", "hochschild", "cyclic")


def _budget_check(size, budget, what):
    if budget is not None and size > budget:
        raise BudgetExceeded(f"{what} needs {size} basis elements, budget is {budget}")


def _finish(field, keys, cols, labels, max_degree, name):
    dims = {n: len(keys[n]) for n in keys}
    ds = {n: SparseMatrix._trusted(field, dims[n - 1], dims[n], cols[n]) for n in cols}
    c = ChainComplex(field, dims, ds, labels, top_truncated=True, check=True)
    c.basis_keys = keys
    c.name = name
    return c


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg


def wedge_product_vec(g, u: dict, v: dict, index2: dict) -> dict:
    """u ^ v in Lambda^2 g, in the basis indexed by ``index2``."""
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            if i == j:
                continue
            if i < j:
                vec_axpy(out, a * b, {index2[(i, j)]: 1})
            else:
                vec_axpy(out, -(a * b), {index2[(j, i)]: 1})
    return out


def tensor_product_vec(g, u: dict, v: dict, index2: dict) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            vec_axpy(out, a * b, {index2[(i, j)]: 1})
    return out


def ce_complex(g: StructureConstantAlgebra, max_degree: int, budget: Optional[int] = DEFAULT_BUDGET) -> ChainComplex:
    """Lambda^0..Lambda^{max_degree+1}; homology is valid through ``max_degree``."""
    if g.kind != "lie":
        raise InvariantViolation(f"Chevalley-Eilenberg complex needs a Lie algebra, got {g.kind}")
    n = g.dim
    top = max_degree + 1
    keys = {}
    for k in range(0, top + 1):
        size = _binom(n, k)
        _budget_check(size, budget, f"Lambda^{k} of a {n}-dim algebra")
        keys[k] = list(itertools.combinations(range(n), k))
    labels = {k: ["^".join(g.labels[i] for i in t) or "1" for t in keys[k]] for k in keys}
    cols = {}
    prods = g.products
    for k in range(2, top + 1):
        index = {t: i for i, t in enumerate(keys[k - 1])}
        colk = []
        for t in keys[k]:
            col: dict = {}
            for p in range(k):
                for q in range(p + 1, k):
                    br = prods.get((t[p], t[q]))
                    if not br:
                        continue
                    rest = t[:p] + t[p + 1:q] + t[q + 1:]
                    s0 = -1 if (p + q) % 2 else 1
                    for m, c in br.items():
                        pos = bisect_left(rest, m)
                        if pos < len(rest) and rest[pos] == m:
                            continue
                        key = rest[:pos] + (m,) + rest[pos:]
                        coeff = c if (s0 * (1 if pos % 2 == 0 else -1)) > 0 else -c
                        r = index[key]
                        x = col.get(r, 0) + coeff
                        if x:
                            col[r] = x
                        else:
                            del col[r]
            colk.append(col)
        cols[k] = colk
    return _finish(g.field, keys, cols, labels, max_degree, f"CE({g.name})")


def _binom(n, k):
    from math import comb

    return comb(n, k) if 0 <= k <= n else 0


# ---------------------------------------------------------------------------
# Leibniz


def leibniz_complex(g: StructureConstantAlgebra, max_degree: int, budget: Optional[int] = DEFAULT_BUDGET) -> ChainComplex:
    if g.kind not in ("leibniz", "lie"):
        raise InvariantViolation(f"Leibniz complex needs a Leibniz or Lie algebra, got {g.kind}")
    n = g.dim
    top = max_degree + 1
    keys = {}
    for k in range(0, top + 1):
        _budget_check(n ** k, budget, f"degree {k} tensor power of a {n}-dim algebra")
        keys[k] = list(itertools.product(range(n), repeat=k))
    labels = {k: ["|".join(g.labels[i] for i in t) or "1" for t in keys[k]] for k in keys}
    cols = {}
    prods = g.products
    for k in range(2, top + 1):
        # lexicographic tuples: index = sum t_i n^(k-1-i)
        colk = []
        for t in keys[k]:
            col: dict = {}
            for j in range(1, k):
                sj = -1 if (j + 1) % 2 else 1  # (-1)^j with 1-based j
                for i in range(j):
                    br = prods.get((t[i], t[j]))
                    if not br:
                        continue
                    rest = t[:j] + t[j + 1:]
                    for m, c in br.items():
                        key = rest[:i] + (m,) + rest[i + 1:]
                        r = 0
                        for x in key:
                            r = r * n + x
                        v = col.get(r, 0) + (c if sj > 0 else -c)
                        if v:
                            col[r] = v
                        else:
                            del col[r]
            colk.append(col)
        cols[k] = colk
    return _finish(g.field, keys, cols, labels, max_degree, f"Leib({g.name})")


# ---------------------------------------------------------------------------
# Hochschild and cyclic


def _require_unital(r: StructureConstantAlgebra):
    if r.kind != "associative":
        raise InvariantViolation(f"Hochschild and cyclic complexes need an associative algebra, got {r.kind}")
    if not r.is_unital:
        raise InvariantViolation("Hochschild and cyclic complexes need a unital algebra")


def _hochschild_boundary_terms(r, t):
    """Terms (coefficient, tuple) of b(a_{t0} (x) ... (x) a_{tn}) before collection."""
    n = len(t) - 1
    prods = r.products
    for i in range(n):
        pr = prods.get((t[i], t[i + 1]))
        if pr:
            s = -1 if i % 2 else 1
            for m, c in pr.items():
                yield (c if s > 0 else -c), t[:i] + (m,) + t[i + 2:]
    pr = prods.get((t[n], t[0]))
    if pr:
        s = -1 if n % 2 else 1
        for m, c in pr.items():
            yield (c if s > 0 else -c), (m,) + t[1:n]


def hochschild_complex(r: StructureConstantAlgebra, max_degree: int, budget: Optional[int] = DEFAULT_BUDGET) -> ChainComplex:
    _require_unital(r)
    d = r.dim
    top = max_degree + 1
    keys = {}
    for k in range(0, top + 1):
        _budget_check(d ** (k + 1), budget, f"Hochschild degree {k} of a {d}-dim algebra")
        keys[k] = list(itertools.product(range(d), repeat=k + 1))
    labels = {k: ["|".join(r.labels[i] for i in t) for t in keys[k]] for k in keys}
    cols = {}
    for k in range(1, top + 1):
        colk = []
        for t in keys[k]:
            col: dict = {}
            for c, u in _hochschild_boundary_terms(r, t):
                idx = 0
                for x in u:
                    idx = idx * d + x
                v = col.get(idx, 0) + c
                if v:
                    col[idx] = v
                else:
                    del col[idx]
            colk.append(col)
        cols[k] = colk
    return _finish(r.field, keys, cols, labels, max_degree, f"HH({r.name})")


def cyclic_class(t: Tuple[int, ...]) -> Tuple[Tuple[int, ...], int]:
    """(representative, sign) with t = sign * representative in C^lambda; sign 0 if the class is zero.

    rot(a_0..a_n) = (a_n, a_0, .., a_{n-1}) and t = (-1)^n rot, so
    rot^s(u) = (-1)^{ns} u in the coinvariants.
    """
    n = len(t) - 1
    best = t
    best_s = 0
    zero = False
    for s in range(1, n + 1):
        rt = t[n + 1 - s:] + t[:n + 1 - s]
        if rt == t and (n * s) % 2:
            zero = True
        if rt < best:
            best, best_s = rt, s
    if zero:
        return best, 0
    return best, (-1 if (n * best_s) % 2 else 1)


def cyclic_complex(r: StructureConstantAlgebra, max_degree: int, budget: Optional[int] = DEFAULT_BUDGET) -> ChainComplex:
    _require_unital(r)
    p = r.field.characteristic
    if p and p <= max_degree + 2:
        raise InvariantViolation(
            f"the Connes quotient complex through degree {max_degree + 1} needs characteristic 0 or p > {max_degree + 2}"
        )
    d = r.dim
    top = max_degree + 1
    keys = {}
    for k in range(0, top + 1):
        _budget_check(d ** (k + 1), budget, f"cyclic degree {k} of a {d}-dim algebra")
        reps = []
        for t in itertools.product(range(d), repeat=k + 1):
            rep, s = cyclic_class(t)
            if rep == t and s != 0:
                reps.append(t)
        keys[k] = reps
    labels = {k: ["|".join(r.labels[i] for i in t) for t in keys[k]] for k in keys}
    cols = {}
    for k in range(1, top + 1):
        index = {t: i for i, t in enumerate(keys[k - 1])}
        colk = []
        for t in keys[k]:
            col: dict = {}
            for c, u in _hochschild_boundary_terms(r, t):
                rep, s = cyclic_class(u)
                if s == 0:
                    continue
                idx = index[rep]
                v = col.get(idx, 0) + (c if s > 0 else -c)
                if v:
                    col[idx] = v
                else:
                    del col[idx]
            colk.append(col)
        cols[k] = colk
    return _finish(r.field, keys, cols, labels, max_degree, f"HC({r.name})")


def theory_complex(theory: str, a: StructureConstantAlgebra, max_degree: int, budget=DEFAULT_BUDGET) -> ChainComplex:
    builders = {
        "ce": ce_complex,
        "leibniz": leibniz_complex,
        "hochschild": hochschild_complex,
        "cyclic": cyclic_complex,
    }
    if theory not in builders:
        raise ValueError(f"unknown theory {theory!r}; expected one of {THEORIES}")
    if theory == "ce" and a.kind == "associative":
        a = a.as_kind("lie")
    if theory == "leibniz" and a.kind == "associative":
        a = a.as_kind("leibniz")
    return builders[theory](a, max_degree, budget)


def theory_homology(theory: str, a: StructureConstantAlgebra, max_degree: int, budget=DEFAULT_BUDGET):
    c = theory_complex(theory, a, max_degree, budget)
    rep = homology(c, range(0, max_degree + 1))
    rep.name = c.name
    return rep


def homology_dim(theory, a, degree, budget=DEFAULT_BUDGET) -> int:
    c = theory_complex(theory, a, degree, budget)
    return homology(c, [degree]).dims[degree]


# ---------------------------------------------------------------------------
# stabilization sweeps

# matrix side theory, ring side theory, ring degree = matrix degree - 1
PAIRS = {
    "lie": ("ce", "cyclic", False),
    "leibniz": ("leibniz", "hochschild", False),
    "uce-lie": ("ce", "cyclic", True),
    "uce-leibniz": ("leibniz", "hochschild", True),
}


@dataclass
class SweepRow:
    n: int
    matrix_dim: Optional[int]
    algebra_dim: int
    truncated: bool = False


@dataclass
class SweepTable:
    ring: str
    pair: str
    degree: int
    ring_degree: int
    ring_dim: Optional[int]
    rows: List[SweepRow] = field(default_factory=list)
    truncated: bool = False

    @property
    def last_two_agree(self) -> bool:
        vals = [r.matrix_dim for r in self.rows if not r.truncated]
        if len(vals) < 2 or self.ring_dim is None:
            return False
        return vals[-1] == vals[-2] == self.ring_dim

    @property
    def final_matches(self) -> bool:
        if not self.rows or self.rows[-1].truncated or self.ring_dim is None:
            return False
        return self.rows[-1].matrix_dim == self.ring_dim

    def to_tsv(self) -> str:
        head = f"# ring={self.ring} pair={self.pair} degree={self.degree} ring_degree={self.ring_degree}\n"
        lines = ["n\tmatrix_side\tring_side\talgebra_dim"]
        ring = "NA" if self.ring_dim is None else str(self.ring_dim)
        for r in self.rows:
            m = "TRUNCATED" if r.truncated else str(r.matrix_dim)
            lines.append(f"{r.n}\t{m}\t{ring}\t{r.algebra_dim}")
        tail = f"# last_two_agree={self.last_two_agree}"
        if self.truncated:
            tail += " truncated=True"
        return head + "\n".join(lines) + "\n" + tail + "\n"

    def to_json(self) -> str:
        payload = {
            "ring": self.ring,
            "pair": self.pair,
            "degree": self.degree,
            "ring_degree": self.ring_degree,
            "ring_side": self.ring_dim,
            "rows": [
                {"n": r.n, "matrix_side": None if r.truncated else r.matrix_dim, "algebra_dim": r.algebra_dim, "truncated": r.truncated}
                for r in self.rows
            ],
            "last_two_agree": self.last_two_agree,
            "truncated": self.truncated,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def matrix_side_algebra(ring: StructureConstantAlgebra, n: int, pair: str) -> StructureConstantAlgebra:
    from .algebra import uce
    from .matrices import MatrixAlgebraSpec, sl

    mtheory, _, use_uce = PAIRS[pair]
    kind = "lie" if mtheory == "ce" else "leibniz"
    g = sl(MatrixAlgebraSpec(ring, n, kind))
    if use_uce:
        g = uce(g, kind).algebra
    return g


def stability_sweep(
    ring: StructureConstantAlgebra,
    pair: str,
    n_range: Sequence[int],
    degree: int,
    budget: Optional[int] = DEFAULT_BUDGET,
    progress=None,
) -> SweepTable:
    """dim H_degree of the matrix side for each n next to the ring side in degree-1.

    A basis exceeding ``budget`` stops the sweep; the table keeps the rows done
    so far plus a truncated row for the failing n.
    """
    if pair not in PAIRS:
        raise ValueError(f"unknown theory pair {pair!r}; expected one of {sorted(PAIRS)}")
    mtheory, rtheory, _ = PAIRS[pair]
    ring_degree = degree - 1
    try:
        ring_dim = homology_dim(rtheory, ring, ring_degree, budget) if ring_degree >= 0 else 0
    except BudgetExceeded:
        ring_dim = None
    table = SweepTable(ring.name, pair, degree, ring_degree, ring_dim)
    for n in n_range:
        g = matrix_side_algebra(ring, n, pair)
        try:
            dim = homology_dim(mtheory, g, degree, budget)
        except BudgetExceeded:
            table.rows.append(SweepRow(n, None, g.dim, truncated=True))
            table.truncated = True
            break
        table.rows.append(SweepRow(n, dim, g.dim))
        if progress is not None:
            progress(table.rows[-1])
    return table


def thread_count() -> int:
    """Worker count from PLUSALG_THREADS (computations here are single-threaded; kept for job specs)."""
    try:
        return max(1, int(os.environ.get("PLUSALG_THREADS", "1")))
    except ValueError:
        return 1


__all__ = [
    "ce_complex",
    "leibniz_complex",
    "hochschild_complex",
    "cyclic_complex",
    "cyclic_class",
    "theory_complex",
    "theory_homology",
    "homology_dim",
    "stability_sweep",
    "SweepTable",
    "SweepRow",
    "PAIRS",
    "DEFAULT_BUDGET",
]
