"""Brute-force reference computations, written independently of the package.

Everything here is dense and uses textbook formulas; it is slow and only meant
for the small inputs used by the tests.
"""

import itertools
from fractions import Fraction
from math import factorial


def dense_rank(rows, p=None):
    """Rank of a list of rows (ints or Fractions) over Q, or over F_p if p is given."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    if p is None:
        m = [[Fraction(x) for x in r] for r in m]
    else:
        m = [[int(x) % p for x in r] for r in m]
    rank = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        if p is None:
            inv = 1 / m[rank][c]
        else:
            inv = pow(m[rank][c], -1, p)
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] * inv
                if p is None:
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
                else:
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def homology_from_dense(dims, mats, p=None):
    """dims[k], mats[k] = d_k as a dims[k-1] x dims[k] list of rows; returns H_k for all k but the top."""
    ks = sorted(dims)
    rk = {k: dense_rank(mats[k], p) if k in mats and dims[k] and dims[k - 1] else 0 for k in ks}
    out = {}
    for k in ks[:-1]:
        out[k] = dims[k] - rk.get(k, 0) - rk.get(k + 1, 0)
    return out


def _sort_sign(seq):
    """Sign of the permutation sorting seq (distinct entries) and the sorted tuple."""
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


def structure_tensor(a):
    """c[i][j] = dict k -> coefficient for the product e_i e_j."""
    return {(i, j): dict(v) for (i, j), v in a.products.items()}


def ce_homology(a, top, p=None):
    """Chevalley-Eilenberg homology H_0..H_top of a Lie algebra via dense matrices."""
    n = a.dim
    c = structure_tensor(a)
    bases = {k: list(itertools.combinations(range(n), k)) for k in range(top + 2)}
    idx = {k: {b: i for i, b in enumerate(bases[k])} for k in bases}
    mats = {}
    for k in range(1, top + 2):
        rows = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for col, x in enumerate(bases[k]):
            for i in range(k):
                for j in range(i + 1, k):
                    br = c.get((x[i], x[j]), {})
                    rest = [x[t] for t in range(k) if t not in (i, j)]
                    for m, coef in br.items():
                        if m in rest:
                            continue
                        sign, key = _sort_sign([m] + rest)
                        s = (-1) ** (i + j) * sign
                        rows[idx[k - 1][key]][col] += s * coef
        mats[k] = rows
    dims = {k: len(bases[k]) for k in bases}
    return homology_from_dense(dims, mats, p)


def leibniz_homology(a, top):
    """Loday homology with d(x1..xk) = sum_{i<j} (-1)^j x1..[xi,xj]..^xj..xk (j 1-based)."""
    n = a.dim
    c = structure_tensor(a)
    bases = {k: list(itertools.product(range(n), repeat=k)) for k in range(top + 2)}
    idx = {k: {b: i for i, b in enumerate(bases[k])} for k in bases}
    mats = {}
    for k in range(1, top + 2):
        rows = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for col, x in enumerate(bases[k]):
            for j in range(2, k + 1):
                for i in range(1, j):
                    for m, coef in c.get((x[i - 1], x[j - 1]), {}).items():
                        y = list(x)
                        y[i - 1] = m
                        del y[j - 1]
                        rows[idx[k - 1][tuple(y)]][col] += (-1) ** j * coef
        mats[k] = rows
    dims = {k: len(bases[k]) for k in bases}
    return homology_from_dense(dims, mats)


def _mul(c, i, j):
    return c.get((i, j), {})


def _hochschild_mats(r, top):
    n = r.dim
    c = structure_tensor(r)
    bases = {k: list(itertools.product(range(n), repeat=k + 1)) for k in range(top + 2)}
    idx = {k: {b: i for i, b in enumerate(bases[k])} for k in bases}
    mats = {}
    for k in range(1, top + 2):
        rows = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for col, x in enumerate(bases[k]):
            for i in range(k):
                for m, coef in _mul(c, x[i], x[i + 1]).items():
                    y = x[:i] + (m,) + x[i + 2:]
                    rows[idx[k - 1][y]][col] += (-1) ** i * coef
            for m, coef in _mul(c, x[k], x[0]).items():
                y = (m,) + x[1:k]
                rows[idx[k - 1][y]][col] += (-1) ** k * coef
        mats[k] = rows
    return bases, idx, mats


def hochschild_homology(r, top):
    bases, _, mats = _hochschild_mats(r, top)
    return homology_from_dense({k: len(v) for k, v in bases.items()}, mats)


def cyclic_homology(r, top):
    """Homology of C_n / (1 - t) C_n with t(a0..an) = (-1)^n (an, a0, .., a_{n-1}); characteristic 0."""
    bases, idx, mats = _hochschild_mats(r, top)
    # columns of the subspace P_n = (1 - t) C_n, as vectors in C_n
    P = {}
    for k, basis in bases.items():
        vecs = []
        for x in basis:
            v = [0] * len(basis)
            v[idx[k][x]] += 1
            y = (x[-1],) + x[:-1]
            v[idx[k][y]] -= (-1) ** k
            vecs.append(v)
        P[k] = vecs
    rankP = {k: dense_rank(P[k]) for k in P}
    dimQ = {k: len(bases[k]) - rankP[k] for k in bases}
    # rank of the induced map Q_k -> Q_{k-1}: rank(b(C_k) + P_{k-1}) - rank(P_{k-1})
    rk = {}
    for k in range(1, top + 2):
        img = [list(col) for col in zip(*mats[k])] if mats[k] else []
        rk[k] = dense_rank(img + P[k - 1]) - rankP[k - 1]
    return {k: dimQ[k] - rk.get(k, 0) - rk.get(k + 1, 0) for k in range(top + 1)}


def commutator_quotient_dim(r):
    """dim R / [R, R]."""
    n = r.dim
    c = structure_tensor(r)
    vecs = []
    for i in range(n):
        for j in range(n):
            v = [0] * n
            for k, a in _mul(c, i, j).items():
                v[k] += a
            for k, a in _mul(c, j, i).items():
                v[k] -= a
            vecs.append(v)
    return n - dense_rank(vecs)


def perfect_radical_dim(a):
    """Iterate I -> span(I I) with dense vectors; for the kinds used here that stays an ideal."""
    n = a.dim
    c = structure_tensor(a)

    def mul(u, v):
        out = [Fraction(0)] * n
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                for k, z in _mul(c, i, j).items():
                    out[k] += x * y * z
        return out

    def ideal_closure(vecs):
        # smallest ideal containing vecs: close under left and right multiplication by basis vectors
        basis = []
        todo = list(vecs)
        while todo:
            v = todo.pop()
            if dense_rank(basis + [v]) > dense_rank(basis):
                basis.append(v)
                for i in range(n):
                    e = [0] * n
                    e[i] = 1
                    todo.append(mul(e, v))
                    todo.append(mul(v, e))
        return basis

    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    while True:
        sq = ideal_closure([mul(u, v) for u in cur for v in cur])
        if dense_rank(sq) == dense_rank(cur):
            return dense_rank(cur)
        cur = sq


def mobius(n):
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def witt(k, n):
    """Dimension of the weight-n part of the free Lie algebra on k generators (of degree 0)."""
    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def operad_dim(name, n):
    return {"as": factorial(n), "com": 1, "lie": factorial(n - 1), "leib": factorial(n)}[name]


def catalan(n):
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def double_factorial_odd(n):
    """(2n-3)!! = number of rooted binary trees with n labeled leaves, non-planar."""
    out = 1
    for k in range(1, 2 * n - 2, 2):
        out *= k
    return out
