"""Truncated operads: Com, As, Lie, Leib, free operads on Sigma-modules, and a May-axiom checker.

Conventions.  An operation ``o`` of arity n is evaluated as theta(o; v_0..v_{n-1}).
Permutations are tuples ``p`` with ``p[k]`` the image of k, and act on the right
of inputs:

    theta(act(o, s); v) = theta(o; v_{s(0)}, .., v_{s(n-1)})

so ``act(act(o, s), t) = act(o, t s)``.  Partial composition (0-based slot i):

    theta(a o_i b; v) = theta(a; v_0..v_{i-1}, theta(b; v_i..v_{i+m-1}), v_{i+m}, ..)

Every operation in this module has differential degree 0 unless a Sigma-module
declares otherwise (free operads accept even degrees only).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionError, InvariantViolation, TruncationError
from .linalg import QQ, SparseMatrix, quotient_basis, vec_axpy

DEFAULT_ARITY_BOUND = 6
DEFAULT_DEGREE_BOUND = 8

Perm = Tuple[int, ...]


# ---------------------------------------------------------------------------
# permutations


def perm_compose(t: Perm, s: Perm) -> Perm:
    """t after s."""
    return tuple(t[k] for k in s)


def perm_inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for k, v in enumerate(s):
        inv[v] = k
    return tuple(inv)


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def transposition(n: int, j: int) -> Perm:
    p = list(range(n))
    p[j], p[j + 1] = p[j + 1], p[j]
    return tuple(p)


def adjacent_word(s: Perm) -> List[int]:
    """[j1, j2, ..] with s = s_{jr} .. s_{j2} s_{j1}; apply s_{j1} first."""
    cur = list(s)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(cur) - 1):
            if cur[j] > cur[j + 1]:
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                word.append(j)
                changed = True
    return word


def perm_sign(s: Perm) -> int:
    return -1 if len(adjacent_word(s)) % 2 else 1


def block_perm_left(sigma: Perm, i: int, m: int) -> Tuple[int, Perm]:
    """(p, sigma~) with act(a, sigma) o_i b = act(a o_p b, sigma~), where sigma(p) = i."""
    n = len(sigma)
    p = sigma.index(i)

    def e(k):
        return k if k < i else k + m - 1

    out = []
    for q in range(n):
        if q == p:
            out.extend(i + t for t in range(m))
        else:
            out.append(e(sigma[q]))
    return p, tuple(out)


def block_perm_right(n: int, i: int, tau: Perm) -> Perm:
    """tau~ with a o_i act(b, tau) = act(a o_i b, tau~)."""
    m = len(tau)
    out = list(range(n + m - 1))
    for t in range(m):
        out[i + t] = i + tau[t]
    return tuple(out)


# ---------------------------------------------------------------------------
# base class


class Operad:
    """An operad truncated at ``arity_max`` with basis-level composition and action."""

    name = "operad"

    def __init__(self, field=QQ, arity_max: int = DEFAULT_ARITY_BOUND):
        self.field = field
        self.arity_max = arity_max
        self._comp_cache: Dict[tuple, dict] = {}
        self._act_cache: Dict[tuple, dict] = {}

    # subclasses implement these three
    def _dim(self, n: int) -> int:
        raise NotImplementedError

    def _act_basis(self, n: int, b: int, s: Perm) -> dict:
        raise NotImplementedError

    def _compose_basis(self, n: int, a: int, i: int, m: int, b: int) -> dict:
        raise NotImplementedError

    def basis_labels(self, n: int) -> List[str]:
        return [f"{self.name}{n}_{b}" for b in range(self.dim(n))]

    def degree(self, n: int, b: int) -> int:
        return 0

    # -- public surface
    def _bound(self, n):
        if n < 1:
            raise DimensionError(f"arity must be positive, got {n}")
        if n > self.arity_max:
            raise TruncationError(f"arity {n} exceeds the truncation bound {self.arity_max} of {self.name}")

    def dim(self, n: int) -> int:
        self._bound(n)
        if n == 1:
            return 1
        return self._dim(n)

    def dims(self, upto: int = None) -> Dict[int, int]:
        upto = upto or self.arity_max
        return {n: self.dim(n) for n in range(1, upto + 1)}

    def unit(self) -> dict:
        return {0: self.field.one}

    def act(self, n: int, vec: dict, s: Perm) -> dict:
        self._bound(n)
        s = tuple(s)
        if len(s) != n:
            raise DimensionError(f"permutation of length {len(s)} acting in arity {n}")
        if s == identity_perm(n):
            return dict(vec)
        out: dict = {}
        for b, c in vec.items():
            key = (n, b, s)
            r = self._act_cache.get(key)
            if r is None:
                r = self._act_basis(n, b, s) if n > 1 else {0: self.field.one}
                self._act_cache[key] = r
            vec_axpy(out, c, r)
        return out

    def compose(self, n: int, a: dict, i: int, m: int, b: dict) -> dict:
        """a o_i b for a in arity n, b in arity m (0-based slot i)."""
        if not 0 <= i < n:
            raise DimensionError(f"slot {i} out of range for arity {n}")
        self._bound(n + m - 1)
        out: dict = {}
        for x, c in a.items():
            for y, e in b.items():
                if n == 1:
                    r = {y: self.field.one}
                elif m == 1:
                    r = {x: self.field.one}
                else:
                    key = (n, x, i, m, y)
                    r = self._comp_cache.get(key)
                    if r is None:
                        r = self._compose_basis(n, x, i, m, y)
                        self._comp_cache[key] = r
                vec_axpy(out, c * e, r)
        return out

    def gamma(self, k: int, o: dict, parts: Sequence[Tuple[int, dict]]) -> Tuple[int, dict]:
        """gamma(o; o_1, .., o_k) via partial compositions from the right."""
        if len(parts) != k:
            raise DimensionError(f"gamma needs {k} inputs, got {len(parts)}")
        total = sum(m for m, _ in parts)
        self._bound(total)
        cur_n, cur = k, dict(o)
        for j in range(k - 1, -1, -1):
            m, v = parts[j]
            cur = self.compose(cur_n, cur, j, m, v)
            cur_n = cur_n + m - 1
        return cur_n, cur

    def transposition_matrix(self, n: int, j: int) -> SparseMatrix:
        s = transposition(n, j)
        cols = [self.act(n, {b: self.field.one}, s) for b in range(self.dim(n))]
        return SparseMatrix._trusted(self.field, self.dim(n), self.dim(n), cols)

    def __repr__(self):
        return f"{type(self).__name__}(arity_max={self.arity_max})"


# ---------------------------------------------------------------------------
# Com and As


class ComOperad(Operad):
    name = "com"

    def _dim(self, n):
        return 1

    def _act_basis(self, n, b, s):
        return {0: self.field.one}

    def _compose_basis(self, n, a, i, m, b):
        return {0: self.field.one}

    def basis_labels(self, n):
        return ["x0" + "".join(f"x{k}" for k in range(1, n))]


def substitute_word(a: Tuple[int, ...], i: int, b: Tuple[int, ...]) -> Tuple[int, ...]:
    m = len(b)
    out = []
    for x in a:
        if x == i:
            out.extend(i + y for y in b)
        elif x < i:
            out.append(x)
        else:
            out.append(x + m - 1)
    return tuple(out)


class _WordOperad(Operad):
    """Operads whose arity-n basis is the set of words (permutations of 0..n-1)."""

    def __init__(self, field=QQ, arity_max=DEFAULT_ARITY_BOUND):
        super().__init__(field, arity_max)
        self._words: Dict[int, List[Perm]] = {}
        self._word_index: Dict[int, Dict[Perm, int]] = {}

    def words(self, n) -> List[Perm]:
        if n not in self._words:
            w = list(itertools.permutations(range(n)))
            self._words[n] = w
            self._word_index[n] = {x: k for k, x in enumerate(w)}
        return self._words[n]

    def word_index(self, n, w) -> int:
        self.words(n)
        return self._word_index[n][tuple(w)]

    def word_vector(self, n, w) -> dict:
        return {self.word_index(n, w): self.field.one}

    def _dim(self, n):
        return factorial(n)

    def _act_basis(self, n, b, s):
        w = self.words(n)[b]
        return {self.word_index(n, tuple(s[x] for x in w)): self.field.one}

    def basis_labels(self, n):
        return ["".join(f"x{k}" for k in w) for w in self.words(n)]


class AsOperad(_WordOperad):
    """As(n) = k[S_n]; the word w stands for the monomial v_{w_0} v_{w_1} .. v_{w_{n-1}}."""

    name = "as"

    def _compose_basis(self, n, a, i, m, b):
        w = substitute_word(self.words(n)[a], i, self.words(m)[b])
        return {self.word_index(n + m - 1, w): self.field.one}


def _append_bracket(field, p: Dict[Perm, object], q: Dict[Perm, object]) -> Dict[Perm, object]:
    """Right Leibniz bracket [P, Q] in the free Leibniz algebra, elements as word -> coefficient."""
    out: Dict[Perm, object] = {}
    for qw, qc in q.items():
        part = _bracket_word(p, qw)
        for w, c in part.items():
            x = out.get(w, 0) + c * qc
            if x:
                out[w] = x
            else:
                out.pop(w, None)
    return out


def _bracket_word(p: Dict[Perm, object], q: Perm) -> Dict[Perm, object]:
    # [P, v] = P.v ; [P, q'.v] = [[P, q'], v] - [[P, v], q']
    if len(q) == 1:
        return {w + q: c for w, c in p.items()}
    head, v = q[:-1], q[-1:]
    left = _bracket_word(_bracket_word(p, head), v)
    right = _bracket_word(_bracket_word(p, v), head)
    out = dict(left)
    for w, c in right.items():
        x = out.get(w, 0) - c
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return out


class LeibOperad(_WordOperad):
    """Leib(n): multilinear part of the free right Leibniz algebra; word = left-normed bracket."""

    name = "leib"

    def _compose_basis(self, n, a, i, m, b):
        one = self.field.one
        wa = self.words(n)[a]
        inner = {tuple(i + y for y in self.words(m)[b]): one}

        def shift(x):
            return x if x < i else x + m - 1

        factors = [inner if x == i else {(shift(x),): one} for x in wa]
        cur = factors[0]
        for f in factors[1:]:
            cur = _append_bracket(self.field, cur, f)
        return {self.word_index(n + m - 1, w): c for w, c in cur.items() if c}


class LieOperad(Operad):
    """Lie(n) inside As(n), basis [[..[x_0, x_{s_1}], ..], x_{s_{n-1}}].

    Coordinates of a Lie element are read off the coefficients of the
    associative words that start with x_0.
    """

    name = "lie"

    def __init__(self, field=QQ, arity_max=DEFAULT_ARITY_BOUND):
        super().__init__(field, arity_max)
        self.assoc = AsOperad(field, arity_max)
        self._basis: Dict[int, List[Perm]] = {}
        self._index: Dict[int, Dict[Perm, int]] = {}
        self._expansion: Dict[Tuple[int, int], dict] = {}

    def lie_words(self, n) -> List[Perm]:
        if n not in self._basis:
            b = [(0,) + p for p in itertools.permutations(range(1, n))]
            self._basis[n] = b
            self._index[n] = {w: k for k, w in enumerate(b)}
        return self._basis[n]

    def _dim(self, n):
        return factorial(n - 1)

    def basis_labels(self, n):
        out = []
        for w in self.lie_words(n):
            s = f"x{w[0]}"
            for x in w[1:]:
                s = f"[{s},x{x}]"
            out.append(s)
        return out

    def expand(self, n, b) -> dict:
        """As-coordinates of the b-th basis element."""
        key = (n, b)
        if key not in self._expansion:
            one = self.field.one
            w = self.lie_words(n)[b]
            cur = {(w[0],): one}
            for x in w[1:]:
                nxt = {}
                for u, c in cur.items():
                    for v, s in ((u + (x,), c), ((x,) + u, -c)):
                        t = nxt.get(v, 0) + s
                        if t:
                            nxt[v] = t
                        else:
                            nxt.pop(v, None)
                cur = nxt
            self._expansion[key] = {self.assoc.word_index(n, u): c for u, c in cur.items()}
        return self._expansion[key]

    def coordinates(self, n, assoc_vec: dict, check=False) -> dict:
        self.lie_words(n)
        idx = self._index[n]
        words = self.assoc.words(n)
        out = {}
        for k, c in assoc_vec.items():
            w = words[k]
            if w[0] == 0:
                out[idx[w]] = c
        if check:
            back = {}
            for b, c in out.items():
                vec_axpy(back, c, self.expand(n, b))
            diff = dict(back)
            vec_axpy(diff, -self.field.one, assoc_vec)
            if diff:
                raise InvariantViolation("associative element is not a Lie element")
        return out

    def _act_basis(self, n, b, s):
        return self.coordinates(n, self.assoc.act(n, self.expand(n, b), s))

    def _compose_basis(self, n, a, i, m, b):
        v = self.assoc.compose(n, self.expand(n, a), i, m, self.expand(m, b))
        return self.coordinates(n + m - 1, v)


# ---------------------------------------------------------------------------
# Sigma-modules and free operads


class SigmaModule:
    """Generators of a free operad: for each arity n >= 2, graded dimension and adjacent-transposition matrices.

    ``transpositions[n][j]`` is the matrix of o -> act(o, s_j).
    """

    def __init__(self, field, components: Dict[int, Tuple[Sequence[int], Sequence[SparseMatrix]]], check=True):
        self.field = field
        self.components = {}
        for n, (degrees, mats) in sorted(components.items()):
            if n < 2:
                raise DimensionError("Sigma-module generators live in arities >= 2")
            degrees = list(degrees)
            d = len(degrees)
            mats = list(mats)
            if len(mats) != n - 1:
                raise DimensionError(f"arity {n} needs {n - 1} transposition matrices, got {len(mats)}")
            for m in mats:
                if m.shape != (d, d):
                    raise DimensionError(f"transposition matrix in arity {n} has shape {m.shape}, expected {(d, d)}")
            self.components[n] = (degrees, mats)
        if check:
            self.check()

    @classmethod
    def trivial(cls, field, n: int, dim: int = 1, sign: bool = False):
        """``dim`` copies of the trivial (or sign) representation in arity n."""
        c = -field.one if sign else field.one
        m = SparseMatrix._trusted(field, dim, dim, [{k: c} for k in range(dim)])
        return cls(field, {n: ([0] * dim, [m] * (n - 1))})

    @classmethod
    def regular(cls, field, n: int):
        op = AsOperad(field, n)
        return cls(field, {n: ([0] * factorial(n), [op.transposition_matrix(n, j) for j in range(n - 1)])})

    @classmethod
    def from_operad(cls, op: Operad, arities: Sequence[int]):
        comps = {}
        for n in arities:
            comps[n] = ([0] * op.dim(n), [op.transposition_matrix(n, j) for j in range(n - 1)])
        return cls(op.field, comps)

    def dim(self, n) -> int:
        return len(self.components[n][0]) if n in self.components else 0

    def arities(self):
        return sorted(self.components)

    def check(self):
        f = self.field
        for n, (degrees, mats) in self.components.items():
            d = len(degrees)
            ident = SparseMatrix.identity(f, d)
            for j, m in enumerate(mats):
                for col, row_deg in ((c, degrees[k]) for k, c in enumerate(m.columns)):
                    for r in col:
                        if degrees[r] != row_deg:
                            raise InvariantViolation(f"s_{j} in arity {n} does not preserve degrees")
                if m @ m != ident:
                    raise InvariantViolation(f"s_{j} in arity {n} is not an involution")
            for j in range(n - 2):
                a, b = mats[j], mats[j + 1]
                if a @ b @ a != b @ a @ b:
                    raise InvariantViolation(f"braid relation fails for s_{j}, s_{j + 1} in arity {n}")
            for i in range(n - 1):
                for j in range(i + 2, n - 1):
                    if mats[i] @ mats[j] != mats[j] @ mats[i]:
                        raise InvariantViolation(f"s_{i} and s_{j} do not commute in arity {n}")

    def act(self, n, b: int, s: Perm) -> dict:
        vec = {b: self.field.one}
        mats = self.components[n][1]
        for j in adjacent_word(s):
            vec = mats[j].apply(vec)
        return vec


# planar labeled trees: a leaf is an int (its label); a vertex is (arity, generator, children)


def _tree_leaves(t) -> List[int]:
    if isinstance(t, int):
        return [t]
    out = []
    for c in t[2]:
        out.extend(_tree_leaves(c))
    return out


def _tree_relabel(t, f):
    if isinstance(t, int):
        return f(t)
    return (t[0], t[1], tuple(_tree_relabel(c, f) for c in t[2]))


def _tree_graft(t, leaf: int, sub):
    if isinstance(t, int):
        return sub if t == leaf else t
    return (t[0], t[1], tuple(_tree_graft(c, leaf, sub) for c in t[2]))


def tree_to_string(t, labels=None) -> str:
    if isinstance(t, int):
        return str(t + 1)
    name = labels(t[0], t[1]) if labels else f"g{t[0]}_{t[1]}"
    return f"{name}(" + ",".join(tree_to_string(c, labels) for c in t[2]) + ")"


class FreeOperad(Operad):
    """Free operad on a Sigma-module: planar labeled trees modulo the equivariance relations."""

    name = "free"

    def __init__(self, module: SigmaModule, arity_max: int = 5):
        super().__init__(module.field, arity_max)
        for n, (degrees, _) in module.components.items():
            if any(d % 2 for d in degrees):
                raise InvariantViolation("free operads are only built on generators of even degree")
        self.module = module
        self._shapes: Dict[int, List] = {}
        self._ambient: Dict[int, Tuple[List, Dict]] = {}
        self._quot: Dict[int, object] = {}

    def _shapes_of(self, n):
        """Planar trees with n unlabeled leaves (leaf marker -1)."""
        if n in self._shapes:
            return self._shapes[n]
        if n == 1:
            self._shapes[1] = [-1]
            return self._shapes[1]
        out = []
        for k in self.module.arities():
            if k > n:
                continue
            for b in range(self.module.dim(k)):
                for sizes in _compositions(n, k):
                    for kids in itertools.product(*[self._shapes_of(s) for s in sizes]):
                        out.append((k, b, tuple(kids)))
        self._shapes[n] = out
        return out

    def planar_trees(self, n) -> List:
        if n not in self._ambient:
            trees = []
            for shape in self._shapes_of(n):
                for labels in itertools.permutations(range(n)):
                    it = iter(labels)
                    trees.append(_tree_relabel(shape, lambda _: next(it)))
            self._ambient[n] = (trees, {t: k for k, t in enumerate(trees)})
        return self._ambient[n][0]

    def _tree_index(self, n, t) -> int:
        self.planar_trees(n)
        return self._ambient[n][1][t]

    def _relations(self, n):
        f = self.field
        trees = self.planar_trees(n)
        rels = []
        for t in trees:
            for path, node in _internal_nodes(t):
                k, b, kids = node
                for j in range(k - 1):
                    rel: dict = {}
                    image = self.module.act(k, b, transposition(k, j))
                    for b2, c in image.items():
                        t2 = _replace_at(t, path, (k, b2, kids))
                        vec_axpy(rel, c, {self._tree_index(n, t2): f.one})
                    sw = list(kids)
                    sw[j], sw[j + 1] = sw[j + 1], sw[j]
                    t3 = _replace_at(t, path, (k, b, tuple(sw)))
                    vec_axpy(rel, -f.one, {self._tree_index(n, t3): f.one})
                    if rel:
                        rels.append(rel)
        return rels

    def quotient(self, n):
        if n not in self._quot:
            trees = self.planar_trees(n)
            self._quot[n] = quotient_basis(len(trees), self._relations(n), field=self.field)
        return self._quot[n]

    def _dim(self, n):
        return self.quotient(n).dim

    def basis_trees(self, n) -> List:
        trees = self.planar_trees(n)
        return [trees[c] for c in self.quotient(n).complement]

    def basis_labels(self, n):
        return [tree_to_string(t) for t in self.basis_trees(n)]

    def project_tree(self, n, t) -> dict:
        return self.quotient(n).project({self._tree_index(n, t): self.field.one})

    def _lift(self, n, b):
        if n == 1:
            return 0
        return self.planar_trees(n)[self.quotient(n).complement[b]]

    def _act_basis(self, n, b, s):
        t = self._lift(n, b)
        return self.project_tree(n, _tree_relabel(t, lambda x: s[x]))

    def _compose_basis(self, n, a, i, m, b):
        ta = self._lift(n, a)
        tb = self._lift(m, b)
        ta = _tree_relabel(ta, lambda x: x if x < i else (x if x == i else x + m - 1))
        tb = _tree_relabel(tb, lambda x: x + i)
        return self.project_tree(n + m - 1, _tree_graft(ta, i, tb))

    def generator(self, k: int, b: int) -> dict:
        """The one-vertex tree on generator b of arity k, leaves in order."""
        return self.project_tree(k, (k, b, tuple(range(k))))

    def degree(self, n, b):
        t = self._lift(n, b)
        return _tree_degree(t, self.module)


def _tree_degree(t, module):
    if isinstance(t, int):
        return 0
    return module.components[t[0]][0][t[1]] + sum(_tree_degree(c, module) for c in t[2])


def _compositions(n, k):
    """Ordered k-tuples of positive integers summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _internal_nodes(t, path=()):
    if isinstance(t, int):
        return
    yield path, t
    for j, c in enumerate(t[2]):
        yield from _internal_nodes(c, path + (j,))


def _replace_at(t, path, new):
    if not path:
        return new
    kids = list(t[2])
    kids[path[0]] = _replace_at(kids[path[0]], path[1:], new)
    return (t[0], t[1], tuple(kids))


# ---------------------------------------------------------------------------
# construction by name


def classical_operad(name: str, arity_max: int = DEFAULT_ARITY_BOUND, field=QQ) -> Operad:
    table = {"com": ComOperad, "as": AsOperad, "lie": LieOperad, "leib": LeibOperad}
    key = name.lower()
    if key not in table:
        raise ValueError(f"unknown operad {name!r}; expected one of {sorted(table)}")
    return table[key](field, arity_max)


def free_operad(module: SigmaModule, arity_max: int = 5) -> FreeOperad:
    if arity_max > DEFAULT_ARITY_BOUND:
        raise TruncationError(f"free operads are truncated at arity {DEFAULT_ARITY_BOUND}")
    return FreeOperad(module, arity_max)


def binary_operation(op: Operad) -> dict:
    """The arity-2 basis element used as 'the' product: x0 x1, [x0, x1] or the symmetric product."""
    return {0: op.field.one}


# ---------------------------------------------------------------------------
# evaluation on structure-constant algebras


def evaluate(op: Operad, n: int, vec: dict, algebra, args: Sequence[dict]) -> dict:
    """theta(vec; args) in a structure-constant algebra of the matching kind.

    Every basis element of the classical operads is a left-normed product of its
    inputs in some order, so evaluation multiplies from the left.
    """
    if len(args) != n:
        raise DimensionError(f"arity {n} evaluated on {len(args)} arguments")
    out: dict = {}
    for b, c in vec.items():
        if n == 1:
            vec_axpy(out, c, args[0])
            continue
        if isinstance(op, ComOperad):
            w = tuple(range(n))
        elif isinstance(op, _WordOperad):
            w = op.words(n)[b]
        elif isinstance(op, LieOperad):
            w = op.lie_words(n)[b]
        else:
            raise InvariantViolation(f"no evaluation rule for {op.name}")
        cur = args[w[0]]
        for x in w[1:]:
            cur = algebra.mul(cur, args[x])
        vec_axpy(out, c, cur)
    return out


# ---------------------------------------------------------------------------
# May axioms


@dataclass
class MayReport:
    checked: Dict[str, int] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def note(self, kind, ok, msg):
        self.checked[kind] = self.checked.get(kind, 0) + 1
        if not ok:
            self.failures.append(f"{kind}: {msg}")

    def summary(self) -> str:
        counts = ", ".join(f"{k} {v}" for k, v in sorted(self.checked.items()))
        return ("PASS" if self.ok else f"FAIL ({len(self.failures)})") + f" [{counts}]"


def _eq(u, v):
    return not any(u.get(k, 0) - v.get(k, 0) for k in set(u) | set(v))


def check_may_axioms(op: Operad, arity_bound: Optional[int] = None, max_failures: int = 20) -> MayReport:
    """Unit, associativity (sequential and parallel), equivariance and group action on basis elements."""
    bound = min(arity_bound or op.arity_max, op.arity_max)
    rep = MayReport()
    one = op.field.one
    unit = op.unit()
    ar = [n for n in range(2, bound + 1) if op.dim(n) > 0]

    def basis(n):
        return [{b: one} for b in range(op.dim(n))]

    for n in ar:
        for a in basis(n):
            rep.note("unit", _eq(op.compose(1, unit, 0, n, a), a), f"1 o a != a in arity {n}")
            for i in range(n):
                rep.note("unit", _eq(op.compose(n, a, i, 1, unit), a), f"a o_{i} 1 != a in arity {n}")
        # group action
        for s in itertools.permutations(range(n)):
            for t in [transposition(n, j) for j in range(n - 1)]:
                for a in basis(n):
                    lhs = op.act(n, op.act(n, a, s), t)
                    rhs = op.act(n, a, perm_compose(t, s))
                    rep.note("action", _eq(lhs, rhs), f"action is not a left action in arity {n}")
        if len(rep.failures) >= max_failures:
            return rep
    for n in ar:
        for m in ar:
            if n + m - 1 > bound:
                continue
            for a in basis(n):
                for b in basis(m):
                    for i in range(n):
                        ab = op.compose(n, a, i, m, b)
                        # equivariance in the first argument
                        for j in range(n - 1):
                            s = transposition(n, j)
                            lhs = op.compose(n, op.act(n, a, s), i, m, b)
                            p, st = block_perm_left(s, i, m)
                            rhs = op.act(n + m - 1, op.compose(n, a, p, m, b), st)
                            rep.note("equivariance", _eq(lhs, rhs), f"act(a,s_{j}) o_{i} b in arities {n},{m}")
                        for j in range(m - 1):
                            t = transposition(m, j)
                            lhs = op.compose(n, a, i, m, op.act(m, b, t))
                            rhs = op.act(n + m - 1, ab, block_perm_right(n, i, t))
                            rep.note("equivariance", _eq(lhs, rhs), f"a o_{i} act(b,s_{j}) in arities {n},{m}")
                        for l in ar:
                            if n + m + l - 2 > bound:
                                continue
                            for c in basis(l):
                                # sequential
                                for j in range(m):
                                    lhs = op.compose(n + m - 1, ab, i + j, l, c)
                                    rhs = op.compose(n, a, i, m + l - 1, op.compose(m, b, j, l, c))
                                    rep.note("associativity", _eq(lhs, rhs), f"sequential ({n},{m},{l}) slots {i},{j}")
                                # parallel: slots i < k of a
                                for k in range(i + 1, n):
                                    lhs = op.compose(n + m - 1, ab, k + m - 1, l, c)
                                    rhs = op.compose(n + l - 1, op.compose(n, a, k, l, c), i, m, b)
                                    rep.note("associativity", _eq(lhs, rhs), f"parallel ({n},{m},{l}) slots {i},{k}")
                    if len(rep.failures) >= max_failures:
                        return rep
    return rep


__all__ = [
    "Operad",
    "ComOperad",
    "AsOperad",
    "LieOperad",
    "LeibOperad",
    "FreeOperad",
    "SigmaModule",
    "classical_operad",
    "free_operad",
    "binary_operation",
    "evaluate",
    "check_may_axioms",
    "MayReport",
    "perm_compose",
    "perm_inverse",
    "perm_sign",
    "adjacent_word",
    "transposition",
    "identity_perm",
    "block_perm_left",
    "block_perm_right",
]
