"""Dynamic rooted forest with subtree cost updates.

Each tree is kept as its Euler tour (an enter token ``2x`` and an exit token
``2x + 1`` per vertex) in a randomized balanced search tree with implicit
keys.  Tokens carry three additive values under lazy tags: the two user
costs ``r`` and ``d`` and the structural depth ``h``.  An exit token stores
``h(x) - 1``, so the minimum depth between the enter tokens of ``u`` and
``v`` sits at their lowest common ancestor.

All operations take O(log n) expected time.
"""

from __future__ import annotations

import random
from typing import List, Optional

__all__ = ["ForestError", "DynForest", "NaiveForest"]

NIL = -1


class ForestError(ValueError):
    pass


class DynForest:
    """Forest on vertices ``0..n-1``, initially all isolated roots with zero costs."""

    def __init__(self, n: int, seed: int = 0x5EED):
        self.n = n
        m = 2 * n
        rng = random.Random(seed)
        self._pri = [rng.random() for _ in range(m)]
        self._L = [NIL] * m
        self._R = [NIL] * m
        self._P = [NIL] * m
        self._sz = [1] * m
        # own values; tags are pending for the children only
        self._vr = [0] * m
        self._vd = [0] * m
        self._vh = [0] * m
        self._mn = [0] * m
        self._am = list(range(m))
        self._tr = [0] * m
        self._td = [0] * m
        self._th = [0] * m
        self._parent = [NIL] * n
        for x in range(n):
            a, b = 2 * x, 2 * x + 1
            self._vh[b] = self._mn[b] = -1
            self._R[a] = b
            self._P[b] = a
            self._sz[a] = 2
            self._mn[a] = -1
            self._am[a] = b

    @classmethod
    def from_parents(cls, parents, r=None, d=None, seed: int = 0x5EED) -> "DynForest":
        """Bulk construction in O(n) from a parent array (-1 for roots)."""
        n = len(parents)
        f = cls(n, seed)
        children: List[List[int]] = [[] for _ in range(n)]
        for x, p in enumerate(parents):
            if p >= 0:
                children[p].append(x)
        f._parent = [p if p >= 0 else NIL for p in parents]
        seen = 0
        for root in range(n):
            if parents[root] >= 0:
                continue
            seq = []
            stack = [(root, 0, False)]
            while stack:
                x, h, done = stack.pop()
                if done:
                    seq.append(2 * x + 1)
                    f._vh[2 * x + 1] = h - 1
                    continue
                seq.append(2 * x)
                f._vh[2 * x] = h
                stack.append((x, h, True))
                for c in reversed(children[x]):
                    stack.append((c, h + 1, False))
            seen += len(seq)
            f._build(seq, r, d)
        if seen != 2 * n:
            raise ForestError("parent array contains a cycle")
        return f

    def _build(self, seq: List[int], r, d) -> int:
        L, R, P, pri = self._L, self._R, self._P, self._pri
        for t in seq:
            L[t] = R[t] = P[t] = NIL
            x = t // 2
            if r is not None:
                self._vr[t] = r[x]
            if d is not None:
                self._vd[t] = d[x]
        # Cartesian tree on priorities
        stack: List[int] = []
        for t in seq:
            last = NIL
            while stack and pri[stack[-1]] < pri[t]:
                last = stack.pop()
            L[t] = last
            if last != NIL:
                P[last] = t
            if stack:
                R[stack[-1]] = t
                P[t] = stack[-1]
            stack.append(t)
        root = stack[0]
        order = []
        todo = [root]
        while todo:
            x = todo.pop()
            order.append(x)
            if L[x] != NIL:
                todo.append(L[x])
            if R[x] != NIL:
                todo.append(R[x])
        for x in reversed(order):
            self._pull(x)
        return root

    # -- treap primitives --------------------------------------------------------------------

    def _apply(self, x: int, r: int, d: int, h: int) -> None:
        self._vr[x] += r
        self._vd[x] += d
        self._vh[x] += h
        self._mn[x] += h
        self._tr[x] += r
        self._td[x] += d
        self._th[x] += h

    def _push(self, x: int) -> None:
        r, d, h = self._tr[x], self._td[x], self._th[x]
        if r or d or h:
            for c in (self._L[x], self._R[x]):
                if c != NIL:
                    self._apply(c, r, d, h)
            self._tr[x] = self._td[x] = self._th[x] = 0

    def _pull(self, x: int) -> None:
        L, R = self._L[x], self._R[x]
        sz = 1
        mn = self._vh[x]
        am = x
        if L != NIL:
            sz += self._sz[L]
            if self._mn[L] <= mn:
                mn, am = self._mn[L], self._am[L]
        if R != NIL:
            sz += self._sz[R]
            if self._mn[R] < mn:
                mn, am = self._mn[R], self._am[R]
        self._sz[x] = sz
        self._mn[x] = mn
        self._am[x] = am

    def _merge(self, a: int, b: int) -> int:
        if a == NIL:
            return b
        if b == NIL:
            return a
        pri, L, R, P = self._pri, self._L, self._R, self._P
        # iterative merge along the right spine of a and the left spine of b
        stack = []
        while a != NIL and b != NIL:
            if pri[a] > pri[b]:
                self._push(a)
                stack.append((a, True))
                a = R[a]
            else:
                self._push(b)
                stack.append((b, False))
                b = L[b]
        sub = a if a != NIL else b
        while stack:
            x, right = stack.pop()
            if right:
                R[x] = sub
            else:
                L[x] = sub
            if sub != NIL:
                P[sub] = x
            self._pull(x)
            sub = x
        P[sub] = NIL
        return sub

    def _split(self, t: int, k: int):
        """Split treap ``t`` into its first ``k`` tokens and the rest."""
        L, R, P, sz = self._L, self._R, self._P, self._sz
        lefts = []   # nodes that end up in the left part, attached via their right child
        rights = []  # nodes that end up in the right part, attached via their left child
        while t != NIL:
            self._push(t)
            ls = sz[L[t]] if L[t] != NIL else 0
            if k <= ls:
                rights.append(t)
                t = L[t]
            else:
                lefts.append(t)
                k -= ls + 1
                t = R[t]
        a = NIL
        for x in reversed(lefts):
            R[x] = a
            if a != NIL:
                P[a] = x
            self._pull(x)
            a = x
        b = NIL
        for x in reversed(rights):
            L[x] = b
            if b != NIL:
                P[b] = x
            self._pull(x)
            b = x
        if a != NIL:
            P[a] = NIL
        if b != NIL:
            P[b] = NIL
        return a, b

    def _root(self, x: int) -> int:
        P = self._P
        while P[x] != NIL:
            x = P[x]
        return x

    def _index(self, x: int) -> int:
        L, P, sz = self._L, self._P, self._sz
        idx = sz[L[x]] if L[x] != NIL else 0
        while P[x] != NIL:
            p = P[x]
            if self._R[p] == x:
                idx += 1 + (sz[L[p]] if L[p] != NIL else 0)
            x = p
        return idx

    def _value(self, x: int, which: List[int], tags: List[int]) -> int:
        val = which[x]
        P = self._P
        x = P[x]
        while x != NIL:
            val += tags[x]
            x = P[x]
        return val

    def _check(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ForestError(f"vertex {u} out of range")

    def _detach(self, c: int) -> int:
        """Cut the tour of ``c``'s subtree out of its treap and return it."""
        a, b = 2 * c, 2 * c + 1
        t = self._root(a)
        i, j = self._index(a), self._index(b)
        left, rest = self._split(t, i)
        mid, right = self._split(rest, j - i + 1)
        self._merge(left, right)
        return mid

    def _attach(self, tour: int, p: int) -> None:
        a = 2 * p
        t = self._root(a)
        left, right = self._split(t, self._index(a) + 1)
        self._merge(self._merge(left, tour), right)

    # -- public operations -----------------------------------------------------------------

    def parent(self, c: int) -> Optional[int]:
        self._check(c)
        p = self._parent[c]
        return None if p == NIL else p

    def same_tree(self, u: int, v: int) -> bool:
        return self._root(2 * u) == self._root(2 * v)

    def link(self, c: int, p: int) -> None:
        self._check(c)
        self._check(p)
        if self._parent[c] != NIL:
            raise ForestError(f"{c} is not a root")
        if self.same_tree(c, p):
            raise ForestError(f"linking {c} under {p} would create a cycle")
        t = self._root(2 * c)
        self._apply(t, 0, 0, self.depth(p) + 1)
        self._attach(t, p)
        self._parent[c] = p

    def cut(self, c: int) -> None:
        self._check(c)
        if self._parent[c] == NIL:
            raise ForestError(f"{c} is a root")
        h = self.depth(c)
        tour = self._detach(c)
        self._apply(tour, 0, 0, -h)
        self._parent[c] = NIL

    def move(self, c: int, p: int, dr: int = 0, dd: int = 0) -> None:
        """Cut ``c``, add ``(dr, dd)`` to its subtree and link it under ``p``."""
        self._check(c)
        self._check(p)
        if self._parent[c] == NIL:
            raise ForestError(f"{c} is a root")
        h = self.depth(c)
        tour = self._detach(c)
        if self._root(2 * p) == tour:
            self._attach(tour, self._parent[c])
            raise ForestError(f"moving {c} under {p} would create a cycle")
        self._apply(tour, dr, dd, self.depth(p) + 1 - h)
        self._attach(tour, p)
        self._parent[c] = p

    def subtree_add(self, s: int, dr: int, dd: int) -> None:
        self._check(s)
        if not (dr or dd):
            return
        a, b = 2 * s, 2 * s + 1
        t = self._root(a)
        i, j = self._index(a), self._index(b)
        left, rest = self._split(t, i)
        mid, right = self._split(rest, j - i + 1)
        self._apply(mid, dr, dd, 0)
        self._merge(self._merge(left, mid), right)

    def get_r(self, u: int) -> int:
        self._check(u)
        return self._value(2 * u, self._vr, self._tr)

    def get_d(self, u: int) -> int:
        self._check(u)
        return self._value(2 * u, self._vd, self._td)

    def depth(self, u: int) -> int:
        """Number of edges from ``u`` up to its tree root."""
        self._check(u)
        return self._value(2 * u, self._vh, self._th)

    def find_root(self, u: int) -> int:
        self._check(u)
        t = self._root(2 * u)
        while True:
            self._push(t)
            if self._L[t] == NIL:
                return t // 2
            t = self._L[t]

    def lca(self, u: int, v: int) -> Optional[int]:
        self._check(u)
        self._check(v)
        a, b = 2 * u, 2 * v
        t = self._root(a)
        if t != self._root(b):
            return None
        i, j = self._index(a), self._index(b)
        if i > j:
            i, j = j, i
        left, rest = self._split(t, i)
        mid, right = self._split(rest, j - i + 1)
        tok = self._am[mid]
        self._merge(self._merge(left, mid), right)
        x = tok // 2
        return x if tok % 2 == 0 else self._parent[x]


class NaiveForest:
    """Reference implementation with parent arrays and explicit walks."""

    def __init__(self, n: int):
        self.n = n
        self._parent: List[Optional[int]] = [None] * n
        self._children: List[set] = [set() for _ in range(n)]
        self.r = [0] * n
        self.d = [0] * n

    def _check(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ForestError(f"vertex {u} out of range")

    def parent(self, c: int) -> Optional[int]:
        self._check(c)
        return self._parent[c]

    def _path(self, u: int) -> List[int]:
        out = [u]
        while self._parent[out[-1]] is not None:
            out.append(self._parent[out[-1]])
        return out

    def find_root(self, u: int) -> int:
        return self._path(u)[-1]

    def same_tree(self, u: int, v: int) -> bool:
        return self.find_root(u) == self.find_root(v)

    def link(self, c: int, p: int) -> None:
        self._check(c)
        self._check(p)
        if self._parent[c] is not None:
            raise ForestError(f"{c} is not a root")
        if self.same_tree(c, p):
            raise ForestError(f"linking {c} under {p} would create a cycle")
        self._parent[c] = p
        self._children[p].add(c)

    def cut(self, c: int) -> None:
        self._check(c)
        p = self._parent[c]
        if p is None:
            raise ForestError(f"{c} is a root")
        self._parent[c] = None
        self._children[p].discard(c)

    def move(self, c: int, p: int, dr: int = 0, dd: int = 0) -> None:
        old = self._parent[c]
        self.cut(c)
        try:
            self.link(c, p)
        except ForestError:
            if old is not None:
                self.link(c, old)
            raise
        self.subtree_add(c, dr, dd)

    def subtree_add(self, s: int, dr: int, dd: int) -> None:
        self._check(s)
        stack = [s]
        while stack:
            x = stack.pop()
            self.r[x] += dr
            self.d[x] += dd
            stack.extend(self._children[x])

    def get_r(self, u: int) -> int:
        self._check(u)
        return self.r[u]

    def get_d(self, u: int) -> int:
        self._check(u)
        return self.d[u]

    def depth(self, u: int) -> int:
        self._check(u)
        return len(self._path(u)) - 1

    def lca(self, u: int, v: int) -> Optional[int]:
        pu = self._path(u)
        on = set(pu)
        for x in self._path(v):
            if x in on:
                return x
        return None
