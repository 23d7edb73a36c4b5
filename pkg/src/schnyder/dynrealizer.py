"""Realizer with O(log n) colored flips and coordinate queries.

One dynamic forest per colour holds the tree ``T_c``.  Every vertex keeps
its initial region counts ``init``; forest ``c`` carries two costs, ``r``
(accumulated region correction) and ``d`` (depth in ``T_c``).  Coordinate
``k`` of ``u`` is ``init_k(u) + r_{k+1}(u) - r_{k-1}(u)``.

A flip of ``u -> v`` (colour ``i``) supported by ``w -> u`` (colour ``j``)
moves ``u`` under ``w`` in ``F_i`` and ``w`` under ``z`` in ``F_j``.  With
``U, W, Z`` the coordinates of ``u, w, z`` before the flip, the region
corrections added to the moved subtrees are::

    kind  c(u)                     c(w), u->z       c(w), z->u
    f1    U[i+1] - W[i+1] + 1      -1               U[i] - Z[i]
    f2    W[i-1] - U[i-1] + 1       0               Z[i] - U[i] + 1

This table was checked against a full recount of regions for every flip of
every realizer with at most 7 vertices.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .dynforest import DynForest
from .realizer import Coord, Realizer, RealizerError, barycentric, validate_realizer
from .triangulation import Triangulation

__all__ = ["DynRealizerError", "DynRealizer", "flip_corrections"]


class DynRealizerError(ValueError):
    pass


def flip_corrections(kind: str, i: int, U: Coord, W: Coord, Z: Coord, uz: bool) -> Tuple[int, int]:
    """``(c(u), c(w))`` for a flip with pre-flip coordinates ``U, W, Z``."""
    if kind == "f1":
        cu = U[(i + 1) % 3] - W[(i + 1) % 3] + 1
        cw = -1 if uz else U[i] - Z[i]
    else:
        cu = W[(i - 1) % 3] - U[(i - 1) % 3] + 1
        cw = 0 if uz else Z[i] - U[i] + 1
    return cu, cw


class DynRealizer:
    def __init__(self, n: int, outer: Tuple[int, int, int], parents: List[List[int]],
                 init: List[Coord], base: Optional[Triangulation] = None, seed: int = 0):
        self.n = n
        self.outer = tuple(outer)
        self.par = [list(p) for p in parents]
        self.init = list(init)
        self.base = base
        self._interior = [x for x in range(n) if x not in self.outer]
        self.forests = [
            DynForest.from_parents(self.par[c], d=_depths(self.par[c], n), seed=seed + c) for c in range(3)
        ]

    @classmethod
    def build(cls, r: Realizer, track_base: bool = True, validate: bool = True) -> "DynRealizer":
        if validate:
            res = validate_realizer(r)
            if not res:
                raise RealizerError(f"invalid realizer: {res.message}")
        base = r.base.copy() if track_base else None
        return cls(r.n, r.outer, r.parents, barycentric(r), base)

    # -- queries ---------------------------------------------------------------------------

    def _arc_color(self, u: int, v: int) -> int:
        par = self.par
        for c in range(3):
            if par[c][u] == v:
                return c
        return -1

    def label(self, u: int, v: int) -> int:
        c = self._arc_color(u, v)
        if c < 0:
            c = self._arc_color(v, u)
            if c < 0:
                raise DynRealizerError(f"{u}-{v} is not an interior edge")
        return c

    def orientation(self, u: int, v: int) -> Tuple[int, int]:
        if self._arc_color(u, v) >= 0:
            return (u, v)
        if self._arc_color(v, u) >= 0:
            return (v, u)
        raise DynRealizerError(f"{u}-{v} is not an interior edge")

    def coordinates(self, u: int) -> Coord:
        if not 0 <= u < self.n:
            raise DynRealizerError(f"vertex {u} out of range")
        F0, F1, F2 = self.forests
        r0, r1, r2 = F0.get_r(u), F1.get_r(u), F2.get_r(u)
        a, b, c = self.init[u]
        return (a + r1 - r2, b + r2 - r0, c + r0 - r1)

    def least_common(self, i: int, u: int, v: int) -> Optional[int]:
        return self.forests[i % 3].lca(u, v)

    def depth(self, i: int, u: int) -> int:
        return self.forests[i % 3].get_d(u)

    def parent(self, i: int, u: int) -> int:
        return self.par[i % 3][u]

    def snapshot(self) -> Realizer:
        if self.base is None:
            raise DynRealizerError("built without the triangulation; snapshot unavailable")
        return Realizer.from_parents(self.base.copy(), self.par)

    # -- updates -----------------------------------------------------------------------------

    def flip(self, u: int, v: int, w: int, z: int) -> str:
        """Colored flip of ``u -> v`` supported by ``w -> u``; returns the kind."""
        i = self._arc_color(u, v)
        if i < 0:
            raise DynRealizerError(f"{u}->{v} is not an arc")
        j = self._arc_color(w, u)
        if j < 0:
            raise DynRealizerError(f"{w}->{u} is not an arc")
        if j == (i - 1) % 3:
            kind = "f1"
        elif j == (i + 1) % 3:
            kind = "f2"
        else:
            raise DynRealizerError(f"{w}->{u} and {u}->{v} have the same colour")
        if self._arc_color(u, z) < 0 and self._arc_color(z, u) < 0:
            raise DynRealizerError(f"{u}-{z} is not an interior edge")
        t = self.base
        if t is not None:
            if {t.succ(u, v), t.pred(u, v)} != {w, z}:
                raise DynRealizerError(f"{w},{z} are not the apexes of {u}-{v}")
            if t.has_edge(w, z):
                raise DynRealizerError(f"{u}-{v} is not flippable")
        uz = self._arc_color(u, z) >= 0
        U, W, Z = self.coordinates(u), self.coordinates(w), self.coordinates(z)
        cu, cw = flip_corrections(kind, i, U, W, Z, uz)
        Fi, Fj = self.forests[i], self.forests[j]
        du = Fi.get_d(w) - Fi.get_d(u) + 1
        dw = Fj.get_d(z) - Fj.get_d(w) + 1
        Fi.move(u, w, cu, du)
        Fj.move(w, z, cw, dw)
        self.par[i][u] = w
        self.par[j][w] = z
        if t is not None:
            t.flip_inplace(u, v)
        return kind

    def flip_sites(self, u: int, v: int) -> List[Tuple[int, int, int, int]]:
        """Valid flips of the arc ``u -> v`` in the current state (needs the triangulation)."""
        t = self.base
        if t is None:
            raise DynRealizerError("built without the triangulation")
        i = self._arc_color(u, v)
        if i < 0:
            return []
        w, z = t.succ(u, v), t.pred(u, v)
        if t.has_edge(w, z):
            return []
        out = []
        for a, b in ((w, z), (z, w)):
            c = self._arc_color(a, u)
            if c >= 0 and c != i:
                out.append((u, v, a, b))
        return out

    def random_flip(self, rng: random.Random, tries: int = 1000) -> Optional[Tuple[int, int, int, int]]:
        """Pick and apply a uniformly drawn valid flip among random probes."""
        interior = self._interior
        for _ in range(tries):
            u = interior[rng.randrange(len(interior))]
            v = self.par[rng.randrange(3)][u]
            sites = self.flip_sites(u, v)
            if sites:
                site = sites[rng.randrange(len(sites))]
                self.flip(*site)
                return site
        return None


def _depths(par: List[int], n: int) -> List[int]:
    depth = [-1] * n
    for u in range(n):
        path = []
        x = u
        while x >= 0 and depth[x] < 0:
            path.append(x)
            x = par[x]
        d = 0 if x < 0 else depth[x] + 1
        for y in reversed(path):
            depth[y] = d
            d += 1
    return depth
