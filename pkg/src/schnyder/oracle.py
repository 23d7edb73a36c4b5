"""Brute-force ground truth for small instances.

Everything here is exponential and meant for ``n <= 9``: exhaustive
enumeration of labeled triangulations with a fixed outer face, of their
realizers, of directed cycles, and the colored flip graph.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .flips import colored_flip, is_colored_flippable
from .realizer import (
    Coord,
    Orientation3,
    Realizer,
    from_3_orientation,
    region_sizes,
    root_coordinates,
    validate_realizer,
)
from .triangulation import Triangulation, double_fan, from_faces, quad_of

__all__ = [
    "OracleError",
    "enumerate_triangulations",
    "enumerate_3_orientations",
    "enumerate_realizers",
    "enumerate_realizers_by_parents",
    "all_realizers",
    "directed_cycles",
    "directed_faces",
    "FlipGraph",
    "build_flip_graph",
    "diameter",
    "static_coordinates",
    "glue_into_face",
]

MAX_N = 9
MAX_GRAPH_N = 6


class OracleError(ValueError):
    pass


def enumerate_triangulations(n: int, outer: Sequence[int] = (0, 1, 2)) -> List[Triangulation]:
    """All labeled triangulations on ``n`` vertices with the given outer face.

    Diagonal flips connect them, so a BFS from the double fan reaches all.
    """
    if not 4 <= n <= MAX_N:
        raise OracleError(f"n must be in 4..{MAX_N}, got {n}")
    start = double_fan(n, outer)
    seen = {start.key(): start}
    dq = deque([start])
    while dq:
        t = dq.popleft()
        for u, v in t.interior_edges():
            q = quad_of(t, u, v)
            if t.has_edge(q.w, q.z):
                continue
            t2 = t.copy()
            t2.flip_inplace(u, v)
            k = t2.key()
            if k not in seen:
                seen[k] = t2
                dq.append(t2)
    return [seen[k] for k in sorted(seen)]


def enumerate_3_orientations(t: Triangulation) -> Iterator[Orientation3]:
    """Orientations of the interior edges with out-degree 3 at every interior vertex."""
    outer = set(t.outer)
    edges = list(t.interior_edges())
    n = t.n
    need = [0 if v in outer else 3 for v in range(n)]
    left = [0] * n
    for a, b in edges:
        left[a] += 1
        left[b] += 1
    outdeg = [0] * n
    chosen: List[Tuple[int, int]] = []

    def fits(v: int) -> bool:
        return outdeg[v] <= need[v] <= outdeg[v] + left[v]

    def rec(k: int):
        if k == len(edges):
            yield Orientation3(t, frozenset(chosen))
            return
        a, b = edges[k]
        left[a] -= 1
        left[b] -= 1
        for x, y in ((a, b), (b, a)):
            outdeg[x] += 1
            if fits(x) and fits(y):
                chosen.append((x, y))
                yield from rec(k + 1)
                chosen.pop()
            outdeg[x] -= 1
        left[a] += 1
        left[b] += 1

    yield from rec(0)


def enumerate_realizers(t: Triangulation) -> List[Realizer]:
    if t.n > MAX_N:
        raise OracleError(f"n must be at most {MAX_N}")
    return [from_3_orientation(o) for o in enumerate_3_orientations(t)]


def enumerate_realizers_by_parents(t: Triangulation) -> List[Realizer]:
    """Independent count: choose three coloured parents per vertex and keep valid results."""
    interior = [v for v in range(t.n) if not t.is_outer(v)]
    used = set()
    par = [[-1] * t.n for _ in range(3)]
    out: List[Realizer] = []

    def rec(k: int, c: int) -> None:
        if k == len(interior):
            r = Realizer.from_parents(t, par)
            if validate_realizer(r):
                out.append(r)
            return
        u = interior[k]
        nk, nc = (k, c + 1) if c < 2 else (k + 1, 0)
        for x in t.rot[u]:
            e = (min(u, x), max(u, x))
            if e in used or t.is_outer_edge(u, x):
                continue
            if x in t.outer and x != t.outer[c]:
                continue
            used.add(e)
            par[c][u] = x
            rec(nk, nc)
            par[c][u] = -1
            used.discard(e)

    rec(0, 0)
    return out


def all_realizers(n: int) -> List[Realizer]:
    out = []
    for t in enumerate_triangulations(n):
        out.extend(enumerate_realizers(t))
    return out


def directed_cycles(r: Realizer) -> List[Tuple[int, ...]]:
    """Every simple directed cycle, listed once from its smallest vertex."""
    outs: Dict[int, List[int]] = {}
    for (a, b) in r.edges:
        outs.setdefault(a, []).append(b)
    for v in outs:
        outs[v].sort()
    found = []
    for s in sorted(outs):
        path = [s]
        on = {s}

        def dfs(x: int) -> None:
            for y in outs.get(x, ()):
                if y == s and len(path) >= 3:
                    found.append(tuple(path))
                elif y > s and y not in on:
                    path.append(y)
                    on.add(y)
                    dfs(y)
                    on.discard(y)
                    path.pop()

        dfs(s)
    return found


def directed_faces(r: Realizer) -> List[Tuple[int, int, int]]:
    out = []
    for f in r.base.faces():
        a, b, c = f
        if r.has_arc(a, b) and r.has_arc(b, c) and r.has_arc(c, a):
            out.append((a, b, c))
        elif r.has_arc(b, a) and r.has_arc(c, b) and r.has_arc(a, c):
            out.append((a, c, b))
    return out


# -- flip graph -------------------------------------------------------------------------------

@dataclass
class FlipGraph:
    n: int
    nodes: List[Realizer]
    adj: List[List[int]]
    index: Dict[Tuple, int] = field(default_factory=dict)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def bfs(self, s: int) -> List[int]:
        dist = [-1] * len(self.nodes)
        dist[s] = 0
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    dq.append(y)
        return dist

    def components(self) -> int:
        seen = [False] * len(self.nodes)
        count = 0
        for s in range(len(self.nodes)):
            if seen[s]:
                continue
            count += 1
            for x, d in enumerate(self.bfs(s)):
                if d >= 0:
                    seen[x] = True
        return count

    def distance_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for s in range(len(self.nodes)):
            for d in self.bfs(s):
                if d > 0:
                    hist[d] = hist.get(d, 0) + 1
        return {d: hist[d] // 2 for d in sorted(hist)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "nodes", "edges", "components", "connected", "diameter"])
        comps = self.components()
        w.writerow([self.n, len(self.nodes), self.num_edges, comps, str(comps == 1).lower(), diameter(self)])
        w.writerow([])
        w.writerow(["distance", "pairs"])
        for d, c in self.distance_histogram().items():
            w.writerow([d, c])
        return buf.getvalue()

    def to_dot(self) -> str:
        lines = ["graph flips {"]
        for x in range(len(self.nodes)):
            lines.append(f"  {x};")
        for x, nb in enumerate(self.adj):
            for y in nb:
                if x < y:
                    lines.append(f"  {x} -- {y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_flip_graph(n: int) -> FlipGraph:
    if not 4 <= n <= MAX_GRAPH_N:
        raise OracleError(f"flip graph supported for n in 4..{MAX_GRAPH_N}, got {n}")
    nodes = all_realizers(n)
    index = {r.key(): k for k, r in enumerate(nodes)}
    adj: List[set] = [set() for _ in nodes]
    for k, r in enumerate(nodes):
        for (u, v) in list(r.edges):
            for op in is_colored_flippable(r, u, v):
                r2 = colored_flip(r, op)
                j = index[r2.key()]
                adj[k].add(j)
                adj[j].add(k)
    return FlipGraph(n, nodes, [sorted(a) for a in adj], index)


def diameter(g: FlipGraph) -> Optional[int]:
    """Largest finite BFS distance; ``None`` if the graph is disconnected."""
    best = 0
    for s in range(len(g.nodes)):
        dist = g.bfs(s)
        if min(dist) < 0:
            return None
        best = max(best, max(dist))
    return best


def static_coordinates(r: Realizer) -> Dict[int, Coord]:
    """Region counts from the literal face walk for every vertex."""
    out = {}
    for v in range(r.n):
        if v in r.outer:
            out[v] = root_coordinates(r.n, r.outer.index(v))
        else:
            out[v] = region_sizes(r, v)
    return out


def glue_into_face(host: Triangulation, face: Sequence[int], guest: Triangulation) -> Triangulation:
    """Insert ``guest`` into the interior face ``face`` of ``host``.

    ``face`` must be counter-clockwise; the guest's outer vertices are
    identified with it in order and its interior vertices get new labels
    after the host's.  The face becomes a separating triangle.
    """
    x, y, z = face
    if frozenset(face) not in {frozenset(f) for f in host.faces()} or host.succ(x, y) != z:
        raise OracleError(f"{tuple(face)} is not a counter-clockwise interior face")
    label = {}
    for g, h in zip(guest.outer, (x, y, z)):
        label[g] = h
    nxt = host.n
    for v in range(guest.n):
        if v not in label:
            label[v] = nxt
            nxt += 1
    key = frozenset((x, y, z))
    faces = [f for f in host.faces() if frozenset(f) != key]
    faces += [tuple(label[a] for a in f) for f in guest.faces()]
    return from_faces(nxt, faces, host.outer)
