"""Schnyder realizers: construction, validation, 3-orientations and regions.

A realizer colours every interior edge of a triangulation with 0, 1 or 2 and
orients it.  Colour ``c`` edges form the tree ``T_c`` rooted at the outer
vertex ``outer[c]``.  Around an interior vertex the counter-clockwise pattern
is::

    out0, in2*, out1, in0*, out2, in1*

Region vectors are integer triples; the barycentric coordinates of a vertex
are its region vector divided by ``n - 1``.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .triangulation import ParseError, Triangulation, format_triangulation, parse_triangulation

__all__ = [
    "RealizerError",
    "Realizer",
    "RealizerCheck",
    "Orientation3",
    "compute_realizer",
    "validate_realizer",
    "to_3_orientation",
    "from_3_orientation",
    "path_of",
    "region_sizes",
    "region_vertices",
    "barycentric",
    "root_coordinates",
    "parse_realizer",
    "format_realizer",
    "load_realizer",
]

Coord = Tuple[int, int, int]


class RealizerError(ValueError):
    pass


class Realizer:
    """A triangulation together with a coloured orientation of its interior edges.

    ``edges`` maps a directed pair ``(tail, head)`` to its colour.  The object
    is treated as immutable; flips return new realizers.
    """

    __slots__ = ("base", "edges", "_par")

    def __init__(self, base: Triangulation, edges: Dict[Tuple[int, int], int]):
        self.base = base
        self.edges = dict(edges)
        self._par: Optional[List[List[int]]] = None

    @classmethod
    def from_parents(cls, base: Triangulation, parents: Sequence[Sequence[int]]) -> "Realizer":
        edges = {}
        for c in range(3):
            for u, p in enumerate(parents[c]):
                if p >= 0:
                    edges[(u, p)] = c
        return cls(base, edges)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def outer(self) -> Tuple[int, int, int]:
        return self.base.outer

    @property
    def parents(self) -> List[List[int]]:
        """``parents[c][u]`` is the head of the colour-``c`` edge leaving ``u`` (-1 if none)."""
        if self._par is None:
            par = [[-1] * self.n for _ in range(3)]
            for (u, v), c in self.edges.items():
                if par[c][u] != -1:
                    raise RealizerError(f"vertex {u} has two outgoing edges of colour {c}")
                par[c][u] = v
            self._par = par
        return self._par

    def parent(self, c: int, u: int) -> int:
        return self.parents[c][u]

    def color(self, u: int, v: int) -> int:
        """Colour of the edge ``uv`` in whichever direction it is oriented."""
        c = self.edges.get((u, v))
        if c is None:
            c = self.edges.get((v, u))
            if c is None:
                raise RealizerError(f"{u}-{v} is not an interior edge")
        return c

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def arcs(self) -> Iterator[Tuple[int, int, int]]:
        for (u, v), c in self.edges.items():
            yield (u, v, c)

    def interior_vertices(self) -> List[int]:
        return [v for v in range(self.n) if v not in self.outer]

    def key(self) -> Tuple:
        return (self.base.key(), tuple(sorted(self.edges.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Realizer):
            return NotImplemented
        return self.edges == other.edges and self.base == other.base

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Realizer(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class RealizerCheck:
    """Outcome of :func:`validate_realizer`; truthy iff the realizer is valid."""

    ok: bool
    condition: Optional[str] = None
    vertex: Optional[int] = None
    message: str = "OK"

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Orientation3:
    """Orientation of the interior edges in which every interior vertex has out-degree 3."""

    base: Triangulation
    arcs: frozenset

    def out_degree(self, v: int) -> int:
        return sum(1 for (a, _) in self.arcs if a == v)


# -- construction -------------------------------------------------------------------

def compute_realizer(t: Triangulation) -> Realizer:
    """Schnyder wood from a canonical vertex ordering.

    Vertices are peeled from the top: r0 first, then repeatedly the smallest
    boundary vertex without chords.  A peeled vertex points to its left and
    right boundary neighbours in colours 1 and 2 and becomes the colour-0
    parent of the vertices it uncovers.
    """
    n = t.n
    r0, r1, r2 = t.outer
    par = [[-1] * n for _ in range(3)]
    removed = [False] * n
    on_bnd = [False] * n
    chords = [0] * n
    nxt = [-1] * n  # boundary path r1 -> r2
    prv = [-1] * n
    heap: List[int] = []

    def uncover(x: int, left: int, right: int) -> None:
        # neighbours of x strictly between left and right, counter-clockwise around x
        ys = []
        y = t.succ(x, left)
        while y != right:
            ys.append(y)
            y = t.succ(x, y)
        chain = [left] + ys + [right]
        for a, b in zip(chain, chain[1:]):
            nxt[a] = b
            prv[b] = a
        if not ys:
            # left-right used to be a chord
            chords[left] -= 1
            chords[right] -= 1
            for q in (left, right):
                if chords[q] == 0:
                    heapq.heappush(heap, q)
        for y in ys:
            par[0][y] = x
            on_bnd[y] = True
            for q in t.rot[y]:
                if on_bnd[q] and not removed[q] and q != prv[y] and q != nxt[y]:
                    chords[y] += 1
                    chords[q] += 1
        for y in ys:
            if chords[y] == 0:
                heapq.heappush(heap, y)

    removed[r0] = True
    on_bnd[r1] = on_bnd[r2] = True
    uncover(r0, r1, r2)
    remaining = n - 3
    while remaining:
        while True:
            if not heap:
                raise RealizerError("canonical ordering got stuck")
            x = heapq.heappop(heap)
            if on_bnd[x] and not removed[x] and chords[x] == 0 and x not in (r1, r2):
                break
        left, right = prv[x], nxt[x]
        removed[x] = True
        on_bnd[x] = False
        par[1][x] = left
        par[2][x] = right
        uncover(x, left, right)
        remaining -= 1
    return Realizer.from_parents(t, par)


# -- validation ---------------------------------------------------------------------------

def validate_realizer(r: Realizer) -> RealizerCheck:
    t = r.base
    n = t.n
    outer = t.outer
    expected = set(t.interior_edges())
    seen = set()
    for (u, v), c in r.edges.items():
        e = (min(u, v), max(u, v))
        if e not in expected:
            return RealizerCheck(False, "coverage", u, f"{u}->{v} is not an interior edge")
        if e in seen:
            return RealizerCheck(False, "coverage", u, f"edge {u}-{v} oriented twice")
        if c not in (0, 1, 2):
            return RealizerCheck(False, "coverage", u, f"{u}->{v} has colour {c}")
        seen.add(e)
    if seen != expected:
        u, v = min(expected - seen)
        return RealizerCheck(False, "coverage", u, f"edge {u}-{v} is not coloured")
    outs: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), c in r.edges.items():
        outs[u].append((v, c))
    for s in outer:
        if outs[s]:
            return RealizerCheck(False, "sink", s, f"outer vertex {s} has an outgoing edge")
    interior = [u for u in range(n) if u not in outer]
    for u in interior:
        cols = sorted(c for _, c in outs[u])
        if cols != [0, 1, 2]:
            dup = [c for c in (0, 1, 2) if cols.count(c) != 1]
            return RealizerCheck(False, "condition-1", u,
                                 f"vertex {u} needs one outgoing edge per colour; colour {dup[0]} appears {cols.count(dup[0])} times")
    for u in interior:
        head = {c: v for v, c in outs[u]}
        rot = t.rot[u]
        k0 = rot.index(head[0])
        seq = rot[k0:] + rot[:k0]
        if seq.index(head[1]) > seq.index(head[2]):
            return RealizerCheck(False, "condition-1", u, f"outgoing colours at {u} are not counter-clockwise 0,1,2")
        # incoming colour i must sit between out_{i+1} and out_{i-1}
        sector = 2
        for x in seq[1:]:
            if x == head[1]:
                sector = 0
                continue
            if x == head[2]:
                sector = 1
                continue
            c = r.edges.get((x, u))
            if c is None:
                return RealizerCheck(False, "condition-2", u, f"edge {x}-{u} should point into {u}")
            if c != sector:
                return RealizerCheck(False, "condition-2", u,
                                     f"incoming edge {x}->{u} of colour {c} lies in the sector of colour {sector}")
    par = r.parents
    for c in range(3):
        root = outer[c]
        state = [0] * n  # 0 unknown, 1 on stack, 2 reaches root
        state[root] = 2
        for s in range(n):
            if s in outer:
                continue
            path = []
            x = s
            while state[x] == 0:
                state[x] = 1
                path.append(x)
                x = par[c][x]
                if x < 0:
                    return RealizerCheck(False, "tree", path[-1], f"colour-{c} path from {s} stops at {path[-1]}")
            if state[x] == 1 or (x in outer and x != root):
                return RealizerCheck(False, "tree", s, f"colour-{c} path from {s} does not reach root {root}")
            for y in path:
                state[y] = 2
    return RealizerCheck(True)


# -- 3-orientations ---------------------------------------------------------------------------

def to_3_orientation(r: Realizer) -> Orientation3:
    return Orientation3(r.base, frozenset(r.edges))


def from_3_orientation(o: Orientation3) -> Realizer:
    """The unique colouring turning a 3-orientation into a realizer.

    Edges into ``r_c`` get colour ``c``; colours then spread backwards along
    arcs, using the sector rule at heads and the cyclic rule at tails.
    """
    t = o.base
    n = t.n
    outer = t.outer
    outs: List[List[int]] = [[] for _ in range(n)]
    for (u, v) in o.arcs:
        outs[u].append(v)
    for v in range(n):
        want = 0 if v in outer else 3
        if len(outs[v]) != want:
            raise RealizerError(f"vertex {v} has out-degree {len(outs[v])}, expected {want}")
    color: Dict[Tuple[int, int], int] = {}
    done = [False] * n
    queue: List[int] = []

    def colour_tail(u: int, v: int, c: int) -> None:
        # fix all outgoing colours of u given u->v has colour c
        if done[u]:
            if color[(u, v)] != c:
                raise RealizerError(f"orientation admits no colouring (conflict at {u})")
            return
        rot = t.rot[u]
        k = rot.index(v)
        seq = rot[k:] + rot[:k]
        heads = [x for x in seq if x in outs[u]]
        for step, x in enumerate(heads):
            color[(u, x)] = (c + step) % 3
        done[u] = True
        queue.append(u)

    for c, root in enumerate(outer):
        for x in t.rot[root]:
            if (x, root) in o.arcs:
                colour_tail(x, root, c)
    while queue:
        v = queue.pop()
        rot = t.rot[v]
        outc = {color[(v, x)]: x for x in outs[v]}
        k = rot.index(outc[0])
        seq = rot[k:] + rot[:k]
        sector = 2
        for x in seq[1:]:
            if x == outc[1]:
                sector = 0
            elif x == outc[2]:
                sector = 1
            elif (x, v) in o.arcs:
                colour_tail(x, v, sector)
    if not all(done[v] for v in range(n) if v not in outer):
        raise RealizerError("orientation admits no colouring (unreachable vertices)")
    r = Realizer(t, color)
    check = validate_realizer(r)
    if not check:
        raise RealizerError(f"orientation admits no colouring: {check.message}")
    return r


# -- paths, regions, coordinates -----------------------------------------------------------

def path_of(r: Realizer, u: int, c: int) -> List[int]:
    """Directed path from ``u`` to the root of ``T_c``."""
    par = r.parents[c]
    path = [u]
    x = u
    while par[x] >= 0:
        x = par[x]
        path.append(x)
        if len(path) > r.n:
            raise RealizerError(f"colour-{c} parents contain a cycle")
    return path


def region_vertices(r: Realizer, u: int, i: int) -> set:
    """Vertex set of ``R_i(u)``: ``P_{i+1}(u)`` minus ``u`` plus the vertices strictly inside.

    Found by walking the faces of the region without crossing its boundary.
    """
    t = r.base
    p_next = path_of(r, u, (i + 1) % 3)
    p_prev = path_of(r, u, (i + 2) % 3)
    wall = set()
    for p in (p_next, p_prev):
        for a, b in zip(p, p[1:]):
            wall.add((a, b))
            wall.add((b, a))
    a = p_next[1]
    start = t.left_face(u, a)
    seen_faces = {frozenset(start)}
    stack = [start]
    verts = set()
    while stack:
        f = stack.pop()
        verts.update(f)
        x, y, z = f
        for a, b in ((x, y), (y, z), (z, x)):
            if (a, b) in wall or t.is_outer_edge(a, b):
                continue
            g = t.left_face(b, a)
            key = frozenset(g)
            if key not in seen_faces:
                seen_faces.add(key)
                stack.append(g)
    boundary = set(p_next) | set(p_prev)
    return (verts - boundary) | (set(p_next) - {u})


def region_sizes(r: Realizer, u: int) -> Coord:
    if u in r.outer:
        raise RealizerError(f"{u} is an outer vertex")
    return tuple(len(region_vertices(r, u, i)) for i in range(3))  # type: ignore[return-value]


def root_coordinates(n: int, c: int) -> Coord:
    """Fixed numerators for the root ``r_c``: ``n-2`` at ``c``, 1 at ``c+1``, 0 at ``c+2``."""
    out = [0, 0, 0]
    out[c] = n - 2
    out[(c + 1) % 3] = 1
    return tuple(out)  # type: ignore[return-value]


def _tree_orders(par: List[int], root: int, n: int) -> List[int]:
    children: List[List[int]] = [[] for _ in range(n)]
    for x, p in enumerate(par):
        if p >= 0:
            children[p].append(x)
    order = [root]
    for x in order:
        order.extend(children[x])
    return order


def barycentric(r: Realizer) -> List[Coord]:
    """Region-vector numerators of every vertex in O(n).

    The interior of ``R_i(u)`` is the union of the colour-``i`` subtrees hanging
    off ``P_{i+1}(u)`` and ``P_{i-1}(u)``, so
    ``|R_i(u)| = depth_{i+1}(u) + sum over those path vertices of (size_i - 1)``.
    """
    n = r.n
    outer = r.outer
    par = r.parents
    orders = [_tree_orders(par[c], outer[c], n) for c in range(3)]
    size = [[0] * n for _ in range(3)]
    depth = [[0] * n for _ in range(3)]
    for c in range(3):
        if len(orders[c]) != n - 2:
            raise RealizerError(f"tree {c} does not span the interior vertices")
        s = size[c]
        for x in reversed(orders[c]):
            s[x] += 1
            p = par[c][x]
            if p >= 0:
                s[p] += s[x]
        d = depth[c]
        for x in orders[c][1:]:
            d[x] = d[par[c][x]] + 1
    # acc[i][k][u]: sum of (size_i - 1) over interior vertices of P_k(u)
    acc = [[[0] * n for _ in range(3)] for _ in range(3)]
    for k in range(3):
        for i in range(3):
            if i == k:
                continue
            a = acc[i][k]
            s = size[i]
            pk = par[k]
            for x in orders[k][1:]:
                a[x] = a[pk[x]] + s[x] - 1
    out: List[Coord] = []
    for u in range(n):
        if u in outer:
            out.append(root_coordinates(n, outer.index(u)))
            continue
        vec = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            vec.append(depth[j][u] + acc[i][j][u] + acc[i][k][u] - (size[i][u] - 1))
        out.append(tuple(vec))  # type: ignore[arg-type]
    return out


# -- text format -----------------------------------------------------------------------------------

def format_realizer(r: Realizer, tri_path: Optional[str] = None) -> str:
    if tri_path is None:
        lines = ["tri inline", format_triangulation(r.base).rstrip("\n"), "end"]
    else:
        lines = [f"tri {tri_path}"]
    for (u, v), c in sorted(r.edges.items()):
        lines.append(f"edge {u} {v} {c}")
    return "\n".join(lines) + "\n"


def parse_realizer(text: str, base_dir: str = ".", validate_base: bool = True) -> Realizer:
    """Parse the ``.real`` format.

    ``tri <path>`` refers to a ``.tri`` file relative to ``base_dir``;
    ``tri inline`` is followed by the ``.tri`` lines up to ``end``.
    """
    lines = text.splitlines()
    k = 0
    base: Optional[Triangulation] = None
    edges: Dict[Tuple[int, int], int] = {}
    while k < len(lines):
        line = lines[k].split("#", 1)[0].strip()
        k += 1
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "tri":
            if base is not None:
                raise ParseError(f"line {k}: second 'tri' header")
            rest = rest.strip()
            if rest == "inline":
                body = []
                while k < len(lines) and lines[k].strip() != "end":
                    body.append(lines[k])
                    k += 1
                if k == len(lines):
                    raise ParseError("inline triangulation is missing 'end'")
                k += 1
                base = parse_triangulation("\n".join(body), validate_base)
            else:
                path = rest if os.path.isabs(rest) else os.path.join(base_dir, rest)
                try:
                    with open(path) as fh:
                        base = parse_triangulation(fh.read(), validate_base)
                except OSError as e:
                    raise ParseError(f"cannot read triangulation {path}: {e}") from None
        elif head == "edge":
            try:
                u, v, c = (int(x) for x in rest.split())
            except ValueError:
                raise ParseError(f"line {k}: expected 'edge <u> <v> <color>'") from None
            if (u, v) in edges:
                raise ParseError(f"line {k}: duplicate edge {u} {v}")
            edges[(u, v)] = c
        else:
            raise ParseError(f"line {k}: unknown directive {head!r}")
    if base is None:
        raise ParseError("missing 'tri' header")
    return Realizer(base, edges)


def load_realizer(path: str, validate_base: bool = True) -> Realizer:
    with open(path) as fh:
        return parse_realizer(fh.read(), os.path.dirname(os.path.abspath(path)), validate_base)
