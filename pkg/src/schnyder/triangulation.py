"""Planar triangulations stored as rotation systems.

Every vertex keeps the cyclic counter-clockwise list of its neighbours.  The
outer face is the triangle ``(r0, r1, r2)`` listed counter-clockwise, so the
face to the left of the directed edge ``r1 -> r0`` is the unbounded one.

Faces are traced with the left-hand rule: the face to the left of ``u -> v``
is ``(u, v, succ(u, v))`` where ``succ(u, v)`` is the neighbour following
``v`` counter-clockwise around ``u``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

__all__ = [
    "TriangulationError",
    "ParseError",
    "Triangulation",
    "Quadrilateral",
    "parse_triangulation",
    "format_triangulation",
    "from_faces",
    "quad_of",
    "is_diagonal_flippable",
    "diagonal_flip",
    "double_fan",
    "is_double_fan",
    "fan_path",
    "reduce_to_double_fan",
    "random_triangulation",
]


class TriangulationError(ValueError):
    """Raised when a rotation system is not a triangulation with the given outer face."""


class ParseError(ValueError):
    """Raised on malformed input text."""


Edge = Tuple[int, int]


class Triangulation:
    """A maximal planar graph with a fixed outer face.

    Values are treated as immutable by the functional helpers of this module;
    :meth:`flip_inplace` is the single explicit mutator.
    """

    __slots__ = ("n", "rot", "outer", "_adj")

    def __init__(self, rotation: Sequence[Sequence[int]], outer: Sequence[int], validate: bool = True):
        self.n = len(rotation)
        self.rot: List[List[int]] = [list(r) for r in rotation]
        self.outer: Tuple[int, int, int] = tuple(outer)  # type: ignore[assignment]
        self._adj = [set(r) for r in self.rot]
        if validate:
            self.validate()

    # -- basic queries -------------------------------------------------
    def neighbors(self, v: int) -> List[int]:
        return self.rot[v]

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def succ(self, u: int, v: int) -> int:
        """Neighbour of ``u`` right after ``v`` in counter-clockwise order."""
        r = self.rot[u]
        k = r.index(v) + 1
        return r[k] if k < len(r) else r[0]

    def pred(self, u: int, v: int) -> int:
        """Neighbour of ``u`` right before ``v`` in counter-clockwise order."""
        r = self.rot[u]
        return r[r.index(v) - 1]

    def is_outer(self, v: int) -> bool:
        return v in self.outer

    def is_outer_edge(self, u: int, v: int) -> bool:
        return u != v and u in self.outer and v in self.outer

    def edges(self) -> Iterator[Edge]:
        for u, r in enumerate(self.rot):
            for v in r:
                if u < v:
                    yield (u, v)

    def interior_edges(self) -> Iterator[Edge]:
        for u, v in self.edges():
            if not self.is_outer_edge(u, v):
                yield (u, v)

    def num_edges(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    def left_face(self, u: int, v: int) -> Tuple[int, int, int]:
        return (u, v, self.succ(u, v))

    def faces(self) -> List[Tuple[int, int, int]]:
        """All interior faces, each once, rotated so the smallest id comes first."""
        r0, r1, _ = self.outer
        outer = _norm_face(self.left_face(r1, r0))
        seen = set()
        out = []
        for u, r in enumerate(self.rot):
            for v in r:
                f = _norm_face(self.left_face(u, v))
                if f not in seen:
                    seen.add(f)
                    if f != outer:
                        out.append(f)
        return out

    # -- equality / copying ----------------------------------------------
    def key(self) -> Tuple:
        """Canonical form under the fixed vertex labels."""
        rot = []
        for r in self.rot:
            k = r.index(min(r))
            rot.append(tuple(r[k:] + r[:k]))
        return (self.outer, tuple(rot))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n}, outer={self.outer})"

    def copy(self) -> "Triangulation":
        t = Triangulation.__new__(Triangulation)
        t.n = self.n
        t.rot = [list(r) for r in self.rot]
        t.outer = self.outer
        t._adj = [set(a) for a in self._adj]
        return t

    # -- validation ------------------------------------------------------
    def validate(self) -> None:
        n = self.n
        if n < 4:
            raise TriangulationError(f"need at least 4 vertices, got {n}")
        if len(self.outer) != 3 or len(set(self.outer)) != 3:
            raise TriangulationError(f"outer face must be three distinct vertices, got {self.outer}")
        for r in self.outer:
            if not 0 <= r < n:
                raise TriangulationError(f"outer vertex {r} out of range")
        for u, r in enumerate(self.rot):
            if len(r) != len(self._adj[u]):
                raise TriangulationError(f"repeated neighbour in rotation of {u}")
            for v in r:
                if not 0 <= v < n:
                    raise TriangulationError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise TriangulationError(f"self loop at {u}")
                if u not in self._adj[v]:
                    raise TriangulationError(f"edge {u}-{v} is not symmetric")
        m = self.num_edges()
        if m != 3 * n - 6:
            raise TriangulationError(f"edge count {m} != 3n-6 = {3 * n - 6}")
        for u, r in enumerate(self.rot):
            for v in r:
                w = self.succ(u, v)
                if self.succ(v, w) != u or self.succ(w, u) != v:
                    raise TriangulationError(f"face left of {u}->{v} is not a triangle")
                if w == u or w == v:
                    raise TriangulationError(f"degenerate face at {u}->{v}")
        r0, r1, r2 = self.outer
        if not (self.has_edge(r0, r1) and self.has_edge(r1, r2) and self.has_edge(r2, r0)):
            raise TriangulationError("outer vertices are not mutually adjacent")
        if self.succ(r1, r0) != r2:
            raise TriangulationError(f"outer face traced from the rotation system is not {self.outer}")
        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.rot[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != n:
            raise TriangulationError("graph is not connected")

    # -- mutation ----------------------------------------------------------
    def flip_inplace(self, u: int, v: int) -> Tuple[int, int]:
        """Replace diagonal ``uv`` by the other diagonal; returns the new edge ``(w, z)``."""
        q = quad_of(self, u, v)
        w, z = q.w, q.z
        if self.has_edge(w, z):
            raise TriangulationError(f"edge {u}-{v} is not flippable: apexes {w},{z} adjacent")
        self.rot[u].remove(v)
        self.rot[v].remove(u)
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        _insert_between(self.rot[w], u, v, z)
        _insert_between(self.rot[z], u, v, w)
        self._adj[w].add(z)
        self._adj[z].add(w)
        return (w, z)


def _insert_between(r: List[int], a: int, b: int, x: int) -> None:
    # a and b are cyclically consecutive in r
    k = r.index(a)
    nxt = k + 1 if k + 1 < len(r) else 0
    if r[nxt] == b:
        r.insert(k + 1, x)
    elif r[k - 1] == b:
        r.insert(k, x)
    else:
        raise TriangulationError(f"{a} and {b} are not consecutive around the apex")


def _norm_face(f: Tuple[int, int, int]) -> Tuple[int, int, int]:
    a, b, c = f
    if a <= b and a <= c:
        return (a, b, c)
    if b <= a and b <= c:
        return (b, c, a)
    return (c, a, b)


@dataclass(frozen=True)
class Quadrilateral:
    """Diagonal ``uv`` with apexes ``w`` (counter-clockwise after ``v`` around ``u``) and ``z``."""

    u: int
    v: int
    w: int
    z: int


# -- text format ---------------------------------------------------------------

def parse_triangulation(text: str, validate: bool = True) -> Triangulation:
    n: Optional[int] = None
    outer: Optional[Tuple[int, int, int]] = None
    rot: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "n":
                n = int(rest)
            elif head == "outer":
                parts = [int(x) for x in rest.split()]
                if len(parts) != 3:
                    raise ValueError("outer needs three vertices")
                outer = (parts[0], parts[1], parts[2])
            elif head == "rot":
                vs, sep, nbrs = rest.partition(":")
                if not sep:
                    raise ValueError("missing ':'")
                v = int(vs)
                if v in rot:
                    raise ValueError(f"duplicate rotation for {v}")
                rot[v] = [int(x) for x in nbrs.split()]
            else:
                raise ValueError(f"unknown directive {head!r}")
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    if n is None or outer is None:
        raise ParseError("missing 'n' or 'outer' line")
    if sorted(rot) != list(range(n)):
        raise ParseError(f"rotation lines must cover vertices 0..{n - 1}")
    return Triangulation([rot[v] for v in range(n)], outer, validate=validate)


def format_triangulation(t: Triangulation) -> str:
    lines = [f"n {t.n}", "outer " + " ".join(map(str, t.outer))]
    for v, r in enumerate(t.rot):
        lines.append(f"rot {v}: " + " ".join(map(str, r)))
    return "\n".join(lines) + "\n"


def from_faces(n: int, faces: Iterable[Sequence[int]], outer: Sequence[int], validate: bool = True) -> Triangulation:
    """Build a triangulation from its counter-clockwise interior faces.

    The outer face is added automatically.
    """
    r0, r1, r2 = outer
    succ: List[dict] = [dict() for _ in range(n)]
    for a, b, c in list(faces) + [(r1, r0, r2)]:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if y in succ[x]:
                raise TriangulationError(f"directed edge {x}->{y} used by two faces")
            succ[x][y] = z
    rot = []
    for v in range(n):
        s = succ[v]
        if not s:
            raise TriangulationError(f"vertex {v} is isolated")
        start = min(s)
        r = [start]
        x = s[start]
        while x != start:
            r.append(x)
            if len(r) > len(s):
                raise TriangulationError(f"faces around {v} do not close up")
            x = s[x]
        if len(r) != len(s):
            raise TriangulationError(f"vertex {v} is not a manifold point")
        rot.append(r)
    return Triangulation(rot, outer, validate=validate)


# -- flips -----------------------------------------------------------------------

def quad_of(t: Triangulation, u: int, v: int) -> Quadrilateral:
    if not (0 <= u < t.n and 0 <= v < t.n) or not t.has_edge(u, v):
        raise TriangulationError(f"{u}-{v} is not an edge")
    if t.is_outer_edge(u, v):
        raise TriangulationError(f"{u}-{v} is an outer edge")
    return Quadrilateral(u, v, t.succ(u, v), t.pred(u, v))


def is_diagonal_flippable(t: Triangulation, u: int, v: int) -> bool:
    q = quad_of(t, u, v)
    return not t.has_edge(q.w, q.z)


def diagonal_flip(t: Triangulation, u: int, v: int) -> Triangulation:
    if not is_diagonal_flippable(t, u, v):
        raise TriangulationError(f"edge {u}-{v} is not flippable")
    s = t.copy()
    s.flip_inplace(u, v)
    return s


# -- double fan ------------------------------------------------------------------

def double_fan(n: int, outer: Sequence[int] = (0, 1, 2), path: Optional[Sequence[int]] = None) -> Triangulation:
    """Triangulation where r0 and r1 see every vertex and the rest is a path from r2.

    ``path`` lists the interior vertices in order starting next to r2; by
    default the remaining ids in increasing order.
    """
    r0, r1, r2 = outer
    if path is None:
        path = [v for v in range(n) if v not in outer]
    p = [r2] + list(path)
    if len(p) != n - 2:
        raise TriangulationError("path must contain every interior vertex once")
    faces = []
    for a, b in zip(p, p[1:]):
        faces.append((r0, b, a))
        faces.append((r1, a, b))
    faces.append((r0, r1, p[-1]))
    return from_faces(n, faces, outer)


def fan_path(t: Triangulation) -> Optional[List[int]]:
    """Interior vertices of a double fan in path order from r2, or None."""
    r0, r1, r2 = t.outer
    if t.degree(r0) != t.n - 1 or t.degree(r1) != t.n - 1:
        return None
    rest = [[x for x in t.rot[v] if x != r0 and x != r1] for v in range(t.n)]
    if len(rest[r2]) != 1:
        return None
    path = []
    prev, cur = r2, rest[r2][0]
    while True:
        path.append(cur)
        nxt = [x for x in rest[cur] if x != prev]
        if len(nxt) > 1:
            return None
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return path if len(path) == t.n - 3 else None


def is_double_fan(t: Triangulation) -> bool:
    return fan_path(t) is not None


def _raise_degree(t: Triangulation, hub: int, forbidden: int) -> List[Edge]:
    """Flip edges until ``hub`` is adjacent to every vertex.

    Edges incident to ``forbidden`` are never flipped.  A flip of an edge
    opposite ``hub`` raises its degree by one.  When no such flip exists the
    missing vertices are hidden behind chords of the link of ``hub``; the
    chord with the shortest arc is flipped, which brings a hidden vertex one
    step closer to the link.
    """
    flips: List[Edge] = []
    while t.degree(hub) < t.n - 1:
        best = None
        for a in t.rot[hub]:
            b = t.succ(hub, a)
            # face (hub, a, b); the edge ab is opposite hub
            if t.is_outer_edge(a, b) or forbidden in (a, b):
                continue
            z = t.succ(b, a)
            if z == hub or t.has_edge(hub, z):
                continue
            cand = (min(a, b), max(a, b))
            if best is None or cand < best:
                best = cand
        if best is None:
            best = _shortest_chord(t, hub, forbidden)
        t.flip_inplace(*best)
        flips.append(best)
    return flips


def _shortest_chord(t: Triangulation, hub: int, forbidden: int) -> Edge:
    link = t.rot[hub]
    pos = {x: k for k, x in enumerate(link)}
    d = len(link)
    best = None
    for x in link:
        if x == forbidden:
            continue
        for y in t.rot[x]:
            if y not in pos or y == hub or y == forbidden or t.is_outer_edge(x, y):
                continue
            p = t.succ(x, y)  # far apex
            q = t.succ(y, x)  # apex on the side of the arc
            if p == hub or p in pos or q not in pos or t.has_edge(p, q):
                continue
            # arc from x to y through q, counted along the link
            fwd = (pos[y] - pos[x]) % d
            arc = fwd if (pos[q] - pos[x]) % d < fwd else d - fwd
            key = (arc, min(x, y), max(x, y))
            if best is None or key < best:
                best = key
    if best is None:
        raise TriangulationError(f"no flip found to raise the degree of {hub}")
    return (best[1], best[2])


def reduce_to_double_fan(t: Triangulation) -> List[Edge]:
    """Diagonal flips (as undirected edges, in order) taking ``t`` to a double fan.

    First r0 is made adjacent to every vertex, then r1 without touching
    edges at r0.  What remains is a double fan.
    """
    s = t.copy()
    r0, r1, _ = s.outer
    flips = _raise_degree(s, r0, forbidden=-1)
    flips += _raise_degree(s, r1, forbidden=r0)
    return flips


def random_triangulation(n: int, rng: Optional[random.Random] = None, mix: Optional[int] = None) -> Triangulation:
    """Random triangulation: stack vertices into random faces, then random diagonal flips.

    Outer face is ``(0, 1, 2)``.  ``mix`` defaults to ``2 * n`` attempted flips.
    """
    if n < 4:
        raise TriangulationError("need n >= 4")
    rng = rng or random.Random()
    faces = [(0, 1, 3), (1, 2, 3), (2, 0, 3)]
    for x in range(4, n):
        k = rng.randrange(len(faces))
        a, b, c = faces[k]
        faces[k] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    t = from_faces(n, faces, (0, 1, 2), validate=False)
    edges = list(t.interior_edges())
    for _ in range(2 * n if mix is None else mix):
        k = rng.randrange(len(edges))
        u, v = edges[k]
        q = quad_of(t, u, v)
        if not t.has_edge(q.w, q.z):
            t.flip_inplace(u, v)
            edges[k] = (q.w, q.z)
    return t
