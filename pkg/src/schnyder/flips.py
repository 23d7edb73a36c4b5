"""Flips on realizers.

A colored flip replaces the diagonal ``u -> v`` (colour ``i``) of the
quadrilateral ``u w v z`` by ``w -> z`` while the support edge ``w -> u``
(colour ``j``) is reversed to ``u -> w`` and recoloured ``i``; the new
diagonal gets colour ``j``.  It is of kind ``f1`` when ``j = i - 1`` and
``f2`` when ``j = i + 1`` (mod 3); the two kinds are mutually inverse.

A cycle flip reverses a directed cycle.  For a counter-clockwise cycle the
cycle edges move to the next colour and the edges strictly inside move to
the previous one; a clockwise cycle does the opposite.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .realizer import Realizer, RealizerError, compute_realizer, validate_realizer
from .triangulation import (
    Triangulation,
    diagonal_flip,
    double_fan,
    fan_path,
    quad_of,
    random_triangulation,
    reduce_to_double_fan,
)

__all__ = [
    "FlipError",
    "ColoredFlipOp",
    "DirectedCycle",
    "CycleInterior",
    "make_op",
    "inverse_op",
    "is_colored_flippable",
    "colored_flip",
    "replay",
    "cycle_interior",
    "directed_cycle",
    "cycle_flip",
    "find_escape_cycle",
    "face_flip_as_colored",
    "maximal_separating_triangles",
    "cycle_flip_as_colored",
    "make_colored_flippable",
    "realize_diagonal_flips",
    "route_to_double_fan",
    "transform_sequence",
    "random_realizer",
]

F1 = "f1"
F2 = "f2"


class FlipError(ValueError):
    pass


@dataclass(frozen=True)
class ColoredFlipOp:
    """Colored flip of ``u -> v`` (colour ``i``) with respect to ``w -> u``; ``z`` is the other apex."""

    u: int
    v: int
    w: int
    z: int
    i: int
    kind: str

    @property
    def j(self) -> int:
        """Colour of the support edge ``w -> u``."""
        return (self.i - 1) % 3 if self.kind == F1 else (self.i + 1) % 3

    def script(self) -> str:
        return f"cflip {self.u} {self.v} {self.w} {self.z}"


@dataclass(frozen=True)
class DirectedCycle:
    vertices: Tuple[int, ...]
    ccw: bool
    m: int

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> List[Tuple[int, int]]:
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


@dataclass(frozen=True)
class CycleInterior:
    ccw: bool
    faces: frozenset
    vertices: frozenset
    edges: frozenset


# -- colored flips -------------------------------------------------------------------

def make_op(r: Realizer, u: int, v: int, w: int) -> ColoredFlipOp:
    """The colored flip of ``u -> v`` supported by ``w -> u`` in the current state."""
    if not r.has_arc(u, v):
        raise FlipError(f"{u}->{v} is not an arc of the realizer")
    if not r.has_arc(w, u):
        raise FlipError(f"{w}->{u} is not an arc of the realizer")
    q = quad_of(r.base, u, v)
    if w == q.w:
        z = q.z
    elif w == q.z:
        z = q.w
    else:
        raise FlipError(f"{w} is not an apex of the quadrilateral on {u}-{v}")
    i = r.edges[(u, v)]
    j = r.edges[(w, u)]
    if j == (i - 1) % 3:
        kind = F1
    elif j == (i + 1) % 3:
        kind = F2
    else:
        raise FlipError(f"support edge {w}->{u} has the colour {j} of the diagonal")
    return ColoredFlipOp(u, v, w, z, i, kind)


def inverse_op(op: ColoredFlipOp) -> ColoredFlipOp:
    return ColoredFlipOp(op.w, op.z, op.u, op.v, op.j, F2 if op.kind == F1 else F1)


def is_colored_flippable(r: Realizer, u: int, v: int) -> List[ColoredFlipOp]:
    if not r.has_arc(u, v):
        raise FlipError(f"{u}->{v} is not an arc of the realizer")
    q = quad_of(r.base, u, v)
    if r.base.has_edge(q.w, q.z):
        return []
    ops = []
    for x in (q.w, q.z):
        if r.has_arc(x, u):
            op = make_op(r, u, v, x)
            ops.append(op)
    return ops


def _check_op(r: Realizer, op: ColoredFlipOp) -> None:
    if r.edges.get((op.u, op.v)) != op.i:
        raise FlipError(f"stale op: {op.u}->{op.v} does not have colour {op.i}")
    if r.edges.get((op.w, op.u)) != op.j:
        raise FlipError(f"stale op: {op.w}->{op.u} does not have colour {op.j}")
    q = quad_of(r.base, op.u, op.v)
    if {q.w, q.z} != {op.w, op.z}:
        raise FlipError(f"stale op: apexes of {op.u}-{op.v} are {q.w},{q.z}")
    if r.base.has_edge(op.w, op.z):
        raise FlipError(f"diagonal {op.u}-{op.v} is not flippable")


def colored_flip(r: Realizer, op: ColoredFlipOp, check: bool = True) -> Realizer:
    _check_op(r, op)
    base = diagonal_flip(r.base, op.u, op.v)
    edges = dict(r.edges)
    del edges[(op.u, op.v)]
    del edges[(op.w, op.u)]
    edges[(op.u, op.w)] = op.i
    edges[(op.w, op.z)] = op.j
    out = Realizer(base, edges)
    if check:
        res = validate_realizer(out)
        if not res:
            raise RealizerError(f"colored flip {op} produced an invalid realizer: {res.message}")
    return out


def replay(r: Realizer, ops: Sequence[ColoredFlipOp], check: bool = True) -> Realizer:
    for op in ops:
        r = colored_flip(r, op, check=check)
    return r


# -- cycles ----------------------------------------------------------------------------------

def cycle_interior(t: Triangulation, vertices: Sequence[int]) -> CycleInterior:
    """Faces, vertices and edges strictly inside a simple cycle of ``t``.

    ``ccw`` tells whether the cycle, traversed in the given order, has its
    bounded side on the left.
    """
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        raise FlipError(f"{tuple(vertices)} is not a simple cycle")
    arcs = [(vertices[a], vertices[(a + 1) % k]) for a in range(k)]
    wall = set()
    for a, b in arcs:
        if not t.has_edge(a, b):
            raise FlipError(f"{a}-{b} is not an edge")
        wall.add((a, b))
        wall.add((b, a))

    def flood(starts, out):
        # one face per step; ends with out[0] = faces, or None on reaching the outer face
        seen = set()
        stack = []
        for f in starts:
            key = frozenset(f)
            if key not in seen:
                seen.add(key)
                stack.append(f)
        faces = []
        while stack:
            f = stack.pop()
            faces.append(f)
            x, y, z = f
            for a, b in ((x, y), (y, z), (z, x)):
                if (a, b) in wall:
                    continue
                if t.is_outer_edge(a, b):
                    out.append(None)
                    return
                g = t.left_face(b, a)
                key = frozenset(g)
                if key not in seen:
                    seen.add(key)
                    stack.append(g)
            yield
        out.append(faces)

    # flood both sides in lockstep so the cost is bounded by the smaller side
    left, right = [], []
    steps = [flood([t.left_face(a, b) for a, b in arcs], left),
             flood([t.left_face(b, a) for a, b in arcs], right)]
    live = [True, True]
    while not (left and left[0] is not None) and not (right and right[0] is not None):
        if not any(live):
            raise FlipError(f"{tuple(vertices)} does not bound a disk avoiding the outer face")
        for k in (0, 1):
            if live[k]:
                try:
                    next(steps[k])
                except StopIteration:
                    live[k] = False
    ccw = bool(left) and left[0] is not None
    faces = left[0] if ccw else right[0]
    on_cycle = set(vertices)
    verts = set()
    edges = set()
    for f in faces:
        x, y, z = f
        for a in f:
            if a not in on_cycle:
                verts.add(a)
        for a, b in ((x, y), (y, z), (z, x)):
            if (a, b) not in wall:
                edges.add((min(a, b), max(a, b)))
    norm = frozenset(tuple(sorted(f)) for f in faces)
    return CycleInterior(ccw, norm, frozenset(verts), frozenset(edges))


def directed_cycle(r: Realizer, vertices: Sequence[int]) -> DirectedCycle:
    vs = tuple(vertices)
    k = len(vs)
    for a in range(k):
        if not r.has_arc(vs[a], vs[(a + 1) % k]):
            raise FlipError(f"{vs[a]}->{vs[(a + 1) % k]} is not an arc; not a directed cycle")
    info = cycle_interior(r.base, vs)
    return DirectedCycle(vs, info.ccw, len(info.faces))


def cycle_flip(r: Realizer, c, check: bool = True) -> Realizer:
    """Reverse a directed cycle and rotate colours on it and inside it."""
    vs = c.vertices if isinstance(c, DirectedCycle) else tuple(c)
    cyc = directed_cycle(r, vs)
    info = cycle_interior(r.base, vs)
    on, inside = (1, -1) if cyc.ccw else (-1, 1)
    edges = dict(r.edges)
    for a, b in cyc.arcs():
        col = edges.pop((a, b))
        edges[(b, a)] = (col + on) % 3
    for a, b in info.edges:
        if (a, b) in edges:
            edges[(a, b)] = (edges[(a, b)] + inside) % 3
        else:
            edges[(b, a)] = (edges[(b, a)] + inside) % 3
    out = Realizer(r.base, edges)
    if check:
        res = validate_realizer(out)
        if not res:
            raise RealizerError(f"cycle flip produced an invalid realizer: {res.message}")
    return out


def find_escape_cycle(r: Realizer, u: int, v: int, method: str = "paths") -> DirectedCycle:
    """Directed cycle through ``u -> w`` or ``u -> z`` that avoids ``u -> v``.

    Precondition: ``uv`` is diagonally flippable and both apexes are heads of
    arcs leaving ``u``.  ``method="paths"`` closes ``u w c`` (``c`` the next
    vertex of ``P_{i+1}(w)``) or ``u z c'`` (``c'`` the next vertex of
    ``P_{i-1}(z)``) with the colour-``i`` path back to ``u``; ``method="dfs"``
    searches the digraph instead and is kept for cross-checking.
    """
    if not r.has_arc(u, v):
        raise FlipError(f"{u}->{v} is not an arc of the realizer")
    t = r.base
    q = quad_of(t, u, v)
    if t.has_edge(q.w, q.z):
        raise FlipError(f"{u}-{v} is not diagonally flippable")
    if not (r.has_arc(u, q.w) and r.has_arc(u, q.z)):
        raise FlipError(f"{u}->{v} is already colored flippable")
    i = r.edges[(u, v)]
    if method == "dfs":
        cyc = _escape_by_search(r, u, v, (q.w, q.z))
    elif method == "paths":
        cyc = _escape_by_paths(r, u, i, q.w, q.z)
    else:
        raise ValueError(f"unknown method {method!r}")
    if cyc is None:
        raise FlipError(f"no escape cycle found for {u}->{v}")
    return directed_cycle(r, cyc)


def _escape_by_paths(r: Realizer, u: int, i: int, w: int, z: int) -> Optional[List[int]]:
    par = r.parents
    outer = r.outer
    apexes = sorted((w, z), key=lambda x: r.edges[(u, x)] != (i - 1) % 3)
    for apex in apexes:
        if apex in outer:
            continue
        # leave the apex along the colour that is neither i nor that of u -> apex
        col = (-i - r.edges[(u, apex)]) % 3
        c = par[col][apex]
        cyc = [u, apex]
        x = c
        pi = par[i]
        ok = False
        seen = {u, apex}
        while x >= 0:
            if x == u:
                ok = True
                break
            if x in seen:
                break
            seen.add(x)
            cyc.append(x)
            x = pi[x]
        if ok:
            return cyc
    return None


def _escape_by_search(r: Realizer, u: int, v: int, apexes) -> Optional[List[int]]:
    outs: Dict[int, List[int]] = {}
    for (a, b) in r.edges:
        if (a, b) != (u, v):
            outs.setdefault(a, []).append(b)
    for apex in apexes:
        prev = {apex: None}
        dq = deque([apex])
        while dq:
            x = dq.popleft()
            if x == u:
                path = []
                y = x
                while y is not None:
                    path.append(y)
                    y = prev[y]
                path.reverse()  # apex ... u
                return [u] + path[:-1]
            for y in outs.get(x, ()):
                if y not in prev and not (x == u):
                    prev[y] = x
                    dq.append(y)
    return None


# -- decompositions into colored flips ------------------------------------------------------

def face_flip_as_colored(r: Realizer, face: Sequence[int]) -> List[ColoredFlipOp]:
    """Two colored flips that flip a directed interior face."""
    a, b, c = face
    if not (r.has_arc(a, b) and r.has_arc(b, c) and r.has_arc(c, a)):
        raise FlipError(f"{tuple(face)} is not a directed cycle")
    t = r.base
    if t.succ(a, b) == c:
        op1 = make_op(r, a, b, c)
        r2 = colored_flip(r, op1, check=False)
        op2 = make_op(r2, c, op1.z, b)
        return [op1, op2]
    if t.pred(a, b) == c:
        g = cycle_flip(r, (a, b, c), check=False)
        x1, x2 = face_flip_as_colored(g, (a, c, b))
        return [inverse_op(x2), inverse_op(x1)]
    raise FlipError(f"{tuple(face)} is not a face")


def maximal_separating_triangles(r: Realizer, c) -> List[Tuple[int, int, int]]:
    """Separating triangles inside the cycle ``c`` not nested in another one (``c`` excluded)."""
    vs = tuple(c.vertices if isinstance(c, DirectedCycle) else c)
    t = r.base
    info = cycle_interior(t, vs)
    closed = set(vs) | set(info.vertices)
    allowed = set(info.edges)
    k = len(vs)
    for a in range(k):
        x, y = vs[a], vs[(a + 1) % k]
        allowed.add((min(x, y), max(x, y)))
    faces = set(info.faces)
    own = tuple(sorted(vs)) if k == 3 else None
    cands = []
    for (x, y) in allowed:
        for z in t.rot[x]:
            if z <= y or z not in closed:
                continue
            if (min(x, z), max(x, z)) in allowed and (min(y, z), max(y, z)) in allowed:
                tri = (x, y, z)
                if tri in faces or tri == own:
                    continue
                cands.append(tri)
    inside = {tri: cycle_interior(t, tri).vertices for tri in cands}
    out = []
    for tri in cands:
        if not any(o != tri and inside[tri] < inside[o] for o in cands):
            out.append(tri)
    return sorted(out)


def cycle_flip_as_colored(r: Realizer, c, check: bool = True) -> List[ColoredFlipOp]:
    """Exactly ``2m`` colored flips whose replay equals ``cycle_flip(r, c)``."""
    vs = tuple(c.vertices if isinstance(c, DirectedCycle) else c)
    directed_cycle(r, vs)
    ops: List[ColoredFlipOp] = []
    _decompose(r, vs, ops, check)
    return ops


def _apply(r: Realizer, new_ops: List[ColoredFlipOp], ops: List[ColoredFlipOp], check: bool) -> Realizer:
    for op in new_ops:
        r = colored_flip(r, op, check=check)
        ops.append(op)
    return r


def _decompose(r: Realizer, vs: Tuple[int, ...], ops: List[ColoredFlipOp], check: bool) -> Realizer:
    t = r.base
    info = cycle_interior(t, vs)
    if len(vs) == 3 and len(info.faces) == 1:
        return _apply(r, face_flip_as_colored(r, vs), ops, check)
    if len(vs) == 3:
        # separating triangle: open it into a 4-cycle, flip that, close it again
        a, b, c3 = vs
        x = t.succ(a, b) if info.ccw else t.pred(a, b)
        op1 = make_op(r, a, b, x)
        r = _apply(r, [op1], ops, check)
        r = _decompose(r, (a, x, b, c3), ops, check)
        op3 = make_op(r, x, op1.z, b)
        return _apply(r, [op3], ops, check)
    tris = maximal_separating_triangles(r, vs)
    hidden: Set[Tuple[int, int, int]] = set()
    for tri in tris:
        hidden |= cycle_interior(t, tri).faces
    atoms = []
    for tri in tris:
        ccw = cycle_interior(t, tri).ccw
        atoms.append(tri if ccw else (tri[0], tri[2], tri[1]))
    for f in sorted(info.faces - hidden):
        a, b, c3 = f
        atoms.append(f if t.succ(a, b) == c3 else (a, c3, b))
    pending = sorted(atoms)
    while pending:
        for k, atom in enumerate(pending):
            a, b, c3 = atom
            fwd = r.has_arc(a, b) and r.has_arc(b, c3) and r.has_arc(c3, a)
            back = r.has_arc(b, a) and r.has_arc(c3, b) and r.has_arc(a, c3)
            if (fwd and info.ccw) or (back and not info.ccw):
                cyc = atom if fwd else (a, c3, b)
                break
        else:
            raise FlipError(f"no interior face of {vs} is oriented like the cycle")
        del pending[k]
        r = _decompose(r, cyc, ops, check)
    return r


def make_colored_flippable(r: Realizer, u: int, v: int) -> Tuple[Realizer, Optional[DirectedCycle]]:
    """A realizer of the same triangulation in which ``uv`` (as oriented) is colored flippable."""
    q = quad_of(r.base, u, v)
    if r.base.has_edge(q.w, q.z):
        raise FlipError(f"{u}-{v} is not diagonally flippable")
    if not r.has_arc(u, v):
        u, v = v, u
    if is_colored_flippable(r, u, v):
        return r, None
    cyc = find_escape_cycle(r, u, v)
    out = cycle_flip(r, cyc)
    if not is_colored_flippable(out, u, v):
        raise FlipError(f"escape cycle flip did not make {u}->{v} colored flippable")
    return out, cyc


# -- routes between realizers ------------------------------------------------------------------

def realize_diagonal_flips(r: Realizer, flips: Sequence[Tuple[int, int]], check: bool = True) -> Tuple[List[ColoredFlipOp], Realizer]:
    """Colored flips realizing a sequence of diagonal flips, with escape cycles where needed."""
    ops: List[ColoredFlipOp] = []
    for a, b in flips:
        u, v = (a, b) if r.has_arc(a, b) else (b, a)
        if not is_colored_flippable(r, u, v):
            cyc = find_escape_cycle(r, u, v)
            r = _decompose(r, cyc.vertices, ops, check)
        op = is_colored_flippable(r, u, v)[0]
        r = _apply(r, [op], ops, check)
    return ops, r


def _swap_flips(t: Triangulation, path: List[int], k: int) -> List[Tuple[int, int]]:
    """Diagonal flips exchanging ``path[k]`` and ``path[k+1]`` in a double fan."""
    r0, r1, r2 = t.outer
    full = [r2] + path
    local = {r0, r1} | set(full[k:k + 4])
    target_path = list(path)
    target_path[k], target_path[k + 1] = target_path[k + 1], target_path[k]
    target = double_fan(t.n, t.outer, target_path).key()
    start = t.key()
    prev = {start: None}
    states = {start: t}
    dq = deque([start])
    while dq:
        key = dq.popleft()
        if key == target:
            break
        s = states[key]
        for a in local:
            for b in s.rot[a]:
                if b <= a or b not in local or s.is_outer_edge(a, b):
                    continue
                q = quad_of(s, a, b)
                if q.w not in local or q.z not in local or s.has_edge(q.w, q.z):
                    continue
                s2 = s.copy()
                s2.flip_inplace(a, b)
                k2 = s2.key()
                if k2 not in prev:
                    prev[k2] = (key, (a, b))
                    states[k2] = s2
                    dq.append(k2)
    if target not in prev:
        raise FlipError("could not swap neighbouring fan vertices")
    seq = []
    key = target
    while prev[key] is not None:
        key, e = prev[key]
        seq.append(e)
    return seq[::-1]


def fan_reorder_flips(t: Triangulation, target_path: Sequence[int]) -> List[Tuple[int, int]]:
    """Diagonal flips turning a double fan into the double fan with the given path order."""
    path = fan_path(t)
    if path is None:
        raise FlipError("not a double fan")
    if sorted(path) != sorted(target_path):
        raise FlipError("target path uses different vertices")
    rank = {x: k for k, x in enumerate(target_path)}
    s = t.copy()
    flips: List[Tuple[int, int]] = []
    path = list(path)
    changed = True
    while changed:
        changed = False
        for k in range(len(path) - 1):
            if rank[path[k]] > rank[path[k + 1]]:
                seq = _swap_flips(s, path, k)
                for e in seq:
                    s.flip_inplace(*e)
                flips.extend(seq)
                path[k], path[k + 1] = path[k + 1], path[k]
                changed = True
    return flips


def route_to_double_fan(r: Realizer, check: bool = True) -> Tuple[List[ColoredFlipOp], Realizer]:
    return realize_diagonal_flips(r, reduce_to_double_fan(r.base), check=check)


def transform_sequence(r: Realizer, target: Realizer, check: bool = True) -> List[ColoredFlipOp]:
    """Colored flips turning ``r`` into ``target``, routed through a double fan."""
    if r.n != target.n or r.outer != target.outer:
        raise FlipError("realizers differ in vertex count or outer face")
    if r == target:
        return []
    ops1, hub1 = route_to_double_fan(r, check)
    ops2, hub2 = route_to_double_fan(target, check)
    ops_mid, mid = realize_diagonal_flips(hub1, fan_reorder_flips(hub1.base, fan_path(hub2.base)), check)
    if mid != hub2:
        raise FlipError("double fan realizers differ; uniqueness violated")
    return ops1 + ops_mid + [inverse_op(op) for op in reversed(ops2)]


def random_realizer(n: int, rng: Optional[random.Random] = None, flips: Optional[int] = None) -> Realizer:
    """Random triangulation with a realizer scrambled by random colored flips."""
    rng = rng or random.Random()
    r = compute_realizer(random_triangulation(n, rng))
    steps = 2 * n if flips is None else flips
    arcs = list(r.edges)
    for _ in range(steps):
        u, v = arcs[rng.randrange(len(arcs))]
        if (u, v) not in r.edges:
            arcs = list(r.edges)
            continue
        ops = is_colored_flippable(r, u, v)
        if ops:
            r = colored_flip(r, rng.choice(ops), check=False)
            arcs = list(r.edges)
    return r
