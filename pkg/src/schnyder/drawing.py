"""Straight-line drawings from region vectors.

Vertex ``u`` with region vector ``(a, b, c)`` is placed at the integer point
``(a, b)``.  This is an affine image of the barycentric placement, so
planarity is preserved.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .realizer import Coord, Realizer, barycentric

__all__ = ["grid_points", "count_crossings", "is_injective", "dominance_violations", "emit_svg"]

COLORS = ("#d62728", "#2ca02c", "#1f77b4")


def grid_points(coords: Sequence[Coord]) -> List[Tuple[int, int]]:
    return [(c[0], c[1]) for c in coords]


def is_injective(points: Sequence[Tuple[int, int]]) -> bool:
    return len(set(points)) == len(points)


def dominance_violations(coords: Sequence[Coord], edges: Sequence[Tuple[int, int]]) -> List[Tuple[int, int, int]]:
    """Triples ``(u, v, w)`` with ``uv`` an edge where no colour ``i`` has both
    ``(u_i, u_{i+1})`` and ``(v_i, v_{i+1})`` lexicographically below ``(w_i, w_{i+1})``.
    """
    X = np.asarray(coords, dtype=np.int64)
    E = np.asarray(edges, dtype=np.int64)
    n = len(X)
    base = int(X.max()) + 1 if n else 1
    K = np.stack([X[:, i] * base + X[:, (i + 1) % 3] for i in range(3)])  # (3, n)
    U, V = E[:, 0], E[:, 1]
    below = (K[:, U, None] < K[:, None, :]) & (K[:, V, None] < K[:, None, :])  # (3, m, n)
    ok = below.any(axis=0)
    w = np.arange(n)
    ok |= (w[None, :] == U[:, None]) | (w[None, :] == V[:, None])
    bad = np.argwhere(~ok)
    return [(int(U[e]), int(V[e]), int(x)) for e, x in bad]


def _orient(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def count_crossings(points: Sequence[Tuple[int, int]], edges: Sequence[Tuple[int, int]]) -> int:
    """Number of edge pairs meeting anywhere other than a shared endpoint.

    Touching, overlapping and proper crossings all count.  Integer
    arithmetic throughout.
    """
    P = np.asarray(points, dtype=np.int64)
    E = np.asarray(edges, dtype=np.int64)
    m = len(E)
    if m < 2:
        return 0
    iu, ju = np.triu_indices(m, k=1)
    a, b = E[iu, 0], E[iu, 1]
    c, d = E[ju, 0], E[ju, 1]
    A, B, C, D = P[a], P[b], P[c], P[d]
    o1 = _orient(A[:, 0], A[:, 1], B[:, 0], B[:, 1], C[:, 0], C[:, 1])
    o2 = _orient(A[:, 0], A[:, 1], B[:, 0], B[:, 1], D[:, 0], D[:, 1])
    o3 = _orient(C[:, 0], C[:, 1], D[:, 0], D[:, 1], A[:, 0], A[:, 1])
    o4 = _orient(C[:, 0], C[:, 1], D[:, 0], D[:, 1], B[:, 0], B[:, 1])

    shared = (a == c) | (a == d) | (b == c) | (b == d)

    # disjoint edges: any contact is bad
    hit = (o1 * o2 <= 0) & (o3 * o4 <= 0)
    col = (o1 == 0) & (o2 == 0)
    if col.any():
        # collinear pairs meet only if their projections overlap
        lo1 = np.minimum(A, B)
        hi1 = np.maximum(A, B)
        lo2 = np.minimum(C, D)
        hi2 = np.maximum(C, D)
        overlap = np.all((lo1 <= hi2) & (lo2 <= hi1), axis=1)
        hit = np.where(col, overlap, hit)
    bad = hit & ~shared

    # edges with a common endpoint: bad only if they overlap along a line
    if shared.any():
        s = np.where(shared)[0]
        ca = np.where((a[s] == c[s]) | (a[s] == d[s]), a[s], b[s])
        x = np.where(a[s] == ca, b[s], a[s])
        y = np.where(c[s] == ca, d[s], c[s])
        O, X, Y = P[ca], P[x], P[y]
        cross = (X[:, 0] - O[:, 0]) * (Y[:, 1] - O[:, 1]) - (X[:, 1] - O[:, 1]) * (Y[:, 0] - O[:, 0])
        dot = (X[:, 0] - O[:, 0]) * (Y[:, 0] - O[:, 0]) + (X[:, 1] - O[:, 1]) * (Y[:, 1] - O[:, 1])
        bad[s] = (cross == 0) & (dot > 0)
    return int(bad.sum())


def emit_svg(r: Realizer, scale: int = 20, margin: int = 20, coords: Optional[Sequence[Coord]] = None) -> str:
    """Deterministic SVG of the grid drawing, edges coloured by tree."""
    coords = barycentric(r) if coords is None else coords
    pts = grid_points(coords)
    n = r.n
    top = n - 1

    def xy(v: int) -> Tuple[int, int]:
        x, y = pts[v]
        return margin + x * scale, margin + (top - y) * scale

    size = 2 * margin + top * scale
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    r0, r1, r2 = r.outer
    for a, b in ((r0, r1), (r1, r2), (r2, r0)):
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>')
    for (u, v), c in sorted(r.edges.items()):
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{COLORS[c]}" stroke-width="1.5"/>')
    for v in range(n):
        x, y = xy(v)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
        out.append(f'<text x="{x + 5}" y="{y - 5}" font-size="10" font-family="monospace">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
