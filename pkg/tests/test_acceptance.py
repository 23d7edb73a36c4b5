"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line in ``conftest.ACCEPTANCE``; the lines are
printed in the terminal summary and also to stdout (visible with ``-s``).
"""

import contextlib
import gc
import random
import statistics
import time

import pytest

import conftest
from conftest import realizers_of, realizers_upto
from schnyder.cli import bench_rows
from schnyder.drawing import count_crossings, dominance_violations, grid_points, is_injective
from schnyder.dynforest import DynForest, ForestError, NaiveForest
from schnyder.dynrealizer import DynRealizer
from schnyder.flips import (
    colored_flip,
    cycle_flip,
    cycle_flip_as_colored,
    directed_cycle,
    face_flip_as_colored,
    find_escape_cycle,
    is_colored_flippable,
    maximal_separating_triangles,
    random_realizer,
    replay,
    transform_sequence,
)
from schnyder.oracle import (
    build_flip_graph,
    diameter,
    directed_cycles,
    directed_faces,
    enumerate_realizers,
    enumerate_triangulations,
    glue_into_face,
    static_coordinates,
)
from schnyder.realizer import Realizer, barycentric, compute_realizer, validate_realizer
from schnyder.triangulation import double_fan, quad_of, random_triangulation


@contextlib.contextmanager
def criterion(k, title):
    info = {}
    start = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        secs = time.perf_counter() - start
        detail = ", ".join(f"{a}={b}" for a, b in info.items())
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {k:2d}: {title} ({detail}; {secs:.1f}s)"
        conftest.ACCEPTANCE[k] = line
        print(line)


def _escape_sites(r):
    t = r.base
    for (u, v) in list(r.edges):
        q = quad_of(t, u, v)
        if not t.has_edge(q.w, q.z) and r.has_arc(u, q.w) and r.has_arc(u, q.z):
            yield u, v


# -- 1 -----------------------------------------------------------------------------------------

def test_c01_dynamic_static_exactness():
    with criterion(1, "dynamic coordinates equal a static recount after every flip") as info:
        start = time.perf_counter()
        for n in (50, 200):
            rng = random.Random(n)
            d = DynRealizer.build(random_realizer(n, rng))
            literal = 0
            for step in range(10**4):
                u, v, w, z = d.random_flip(rng)
                # interleaved query on a touched vertex
                assert d.coordinates(u) is not None
                got = [d.coordinates(x) for x in range(n)]
                snap = d.snapshot()
                assert got == barycentric(snap)
                if step % 200 == 0:
                    sc = static_coordinates(snap)
                    assert got == [sc[x] for x in range(n)]
                    literal += 1
            assert validate_realizer(d.snapshot())
            info[f"literal_checks_n{n}"] = literal
        elapsed = time.perf_counter() - start
        info["flips"] = 2 * 10**4
        assert elapsed < 120, f"took {elapsed:.1f}s"


# -- 2 -----------------------------------------------------------------------------------------

def _tables():
    """Candidate ``(c(u), c(w))`` tables; the first is the one implemented.

    ``mirrored`` measures c(u) on the other side coordinate, ``branch_swapped``
    exchanges the two c(w) branches between f1 and f2.  Both are kept so the
    report shows how often each would have been right.
    """

    def resolved(kind, i, U, W, Z, uz):
        if kind == "f1":
            return U[(i + 1) % 3] - W[(i + 1) % 3] + 1, (-1 if uz else U[i] - Z[i])
        return W[(i - 1) % 3] - U[(i - 1) % 3] + 1, (0 if uz else Z[i] - U[i] + 1)

    def mirrored(kind, i, U, W, Z, uz):
        if kind == "f1":
            return W[(i - 1) % 3] - U[(i - 1) % 3] + 1, (-1 if uz else U[i] - Z[i])
        return U[(i + 1) % 3] - W[(i + 1) % 3] + 1, (0 if uz else Z[i] - U[i] - 1)

    def branch_swapped(kind, i, U, W, Z, uz):
        if kind == "f1":
            return W[(i - 1) % 3] - U[(i - 1) % 3], (0 if uz else Z[i] - U[i])
        return U[(i - 1) % 3] - W[(i - 1) % 3] + 1, (-1 if uz else U[i] - Z[i])

    return {"resolved": resolved, "mirrored": mirrored, "branch_swapped": branch_swapped}


def _subtree(par, root):
    kids = {}
    for x, p in enumerate(par):
        if p >= 0:
            kids.setdefault(p, []).append(x)
    out = [root]
    for x in out:
        out.extend(kids.get(x, ()))
    return out


def _predict(X, r, op, cu, cw):
    # subtree T_i(u) gets r_i += c(u): coordinate i-1 up, i+1 down; same for T_j(w)
    Y = [list(x) for x in X]
    par = r.parents
    for root, c, col in ((op.u, cu, op.i), (op.w, cw, op.j)):
        for x in _subtree(par[col], root):
            Y[x][(col - 1) % 3] += c
            Y[x][(col + 1) % 3] -= c
    return [tuple(y) for y in Y]


def test_c02_region_deltas():
    with criterion(2, "region deltas of every colored flip for n <= 6 match the c-table") as info:
        tables = _tables()
        hits = dict.fromkeys(tables, 0)
        pairs = 0
        for r in realizers_upto(6):
            sc = static_coordinates(r)
            X = [sc[x] for x in range(r.n)]
            for (u, v) in list(r.edges):
                for op in is_colored_flippable(r, u, v):
                    r2 = colored_flip(r, op)
                    sc2 = static_coordinates(r2)
                    Y = [sc2[x] for x in range(r.n)]
                    uz = r.has_arc(op.u, op.z)
                    pairs += 1
                    for name, f in tables.items():
                        cu, cw = f(op.kind, op.i, X[op.u], X[op.w], X[op.z], uz)
                        if _predict(X, r, op, cu, cw) == Y:
                            hits[name] += 1
        info["pairs"] = pairs
        for name, h in hits.items():
            info[name] = f"{h}/{pairs}"
        assert pairs > 0 and hits["resolved"] == pairs


# -- 3 -----------------------------------------------------------------------------------------

def test_c03_face_flips():
    with criterion(3, "every directed face flip for n <= 7 is two colored flips") as info:
        start = time.perf_counter()
        faces = 0
        for r in realizers_upto(7):
            for f in directed_faces(r):
                ops = face_flip_as_colored(r, f)
                assert len(ops) == 2
                assert replay(r, ops) == cycle_flip(r, f)
                faces += 1
        info["faces"] = faces
        assert faces > 0 and time.perf_counter() - start < 300


# -- 4 -----------------------------------------------------------------------------------------

def _glued_instances(rng, count):
    """Triangulations on 9 vertices with a separating triangle that is a directed
    face in some realizer of the host."""
    hosts = enumerate_triangulations(6)
    guests = enumerate_triangulations(6)
    out = []
    rng.shuffle(hosts)
    for host in hosts:
        faces = {f for r in enumerate_realizers(host) for f in directed_faces(r)}
        for f in sorted(faces):
            a, b, c = f
            face = f if host.succ(a, b) == c else (a, c, b)
            out.append(glue_into_face(host, face, rng.choice(guests)))
            break
        if len(out) >= count:
            break
    return out


def test_c04_cycle_flips():
    with criterion(4, "every directed cycle flip for n <= 7 is 2m colored flips") as info:
        cycles = 0
        for r in realizers_upto(7):
            for c in directed_cycles(r):
                ops = cycle_flip_as_colored(r, c)
                assert len(ops) == 2 * directed_cycle(r, c).m
                assert replay(r, ops) == cycle_flip(r, c)
                cycles += 1
        info["cycles"] = cycles
        rng = random.Random(4)
        sep = 0
        for t in _glued_instances(rng, 6):
            for r in enumerate_realizers(t):
                for c in directed_cycles(r):
                    if maximal_separating_triangles(r, c):
                        ops = cycle_flip_as_colored(r, c)
                        assert len(ops) == 2 * directed_cycle(r, c).m
                        assert replay(r, ops) == cycle_flip(r, c)
                        sep += 1
        info["with_separating_triangles"] = sep
        assert cycles > 0 and sep > 0


# -- 5 -----------------------------------------------------------------------------------------

def _escape_time(n, sites, seed):
    """Median seconds per call on a fresh realizer (parent arrays rebuilt inside the call)."""
    rng = random.Random(seed)
    r = compute_realizer(random_triangulation(n, rng, mix=n))
    found = []
    for site in _escape_sites(r):
        found.append(site)
        if len(found) == sites:
            break
    assert len(found) == sites, f"only {len(found)} escape sites at n={n}"
    times = []
    gc.disable()
    try:
        for u, v in found:
            fresh = Realizer(r.base, r.edges)
            t0 = time.perf_counter()
            c = find_escape_cycle(fresh, u, v)
            times.append(time.perf_counter() - t0)
            assert (u, v) not in c.arcs()
    finally:
        gc.enable()
    return statistics.median(times)


def test_c05_escape_cycles():
    with criterion(5, "escape cycles for n <= 7 and linear scaling of the search") as info:
        sites = 0
        for r in realizers_upto(7):
            for u, v in _escape_sites(r):
                c = find_escape_cycle(r, u, v)
                q = quad_of(r.base, u, v)
                arcs = c.arcs()
                assert len(set(c.vertices)) == len(c.vertices)
                assert all(r.has_arc(a, b) for a, b in arcs)
                assert (u, v) not in arcs and ((u, q.w) in arcs or (u, q.z) in arcs)
                r2 = cycle_flip(r, c)
                assert is_colored_flippable(r2, u, v) if r2.has_arc(u, v) else is_colored_flippable(r2, v, u)
                sites += 1
        info["sites"] = sites
        small = _escape_time(10**3, 100, 1)
        large = _escape_time(10**5, 20, 2)
        ratio = large / small / 100
        info["normalised_ratio"] = f"{ratio:.2f}"
        assert sites > 0
        assert 0.5 <= ratio <= 2.0


# -- 6 -----------------------------------------------------------------------------------------

def test_c06_flip_graph_and_routes():
    with criterion(6, "flip graph connected for n = 5, 6 and routes at n = 8") as info:
        for n in (5, 6):
            g = build_flip_graph(n)
            dia = diameter(g)
            info[f"n{n}"] = f"{len(g.nodes)} nodes, diameter {dia}"
            assert g.components() == 1 and dia is not None and dia <= 2 * n * n
        pool = realizers_of(8)
        rng = random.Random(6)
        longest = 0
        for _ in range(100):
            a, b = rng.choice(pool), rng.choice(pool)
            ops = transform_sequence(a, b)
            assert replay(a, ops) == b
            longest = max(longest, len(ops))
        info["longest_route_n8"] = longest
        assert longest <= 2 * 8 * 8


# -- 7 -----------------------------------------------------------------------------------------

def test_c07_dynamic_performance():
    with criterion(7, "time per flip and query grows at most 3x from 2^10 to 2^17") as info:
        start = time.perf_counter()
        rows = list(bench_rows([2**10, 2**17], 10**5, seed=7))
        small, large = rows[0][3], rows[1][3]
        ratio = large / small
        info["us_per_op"] = f"{small / 1e3:.0f} -> {large / 1e3:.0f}"
        info["ratio"] = f"{ratio:.2f}"
        assert ratio <= 3.0
        assert time.perf_counter() - start < 300


# -- 8 -----------------------------------------------------------------------------------------

def test_c08_double_fan_unique():
    with criterion(8, "double fan has exactly one realizer for 5 <= n <= 8") as info:
        counts = {n: len(enumerate_realizers(double_fan(n))) for n in range(5, 9)}
        info["counts"] = counts
        assert all(c == 1 for c in counts.values())


# -- 9 -----------------------------------------------------------------------------------------

def test_c09_drawings():
    with criterion(9, "grid drawings are planar and injective; dominance holds for n <= 8") as info:
        rng = random.Random(9)
        crossings = 0
        for _ in range(100):
            r = random_realizer(rng.randint(4, 200), rng)
            pts = grid_points(barycentric(r))
            assert is_injective(pts)
            crossings += count_crossings(pts, list(r.base.edges()))
        info["crossings"] = crossings
        checked = 0
        bad = 0
        for r in realizers_upto(8):
            bad += len(dominance_violations(barycentric(r), list(r.base.edges())))
            checked += 1
        info["dominance_checked"] = checked
        info["violations"] = bad
        assert crossings == 0 and bad == 0


# -- 10 ----------------------------------------------------------------------------------------

def test_c10_forest_oracle():
    with criterion(10, "dynamic forest agrees with the naive forest on 10^5 ops") as info:
        rng = random.Random(10)
        n = 300
        fast, slow = DynForest(n, seed=10), NaiveForest(n)
        queries = 0
        for _ in range(10**5):
            k = rng.random()
            u, v = rng.randrange(n), rng.randrange(n)
            dr, dd = rng.randint(-9, 9), rng.randint(-9, 9)
            if k < 0.6:
                name = ("link", "cut", "move", "subtree_add")[int(k / 0.15)]
                args = {"link": (u, v), "cut": (u,), "move": (u, v, dr, dd), "subtree_add": (u, dr, dd)}[name]
                res = []
                for X in (fast, slow):
                    try:
                        getattr(X, name)(*args)
                        res.append("ok")
                    except ForestError:
                        res.append("err")
                assert res[0] == res[1], (name, args)
            else:
                got = (fast.get_r(u), fast.get_d(u), fast.parent(u), fast.depth(u), fast.lca(u, v), fast.find_root(u))
                want = (slow.get_r(u), slow.get_d(u), slow.parent(u), slow.depth(u), slow.lca(u, v), slow.find_root(u))
                assert got == want
                queries += 1
        info["queries"] = queries
