import random

import pytest

from schnyder.dynforest import DynForest, ForestError, NaiveForest


def test_link_and_errors():
    f = DynForest(3)
    f.link(1, 0)
    assert f.parent(1) == 0
    with pytest.raises(ForestError):
        f.link(1, 2)
    with pytest.raises(ForestError):
        f.link(0, 1)


def test_cut():
    f = DynForest(3)
    assert f.parent(0) is None
    f.link(1, 0)
    f.cut(1)
    assert f.parent(1) is None
    with pytest.raises(ForestError):
        f.cut(1)
    f.link(1, 0)
    f.link(2, 1)
    f.cut(1)
    assert f.parent(2) == 1
    assert f.lca(2, 0) is None and f.lca(2, 1) == 1


def test_subtree_add_chain():
    f = DynForest(3)
    f.link(1, 0)
    f.link(2, 1)
    f.subtree_add(1, 5, 1)
    assert [f.get_r(x) for x in range(3)] == [0, 5, 5]
    assert [f.get_d(x) for x in range(3)] == [0, 1, 1]
    f.subtree_add(0, 0, 0)
    assert [f.get_r(x) for x in range(3)] == [0, 5, 5]


def test_fresh_costs_zero():
    f = DynForest(10)
    assert all(f.get_r(u) == 0 and f.get_d(u) == 0 for u in range(10))


def test_lca_chain():
    f = DynForest.from_parents([-1, 0, 1], d=[0, 1, 2])
    assert f.lca(2, 0) == 0
    assert [f.get_d(x) for x in range(3)] == [0, 1, 2]
    assert f.depth(2) == 2 and f.find_root(2) == 0


def test_from_parents_rejects_cycle():
    with pytest.raises(ForestError):
        DynForest.from_parents([1, 0, -1])


def test_move_cycle_rejected():
    f = DynForest.from_parents([-1, 0, 1])
    with pytest.raises(ForestError):
        f.move(1, 2)
    assert f.parent(1) == 0 and f.depth(2) == 2
    f.move(2, 0, 3, 4)
    assert f.parent(2) == 0 and f.get_r(2) == 3 and f.get_d(2) == 4 and f.depth(2) == 1


def _random_run(n, ops, seed, fast, slow):
    rng = random.Random(seed)
    checks = 0
    for _ in range(ops):
        k = rng.random()
        u, v = rng.randrange(n), rng.randrange(n)
        if k < 0.25:
            calls = [lambda X: X.link(u, v)]
        elif k < 0.35:
            calls = [lambda X: X.cut(u)]
        elif k < 0.45:
            dr, dd = rng.randint(-3, 3), rng.randint(-3, 3)
            calls = [lambda X: X.move(u, v, dr, dd)]
        elif k < 0.6:
            dr, dd = rng.randint(-5, 5), rng.randint(-5, 5)
            calls = [lambda X: X.subtree_add(u, dr, dd)]
        else:
            calls = []
            assert fast.get_r(u) == slow.get_r(u)
            assert fast.get_d(u) == slow.get_d(u)
            assert fast.parent(u) == slow.parent(u)
            assert fast.depth(u) == slow.depth(u)
            assert fast.lca(u, v) == slow.lca(u, v)
            checks += 1
        for call in calls:
            errs = []
            for X in (fast, slow):
                try:
                    call(X)
                    errs.append(False)
                except ForestError:
                    errs.append(True)
            assert errs[0] == errs[1]
    return checks


@pytest.mark.parametrize("seed", range(5))
def test_against_naive_small(seed):
    assert _random_run(25, 4000, seed, DynForest(25, seed), NaiveForest(25)) > 0


def test_against_naive_large():
    n = 10**4
    rng = random.Random(1)
    par = [-1] + [rng.randrange(x) if rng.random() < 0.9 else -1 for x in range(1, n)]
    fast = DynForest.from_parents(par)
    slow = NaiveForest(n)
    for x, p in enumerate(par):
        if p >= 0:
            slow.link(x, p)
    _random_run(n, 10**4, 2, fast, slow)
