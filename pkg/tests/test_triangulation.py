import random

import pytest
from hypothesis import given, settings, strategies as st

from schnyder.triangulation import (
    ParseError,
    Triangulation,
    TriangulationError,
    diagonal_flip,
    double_fan,
    fan_path,
    format_triangulation,
    from_faces,
    is_diagonal_flippable,
    is_double_fan,
    parse_triangulation,
    quad_of,
    random_triangulation,
    reduce_to_double_fan,
)
from conftest import K4_TEXT


def test_k4_counts(k4):
    assert k4.num_edges() == 6
    assert len(k4.faces()) == 3


def test_f5_counts(f5):
    assert f5.num_edges() == 9
    assert sorted(f5.interior_edges()) == [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (3, 4)]


def test_missing_edge_rejected():
    text = K4_TEXT.replace("rot 1: 0 2 3", "rot 1: 0 2").replace("rot 3: 0 1 2", "rot 3: 0 2")
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_triangulation("n 4\nouter 0 1\n")
    with pytest.raises(ParseError):
        parse_triangulation("n 4\nbogus 1\n")
    with pytest.raises(ParseError):
        parse_triangulation("outer 0 1 2\n")


def test_format_roundtrip(f5):
    assert parse_triangulation(format_triangulation(f5)) == f5


def test_quad_of(k4, f5):
    q = quad_of(f5, 3, 0)
    assert (q.w, q.z) == (4, 2)
    q = quad_of(k4, 3, 0)
    assert {q.w, q.z} == {1, 2}
    with pytest.raises(TriangulationError):
        quad_of(f5, 0, 1)


def test_flippable(k4, f5):
    assert not is_diagonal_flippable(k4, 3, 0)
    assert is_diagonal_flippable(f5, 3, 0)
    assert not is_diagonal_flippable(f5, 3, 2)


def test_diagonal_flip(k4, f5):
    g = diagonal_flip(f5, 3, 0)
    assert g.has_edge(4, 2) and not g.has_edge(3, 0)
    assert g.num_edges() == 9
    g.validate()
    assert diagonal_flip(g, 4, 2) == f5
    with pytest.raises(TriangulationError):
        diagonal_flip(k4, 3, 0)


def test_from_faces_matches_parse(k4):
    t = from_faces(4, [(0, 1, 3), (1, 2, 3), (2, 0, 3)], (0, 1, 2))
    assert t == k4


def test_double_fan_shape():
    t = double_fan(7)
    assert is_double_fan(t)
    assert fan_path(t) == [3, 4, 5, 6]
    assert all(t.has_edge(0, x) and t.has_edge(1, x) for x in range(2, 7))
    t2 = double_fan(7, path=[5, 3, 6, 4])
    assert fan_path(t2) == [5, 3, 6, 4]


def test_reduce_f5(f5):
    seq = reduce_to_double_fan(f5)
    assert len(seq) <= 2
    t = f5.copy()
    for u, v in seq:
        assert is_diagonal_flippable(t, u, v)
        t.flip_inplace(u, v)
    assert is_double_fan(t)


def test_reduce_fixed_point():
    assert reduce_to_double_fan(double_fan(9)) == []


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 60), st.integers(0, 10**6))
def test_reduce_random(n, seed):
    t = random_triangulation(n, random.Random(seed))
    seq = reduce_to_double_fan(t)
    assert len(seq) <= 3 * n
    s = t.copy()
    for u, v in seq:
        assert is_diagonal_flippable(s, u, v)
        s.flip_inplace(u, v)
    s.validate()
    assert is_double_fan(s)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 80), st.integers(0, 10**6))
def test_random_triangulation_valid(n, seed):
    t = random_triangulation(n, random.Random(seed))
    t.validate()
    assert t.num_edges() == 3 * n - 6
    assert len(t.faces()) == 2 * n - 5


def test_flip_involution_random():
    rng = random.Random(3)
    t = random_triangulation(30, rng)
    for u, v in list(t.interior_edges()):
        if is_diagonal_flippable(t, u, v):
            q = quad_of(t, u, v)
            assert diagonal_flip(diagonal_flip(t, u, v), q.w, q.z) == t


def test_copy_independent(f5):
    g = f5.copy()
    g.flip_inplace(3, 0)
    assert f5.has_edge(3, 0)
    assert isinstance(g, Triangulation)
