from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from zigzaginv import farey
from zigzaginv.farey import (DepthCapError, IncompatibleFractionsError,
                             NotInteriorError, enumerate_level, mediant,
                             parents, path_to_root, relatives)


def test_mediant_examples():
    assert mediant(F(1, 2), F(2, 3)) == F(3, 5)
    assert mediant(F(0, 1), F(1, 1)) == F(1, 2)
    assert mediant(F(4, 7), F(3, 5)) == F(7, 12)


def test_mediant_errors():
    with pytest.raises(IncompatibleFractionsError):
        mediant(F(1, 3), F(2, 3))
    with pytest.raises(ValueError):
        mediant(F(2, 3), F(1, 2))


def test_parents_examples():
    assert parents(F(7, 12)) == (F(4, 7), F(3, 5))
    assert parents(F(1, 2)) == (F(0, 1), F(1, 1))
    assert parents(F(3, 5)) == (F(1, 2), F(2, 3))
    with pytest.raises(NotInteriorError):
        parents(F(0, 1))
    with pytest.raises(NotInteriorError):
        parents(F(1, 1))


def test_path_to_root_examples():
    path = path_to_root(F(7, 12))
    assert path == [(F(1, 2), "R"), (F(2, 3), "L"), (F(3, 5), "L"),
                    (F(4, 7), "R"), (F(7, 12), None)]
    assert path_to_root(F(1, 2)) == [(F(1, 2), None)]
    assert path_to_root(F(1, 5)) == [(F(1, 2), "L"), (F(1, 3), "L"),
                                     (F(1, 4), "L"), (F(1, 5), None)]


def test_enumerate_level_examples():
    assert enumerate_level(1) == [F(1, 2)]
    assert enumerate_level(3) == [F(1, 4), F(2, 5), F(3, 5), F(3, 4)]
    assert enumerate_level(4) == [F(1, 5), F(2, 7), F(3, 8), F(3, 7),
                                  F(4, 7), F(5, 8), F(5, 7), F(4, 5)]
    assert len(enumerate_level(9)) == 2 ** 8
    with pytest.raises(DepthCapError):
        enumerate_level(25)


def test_relatives():
    rel = relatives(F(7, 12))
    assert rel.left_parent == F(4, 7)
    assert rel.right_parent == F(3, 5)
    assert rel.left_child == mediant(F(4, 7), F(7, 12))
    assert rel.right_child == mediant(F(7, 12), F(3, 5))
    assert rel.level == 5
    assert rel.left_parent + rel.right_parent != rel.left_parent  # sanity


@st.composite
def tree_pair(draw):
    """A compatible pair produced by random tree descent."""
    lo, hi = F(0, 1), F(1, 1)
    for _ in range(draw(st.integers(0, 12))):
        mid = mediant(lo, hi)
        if draw(st.booleans()):
            hi = mid
        else:
            lo = mid
    return lo, hi


@given(tree_pair())
def test_mediant_betweenness_and_compatibility(pair):
    lo, hi = pair
    mid = mediant(lo, hi)
    assert lo < mid < hi
    assert farey.compatible(lo, mid)
    assert farey.compatible(mid, hi)


@given(tree_pair())
def test_parents_invert_mediant(pair):
    lo, hi = pair
    mid = mediant(lo, hi)
    assert parents(mid) == (lo, hi)


from hypothesis import settings


@settings(max_examples=40, deadline=None)
@given(tree_pair())
def test_denominator_of_points_between_parents(pair):
    lo, hi = pair
    q = mediant(lo, hi)
    if q.denominator > 80:
        return
    # any interior r strictly between the parents, other than q itself,
    # has denominator at least den(q)
    for r in farey.iter_reduced(q.denominator):
        if lo < r < hi and r != q:
            assert r.denominator >= q.denominator


def test_every_reduced_fraction_appears_once():
    seen = {}
    for level in range(1, 13):
        for q in enumerate_level(level):
            assert q not in seen
            seen[q] = level
    for q in farey.iter_reduced(12):
        assert q in seen, f"{q} missing from the first 12 levels"


def test_levels_are_sorted_and_sized():
    for n in range(1, 10):
        level = enumerate_level(n)
        assert level == sorted(level)
        assert len(level) == 2 ** (n - 1)


def test_parse_fraction():
    assert farey.parse_fraction("7/12") == F(7, 12)
    with pytest.raises(ValueError):
        farey.parse_fraction("0.5")
    with pytest.raises(ValueError):
        farey.parse_fraction("-1/2")
