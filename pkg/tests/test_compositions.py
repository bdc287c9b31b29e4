from itertools import product

import pytest
from hypothesis import given, strategies as st

from katom import (
    Komposition,
    WeakComposition,
    dominates,
    dominating_set,
    excess,
    is_weakly_decreasing_nonzero,
    nonzero_parts,
    nonzero_positions,
)


def test_nonzero_parts():
    assert nonzero_parts(WeakComposition((0, 2, 0, 1))) == (2, 1)
    assert nonzero_parts(WeakComposition((0, 0, 0))) == ()
    assert nonzero_parts(WeakComposition((0, 3, 0, 0, 4))) == (3, 4)


def test_nonzero_positions():
    assert nonzero_positions(WeakComposition((0, 2, 0, 1))) == (2, 4)
    assert nonzero_positions(WeakComposition((0, 3, 0, 0, 4))) == (2, 5)
    assert nonzero_positions(WeakComposition(())) == ()


def test_dominates():
    assert dominates(WeakComposition((2, 0, 0, 1)), WeakComposition((0, 2, 0, 1)))
    a = WeakComposition((1, 2, 0))
    assert dominates(a, a)
    assert not dominates(WeakComposition((0, 0, 2, 1)), WeakComposition((0, 2, 0, 1)))


def test_dominates_length_mismatch():
    with pytest.raises(ValueError):
        dominates(WeakComposition((1, 0)), WeakComposition((1, 0, 0)))


def test_dominating_set_golden():
    got = dominating_set(WeakComposition((0, 2, 0, 1)))
    want = {(2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1), (0, 2, 1, 0), (0, 2, 0, 1)}
    assert {b.entries for b in got} == want


def test_dominating_set_degenerate():
    zero = WeakComposition((0, 0, 0))
    assert dominating_set(zero) == [zero]
    left = WeakComposition((1, 0))
    assert dominating_set(left) == [left]


def test_dominating_set_properties():
    for entries in product(range(3), repeat=4):
        a = WeakComposition(entries)
        members = dominating_set(a)
        assert a in members
        assert len(members) == len(set(members))
        for b in members:
            assert len(b) == len(a)
            assert b.total() == a.total()
            assert nonzero_parts(b) == nonzero_parts(a)
            assert dominates(b, a)


def test_dominance_is_partial_order():
    comps = [WeakComposition(e) for e in product(range(4), repeat=3)]
    for a in comps:
        assert dominates(a, a)
    for a in comps:
        for b in comps:
            if dominates(a, b) and dominates(b, a):
                assert a == b
    for a in comps:
        for b in comps:
            if not dominates(a, b):
                continue
            for c in comps:
                if dominates(b, c):
                    assert dominates(a, c)


def test_weakly_decreasing_nonzero():
    assert is_weakly_decreasing_nonzero(WeakComposition((0, 0, 2, 2)))
    assert not is_weakly_decreasing_nonzero(WeakComposition((0, 0, 1, 2)))
    assert is_weakly_decreasing_nonzero(WeakComposition((0, 0, 0)))


def test_excess():
    assert excess(Komposition.parse("2,2r,1,3r,2r")) == 3
    assert excess(Komposition.all_black((1, 2, 0, 3))) == 0
    assert excess(Komposition.parse("1,2r,1,1r")) == 2


def test_red_zero_rejected():
    with pytest.raises(ValueError):
        Komposition((0, 3), (True, False))


def test_negative_entry_rejected():
    with pytest.raises(ValueError):
        WeakComposition((1, -1))


def test_komposition_forgets_to_weak_composition():
    k = Komposition.parse("2,2r,1,3r,2r")
    assert k.weak_composition() == WeakComposition((2, 2, 1, 3, 2))


@given(st.lists(st.integers(min_value=0, max_value=9), max_size=8))
def test_composition_text_round_trip(entries):
    a = WeakComposition(entries)
    assert WeakComposition.parse(str(a)) == a


@given(
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=9), st.booleans()).map(
            lambda p: (p[0], p[1] and p[0] > 0)
        ),
        max_size=8,
    )
)
def test_komposition_text_round_trip(pairs):
    k = Komposition.from_pairs(pairs)
    assert Komposition.parse(str(k)) == k
