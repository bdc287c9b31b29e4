from itertools import product

import pytest

from katom import (
    SkylineFilling,
    SparsePolynomial,
    WeakComposition,
    dominating_set,
    enumerate_atom_fillings,
    enumerate_meson_highest,
    enumerate_quasi_fillings,
    enumerate_quasi_yamanouchi,
    is_meson_highest,
    is_quasi_semistandard,
    is_quasi_yamanouchi,
    is_semistandard,
    lascoux_atom,
    lift_rows,
    quasi_lascoux,
    settle_rows,
)


def F(*rows):
    return SkylineFilling(rows)


# the meson-highest tableaux of shape (0,0,1,2), in the order free count 0..5
MH_0012 = [
    F([], [], [(3,)], [(4,), (4,)]),
    F([], [], [(3,)], [(4,), (4, 3)]),
    F([], [], [(3, 2)], [(4,), (4, 3)]),
    F([], [], [(3, 1)], [(4,), (4, 3)]),
    F([], [], [(3, 2)], [(4,), (4, 3, 2)]),
    F([], [], [(3, 1)], [(4,), (4, 3, 1)]),
    F([], [], [(3, 2, 1)], [(4,), (4, 3, 2)]),
    F([], [], [(3, 2, 1)], [(4,), (4, 3, 2, 1)]),
]

# the meson-highest tableaux of shape (0,0,2,2)
MH_0022 = [
    F([], [], [(3,), (3,)], [(4,), (4,)]),
    F([], [], [(3,), (2,)], [(4,), (4, 3)]),
    F([], [], [(3, 2), (2,)], [(4,), (4, 3)]),
    F([], [], [(3, 2), (1,)], [(4,), (4, 3, 2)]),
    F([], [], [(3, 2, 1), (1,)], [(4,), (4, 3, 2)]),
    F([], [], [(3,), (3,)], [(4,), (2,)]),
    F([], [], [(3,), (1,)], [(4,), (4, 3)]),
    F([], [], [(3, 1), (1,)], [(4,), (4, 3)]),
    F([], [], [(3,), (3,)], [(4,), (1,)]),
    F([], [], [(3,), (3,)], [(4, 2), (2,)]),
    F([], [], [(3,), (3,)], [(4, 1), (1,)]),
]

# quasiYamanouchi subsets as displayed in the worked examples
QY_0012 = MH_0012[:3] + [MH_0012[4], MH_0012[6], MH_0012[7]]
QY_0022 = MH_0022[:6] + [MH_0022[9]]


def test_representation_bounds():
    with pytest.raises(ValueError):
        F([[]])  # empty box
    with pytest.raises(ValueError):
        F([(2,)])  # entry above its row index
    with pytest.raises(ValueError):
        F([(0,)])


def test_is_semistandard_golden():
    assert is_semistandard(F([], [], [(3,), (3,)], [(4,), (4,)]))
    assert is_semistandard(F([], [], [(3,), (3,)], [(4,), (2,)]))
    assert not is_semistandard(F([], [(1,)]))  # leftmost anchor must be the row index


def test_is_quasi_semistandard_golden():
    for entries in product(range(3), repeat=3):
        for T in enumerate_atom_fillings(WeakComposition(entries)):
            assert is_quasi_semistandard(T)
    assert is_quasi_semistandard(F([], [(1,)]))
    # left-column anchors must decrease from top to bottom
    assert is_quasi_semistandard(F([], [], [(3,)], [(4,), (4,)]))
    assert not is_quasi_semistandard(F([], [], [(3,)], [(2,), (2,)]))


def test_is_meson_highest_golden():
    assert is_meson_highest(F([], [], [(3,)], [(4,), (4,)]))
    assert is_meson_highest(F([], [], [(3, 2)], [(4,), (4, 3)]))
    assert is_meson_highest(F([], [], [], []))
    # a 2 whose next value up sits in its own box only
    assert not is_meson_highest(F([], [], [(3, 2)], [(4,), (4,)]))


def test_is_quasi_yamanouchi_golden():
    assert not is_quasi_yamanouchi(F([], [], [(3, 1)], [(4,), (4, 3)]))
    assert is_quasi_yamanouchi(F([], [], [(3,), (3,)], [(4,), (2,)]))
    assert is_quasi_yamanouchi(F([], [], [], []))


def test_weight():
    assert F([], [], [(3,)], [(4,), (4, 3)]).weight() == WeakComposition((0, 0, 2, 2))
    assert F([], [], [], []).weight() == WeakComposition((0, 0, 0, 0))
    assert F([], [], [(3, 2, 1)], [(4,), (4, 3, 2)]).weight() == WeakComposition((1, 2, 2, 2))


def test_enumerate_meson_highest_golden_sets():
    assert set(enumerate_meson_highest(WeakComposition((0, 0, 1, 2)))) == set(MH_0012)
    assert set(enumerate_meson_highest(WeakComposition((0, 0, 2, 2)))) == set(MH_0022)


def test_enumerate_quasi_yamanouchi_golden_sets():
    assert set(enumerate_quasi_yamanouchi(WeakComposition((0, 0, 1, 2)))) == set(QY_0012)
    assert set(enumerate_quasi_yamanouchi(WeakComposition((0, 0, 2, 2)))) == set(QY_0022)


def test_enumerate_degenerate_shapes():
    empty = F([], [], [])
    assert enumerate_atom_fillings(WeakComposition((0, 0, 0))) == [empty]
    assert enumerate_quasi_yamanouchi(WeakComposition((0, 0, 0))) == [empty]
    row1 = enumerate_atom_fillings(WeakComposition((2,)))
    assert F([(1,), (1,)]) in row1 and len(row1) >= 1


def test_filling_invariants_sweep():
    for entries in product(range(3), repeat=3):
        a = WeakComposition(entries)
        atoms = enumerate_atom_fillings(a)
        quasis = enumerate_quasi_fillings(a)
        assert set(atoms) <= set(quasis)
        assert set(enumerate_meson_highest(a)) <= set(atoms)
        assert set(enumerate_quasi_yamanouchi(a)) <= set(quasis)
        for T in quasis:
            assert T.shape == a
            assert T.weight().total() == T.total_entries
            for r, c, box in T.boxes():
                assert box[0] == max(box)
                assert all(1 <= e <= r for e in box)
            for c in range(1, T.max_row_length + 1):
                column = [e for r in range(1, T.n_rows + 1) if T.box(r, c) for e in T.box(r, c)]
                assert len(column) == len(set(column))


def test_union_identity_sweep():
    for entries in list(product(range(3), repeat=3)) + [(0, 0, 1, 2), (0, 0, 2, 2)]:
        a = WeakComposition(entries)
        lifted = [
            lift_rows(T, a)
            for b in dominating_set(a)
            for T in enumerate_atom_fillings(b)
        ]
        lifted.sort(key=SkylineFilling.sort_key)
        assert lifted == enumerate_quasi_fillings(a)


def test_settle_lift_round_trip():
    for entries in product(range(3), repeat=3):
        a = WeakComposition(entries)
        for T in enumerate_quasi_fillings(a):
            settled = settle_rows(T)
            b = settled.shape
            assert b in dominating_set(a)
            assert is_semistandard(settled)
            assert lift_rows(settled, a) == T
            assert settled.weight() == T.weight()
            assert settled.free_count == T.free_count


def test_lascoux_atom_degenerate():
    assert lascoux_atom(WeakComposition((0, 0))) == SparsePolynomial.one(2)
    assert quasi_lascoux(WeakComposition((0, 0))) == SparsePolynomial.one(2)


def test_lascoux_atom_beta_zero_counts_anchor_only_fillings():
    a = WeakComposition((0, 2, 0, 1))
    anchor_only = [T for T in enumerate_atom_fillings(a) if T.free_count == 0]
    p = lascoux_atom(a).specialize_beta(0)
    assert sum(c for _, c in p.sorted_terms()) == len(anchor_only)


def test_quasi_lascoux_is_atom_sum():
    for entries in product(range(3), repeat=3):
        a = WeakComposition(entries)
        total = SparsePolynomial.zero(3)
        for b in dominating_set(a):
            total = total + lascoux_atom(b)
        assert quasi_lascoux(a) == total


def test_all_anchor_filling_is_in_every_family():
    for entries in ((0, 0, 2, 2), (2, 1, 0), (0, 2, 1)):
        a = WeakComposition(entries)
        T = SkylineFilling([[(i,)] * a[i - 1] for i in range(1, len(a) + 1)])
        assert is_semistandard(T)
        assert is_meson_highest(T)
        assert is_quasi_semistandard(T)
        assert is_quasi_yamanouchi(T)


def test_text_and_json():
    T = F([], [], [(3, 2)], [(4,), (4, 3)])
    assert T.text() == "4* 4*3\n3*2"
    assert T.line() == "4* 4*3 / 3*2"
    assert SkylineFilling.from_json(T.to_json()) == T
    assert T.to_json()["shape"] == [0, 0, 1, 2]
