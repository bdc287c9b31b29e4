"""Set-valued skyline fillings and their generating functions.

A skyline diagram of shape ``a`` has ``a_i`` left-justified boxes in row
``i``, rows indexed from the bottom starting at 1.  A set-valued filling
assigns a nonempty set of positive integers to every box; the largest
entry of a box is its *anchor*, the rest are *free*.

Two kinds of fillings are enumerated here.  *Atom* fillings require the
leftmost anchor of each row to equal the row index; *quasi* fillings relax
that to "at most the row index, strictly increasing up the left column".
Filtering atom fillings by the meson-highest property gives the support of
the kaon expansion of the Lascoux atom; filtering quasi fillings by the
quasiYamanouchi property gives the support of the glide expansion of the
quasiLascoux polynomial.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from itertools import combinations, product

from .compositions import WeakComposition, nonzero_parts, nonzero_positions
from .polynomial import Monomial, SparsePolynomial

Box = tuple[int, ...]


class SkylineFilling:
    """A set-valued filling of a skyline diagram.

    Rows are stored bottom-up, empty rows included, so row indices match
    positions in the shape.  Each box is kept as a descending tuple, anchor
    first.  Entries in row ``i`` must lie in ``[1, i]``; that bound is a
    representation invariant (any admissible filling satisfies it).
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Iterable[int]]]):
        clean_rows = []
        for i, row in enumerate(rows, start=1):
            clean_row = []
            for box in row:
                box = tuple(box)
                entries = tuple(sorted(set(box), reverse=True))
                if not entries:
                    raise ValueError(f"empty box in row {i}")
                if len(entries) != len(box):
                    raise ValueError(f"repeated entry inside a box in row {i}")
                for e in entries:
                    if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= i:
                        raise ValueError(f"entry {e!r} out of range [1, {i}] in row {i}")
                clean_row.append(entries)
            clean_rows.append(tuple(clean_row))
        self._rows = tuple(clean_rows)

    @property
    def rows(self) -> tuple[tuple[Box, ...], ...]:
        return self._rows

    @property
    def shape(self) -> WeakComposition:
        return WeakComposition(len(row) for row in self._rows)

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def max_row_length(self) -> int:
        return max((len(row) for row in self._rows), default=0)

    def row(self, i: int) -> tuple[Box, ...]:
        """Row ``i``, 1-based from the bottom."""
        return self._rows[i - 1]

    def box(self, r: int, c: int) -> Box | None:
        """Box at row ``r``, column ``c`` (both 1-based), or None."""
        row = self._rows[r - 1]
        return row[c - 1] if c <= len(row) else None

    def anchor(self, r: int, c: int) -> int | None:
        box = self.box(r, c)
        return box[0] if box else None

    def boxes(self) -> Iterable[tuple[int, int, Box]]:
        """All boxes as ``(row, column, box)`` triples."""
        for r, row in enumerate(self._rows, start=1):
            for c, box in enumerate(row, start=1):
                yield r, c, box

    @property
    def total_entries(self) -> int:
        return sum(len(box) for _, _, box in self.boxes())

    @property
    def free_count(self) -> int:
        return sum(len(box) - 1 for _, _, box in self.boxes())

    def weight(self) -> WeakComposition:
        """How many times each of 1..n appears as an entry."""
        counts = [0] * self.n_rows
        for _, _, box in self.boxes():
            for e in box:
                counts[e - 1] += 1
        return WeakComposition(counts)

    def values(self) -> tuple[int, ...]:
        """Distinct entry values, ascending."""
        return tuple(sorted({e for _, _, box in self.boxes() for e in box}))

    def occurrences(self, value: int) -> tuple[tuple[int, int], ...]:
        """All ``(row, column)`` positions whose box contains ``value``."""
        return tuple((r, c) for r, c, box in self.boxes() if value in box)

    def leftmost_occurrence(self, value: int) -> tuple[int, int] | None:
        positions = self.occurrences(value)
        return min(positions, key=lambda rc: (rc[1], rc[0])) if positions else None

    def with_added(self, r: int, c: int, value: int) -> "SkylineFilling":
        """A copy with ``value`` inserted into box ``(r, c)``."""
        box = self.box(r, c)
        if box is None or value in box:
            raise ValueError(f"cannot add {value} at ({r}, {c})")
        return self._replace_box(r, c, box + (value,))

    def with_removed(self, r: int, c: int, value: int) -> "SkylineFilling":
        """A copy with ``value`` deleted from box ``(r, c)``."""
        box = self.box(r, c)
        if box is None or value not in box:
            raise ValueError(f"no {value} to remove at ({r}, {c})")
        return self._replace_box(r, c, tuple(e for e in box if e != value))

    def _replace_box(self, r: int, c: int, new_box: Box) -> "SkylineFilling":
        rows = [list(row) for row in self._rows]
        rows[r - 1][c - 1] = new_box
        return SkylineFilling(rows)

    def sort_key(self):
        return self._rows

    def __eq__(self, other) -> bool:
        if isinstance(other, SkylineFilling):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"<SkylineFilling {self.line()}>"

    @staticmethod
    def _box_text(box: Box) -> str:
        return f"{box[0]}*" + "".join(str(e) for e in box[1:])

    def line(self) -> str:
        """Single-line rendering, nonempty rows top to bottom joined by ``/``."""
        rows = [
            " ".join(self._box_text(box) for box in row)
            for row in reversed(self._rows)
            if row
        ]
        return " / ".join(rows) if rows else "(empty)"

    def text(self) -> str:
        """Multi-line rendering: one nonempty row per line, bottom row last,
        anchors marked with ``*`` (e.g. boxes {3,2},{1} print as "3*2 1*")."""
        lines = [
            " ".join(self._box_text(box) for box in row)
            for row in reversed(self._rows)
            if row
        ]
        return "\n".join(lines) if lines else "(empty)"

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [[list(box) for box in row] for row in self._rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SkylineFilling":
        filling = cls(obj["rows"])
        if "shape" in obj and list(filling.shape) != list(obj["shape"]):
            raise ValueError("shape field disagrees with rows")
        return filling


class Family(enum.Enum):
    """The two tableau families behind the expansion theorems.

    Values are the wire-format tokens used in JSON output.
    """

    MESON_HIGHEST = "A2P"
    QUASI_YAMANOUCHI = "Q2F"


# ---------------------------------------------------------------------------
# filling conditions


def free_insertion_row(filling: SkylineFilling, column: int, value: int) -> int | None:
    """Where a free ``value`` belongs in ``column``: the row whose box has the
    smallest anchor that can accept it, or None if no box can.

    A box can accept the value iff the value is below the box's anchor and at
    least the anchor of the box to its right, so rows stay weakly decreasing.
    Depends only on anchors, never on free entries already present.
    """
    best_row, best_anchor = None, None
    for r in range(1, filling.n_rows + 1):
        anchor = filling.anchor(r, column)
        if anchor is None or value >= anchor:
            continue
        right = filling.anchor(r, column + 1)
        if right is not None and value < right:
            continue
        if best_anchor is None or anchor < best_anchor:
            best_row, best_anchor = r, anchor
    return best_row


def _entries_non_attacking(T: SkylineFilling) -> bool:
    """No repeated entry within a column, and no free entry trapped by a box
    diagonally below-right in a weakly shorter row.

    Trapped means the free entry at (r, c) lies in ``[min, anchor)`` of a box
    at (r2, c+1) with r2 < r and row r at least as long as row r2, i.e. the
    entry could sit in either box without disturbing that box's extremes.
    Both details are load-bearing: without the diagonal clause the expansion
    tables stop being exact, and without its row-length gate (the same
    asymmetry as the anchor-triple rule) the alternating sums leave {0, 1}.
    """
    lengths = [len(row) for row in T.rows]
    for c in range(1, T.max_row_length + 1):
        seen: set[int] = set()
        for r in range(1, T.n_rows + 1):
            box = T.box(r, c)
            if box is None:
                continue
            if seen & set(box):
                return False
            seen.update(box)
    for r, c, box in T.boxes():
        if len(box) == 1:
            continue
        for r2 in range(1, r):
            if lengths[r - 1] < lengths[r2 - 1]:
                continue
            right = T.box(r2, c + 1)
            if right is None:
                continue
            if any(right[-1] <= free < right[0] for free in box[1:]):
                return False
    return True


def _rows_weakly_decrease(T: SkylineFilling) -> bool:
    for row in T.rows:
        for left, right in zip(row, row[1:]):
            if left[-1] < right[0]:  # min of box vs max of its right neighbour
                return False
    return True


def _anchor_triples_admissible(T: SkylineFilling) -> bool:
    """No anchor directly above or below an adjacent anchor pair may fall
    (weakly) between the pair, whenever the pair's row is long enough:
    at least as long as the other row when below it, strictly longer when
    above it."""
    lengths = [len(row) for row in T.rows]
    for r in range(1, T.n_rows + 1):
        for c in range(1, lengths[r - 1]):
            left = T.anchor(r, c)
            right = T.anchor(r, c + 1)
            for r2 in range(r + 1, T.n_rows + 1):  # third anchor above the pair
                if lengths[r2 - 1] >= c + 1 and lengths[r - 1] >= lengths[r2 - 1]:
                    g = T.anchor(r2, c + 1)
                    if not (g < right or g > left):
                        return False
            for r2 in range(1, r):  # third anchor below the pair
                if lengths[r2 - 1] >= c and lengths[r - 1] > lengths[r2 - 1]:
                    g = T.anchor(r2, c)
                    if not (g < right or g > left):
                        return False
    return True


def _free_entries_minimally_anchored(T: SkylineFilling) -> bool:
    for r, c, box in T.boxes():
        for free in box[1:]:
            if free_insertion_row(T, c, free) != r:
                return False
    return True


def _left_anchors_match_row_index(T: SkylineFilling) -> bool:
    for r in range(1, T.n_rows + 1):
        anchor = T.anchor(r, 1)
        if anchor is not None and anchor != r:
            return False
    return True


def _left_anchors_bounded_and_increasing(T: SkylineFilling) -> bool:
    previous = 0
    for r in range(1, T.n_rows + 1):
        anchor = T.anchor(r, 1)
        if anchor is None:
            continue
        if anchor > r or anchor <= previous:
            return False
        previous = anchor
    return True


def is_semistandard(T: SkylineFilling) -> bool:
    """Atom filling test: non-attacking entries, weakly decreasing rows,
    admissible anchor triples, minimally anchored free entries, and leftmost
    anchors equal to their row index."""
    return (
        _entries_non_attacking(T)
        and _rows_weakly_decrease(T)
        and _anchor_triples_admissible(T)
        and _free_entries_minimally_anchored(T)
        and _left_anchors_match_row_index(T)
    )


def is_quasi_semistandard(T: SkylineFilling) -> bool:
    """Quasi filling test: as :func:`is_semistandard` but leftmost anchors only
    need to be at most their row index and strictly increasing up the left
    column."""
    return (
        _entries_non_attacking(T)
        and _rows_weakly_decrease(T)
        and _anchor_triples_admissible(T)
        and _free_entries_minimally_anchored(T)
        and _left_anchors_bounded_and_increasing(T)
    )


def is_meson_highest(T: SkylineFilling) -> bool:
    """Every value ``i`` present must be an anchor in row ``i``, or have the
    next larger present value weakly right of the leftmost ``i`` in another
    box."""
    values = T.values()
    for idx, v in enumerate(values):
        if v <= T.n_rows and any(box[0] == v for box in T.row(v)):
            continue
        if idx + 1 == len(values):
            return False
        up = values[idx + 1]
        r0, c0 = T.leftmost_occurrence(v)
        if not any(
            c >= c0 and (r, c) != (r0, c0)
            for r, c in T.occurrences(up)
        ):
            return False
    return True


def is_quasi_yamanouchi(T: SkylineFilling) -> bool:
    """Every value ``i`` present must have its leftmost occurrence as the
    anchor of the first box of row ``i``, or have an ``i + 1`` weakly right of
    the leftmost ``i`` in another box."""
    for v in T.values():
        r0, c0 = T.leftmost_occurrence(v)
        if c0 == 1 and r0 == v and T.anchor(v, 1) == v:
            continue
        if not any(
            c >= c0 and (r, c) != (r0, c0)
            for r, c in T.occurrences(v + 1)
        ):
            return False
    return True


def in_family(T: SkylineFilling, family: Family) -> bool:
    if family is Family.MESON_HIGHEST:
        return is_semistandard(T) and is_meson_highest(T)
    return is_quasi_semistandard(T) and is_quasi_yamanouchi(T)


# ---------------------------------------------------------------------------
# enumeration


def _row_anchor_options(row_index: int, length: int, quasi: bool) -> list[tuple[int, ...]]:
    """Weakly decreasing anchor rows for one row of the diagram.  The leading
    anchor is the row index (atom) or anything up to it (quasi)."""
    if length == 0:
        return [()]
    leads = range(1, row_index + 1) if quasi else (row_index,)
    options: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]):
        if len(prefix) == length:
            options.append(prefix)
            return
        for v in range(prefix[-1], 0, -1):
            extend(prefix + (v,))

    for lead in leads:
        extend((lead,))
    return options


def _subsets(items: Sequence) -> list[tuple]:
    out: list[tuple] = []
    for k in range(len(items) + 1):
        out.extend(combinations(items, k))
    return out


def enumerate_fillings(a: WeakComposition, quasi: bool = False) -> list[SkylineFilling]:
    """All atom (or quasi) fillings of shape ``a``, in canonical order.

    Anchor skeletons are generated row by row and filtered through the full
    filling test; free values are then chosen per column (each value at most
    once per column) with their box forced by :func:`free_insertion_row`, and
    every candidate is checked against the filling test again.
    """
    predicate = is_quasi_semistandard if quasi else is_semistandard
    n = len(a)
    row_options = [_row_anchor_options(i, a[i - 1], quasi) for i in range(1, n + 1)]
    found = []
    for skeleton in product(*row_options):
        base = SkylineFilling([[(v,) for v in row] for row in skeleton])
        if not predicate(base):
            continue
        column_choices = []
        for c in range(1, base.max_row_length + 1):
            anchors = {
                base.anchor(r, c)
                for r in range(1, n + 1)
                if base.anchor(r, c) is not None
            }
            addable = []
            for m in range(1, n + 1):
                if m in anchors:
                    continue
                r = free_insertion_row(base, c, m)
                if r is not None:
                    addable.append((m, r))
            column_choices.append(_subsets(addable))
        for choice in product(*column_choices):
            rows = [[list(box) for box in row] for row in base.rows]
            for c, picked in enumerate(choice, start=1):
                for m, r in picked:
                    rows[r - 1][c - 1].append(m)
            filling = SkylineFilling(rows)
            if predicate(filling):
                found.append(filling)
    found.sort(key=SkylineFilling.sort_key)
    return found


def enumerate_atom_fillings(a: WeakComposition) -> list[SkylineFilling]:
    """The fillings generating the Lascoux atom of ``a``."""
    return enumerate_fillings(a, quasi=False)


def enumerate_quasi_fillings(a: WeakComposition) -> list[SkylineFilling]:
    """The fillings generating the quasiLascoux polynomial of ``a``."""
    return enumerate_fillings(a, quasi=True)


def enumerate_meson_highest(a: WeakComposition) -> list[SkylineFilling]:
    """Atom fillings with the meson-highest property: the support of the kaon
    expansion of the Lascoux atom."""
    return [T for T in enumerate_atom_fillings(a) if is_meson_highest(T)]


def enumerate_quasi_yamanouchi(a: WeakComposition) -> list[SkylineFilling]:
    """Quasi fillings with the quasiYamanouchi property: the support of the
    glide expansion of the quasiLascoux polynomial."""
    return [T for T in enumerate_quasi_fillings(a) if is_quasi_yamanouchi(T)]


def enumerate_family(a: WeakComposition, family: Family) -> list[SkylineFilling]:
    if family is Family.MESON_HIGHEST:
        return enumerate_meson_highest(a)
    return enumerate_quasi_yamanouchi(a)


# ---------------------------------------------------------------------------
# row relocation between quasi and atom fillings


def settle_rows(T: SkylineFilling) -> SkylineFilling:
    """Drop every nonempty row to the row indexed by its leftmost anchor.

    On a quasi filling this yields an atom filling of a shape that dominates
    the original with the same nonzero parts; atom fillings are fixed.  The
    box contents, weight and free count are untouched.
    """
    n = T.n_rows
    rows: list[tuple] = [() for _ in range(n)]
    previous = 0
    for r in range(1, n + 1):
        row = T.row(r)
        if not row:
            continue
        target = row[0][0]
        if target > r or target <= previous:
            raise ValueError("left anchors must increase and stay within their row index")
        rows[target - 1] = row
        previous = target
    return SkylineFilling(rows)


def lift_rows(T: SkylineFilling, shape: WeakComposition) -> SkylineFilling:
    """Move the k-th nonempty row of ``T`` to the k-th nonzero position of
    ``shape``; inverse of :func:`settle_rows` on its image.

    Requires ``shape`` to have the nonzero parts of ``T`` in the same order,
    each at a weakly higher position.
    """
    if nonzero_parts(shape) != nonzero_parts(T.shape):
        raise ValueError("target shape must have the same nonzero parts")
    sources = nonzero_positions(T.shape)
    targets = nonzero_positions(shape)
    rows: list[tuple] = [() for _ in range(len(shape))]
    for src, dst in zip(sources, targets):
        if dst < src:
            raise ValueError("rows can only move upward")
        rows[dst - 1] = T.row(src)
    return SkylineFilling(rows)


# ---------------------------------------------------------------------------
# generating functions


def _generating_function(fillings: Iterable[SkylineFilling], a: WeakComposition) -> SparsePolynomial:
    size = a.total()
    return SparsePolynomial(
        len(a),
        (
            (Monomial(T.weight().entries, T.total_entries - size), 1)
            for T in fillings
        ),
    )


def lascoux_atom(a: WeakComposition) -> SparsePolynomial:
    """The Lascoux atom of ``a``: one term ``beta^free(T) * x^wt(T)`` per atom
    filling ``T`` of shape ``a``."""
    return _generating_function(enumerate_atom_fillings(a), a)


def quasi_lascoux(a: WeakComposition) -> SparsePolynomial:
    """The quasiLascoux polynomial of ``a``, computed straight from the quasi
    fillings of shape ``a`` (equivalently, the sum of Lascoux atoms over the
    dominating shapes with the same nonzero parts)."""
    return _generating_function(enumerate_quasi_fillings(a), a)
