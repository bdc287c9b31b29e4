"""The sign-reversing involution on meson-highest and quasiYamanouchi tableaux.

Scanning the distinct entry values of a tableau from smallest to largest,
and for each value the columns from right to left, the involution adds or
removes one free copy of the value at the first spot where the result
stays inside the family.  Adding and removing are mutually exclusive in a
fixed column (a column either already holds the value or it does not), so
no tie-break is ever needed.  A tableau where every value fails is a fixed
point; it exists exactly when the nonzero parts of the shape weakly
decrease, and then it is the all-anchor tableau whose row ``i`` boxes all
hold ``{i}``.

Because each step changes the number of free entries by one, the pairing
cancels tableaux in signed pairs and leaves at most the single positive
fixed point, which is what drives the alternating sums to 0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import WeakComposition, is_weakly_decreasing_nonzero
from .skyline import (
    Family,
    SkylineFilling,
    enumerate_family,
    free_insertion_row,
    in_family,
)


class InvolutionError(Exception):
    """An involution invariant failed; carries the offending tableau."""

    def __init__(self, filling: SkylineFilling, message: str):
        self.filling = filling
        super().__init__(f"{message}: {filling.line()}")


def try_add_free(
    T: SkylineFilling, column: int, value: int, family: Family
) -> SkylineFilling | None:
    """Insert a free ``value`` into ``column`` if that lands back in the
    family; the receiving box is forced (smallest admissible anchor).

    Assumes ``T`` itself belongs to the family.
    """
    if not 1 <= column <= T.max_row_length:
        return None
    if any(value in box for r in range(1, T.n_rows + 1) if (box := T.box(r, column))):
        return None  # the column may not repeat an entry
    row = free_insertion_row(T, column, value)
    if row is None:
        return None
    candidate = T.with_added(row, column, value)
    return candidate if in_family(candidate, family) else None


def try_remove_free(
    T: SkylineFilling, column: int, value: int, family: Family
) -> SkylineFilling | None:
    """Delete a free ``value`` from ``column`` if that lands back in the
    family.  Anchors are never removable.

    Assumes ``T`` itself belongs to the family.
    """
    if not 1 <= column <= T.max_row_length:
        return None
    for r in range(1, T.n_rows + 1):
        box = T.box(r, column)
        if box and value in box and box[0] != value:
            candidate = T.with_removed(r, column, value)
            return candidate if in_family(candidate, family) else None
    return None


def iota(T: SkylineFilling, family: Family) -> SkylineFilling | None:
    """Apply the involution once; None marks a fixed point.

    Raises ValueError when ``T`` is not in the family to begin with.
    """
    if not in_family(T, family):
        raise ValueError(f"tableau is not in the {family.value} family: {T.line()}")
    for value in T.values():
        for column in range(T.max_row_length, 0, -1):
            result = try_remove_free(T, column, value, family)
            if result is None:
                result = try_add_free(T, column, value, family)
            if result is not None:
                return result
    return None


def chosen_value_oracle(T: SkylineFilling, family: Family) -> int | None:
    """Predict which value the involution modifies, without running it.

    A value is *settled* when some row consists entirely of single-entry
    boxes holding it, every occurrence of it lives in that row, and the row
    is weakly longer than every row above; for the meson-highest family the
    row must in addition be the one indexed by the value itself.  The
    involution touches the smallest unsettled value; if every value is
    settled the tableau is the fixed point and None is returned.
    """
    lengths = [len(row) for row in T.rows]

    def settled(v: int) -> bool:
        candidates = (
            (v,) if family is Family.MESON_HIGHEST else range(1, T.n_rows + 1)
        )
        for r in candidates:
            row = T.row(r)
            if not row or any(box != (v,) for box in row):
                continue
            if any(pos[0] != r for pos in T.occurrences(v)):
                continue
            if all(lengths[r - 1] >= lengths[r2 - 1] for r2 in range(r + 1, T.n_rows + 1)):
                return True
        return False

    for v in T.values():
        if not settled(v):
            return v
    return None


def modified_entry(T: SkylineFilling, U: SkylineFilling) -> tuple[int, int, int, bool]:
    """Locate the single-entry difference between a tableau and its image:
    ``(row, column, value, added)``."""
    if T.shape != U.shape:
        raise ValueError("tableaux have different shapes")
    diffs = []
    for (r, c, box_t), (_, _, box_u) in zip(T.boxes(), U.boxes()):
        delta = set(box_t) ^ set(box_u)
        if delta:
            diffs.append((r, c, delta, len(box_u) > len(box_t)))
    if len(diffs) != 1 or len(diffs[0][2]) != 1:
        raise ValueError("tableaux do not differ by exactly one entry")
    r, c, delta, added = diffs[0]
    return r, c, next(iter(delta)), added


def predicted_fixed_point(a: WeakComposition) -> SkylineFilling | None:
    """The all-anchor tableau with row ``i`` filled by ``{i}`` boxes, when the
    nonzero parts of ``a`` weakly decrease; otherwise None."""
    if not is_weakly_decreasing_nonzero(a):
        return None
    return SkylineFilling([[(i,)] * a[i - 1] for i in range(1, len(a) + 1)])


@dataclass(frozen=True)
class PairingReport:
    """The orbit structure of the involution on one family set."""

    family: Family
    shape: WeakComposition
    pairs: tuple[tuple[SkylineFilling, SkylineFilling], ...]
    fixed_points: tuple[SkylineFilling, ...]

    @property
    def member_count(self) -> int:
        return 2 * len(self.pairs) + len(self.fixed_points)

    def signed_count(self) -> int:
        """Sum of ``(-1)**free_count`` over all members; pairs cancel."""
        total = sum(
            (-1) ** T.free_count + (-1) ** U.free_count for T, U in self.pairs
        )
        return total + sum((-1) ** T.free_count for T in self.fixed_points)

    def to_json(self) -> dict:
        return {
            "a": list(self.shape),
            "family": self.family.value,
            "pairs": [[T.to_json(), U.to_json()] for T, U in self.pairs],
            "fixed": [T.to_json() for T in self.fixed_points],
        }

    def text(self) -> str:
        lines = [
            f"{T.line()}  \u2194  {U.line()}" for T, U in self.pairs
        ]
        lines.extend(f"{T.line()}  (unpaired)" for T in self.fixed_points)
        return "\n".join(lines) if lines else "(empty family)"


def pairing(a: WeakComposition, family: Family) -> PairingReport:
    """Run the involution over the whole family set of ``a`` and collect the
    pairs and fixed points, verifying that it really is an involution."""
    members = enumerate_family(a, family)
    pairs: dict[tuple, tuple[SkylineFilling, SkylineFilling]] = {}
    fixed = []
    for T in members:
        U = iota(T, family)
        if U is None:
            fixed.append(T)
            continue
        if abs(U.free_count - T.free_count) != 1:
            raise InvolutionError(T, "image free count must differ by exactly 1")
        if iota(U, family) != T:
            raise InvolutionError(T, "iota is not self-inverse at this tableau")
        low, high = sorted((T, U), key=SkylineFilling.sort_key)
        pairs[low.sort_key()] = (low, high)
    report = PairingReport(
        family=family,
        shape=a,
        pairs=tuple(pairs[key] for key in sorted(pairs)),
        fixed_points=tuple(sorted(fixed, key=SkylineFilling.sort_key)),
    )
    if report.member_count != len(members):
        raise InvolutionError(
            members[0], "pairs and fixed points do not partition the family"
        )
    return report
