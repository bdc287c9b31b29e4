"""Weak compositions, colored kompositions and the dominance order.

These are the index sets for everything else in the package: every
polynomial family is indexed by a weak composition, and the kaon
generating functions run over colored kompositions.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations


class WeakComposition(Sequence[int]):
    """A finite sequence of nonnegative integers.

    Immutable and hashable; equality is elementwise.  Positions are
    1-indexed in all documentation and diagnostics.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"composition entries must be nonnegative integers, got {e!r}")
        self._entries = entries

    @classmethod
    def parse(cls, text: str) -> "WeakComposition":
        """Parse the textual form, e.g. ``"0,2,0,1"``.  An empty string is the
        empty composition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"malformed composition {text!r}") from None

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, idx):
        return self._entries[idx]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeakComposition):
            return self._entries == other._entries
        return NotImplemented

    def __lt__(self, other: "WeakComposition") -> bool:
        return self._entries < other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"WeakComposition({self._entries})"

    def __str__(self) -> str:
        return ",".join(str(e) for e in self._entries)

    def total(self) -> int:
        """Sum of all entries."""
        return sum(self._entries)


class Komposition:
    """A weak composition whose entries are colored black or red.

    Red entries are always nonzero; the number of red entries is the
    *excess*, which becomes the beta exponent in kaon monomials.
    """

    __slots__ = ("_values", "_reds")

    def __init__(self, values: Iterable[int], reds: Iterable[bool]):
        values = tuple(values)
        reds = tuple(bool(r) for r in reds)
        if len(values) != len(reds):
            raise ValueError("values and colors must have equal length")
        for v, r in zip(values, reds):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"komposition entries must be nonnegative integers, got {v!r}")
            if r and v == 0:
                raise ValueError("zero entries are always black")
        self._values = values
        self._reds = reds

    @classmethod
    def all_black(cls, values: Iterable[int]) -> "Komposition":
        values = tuple(values)
        return cls(values, (False,) * len(values))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, bool]]) -> "Komposition":
        pairs = tuple(pairs)
        return cls((v for v, _ in pairs), (r for _, r in pairs))

    @classmethod
    def parse(cls, text: str) -> "Komposition":
        """Parse the textual form, e.g. ``"2,2r,1,3r,2r"``."""
        text = text.strip()
        if not text:
            return cls((), ())
        values, reds = [], []
        for part in text.split(","):
            part = part.strip()
            red = part.endswith("r")
            values.append(int(part[:-1] if red else part))
            reds.append(red)
        return cls(values, reds)

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    @property
    def reds(self) -> tuple[bool, ...]:
        return self._reds

    @property
    def entries(self) -> tuple[tuple[int, bool], ...]:
        return tuple(zip(self._values, self._reds))

    @property
    def excess(self) -> int:
        return sum(self._reds)

    def weak_composition(self) -> WeakComposition:
        """Forget the colors."""
        return WeakComposition(self._values)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[bool, ...]]:
        return (self._values, self._reds)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Komposition):
            return self._values == other._values and self._reds == other._reds
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._values, self._reds))

    def __repr__(self) -> str:
        return f"Komposition.parse({str(self)!r})"

    def __str__(self) -> str:
        return ",".join(f"{v}r" if r else str(v) for v, r in zip(self._values, self._reds))


def excess(b: Komposition) -> int:
    """Number of red entries of ``b``."""
    return b.excess


def nonzero_parts(a: Sequence[int]) -> tuple[int, ...]:
    """The nonzero entries of ``a``, in order."""
    return tuple(e for e in a if e != 0)


def nonzero_positions(a: Sequence[int]) -> tuple[int, ...]:
    """1-based positions of the nonzero entries of ``a``, ascending."""
    return tuple(i for i, e in enumerate(a, start=1) if e != 0)


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff every prefix sum of ``b`` is at least the prefix sum of ``a``.

    Compositions of different lengths are incomparable.
    """
    if len(b) != len(a):
        raise ValueError(f"cannot compare compositions of lengths {len(b)} and {len(a)}")
    sb = sa = 0
    for x, y in zip(b, a):
        sb += x
        sa += y
        if sb < sa:
            return False
    return True


def dominating_set(a: WeakComposition) -> list[WeakComposition]:
    """All ``b`` of the same length that dominate ``a`` and have the same
    nonzero parts in the same order.

    Enumerates every order-preserving placement of the nonzero parts into
    the available positions and keeps the dominating ones.  Returned in
    lexicographic order.
    """
    parts = nonzero_parts(a)
    n = len(a)
    found = []
    for positions in combinations(range(n), len(parts)):
        entries = [0] * n
        for pos, part in zip(positions, parts):
            entries[pos] = part
        b = WeakComposition(entries)
        if dominates(b, a):
            found.append(b)
    found.sort()
    return found


def is_weakly_decreasing_nonzero(a: Sequence[int]) -> bool:
    """True iff the nonzero parts of ``a`` form a weakly decreasing sequence."""
    parts = nonzero_parts(a)
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
