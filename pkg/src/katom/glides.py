"""Mesonic glides, kaons and glide polynomials.

A shape splits into blocks, one per nonzero entry: block j covers the
positions after the previous nonzero entry up to and including the j-th
nonzero position.  A mesonic glide fills every block with colored values
so that the block sum minus the number of red entries recovers the block's
target, the leftmost nonzero entry of the block is black, and the final
position of the block is nonzero.  Positions after the last nonzero entry
stay zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .compositions import (
    Komposition,
    WeakComposition,
    dominating_set,
    nonzero_positions,
)
from .polynomial import Monomial, SparsePolynomial, polynomial_sum

Segment = tuple[tuple[int, bool], ...]


@dataclass(frozen=True)
class GlideBlock:
    """One block of a shape: 1-based positions ``start..end`` whose last
    position carries the nonzero target entry."""

    start: int
    end: int
    target: int

    def __post_init__(self):
        if self.start < 1 or self.start > self.end:
            raise ValueError(f"bad block bounds {self.start}..{self.end}")
        if self.target < 1:
            raise ValueError("block target must be positive")

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def blocks_of(a: WeakComposition) -> list[GlideBlock]:
    """The block decomposition of ``a``; empty when ``a`` has no nonzero entry."""
    positions = nonzero_positions(a)
    blocks = []
    prev = 0
    for pos in positions:
        blocks.append(GlideBlock(prev + 1, pos, a[pos - 1]))
        prev = pos
    return blocks


def enumerate_block_fillings(block: GlideBlock) -> list[Segment]:
    """All colored segments admissible for one block.

    A red entry contributes its value minus one to the block total, so the
    search runs over weak compositions of the target into the block length
    plus an independent color choice per position, then filters: leftmost
    nonzero entry black, final entry nonzero, no red zeros.  Results in
    lexicographic order on (values, colors).
    """
    length, target = block.length, block.target
    found: list[Segment] = []

    def compositions(total: int, parts: int):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for head in range(total + 1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    for base in compositions(target, length):
        for colors in product((False, True), repeat=length):
            values = tuple(v + (1 if red else 0) for v, red in zip(base, colors))
            if values[-1] == 0:
                continue
            first_nonzero = next(i for i, v in enumerate(values) if v != 0)
            if colors[first_nonzero]:
                continue
            found.append(tuple(zip(values, colors)))
    found.sort(key=lambda seg: (tuple(v for v, _ in seg), tuple(r for _, r in seg)))
    return found


def enumerate_mesonic_glides(a: WeakComposition) -> list[Komposition]:
    """All mesonic glides of ``a``, in lexicographic order on (values, colors).

    The zero shape has exactly one glide: the all-black zero komposition.
    """
    blocks = blocks_of(a)
    n = len(a)
    tail_len = n - (blocks[-1].end if blocks else 0)
    tail = ((0, False),) * tail_len
    glides = []
    for segments in product(*(enumerate_block_fillings(b) for b in blocks)):
        pairs: Segment = ()
        for seg in segments:
            pairs += seg
        glides.append(Komposition.from_pairs(pairs + tail))
    glides.sort(key=Komposition.sort_key)
    return glides


def kaon(a: WeakComposition) -> SparsePolynomial:
    """The kaon of ``a``: one term ``beta^excess(b) * x^values(b)`` per
    mesonic glide ``b``."""
    n = len(a)
    return SparsePolynomial(
        n,
        ((Monomial(g.values, g.excess), 1) for g in enumerate_mesonic_glides(a)),
    )


def glide_polynomial(a: WeakComposition) -> SparsePolynomial:
    """The glide polynomial of ``a``: the sum of kaons over every shape that
    dominates ``a`` with the same nonzero parts."""
    return polynomial_sum((kaon(b) for b in dominating_set(a)), len(a))
