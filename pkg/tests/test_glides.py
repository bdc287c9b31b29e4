from itertools import product

from katom import (
    GlideBlock,
    Komposition,
    Monomial,
    SparsePolynomial,
    WeakComposition,
    dominates,
    enumerate_block_fillings,
    enumerate_mesonic_glides,
    glide_polynomial,
    kaon,
)
from katom.glides import blocks_of


def segments(block):
    return {seg for seg in enumerate_block_fillings(block)}


def seg(text):
    k = Komposition.parse(text)
    return tuple(zip(k.values, k.reds))


def test_block_fillings_length_two_target_two():
    assert segments(GlideBlock(1, 2, 2)) == {seg("0,2"), seg("1,1"), seg("1,2r"), seg("2,1r")}


def test_block_fillings_length_two_target_one():
    assert segments(GlideBlock(3, 4, 1)) == {seg("0,1"), seg("1,1r")}


def test_block_fillings_single_position():
    for t in (1, 2, 5):
        assert segments(GlideBlock(2, 2, t)) == {((t, False),)}


def test_blocks_of():
    blocks = blocks_of(WeakComposition((0, 2, 0, 1)))
    assert [(b.start, b.end, b.target) for b in blocks] == [(1, 2, 2), (3, 4, 1)]


def test_glide_set_golden():
    got = enumerate_mesonic_glides(WeakComposition((0, 2, 0, 1)))
    want = [
        "0,2,0,1", "1,1,0,1", "1,2r,0,1", "2,1r,0,1",
        "0,2,1,1r", "1,1,1,1r", "1,2r,1,1r", "2,1r,1,1r",
    ]
    assert {str(g) for g in got} == set(want)
    assert len(got) == 8


def test_glide_example_long_shape():
    glides = enumerate_mesonic_glides(WeakComposition((0, 3, 0, 0, 4)))
    assert Komposition.parse("2,2r,1,3r,2r") in glides


def test_zero_shape_has_single_zero_glide():
    assert enumerate_mesonic_glides(WeakComposition((0, 0))) == [Komposition.all_black((0, 0))]


def test_kaon_golden():
    got = kaon(WeakComposition((0, 2, 0, 1)))
    want = SparsePolynomial(4, {
        Monomial((0, 2, 0, 1), 0): 1,
        Monomial((1, 1, 0, 1), 0): 1,
        Monomial((1, 2, 0, 1), 1): 1,
        Monomial((2, 1, 0, 1), 1): 1,
        Monomial((0, 2, 1, 1), 1): 1,
        Monomial((1, 1, 1, 1), 1): 1,
        Monomial((1, 2, 1, 1), 2): 1,
        Monomial((2, 1, 1, 1), 2): 1,
    })
    assert got == want


def test_kaon_degenerate_shapes():
    assert kaon(WeakComposition((0, 0, 0))) == SparsePolynomial.one(3)
    assert kaon(WeakComposition(())) == SparsePolynomial.one(0)
    assert kaon(WeakComposition((2,))) == SparsePolynomial.term(1, 1, (2,))


def test_glide_polynomial_is_kaon_sum():
    a = WeakComposition((0, 1))
    assert glide_polynomial(a) == kaon(WeakComposition((1, 0))) + kaon(a)
    zero = WeakComposition((0, 0))
    assert glide_polynomial(zero) == SparsePolynomial.one(2)


def test_glide_polynomial_beta_zero_degree():
    p = glide_polynomial(WeakComposition((0, 2, 0, 1))).specialize_beta(0)
    assert p
    assert all(sum(m.x) == 3 for m, _ in p.sorted_terms())


def test_glide_invariants_small_sweep():
    for entries in product(range(3), repeat=3):
        a = WeakComposition(entries)
        glides = enumerate_mesonic_glides(a)
        expected = 1
        for block in blocks_of(a):
            expected *= len(enumerate_block_fillings(block))
        assert len(glides) == expected
        assert len(set(glides)) == len(glides)
        for g in glides:
            assert dominates(g.weak_composition(), a)
            assert sum(g.values) - g.excess == a.total()
        p = kaon(a)
        # the shape's own monomial appears with coefficient 1
        assert p.coefficient(a.entries, 0) == 1
        # the beta-free part is never empty
        assert p.specialize_beta(0)
