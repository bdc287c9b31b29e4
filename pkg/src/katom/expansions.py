"""Expansion coefficient tables and the alternating-sum evaluations.

The Lascoux atom expands into kaons and the quasiLascoux polynomial into
glide polynomials, with coefficients that are single beta monomials
``m * beta^k``: ``m`` counts the tableaux of a given weight in the
relevant family and ``k`` is their common number of free entries.  Both
identities are checked as exact polynomial equalities, and evaluating the
coefficient tables at ``beta = -1`` gives the alternating sums, which are
1 exactly when the nonzero parts of the shape weakly decrease.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import WeakComposition
from .glides import glide_polynomial, kaon
from .polynomial import Monomial, SparsePolynomial, polynomial_sum
from .skyline import Family, enumerate_family, lascoux_atom, quasi_lascoux


@dataclass(frozen=True)
class ExpansionTable:
    """Weights and beta-monomial coefficients of one expansion.

    ``coefficients`` maps each weight ``b`` to ``(m, k)`` meaning
    ``m * beta^k``; ``k`` always equals ``sum(b) - sum(source)``.
    """

    base: Family
    source: WeakComposition
    coefficients: dict[WeakComposition, tuple[int, int]]

    def sorted_items(self) -> list[tuple[WeakComposition, tuple[int, int]]]:
        return sorted(self.coefficients.items(), key=lambda item: item[0].entries)

    def beta_polynomial(self) -> SparsePolynomial:
        """The sum of all coefficients ``m * beta^k`` as a polynomial in beta
        alone (zero x variables)."""
        return SparsePolynomial(
            0, ((Monomial((), k), m) for m, k in self.coefficients.values())
        )

    def evaluate(self, t: int) -> int:
        """Sum of ``m * t^k`` over the table, in exact integer arithmetic."""
        return sum(m * t**k for m, k in self.coefficients.values())

    def to_json(self) -> dict:
        return {
            "a": list(self.source),
            "base": self.base.value,
            "terms": [
                {"b": list(b), "m": m, "k": k}
                for b, (m, k) in self.sorted_items()
            ],
        }


def _expansion(a: WeakComposition, family: Family) -> ExpansionTable:
    size = a.total()
    coefficients: dict[WeakComposition, tuple[int, int]] = {}
    for T in enumerate_family(a, family):
        b = T.weight()
        k = T.total_entries - size
        m, old_k = coefficients.get(b, (0, k))
        if old_k != k:
            raise AssertionError(f"weight {b} appears with beta powers {old_k} and {k}")
        coefficients[b] = (m + 1, k)
    return ExpansionTable(family, a, coefficients)


def kaon_expansion(a: WeakComposition) -> ExpansionTable:
    """Coefficients of the Lascoux atom of ``a`` on the kaon basis, read off
    the meson-highest tableaux grouped by weight."""
    return _expansion(a, Family.MESON_HIGHEST)


def glide_expansion(a: WeakComposition) -> ExpansionTable:
    """Coefficients of the quasiLascoux polynomial of ``a`` on the glide
    basis, read off the quasiYamanouchi tableaux grouped by weight."""
    return _expansion(a, Family.QUASI_YAMANOUCHI)


def expansion(a: WeakComposition, base: Family) -> ExpansionTable:
    if base is Family.MESON_HIGHEST:
        return kaon_expansion(a)
    return glide_expansion(a)


def verify_atom_kaon_identity(a: WeakComposition) -> bool:
    """Exact check that the Lascoux atom of ``a`` equals its kaon expansion."""
    rhs = polynomial_sum(
        (kaon(b).scale(m, k) for b, (m, k) in kaon_expansion(a).coefficients.items()),
        len(a),
    )
    return lascoux_atom(a) == rhs


def verify_quasi_glide_identity(a: WeakComposition) -> bool:
    """Exact check that the quasiLascoux polynomial of ``a`` equals its glide
    expansion."""
    rhs = polynomial_sum(
        (glide_polynomial(b).scale(m, k) for b, (m, k) in glide_expansion(a).coefficients.items()),
        len(a),
    )
    return quasi_lascoux(a) == rhs


def alternating_sums(a: WeakComposition) -> tuple[int, int]:
    """Both expansion tables evaluated at ``beta = -1``:
    ``(kaon-side sum, glide-side sum)``."""
    return (kaon_expansion(a).evaluate(-1), glide_expansion(a).evaluate(-1))
