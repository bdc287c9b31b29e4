"""Exact sparse polynomials in x_1..x_n and beta with integer coefficients.

Only what the generating functions need: addition, scaling by an integer
times a beta power, beta specialization, and exact equality.  Coefficients
are Python ints, so there is no overflow to worry about.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import NamedTuple


class Monomial(NamedTuple):
    """Exponent data of one term: x exponents plus a beta exponent."""

    x: tuple[int, ...]
    beta: int

    def grade(self) -> int:
        return sum(self.x) + self.beta

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        # graded order, then beta exponent, then lexicographic on x
        return (self.grade(), self.beta, self.x)


class SparsePolynomial:
    """Map from monomials to nonzero integer coefficients.

    Immutable.  All monomials share the same number of x variables.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for mon, coeff in items:
            if not isinstance(mon, Monomial):
                mon = Monomial(tuple(mon[0]), mon[1])
            if len(mon.x) != nvars:
                raise ValueError(f"monomial {mon} has {len(mon.x)} variables, expected {nvars}")
            if mon.beta < 0 or any(e < 0 for e in mon.x):
                raise ValueError(f"negative exponent in monomial {mon}")
            if coeff == 0:
                continue
            new = clean.get(mon, 0) + coeff
            if new:
                clean[mon] = new
            else:
                clean.pop(mon, None)
        self._nvars = nvars
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars, {Monomial((0,) * nvars, 0): 1})

    @classmethod
    def term(cls, nvars: int, coeff: int, x_exponents: Iterable[int], beta_exponent: int = 0) -> "SparsePolynomial":
        return cls(nvars, {Monomial(tuple(x_exponents), beta_exponent): coeff})

    @property
    def nvars(self) -> int:
        return self._nvars

    def coefficient(self, x_exponents: Iterable[int], beta_exponent: int = 0) -> int:
        return self._terms.get(Monomial(tuple(x_exponents), beta_exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if other._nvars != self._nvars:
            raise ValueError(f"variable count mismatch: {self._nvars} vs {other._nvars}")
        terms = dict(self._terms)
        for mon, coeff in other._terms.items():
            new = terms.get(mon, 0) + coeff
            if new:
                terms[mon] = new
            else:
                del terms[mon]
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._nvars = self._nvars
        out._terms = terms
        return out

    def scale(self, coeff: int, beta_power: int = 0) -> "SparsePolynomial":
        """Multiply every term by ``coeff * beta**beta_power``."""
        if beta_power < 0:
            raise ValueError("beta power must be nonnegative")
        if coeff == 0:
            return SparsePolynomial.zero(self._nvars)
        terms = {
            Monomial(mon.x, mon.beta + beta_power): c * coeff
            for mon, c in self._terms.items()
        }
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._nvars = self._nvars
        out._terms = terms
        return out

    def specialize_beta(self, t: int) -> "SparsePolynomial":
        """Substitute an integer for beta; the result has beta degree zero."""
        terms: dict[Monomial, int] = {}
        for mon, coeff in self._terms.items():
            flat = Monomial(mon.x, 0)
            new = terms.get(flat, 0) + coeff * t**mon.beta
            if new:
                terms[flat] = new
            else:
                terms.pop(flat, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._nvars = self._nvars
        out._terms = terms
        return out

    def constant_value(self) -> int:
        """The value of a constant polynomial (all exponents zero)."""
        if any(mon.grade() != 0 for mon in self._terms):
            raise ValueError("polynomial is not constant")
        return self._terms.get(Monomial((0,) * self._nvars, 0), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: by total degree, then beta exponent,
        then lexicographically on x exponents."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"<SparsePolynomial {self.text()}>"

    def text(self) -> str:
        """Plain-text rendering, e.g. ``"b^2*x1*x2^2*x3*x4"``."""
        if not self._terms:
            return "0"
        rendered = []
        for mon, coeff in self.sorted_terms():
            factors = []
            if mon.beta == 1:
                factors.append("b")
            elif mon.beta > 1:
                factors.append(f"b^{mon.beta}")
            for i, e in enumerate(mon.x, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            rendered.append((coeff < 0, "*".join(factors)))
        first_neg, first = rendered[0]
        parts = [("-" + first) if first_neg else first]
        for neg, body in rendered[1:]:
            parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def latex(self) -> str:
        """LaTeX rendering with the same term order as :meth:`text`."""
        if not self._terms:
            return "0"
        rendered = []
        for mon, coeff in self.sorted_terms():
            factors = []
            if mon.beta == 1:
                factors.append(r"\beta")
            elif mon.beta > 1:
                factors.append(r"\beta^{%d}" % mon.beta)
            for i, e in enumerate(mon.x, start=1):
                if e == 1:
                    factors.append(f"x_{{{i}}}")
                elif e > 1:
                    factors.append(f"x_{{{i}}}^{{{e}}}")
            mag = abs(coeff)
            body = " ".join(factors)
            if mag != 1 or not body:
                body = f"{mag} {body}".strip()
            rendered.append((coeff < 0, body))
        first_neg, first = rendered[0]
        parts = [("-" + first) if first_neg else first]
        for neg, body in rendered[1:]:
            parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def json_terms(self) -> list[dict]:
        """Canonically ordered term list: ``{"coeff": c, "beta": k, "x": [...]}``."""
        return [
            {"coeff": coeff, "beta": mon.beta, "x": list(mon.x)}
            for mon, coeff in self.sorted_terms()
        ]


def polynomial_sum(polys: Iterable[SparsePolynomial], nvars: int) -> SparsePolynomial:
    """Sum an iterable of polynomials; the empty sum is zero in ``nvars``."""
    total = SparsePolynomial.zero(nvars)
    for p in polys:
        total = total + p
    return total
