"""Fractional ideals of the verified order: construction from generators,
multiplication, norms.  Ideals are stored as a canonical HNF basis over the
integral basis together with a positive denominator."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroIdeal
from .exact import hnf, hnf_solve
from .numberfield import FieldElement, NumberField


@dataclass(frozen=True)
class FractionalIdeal:
    """Rows of hnf are a Z-basis in integral-basis coordinates, scaled by
    1/den.  hnf is canonical (upper triangular, positive pivots) and den is
    coprime to the content of hnf."""

    hnf: tuple[tuple[int, ...], ...]
    den: int

    def to_json(self) -> dict:
        return {"hnf": [list(r) for r in self.hnf], "den": self.den}

    def basis_elements(self, field: NumberField) -> list[FieldElement]:
        return [field.scal(Fraction(1, self.den),
                           field.element_from_basis_coords(row))
                for row in self.hnf]


def _normalize(rows: list[list[int]], den: int) -> FractionalIdeal:
    h, _ = hnf(rows)
    n = len(h[0])
    h = [row for row in h if any(row)]
    if len(h) != n:
        raise ZeroIdeal("generators do not span a full-rank lattice")
    content = 0
    for row in h:
        for e in row:
            content = math.gcd(content, e)
    g = math.gcd(den, content)
    if g > 1:
        den //= g
        h = [[e // g for e in row] for row in h]
    return FractionalIdeal(tuple(tuple(row) for row in h), den)


def ideal_from_generators(field: NumberField, gens) -> FractionalIdeal:
    """The O-module generated by gens: HNF of the rows g_i * e_j."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroIdeal("need at least one nonzero generator")
    rows_q = []
    for g in gens:
        for e in field.basis_elements():
            rows_q.append(field.coords_in_basis(field.mul(g, e)))
    den = math.lcm(*(c.denominator for row in rows_q for c in row))
    rows = [[int(c * den) for c in row] for row in rows_q]
    ideal = _normalize(rows, den)
    _check_closure(field, ideal)
    return ideal


def _check_closure(field: NumberField, ideal: FractionalIdeal):
    """The row span must be closed under multiplication by basis elements."""
    n = field.n
    table = field.basis_mul_table()
    for row in ideal.hnf:
        for j in range(n):
            prod = [0] * n
            for i, c in enumerate(row):
                if c:
                    for k in range(n):
                        prod[k] += c * table[i][j][k]
            if hnf_solve(ideal.hnf, prod) is None:
                raise ZeroIdeal(f"module not closed under basis element {j}")


def ideal_mul(field: NumberField, a: FractionalIdeal, b: FractionalIdeal) -> FractionalIdeal:
    """HNF of the module generated by all pairwise basis products."""
    n = field.n
    table = field.basis_mul_table()
    rows = []
    for ra in a.hnf:
        for rb in b.hnf:
            prod = [0] * n
            for i, ca in enumerate(ra):
                if not ca:
                    continue
                for j, cb in enumerate(rb):
                    if not cb:
                        continue
                    c = ca * cb
                    for k in range(n):
                        prod[k] += c * table[i][j][k]
            rows.append(prod)
    return _normalize(rows, a.den * b.den)


def ideal_norm(field: NumberField, a: FractionalIdeal) -> Fraction:
    """|det hnf| / den^n, exact."""
    det = 1
    for i in range(len(a.hnf)):
        det *= a.hnf[i][i]
    return Fraction(abs(det), a.den ** field.n)


def ideal_equal(a: FractionalIdeal, b: FractionalIdeal) -> bool:
    return a.hnf == b.hnf and a.den == b.den


def ring_of_integers(field: NumberField) -> FractionalIdeal:
    n = field.n
    return FractionalIdeal(tuple(tuple(int(i == j) for j in range(n))
                                 for i in range(n)), 1)


def principal_ideal(field: NumberField, g: FieldElement) -> FractionalIdeal:
    return ideal_from_generators(field, [g])
