"""Exact Galois action recovery.

Each automorphism is represented by the exact element g_j in K with
sigma_j(theta) = g_j(theta).  Candidates are guessed by an integer-relation
search (exact LLL on a scaled value lattice built from one high-precision
embedding) and then proved by the exact check f(g_j) = 0 mod f; the numeric
step is only a guess, the exact check is the proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import embeddings as emb
from .errors import NotClosed, NotGalois, PrecisionExhausted
from .exact import UniPoly, lll_int
from .numberfield import FieldElement, NumberField

RECONSTRUCT_MAX_BITS = 1024


@dataclass(frozen=True)
class GaloisAction:
    """images[j] is g_{j+1}; images[0] is the identity (the class of X).
    table[a][b] = c means tau_a o tau_b = tau_c (0-based indices);
    conj_index is the automorphism induced by complex conjugation."""

    images: tuple[FieldElement, ...]
    table: tuple[tuple[int, ...], ...]
    conj_index: int

    @property
    def n(self) -> int:
        return len(self.images)

    def to_json(self) -> dict:
        from .exact import fr_str
        return {
            "images": [[fr_str(c) for c in g.coords] for g in self.images],
            "table": [list(row) for row in self.table],
            "conj": self.conj_index,
        }


def apply_automorphism(field: NumberField, action: GaloisAction, j: int,
                       x: FieldElement) -> FieldElement:
    """sigma_j(x) as exact polynomial composition x o g_j mod f (j is 1-based)."""
    if not 1 <= j <= action.n:
        raise IndexError(f"automorphism index {j} out of range 1..{action.n}")
    g = action.images[j - 1].as_poly()
    return field.from_poly(x.as_poly().compose_mod(g, field.f))


def _relation_candidates(values, prec: int):
    """Short integer relations among complex values (given as FBox centers)."""
    scale = 1 << (prec - 24)
    m = len(values)
    rows = []
    for t, (re, im) in enumerate(values):
        unit = [0] * m
        unit[t] = 1
        rows.append(unit + [round(re * scale), round(im * scale)])
    reduced, _ = lll_int(rows)
    return reduced


def _reconstruct_root(field: NumberField, es: emb.EmbeddingSet, j: int,
                      prec: int) -> FieldElement | None:
    """Guess + prove the element of K whose sigma_1 image is the j-th root."""
    n = field.n
    fine = es.refined(prec)
    base = fine.box(1)
    values = []
    for row in field.basis:
        val = emb.eval_embedding(fine, 1, row, prec)
        values.append((val.re.mid, val.im.mid))
    rj = fine.box(j)
    values.append((rj.re.mid, rj.im.mid))

    for cand in _relation_candidates(values, prec):
        c, d = cand[:n], cand[n]
        if d == 0 or abs(d) > abs(field.disc):
            continue
        coords = [Fraction(-ck, d) for ck in c]
        g = field.element_from_basis_coords(coords)
        fg = field.f.compose_mod(g.as_poly(), field.f)
        if fg.is_zero():
            return g
    return None


def compute_galois_action(field: NumberField, es: emb.EmbeddingSet,
                          precision: int | None = None) -> GaloisAction:
    """Recover all n automorphisms, verify the group, align with embeddings.

    Raises NotGalois when some root of f does not lie in K (reconstruction
    keeps failing after exact verification at the maximum precision).
    """
    n = field.n
    limit = min(RECONSTRUCT_MAX_BITS, emb.max_bits())
    prec = max(es.precision, precision or 0, 160)
    images: list[FieldElement | None] = [None] * n
    while True:
        for j in range(n):
            if images[j] is None:
                images[j] = _reconstruct_root(field, es, j + 1, prec)
        found = sum(1 for g in images if g is not None)
        if found == n:
            break
        if prec >= limit:
            raise NotGalois(found, n)
        prec = min(2 * prec, limit)

    if len({g.coords for g in images}) != n:
        raise NotGalois(len({g.coords for g in images}), n)
    if images[0].as_poly() != UniPoly.x():
        raise PrecisionExhausted("base embedding did not reconstruct to the identity")

    table = _composition_table(field, images)
    conj = _find_conjugation(field, es, images, table)
    return GaloisAction(tuple(images), table, conj)


def _composition_table(field: NumberField, images) -> tuple[tuple[int, ...], ...]:
    index = {g.coords: i for i, g in enumerate(images)}
    n = len(images)
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            # (tau_a o tau_b)(theta) = g_b(g_a(theta))
            comp = field.from_poly(
                images[b].as_poly().compose_mod(images[a].as_poly(), field.f))
            c = index.get(comp.coords)
            if c is None:
                raise NotClosed((a, b))
            row.append(c)
        table.append(tuple(row))
    table = tuple(table)
    _check_group(table)
    return table


def _check_group(table):
    n = len(table)
    ident = [i for i in range(n) if all(table[i][b] == b for b in range(n))]
    if len(ident) != 1:
        raise NotClosed(("identity", ident))
    e = ident[0]
    for a in range(n):
        if e not in table[a]:
            raise NotClosed(("inverse", a))
        if sorted(table[a]) != list(range(n)):
            raise NotClosed(("cancellation", a))


def _find_conjugation(field: NumberField, es: emb.EmbeddingSet, images,
                      table) -> int:
    n = len(images)
    if es.r2 == 0:
        return 0  # totally real: conjugation restricts to the identity
    prec = es.precision
    candidates = list(range(n))
    while len(candidates) > 1 and prec <= emb.max_bits():
        fine = es.refined(prec)
        target = fine.box(1).conj()
        candidates = [j for j in candidates
                      if emb.eval_embedding(fine, 1, images[j].coords, prec).overlaps(target)]
        prec *= 2
    if len(candidates) != 1:
        raise PrecisionExhausted("could not separate the conjugation automorphism")
    j = candidates[0]
    if table[j][j] != 0:
        raise PrecisionExhausted("conjugation candidate does not have order <= 2")
    return j


def verify_group(field: NumberField, action: GaloisAction):
    """Re-derive the composition table from the images; exact equality."""
    table = _composition_table(field, action.images)
    if table != action.table:
        raise NotClosed(("table_mismatch", None))
    return table
