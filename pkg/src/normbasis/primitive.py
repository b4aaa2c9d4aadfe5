"""Certified small primitive elements.

An element alpha is primitive exactly when its minimal polynomial has
degree n; that exact criterion drives an avoidance search of degree n - 1
over a minima-achieving family of the ring of integers, yielding alpha in
O_K with every |sigma_i(alpha)| <= (n - 1) |D_K|^{1/n}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import embeddings as emb
from .avoidance import PolynomialMap, simplex_search
from .exact import UniPoly, fr, fr_str
from .ideals import ring_of_integers
from .intervals import FInterval, interval_to_json
from .minima import successive_minima
from .normal_basis import _size_bounds
from .numberfield import FieldElement, NumberField

SCHEMA = "normbasis/primitive-element-certificate/1"


def is_primitive(field: NumberField, x: FieldElement) -> bool:
    """Exact criterion: deg of the minimal polynomial equals the field degree."""
    return field.minimal_polynomial(x).degree == field.n


@dataclass(frozen=True)
class PrimitiveElementCertificate:
    field_label: str
    poly: UniPoly
    disc: int
    alpha: FieldElement
    coords: tuple[int, ...]
    family: tuple[FieldElement, ...]
    minpoly: UniPoly
    bound: FInterval                 # (n - 1) |D_K|^{1/n}
    sup_norms: tuple[FInterval, ...]
    status: str                      # "OK" or "BOUND_UNCERTIFIED"
    precision: int

    def to_json(self) -> dict:
        bits = 64
        return {
            "schema": SCHEMA,
            "field": {"label": self.field_label,
                      "poly": [fr_str(c) for c in self.poly.coeffs],
                      "disc": self.disc},
            "alpha": [fr_str(c) for c in self.alpha.coords],
            "coords": list(self.coords),
            "family": [[fr_str(c) for c in w.coords] for w in self.family],
            "minpoly": [fr_str(c) for c in self.minpoly.coeffs],
            "bound": interval_to_json(self.bound, bits),
            "sup_norms": [interval_to_json(s, bits) for s in self.sup_norms],
            "status": self.status,
            "precision": self.precision,
        }


def find_primitive_element(field: NumberField, es: emb.EmbeddingSet,
                           precision: int = emb.DEFAULT_PRECISION,
                           exhaustive: bool = False) -> PrimitiveElementCertificate:
    """Simplex search of degree n - 1 over the minima family; the map
    prod_{i<j}(sigma_i - sigma_j) has total degree n(n-1)/2 but vanishing is
    decided exactly through the minimal-polynomial degree."""
    n = field.n
    if n == 1:
        raise ValueError("the rational field needs no primitive element search")
    minima = successive_minima(field, es, ring_of_integers(field), precision)
    family = minima.witnesses

    pmap = PolynomialMap(n - 1, lambda coords, el: is_primitive(field, el))
    norm_key = (lambda el: emb.sup_norm(es, el, 48).hi) if exhaustive else None
    coords, alpha, _ = simplex_search(field, family, pmap,
                                      exhaustive=exhaustive, norm_key=norm_key)

    bound, sups, certified = _size_bounds(field, es, alpha, n - 1, precision)
    return PrimitiveElementCertificate(
        field_label=field.label,
        poly=field.f,
        disc=field.disc,
        alpha=alpha,
        coords=tuple(coords),
        family=tuple(family),
        minpoly=field.minimal_polynomial(alpha),
        bound=bound,
        sup_norms=sups,
        status="OK" if certified else "BOUND_UNCERTIFIED",
        precision=precision,
    )


def verify_certificate_json(field: NumberField, es: emb.EmbeddingSet,
                            cert: dict) -> bool:
    """Recompute the minimal polynomial and re-certify the size bound of a
    serialized certificate.  Raises on mismatch; returns True."""
    if cert.get("schema") != SCHEMA:
        raise ValueError(f"unexpected schema {cert.get('schema')!r}")
    n = field.n
    alpha = field.element([fr(c) for c in cert["alpha"]])
    family = [field.element([fr(c) for c in row]) for row in cert["family"]]
    coords = cert["coords"]
    combo = field.zero()
    for a, w in zip(coords, family):
        combo = field.add(combo, field.scal(a, w))
    if combo.coords != alpha.coords:
        raise ValueError("alpha does not match its simplex coordinates")
    if sum(coords) > n - 1:
        raise ValueError("simplex coordinates exceed the degree bound")
    mp = field.minimal_polynomial(alpha)
    if mp.degree != n or [fr_str(c) for c in mp.coeffs] != cert["minpoly"]:
        raise ValueError("minimal polynomial mismatch")
    if cert["status"] == "OK":
        _, _, certified = _size_bounds(field, es, alpha, n - 1, cert["precision"])
        if not certified:
            raise ValueError("size bound no longer certifies")
    return True


def certificate_bytes(cert: PrimitiveElementCertificate) -> bytes:
    return json.dumps(cert.to_json(), separators=(",", ":")).encode()
