"""Certified small normal-basis generators.

Pipeline: the determinant criterion Delta(x) = det[Tr(e_i sigma_j(x))]
(nonzero exactly when the conjugates of x form a Q-basis), an avoidance
search of degree n over a minima-achieving family of the ring of integers,
and interval certification of |sigma_i(alpha)| <= n |D_K|^{1/n} together
with the height bound and the Hadamard-type lower bound."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import embeddings as emb
from .avoidance import PolynomialMap, simplex_search
from .errors import NotIntegral, NotNormalBasis
from .exact import UniPoly, det_exact, fr, fr_str, mat_rank
from .galois import GaloisAction, apply_automorphism, compute_galois_action
from .ideals import ring_of_integers
from .intervals import FInterval, fi_log, fi_nthroot, interval_to_json
from .minima import successive_minima
from .numberfield import FieldElement, NumberField

SCHEMA = "normbasis/normal-basis-certificate/1"


def delta(field: NumberField, action: GaloisAction, x: FieldElement) -> Fraction:
    """det[Tr(e_i sigma_j(x))] over the verified integral basis, exact."""
    n = field.n
    sig_x = [apply_automorphism(field, action, j, x) for j in range(1, n + 1)]
    basis_els = field.basis_elements()
    m = [[field.trace(field.mul(basis_els[i], sig_x[j])) for j in range(n)]
         for i in range(n)]
    return det_exact(m)


def is_normal_basis(field: NumberField, action: GaloisAction, x: FieldElement) -> bool:
    return delta(field, action, x) != 0


def conjugate_rank(field: NumberField, action: GaloisAction, x: FieldElement) -> int:
    """Independent cross-check: rank of the coordinate matrix of the
    conjugates of x (equals n exactly when Delta(x) != 0)."""
    rows = [list(apply_automorphism(field, action, j, x).coords)
            for j in range(1, field.n + 1)]
    return mat_rank(rows)


@dataclass(frozen=True)
class LowerBoundReport:
    q: Fraction              # sum_i |sigma_i(beta)|^2 = Tr(beta sigma_c(beta)), exact
    disc_abs: int
    passed: bool             # q^n >= |D_K| in exact arithmetic

    def to_json(self) -> dict:
        return {"q": fr_str(self.q), "disc_abs": self.disc_abs, "pass": self.passed}


def check_lower_bound(field: NumberField, es: emb.EmbeddingSet,
                      action: GaloisAction, beta: FieldElement) -> LowerBoundReport:
    """Hadamard lower bound for normal-basis integers:
    sum |sigma_i(beta)|^2 >= |D_K|^{1/n}, checked as q^n >= |D_K| exactly."""
    coords = field.coords_in_basis(beta)
    if any(c.denominator != 1 for c in coords):
        raise NotIntegral("beta is not in the verified order")
    if not is_normal_basis(field, action, beta):
        raise NotNormalBasis("conjugates of beta do not form a basis")
    conj_beta = apply_automorphism(field, action, action.conj_index + 1, beta)
    q = field.trace(field.mul(beta, conj_beta))
    n = field.n
    passed = q >= 0 and q ** n >= abs(field.disc)
    return LowerBoundReport(q, abs(field.disc), passed)


@dataclass(frozen=True)
class NormalBasisCertificate:
    field_label: str
    poly: UniPoly
    disc: int
    r1: int
    r2: int
    order_relative: bool
    alpha: FieldElement
    coords: tuple[int, ...]
    family: tuple[FieldElement, ...]
    delta_value: Fraction
    bound: FInterval                 # n |D_K|^{1/n}
    sup_norms: tuple[FInterval, ...]
    height: FInterval
    height_bound: FInterval          # ln|D_K|/n + ln n
    fj_main_term: Optional[FInterval]  # (n-1)(4n-3) ln|D_K|; asymptotic c(n) omitted
    prop2: LowerBoundReport
    status: str                      # "OK" or "BOUND_UNCERTIFIED"
    precision: int

    def to_json(self, basis=None) -> dict:
        bits = 64
        out = {
            "schema": SCHEMA,
            "field": {
                "label": self.field_label,
                "poly": [fr_str(c) for c in self.poly.coeffs],
                "disc": self.disc,
                "signature": [self.r1, self.r2],
                "order_relative": self.order_relative,
            },
            "alpha": [fr_str(c) for c in self.alpha.coords],
            "coords": list(self.coords),
            "family": [[fr_str(c) for c in w.coords] for w in self.family],
            "delta": fr_str(self.delta_value),
            "bound": interval_to_json(self.bound, bits),
            "sup_norms": [interval_to_json(s, bits) for s in self.sup_norms],
            "height": interval_to_json(self.height, bits),
            "height_bound": interval_to_json(self.height_bound, bits),
            "fj_main_term": (interval_to_json(self.fj_main_term, bits)
                             if self.fj_main_term is not None else None),
            "fj_note": "asymptotic c(n) term omitted",
            "prop2": self.prop2.to_json(),
            "status": self.status,
            "precision": self.precision,
            "embedding_order": "real roots ascending, complex representatives by (re, im)",
        }
        if basis is not None:
            out["field"]["basis"] = [[fr_str(c) for c in row] for row in basis]
        return out


def _size_bounds(field: NumberField, es: emb.EmbeddingSet, alpha: FieldElement,
                 scale: int, precision: int):
    """Certify |sigma_i(alpha)| <= scale * |D|^{1/n}; escalate precision on
    inconclusive comparisons.  Returns (bound, sup_norms, certified)."""
    n = field.n
    prec = precision
    while True:
        bound = fi_nthroot(FInterval.point(abs(field.disc)), n, prec) * scale
        sups = emb.abs_embeddings(es, alpha.coords, prec)
        if all(s.hi <= bound.lo for s in sups):
            return bound, tuple(sups), True
        if all(s.lo <= bound.hi for s in sups) and prec < emb.max_bits():
            prec = min(2 * prec, emb.max_bits())
            continue
        return bound, tuple(sups), False


def find_normal_basis(field: NumberField, es: emb.EmbeddingSet,
                      action: GaloisAction | None = None,
                      precision: int = emb.DEFAULT_PRECISION,
                      exhaustive: bool = False) -> NormalBasisCertificate:
    """Search the simplex of degree n over the minima family of the ring of
    integers for alpha with Delta(alpha) != 0, then certify all bounds."""
    if action is None:
        action = compute_galois_action(field, es)
    n = field.n
    minima = successive_minima(field, es, ring_of_integers(field), precision)
    family = minima.witnesses

    pmap = PolynomialMap(n, lambda coords, el: delta(field, action, el))
    norm_key = (lambda el: emb.sup_norm(es, el, 48).hi) if exhaustive else None
    coords, alpha, value = simplex_search(field, family, pmap,
                                          exhaustive=exhaustive, norm_key=norm_key)

    bound, sups, certified = _size_bounds(field, es, alpha, n, precision)
    h = emb.height(es, alpha.coords, precision)
    log_disc = fi_log(FInterval.point(abs(field.disc)), precision) \
        if abs(field.disc) > 1 else FInterval.point(0)
    height_bound = log_disc * Fraction(1, n) + fi_log(FInterval.point(n), precision)
    fj = ((n - 1) * (4 * n - 3)) * log_disc if abs(field.disc) > 1 else None
    prop2 = check_lower_bound(field, es, action, alpha)

    return NormalBasisCertificate(
        field_label=field.label,
        poly=field.f,
        disc=field.disc,
        r1=field.r1,
        r2=field.r2,
        order_relative=not field.basis_is_maximal,
        alpha=alpha,
        coords=tuple(coords),
        family=tuple(family),
        delta_value=value,
        bound=bound,
        sup_norms=sups,
        height=h,
        height_bound=height_bound,
        fj_main_term=fj,
        prop2=prop2,
        status="OK" if certified else "BOUND_UNCERTIFIED",
        precision=precision,
    )


def verify_certificate_json(field: NumberField, es: emb.EmbeddingSet,
                            action: GaloisAction, cert: dict) -> bool:
    """Recompute every exact quantity and re-check every interval claim of a
    serialized certificate.  Raises on any mismatch; returns True."""
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
    if sum(coords) > n:
        raise ValueError("simplex coordinates exceed the degree bound")
    value = delta(field, action, alpha)
    if fr_str(value) != cert["delta"] or value == 0:
        raise ValueError("delta value mismatch")
    if cert["status"] == "OK":
        bound, sups, certified = _size_bounds(field, es, alpha, n, cert["precision"])
        if not certified:
            raise ValueError("size bound no longer certifies")
    prop2 = check_lower_bound(field, es, action, alpha)
    if not prop2.passed or fr_str(prop2.q) != cert["prop2"]["q"]:
        raise ValueError("lower-bound check mismatch")
    h = emb.height(es, alpha.coords, cert["precision"])
    log_disc = fi_log(FInterval.point(abs(field.disc)), cert["precision"]) \
        if abs(field.disc) > 1 else FInterval.point(0)
    hb = log_disc * Fraction(1, n) + fi_log(FInterval.point(n), cert["precision"])
    if not h.hi <= hb.hi:
        raise ValueError("height bound violated on recomputation")
    return True


def certificate_bytes(cert: NormalBasisCertificate, basis=None) -> bytes:
    """Deterministic serialization (no timestamps inside the certificate)."""
    return json.dumps(cert.to_json(basis), separators=(",", ":")).encode()
