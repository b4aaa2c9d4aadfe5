"""Certified complex embeddings of a number field.

Roots of the defining polynomial are isolated as shrinkable boxes: real
roots exactly via Sturm bisection, complex representatives via a numeric
root cloud certified by an interval Newton containment test.  All
downstream quantities (|sigma_i(x)|, sup-norm, height, covolume) are
enclosures with exact dyadic endpoints.
"""

from __future__ import annotations

import os
from fractions import Fraction

from mpmath import libmp, mp, mpf, polyroots

from .errors import PrecisionExhausted
from .exact import UniPoly, count_real_roots, isolate_real_roots
from .intervals import (FBox, FInterval, box_horner, fi_max, fi_sqrt,
                        fi_log, interval_horner)

DEFAULT_PRECISION = 128


def max_bits() -> int:
    return int(os.environ.get("NORMBASIS_MAX_BITS", "4096"))


def _mpf_to_fraction(x) -> Fraction:
    p, q = libmp.to_rational(mpf(x)._mpf_)
    return Fraction(int(p), int(q))


def _coords_of(x):
    return tuple(x.coords) if hasattr(x, "coords") else tuple(x)


# ---------------------------------------------------------------------------
# interval Newton refinement

def _newton_step_box(f: UniPoly, df: UniPoly, box: FBox, bits: int) -> FBox | None:
    """One interval Newton step; None when f'(box) straddles zero."""
    dval = box_horner(df.coeffs, box)
    if dval.contains_zero():
        return None
    m_re, m_im = box.mid()
    mid = FBox.point(m_re, m_im)
    fval = box_horner(f.coeffs, mid)
    return (mid - fval / dval).round_out(bits)


def _certify_box(f: UniPoly, df: UniPoly, box: FBox, bits: int) -> bool:
    """Newton containment: N(box) strictly inside box proves a unique root."""
    nxt = _newton_step_box(f, df, box, bits)
    return nxt is not None and nxt.is_interior_subset(box)


def _refine_box(f: UniPoly, df: UniPoly, box: FBox, target: Fraction, bits: int) -> FBox:
    for _ in range(64):
        if box.width <= target:
            return box
        nxt = _newton_step_box(f, df, box, bits)
        if nxt is None:
            raise PrecisionExhausted("interval Newton stalled on a root box")
        shrunk = nxt.intersect(box)
        if shrunk.width >= box.width:
            raise PrecisionExhausted("root box refinement is not contracting")
        box = shrunk
    if box.width > target:
        raise PrecisionExhausted("root box did not reach target width")
    return box


def _refine_real(f: UniPoly, df: UniPoly, x: FInterval, target: Fraction, bits: int) -> FInterval:
    """Real-root refinement: bisection until f' is sign-definite, then Newton."""
    for _ in range(10_000):
        if x.width <= target:
            return x
        dval = interval_horner(df.coeffs, x)
        if not dval.contains_zero():
            mid = FInterval.point(x.mid)
            fval = interval_horner(f.coeffs, mid)
            nxt = (mid - fval / dval).round_out(bits).intersect(x)
            if nxt.width < x.width:
                x = nxt
                continue
        mid = x.mid
        mid_val = f(mid)
        if mid_val == 0:
            raise PrecisionExhausted("rational root escaped the squarefree screen")
        if (f(x.lo) > 0) == (mid_val > 0):
            x = FInterval(mid, x.hi)
        else:
            x = FInterval(x.lo, mid)
    raise PrecisionExhausted("real root refinement did not converge")


# ---------------------------------------------------------------------------
# embedding sets

class EmbeddingSet:
    """Isolating boxes for the roots of f, in the fixed ordering: real roots
    ascending, then one representative per conjugate pair (imaginary part
    positive) sorted by (real part, imaginary part).  Index i in [1, n]
    resolves indices beyond r1+r2 by conjugation."""

    def __init__(self, poly: UniPoly, r1: int, r2: int, boxes: tuple[FBox, ...],
                 precision: int):
        self.poly = poly
        self.deriv = poly.derivative()
        self.r1 = r1
        self.r2 = r2
        self.boxes = tuple(boxes)
        self.precision = precision
        self._finer: EmbeddingSet | None = None

    @property
    def n(self) -> int:
        return self.r1 + 2 * self.r2

    def box(self, i: int) -> FBox:
        """Isolating box of sigma_i, 1-based; conjugates resolved implicitly."""
        if not 1 <= i <= self.n:
            raise IndexError(f"embedding index {i} out of range 1..{self.n}")
        if i <= self.r1 + self.r2:
            return self.boxes[i - 1]
        return self.boxes[i - self.r2 - 1].conj()

    def refined(self, precision: int) -> "EmbeddingSet":
        """A sharper embedding set; boxes are subsets of the current ones."""
        if precision <= self.precision:
            return self
        if precision > max_bits():
            raise PrecisionExhausted(f"precision {precision} exceeds NORMBASIS_MAX_BITS")
        cur = self
        while cur._finer is not None and cur._finer.precision <= precision:
            cur = cur._finer
        if cur.precision >= precision:
            return cur
        bits = precision + 32
        new_boxes = []
        for b in cur.boxes:
            mag = 1 + max(abs(b.re.mid), abs(b.im.mid))
            target = mag * Fraction(1, 1 << precision)
            if b.is_real:
                ref = _refine_real(cur.poly, cur.deriv, b.re, target, bits)
                new_boxes.append(FBox(ref, FInterval.point(0)))
            else:
                new_boxes.append(_refine_box(cur.poly, cur.deriv, b, target, bits))
        finer = EmbeddingSet(cur.poly, cur.r1, cur.r2, tuple(new_boxes), precision)
        cur._finer = finer
        return finer


def compute_embeddings(field, precision: int = DEFAULT_PRECISION) -> EmbeddingSet:
    """Isolate all roots of the defining polynomial as certified boxes."""
    if precision < 32:
        raise ValueError("precision must be at least 32 bits")
    f: UniPoly = getattr(field, "f", field)
    df = f.derivative()
    n = f.degree

    r1 = count_real_roots(f)
    r2 = (n - r1) // 2

    boxes: list[FBox] = []
    coarse = Fraction(1, 1 << 24)
    for lo, hi in isolate_real_roots(f):
        x = _refine_real(f, df, FInterval(lo, hi), coarse * (1 + max(abs(lo), abs(hi))), 64)
        boxes.append(FBox(x, FInterval.point(0)))

    if r2 > 0:
        boxes.extend(_complex_representatives(f, df, r1, r2))

    boxes[r1:] = sorted(boxes[r1:], key=lambda b: (b.re.mid, b.im.mid))
    es = EmbeddingSet(f, r1, r2, tuple(boxes), 24)
    return es.refined(precision)


def _complex_representatives(f: UniPoly, df: UniPoly, r1: int, r2: int) -> list[FBox]:
    n = f.degree
    for work_prec in (96, 192, 384, 768):
        old = mp.prec
        try:
            mp.prec = work_prec
            approx = polyroots([int(c) for c in reversed(f.coeffs)],
                               maxsteps=200, extraprec=work_prec)
        finally:
            mp.prec = old
        upper = [z for z in approx if z.imag > 0]
        if len(upper) != r2:
            continue
        # half the minimum separation from other roots and from the real axis
        boxes = []
        ok = True
        for z in upper:
            sep = min(min(abs(z - w) for w in approx if w is not z), 2 * z.imag)
            sep = _mpf_to_fraction(sep)
            cre = _mpf_to_fraction(z.real)
            cim = _mpf_to_fraction(z.imag)
            mag = 1 + max(abs(cre), abs(cim))
            box = None
            for shift in (12, 20, 28, 40, work_prec // 2):
                half = min(sep / 4, mag * Fraction(1, 1 << shift))
                cand = FBox(FInterval(cre - half, cre + half),
                            FInterval(cim - half, cim + half))
                if _certify_box(f, df, cand, work_prec):
                    box = cand
                    break
            if box is None:
                ok = False
                break
            boxes.append(box)
        if ok and r1 + 2 * len(boxes) == n:
            return boxes
    raise PrecisionExhausted("could not certify disjoint complex root boxes")


# ---------------------------------------------------------------------------
# certified evaluation

def eval_embedding(es: EmbeddingSet, i: int, x, precision: int = DEFAULT_PRECISION) -> FBox:
    """Box containing sigma_i(x) for a power-basis coordinate vector x."""
    coords = _coords_of(x)
    prec = max(es.precision, precision)
    while True:
        cur = es.refined(prec)
        val = box_horner(coords, cur.box(i)).round_out(prec + 32)
        mag = 1 + max(abs(val.re.mid), abs(val.im.mid))
        if val.width <= 2 * mag * Fraction(1, 1 << precision):
            return val
        prec *= 2


def abs_embeddings(es: EmbeddingSet, x, precision: int = DEFAULT_PRECISION) -> list[FInterval]:
    """Enclosures of |sigma_i(x)| for i = 1..n (conjugates duplicated)."""
    coords = _coords_of(x)
    reps = []
    for i in range(1, es.r1 + es.r2 + 1):
        val = eval_embedding(es, i, coords, precision)
        reps.append(val.abs(precision + 32))
    out = list(reps)
    out.extend(reps[es.r1:])
    return out


def sup_norm(es: EmbeddingSet, x, precision: int = DEFAULT_PRECISION) -> FInterval:
    """Enclosure of max_i |sigma_i(x)| (the sup-norm on R^r1 x C^r2)."""
    coords = _coords_of(x)
    prec = precision
    while True:
        vals = abs_embeddings(es, coords, prec)
        enc = fi_max(vals)
        if enc.width <= 2 * (1 + enc.hi) * Fraction(1, 1 << precision):
            return enc
        prec *= 2
        if prec > max_bits():
            return enc


def height(es: EmbeddingSet, x, precision: int = DEFAULT_PRECISION) -> FInterval:
    """Enclosure of (1/n) sum_i ln max(1, |sigma_i(x)|) over all n embeddings."""
    coords = _coords_of(x)
    total = FInterval.point(0)
    for a in abs_embeddings(es, coords, precision):
        if a.hi <= 1:
            continue
        clipped = FInterval(max(a.lo, Fraction(1)), a.hi)
        total = total + fi_log(clipped, precision + 32)
    return (total * Fraction(1, es.n)).round_out(precision + 32)


def covolume(field, ideal_norm, precision: int = DEFAULT_PRECISION) -> FInterval:
    """Enclosure of sqrt(|D_K|) * N(I) / 2^r2, the lattice covolume of an
    ideal of norm N(I) under the Minkowski embedding."""
    ideal_norm = Fraction(ideal_norm)
    if ideal_norm <= 0:
        raise ValueError("ideal norm must be positive")
    root = fi_sqrt(FInterval.point(abs(field.disc)), precision + 32)
    return root * (ideal_norm / 2 ** field.r2)
