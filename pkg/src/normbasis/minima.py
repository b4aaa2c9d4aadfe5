"""Successive Minkowski minima of ideal lattices under the sup-norm,
witness families, and checkers for the product inequality, the
discriminant corollary, and Minkowski's second theorem (upper half).

The enumeration is sound by construction: an axis-aligned region in
embedding space is pulled back through a certified interval inverse of the
basis matrix, so no lattice point of sup-norm <= R can be missed.  A fast
floating filter (numpy) discards far points; every surviving candidate is
re-evaluated with certified interval arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import embeddings as emb
from .errors import PreconditionViolated, PrecisionExhausted
from .exact import fr, lll_int, mat_inv, mat_mul, mat_rank
from .ideals import FractionalIdeal, ideal_mul, ideal_norm
from .intervals import FInterval, fi_max, fi_sqrt, pi_interval
from .numberfield import FieldElement, NumberField

_SQRT2 = Fraction(665857, 470832)  # convergent of sqrt(2); only used in the
                                   # floating LLL weighting, never in proofs
_ENUM_LIMIT = 6_000_000


@dataclass(frozen=True)
class MinimaResult:
    lambdas: tuple[FInterval, ...]
    witnesses: tuple[FieldElement, ...]
    witness_coords: tuple[tuple[int, ...], ...]  # integral-basis coords * den
    den: int
    exhaustive: bool

    def to_json(self, bits: int = 64) -> dict:
        from .intervals import interval_to_json
        from .exact import fr_str
        return {
            "lambdas": [interval_to_json(l, bits) for l in self.lambdas],
            "witnesses": [[fr_str(c) for c in w.coords] for w in self.witnesses],
            "exhaustive": self.exhaustive,
        }


@dataclass(frozen=True)
class ReducedBasis:
    rows: tuple[tuple[int, ...], ...]  # integral-basis coordinates (times den)
    den: int
    elements: tuple[FieldElement, ...]


# ---------------------------------------------------------------------------
# embedding coordinates

def _real_coord_boxes(field: NumberField, es: emb.EmbeddingSet, coords,
                      precision: int) -> list[FInterval]:
    """Real coordinates (sigma_1..sigma_r1, Re/Im of each representative)
    of an element given in power-basis coordinates."""
    out = []
    for i in range(1, es.r1 + es.r2 + 1):
        val = emb.eval_embedding(es, i, coords, precision)
        if i <= es.r1:
            out.append(val.re)
        else:
            out.append(val.re)
            out.append(val.im)
    return out


def _basis_embedding_matrix(field: NumberField, es: emb.EmbeddingSet,
                            rows, den: int, precision: int):
    """Interval matrix of real embedding coordinates for lattice basis rows
    given in integral-basis coordinates (scaled by den)."""
    out = []
    for row in rows:
        el = field.element_from_basis_coords(row)
        coords = [c / den for c in el.coords]
        out.append(_real_coord_boxes(field, es, coords, precision))
    return out


# ---------------------------------------------------------------------------
# LLL preprocessing

def lll_reduce(field: NumberField, es: emb.EmbeddingSet,
               ideal: FractionalIdeal) -> ReducedBasis:
    """Exact basis of the ideal lattice, LLL-reduced (delta = 0.99) on a
    floating approximation of the embedding vectors; conjugate pairs are
    weighted so the reduction quadratic form approximates sum |sigma_i|^2."""
    n = field.n
    miv = _basis_embedding_matrix(field, es, ideal.hnf, ideal.den, 64)
    scale = 1 << 48
    int_rows = []
    for r, row in enumerate(miv):
        out = []
        col = 0
        for i in range(es.r1):
            out.append(round(row[col].mid * scale))
            col += 1
        for _ in range(es.r2):
            out.append(round(row[col].mid * _SQRT2 * scale))
            out.append(round(row[col + 1].mid * _SQRT2 * scale))
            col += 2
        int_rows.append(out)
    _, u = lll_int(int_rows)
    new_rows = mat_mul(u, [list(r) for r in ideal.hnf])
    new_rows = tuple(tuple(int(e) for e in row) for row in new_rows)
    elements = tuple(
        field.scal(Fraction(1, ideal.den), field.element_from_basis_coords(row))
        for row in new_rows)
    return ReducedBasis(new_rows, ideal.den, elements)


# ---------------------------------------------------------------------------
# certified enumeration

def _coordinate_bounds(field: NumberField, es: emb.EmbeddingSet,
                       red: ReducedBasis, radius: Fraction, precision: int):
    """Per-coordinate integer bounds T with: every lattice point of sup-norm
    <= radius has |t_a| <= T_a in the reduced basis."""
    n = field.n
    miv = _basis_embedding_matrix(field, es, red.rows, red.den, precision)
    mid = [[e.mid for e in row] for row in miv]
    p = mat_inv(mid)
    # E = M P - I as intervals; e = max column sum of |E|
    err_cols = [Fraction(0)] * n
    for b in range(n):
        for a in range(n):
            acc = FInterval.point(-1 if a == b else 0)
            for i in range(n):
                acc = acc + miv[b][i] * p[i][a]
            err_cols[a] += acc.abs().hi
    e = max(err_cols)
    if e >= 1:
        raise PrecisionExhausted("embedding matrix too imprecise for enumeration")
    c = [radius * sum(abs(p[i][a]) for i in range(n)) for a in range(n)]
    tmax = max(c) / (1 - e)
    return [int(math.floor(ca + tmax * e)) for ca in c]


def _enumerate_candidates(field: NumberField, es: emb.EmbeddingSet,
                          red: ReducedBasis, radius: Fraction, precision: int):
    """All nonzero lattice points with possibly sup-norm <= radius, as
    sign-canonical integral-basis coordinate tuples (times den)."""
    n = field.n
    bounds = _coordinate_bounds(field, es, red, radius, precision)
    total = 1
    for t in bounds:
        total *= 2 * t + 1
    if total > _ENUM_LIMIT:
        raise PrecisionExhausted(f"enumeration region too large ({total} points)")

    grids = np.meshgrid(*[np.arange(-t, t + 1, dtype=np.int64) for t in bounds],
                        indexing="ij")
    tgrid = np.stack([g.ravel() for g in grids], axis=1)

    bred = np.array([list(r) for r in red.rows], dtype=np.int64)
    coords = tgrid @ bred  # integral-basis coordinates (times den)

    # floating sup-norm filter with a rigorous slack
    smat, slack = _embedding_float_matrix(field, es, precision)
    vals = coords.astype(np.float64) @ smat
    norms = np.max(np.abs(vals), axis=1) / red.den
    coord_mag = np.max(np.abs(coords), axis=1).astype(np.float64)
    cut = float(radius) * (1 + 1e-9) + (slack * np.maximum(coord_mag, 1)) / red.den + 1e-12
    keep = coords[norms <= cut]

    seen = set()
    out = []
    for row in keep:
        tup = tuple(int(v) for v in row)
        if not any(tup):
            continue
        first = next(v for v in tup if v)
        if first < 0:
            tup = tuple(-v for v in tup)
        if tup not in seen:
            seen.add(tup)
            out.append(tup)
    return out


def _embedding_float_matrix(field: NumberField, es: emb.EmbeddingSet,
                            precision: int):
    """Complex matrix sigma_i(e_k) (midpoints) plus a per-unit-coordinate
    error bound covering both interval width and double rounding."""
    n = field.n
    cols = es.r1 + es.r2
    smat = np.zeros((n, cols), dtype=np.complex128)
    width = Fraction(0)
    mag = Fraction(0)
    for k, row in enumerate(field.basis):
        for i in range(1, cols + 1):
            val = emb.eval_embedding(es, i, row, min(precision, 96))
            smat[k, i - 1] = complex(float(val.re.mid), float(val.im.mid))
            width = max(width, val.re.width + val.im.width)
            mag = max(mag, abs(val.re.mid) + abs(val.im.mid))
    slack = float(n * (width + mag * Fraction(1, 10 ** 12)))
    return smat, slack


def _candidate_norm(field: NumberField, es: emb.EmbeddingSet, coords, den: int,
                    precision: int) -> tuple[FieldElement, FInterval]:
    el = field.scal(Fraction(1, den), field.element_from_basis_coords(coords))
    return el, emb.sup_norm(es, el, precision)


def successive_minima(field: NumberField, es: emb.EmbeddingSet,
                      ideal: FractionalIdeal,
                      precision: int = emb.DEFAULT_PRECISION) -> MinimaResult:
    """Certified successive minima of the ideal lattice under the sup-norm.

    Enumerates every lattice point inside a provably covering region (grown
    geometrically from the LLL basis), extracts a greedy independent family
    in order of increasing certified upper bound (ties by lexicographic
    integral-basis coordinates after sign canonicalization)."""
    n = field.n
    red = lll_reduce(field, es, ideal)
    start = [emb.sup_norm(es, el, 48) for el in red.elements]
    radius = max(s.hi for s in start)

    for _ in range(12):
        cands = _enumerate_candidates(field, es, red, radius, max(64, es.precision))
        scored = []
        for tup in cands:
            el, s = _candidate_norm(field, es, tup, red.den, 48)
            scored.append((s.hi, tup, el, s))
        scored.sort(key=lambda it: (it[0], it[1]))

        witnesses = []
        rows = []
        for _, tup, el, s in scored:
            cand_rows = rows + [[fr(c) for c in tup]]
            if mat_rank(cand_rows) == len(cand_rows):
                rows = cand_rows
                witnesses.append((tup, el, s))
                if len(witnesses) == n:
                    break
        if len(witnesses) == n and witnesses[-1][2].hi <= radius:
            lambdas = []
            els = []
            tups = []
            for tup, el, _ in witnesses:
                s = emb.sup_norm(es, el, precision)
                lambdas.append(s)
                els.append(el)
                tups.append(tup)
            lambdas = _monotonize(lambdas)
            return MinimaResult(tuple(lambdas), tuple(els), tuple(tups),
                                red.den, True)
        radius *= 2
    raise PrecisionExhausted("successive minima search did not converge")


def _monotonize(lambdas):
    """Raise lower endpoints so the reported enclosures are non-decreasing
    (the true minima are, per-witness enclosures may jitter)."""
    out = []
    lo = Fraction(0)
    for l in lambdas:
        lo = max(lo, l.lo)
        out.append(FInterval(min(lo, l.hi), l.hi))
    return out


def minima_family(field: NumberField, es: emb.EmbeddingSet,
                  ideal: FractionalIdeal, k: int,
                  precision: int = emb.DEFAULT_PRECISION) -> list[FieldElement]:
    """Independent family x_1..x_k with ||x_i|| <= lambda_k (certified)."""
    if not 1 <= k <= field.n:
        raise PreconditionViolated(f"k={k} out of range 1..{field.n}")
    res = successive_minima(field, es, ideal, precision)
    return list(res.witnesses[:k])


# ---------------------------------------------------------------------------
# inequality checkers

@dataclass(frozen=True)
class ProductInequalityReport:
    k: int
    l: int
    lam_k_i: FInterval
    lam_l_j: FInterval
    lam_n_ij: FInterval
    passed: bool

    def to_json(self, bits: int = 64) -> dict:
        from .intervals import interval_to_json
        return {
            "k": self.k, "l": self.l,
            "lambda_k_I": interval_to_json(self.lam_k_i, bits),
            "lambda_l_J": interval_to_json(self.lam_l_j, bits),
            "lambda_n_IJ": interval_to_json(self.lam_n_ij, bits),
            "pass": self.passed,
        }


def check_product_inequality(field: NumberField, es: emb.EmbeddingSet,
                             ideal_i: FractionalIdeal, ideal_j: FractionalIdeal,
                             k: int, l: int,
                             precision: int = emb.DEFAULT_PRECISION) -> ProductInequalityReport:
    """lambda_n(IJ) <= lambda_k(I) lambda_l(J), requiring k + l >= n + 1."""
    n = field.n
    if k + l < n + 1:
        raise PreconditionViolated(f"need k+l >= n+1, got {k}+{l} with n={n}")
    mi = successive_minima(field, es, ideal_i, precision)
    mj = successive_minima(field, es, ideal_j, precision)
    mij = successive_minima(field, es, ideal_mul(field, ideal_i, ideal_j), precision)
    lam_k = mi.lambdas[k - 1]
    lam_l = mj.lambdas[l - 1]
    lam_n = mij.lambdas[n - 1]
    rhs = lam_k * lam_l
    passed = lam_n.hi <= rhs.hi or lam_n.certainly_le(rhs)
    if not passed:
        # Equality cases defeat any finite-precision comparison.  Fall back on
        # the structural argument: products x_i y_j (i <= k, j <= l) of the
        # minima witnesses lie in IJ and satisfy ||x y|| <= ||x|| ||y|| <=
        # lambda_k lambda_l exactly, so n independent products certify the
        # inequality without a numeric comparison.
        products = [field.mul(x, y)
                    for x in mi.witnesses[:k] for y in mj.witnesses[:l]]
        passed = mat_rank([list(p.coords) for p in products]) == n
    return ProductInequalityReport(k, l, lam_k, lam_l, lam_n, passed)


@dataclass(frozen=True)
class CorollaryReport:
    lambdas: tuple[FInterval, ...]
    supnorm_rhs: FInterval       # (2/pi)^{2 r2} |D| N(I)
    supnorm_pass: bool
    minkowski_rhs: FInterval     # (2/pi)^{r2} sqrt(|D|) N(I)
    minkowski_pass: bool

    def to_json(self, bits: int = 64) -> dict:
        from .intervals import interval_to_json
        return {
            "lambdas": [interval_to_json(l, bits) for l in self.lambdas],
            "lambda_n_pow_n_bound": interval_to_json(self.supnorm_rhs, bits),
            "lambda_n_pow_n_pass": self.supnorm_pass,
            "minkowski_bound": interval_to_json(self.minkowski_rhs, bits),
            "minkowski_pass": self.minkowski_pass,
        }


def _fi_pow(x: FInterval, k: int) -> FInterval:
    out = FInterval.point(1)
    for _ in range(k):
        out = out * x
    return out


def check_corollary_bounds(field: NumberField, es: emb.EmbeddingSet,
                           ideal: FractionalIdeal,
                           precision: int = emb.DEFAULT_PRECISION) -> CorollaryReport:
    """lambda_n(I)^n <= (2/pi)^{2 r2} |D| N(I)  and
    prod_i lambda_i(I) <= (2/pi)^{r2} sqrt(|D|) N(I)."""
    n = field.n
    res = successive_minima(field, es, ideal, precision)
    nrm = ideal_norm(field, ideal)
    pi = pi_interval(precision)
    two_over_pi = FInterval.point(2) / pi

    rhs_sup = _fi_pow(two_over_pi, 2 * field.r2) * (abs(field.disc) * nrm)
    lhs_sup = _fi_pow(res.lambdas[n - 1], n)
    sup_pass = lhs_sup.hi <= rhs_sup.lo

    rhs_mink = (_fi_pow(two_over_pi, field.r2) * nrm
                * fi_sqrt(FInterval.point(abs(field.disc)), precision))
    lhs_mink = FInterval.point(1)
    for l in res.lambdas:
        lhs_mink = lhs_mink * l
    mink_pass = lhs_mink.hi <= rhs_mink.lo

    return CorollaryReport(res.lambdas, rhs_sup, sup_pass, rhs_mink, mink_pass)


def products_span_check(field: NumberField, xs, ys) -> bool:
    """Do the pairwise products of two independent families span K?
    (By the spanning lemma the answer must be yes when |xs|+|ys| >= n+1.)"""
    n = field.n
    if not xs or not ys:
        raise PreconditionViolated("families must be nonempty")
    if mat_rank([list(x.coords) for x in xs]) != len(xs):
        raise PreconditionViolated("first family is linearly dependent")
    if mat_rank([list(y.coords) for y in ys]) != len(ys):
        raise PreconditionViolated("second family is linearly dependent")
    if len(xs) + len(ys) < n + 1:
        raise PreconditionViolated(
            f"need |xs|+|ys| >= n+1, got {len(xs)}+{len(ys)} with n={n}")
    rows = [list(field.mul(x, y).coords) for x in xs for y in ys]
    return mat_rank(rows) == n
