"""Exact arithmetic substrate: rationals, dense rational matrices, univariate
polynomials over Q, and exact integer lattice routines (HNF, LLL).

Everything here is pure and deterministic; matrices are plain lists of lists
of ``fractions.Fraction`` (row-major), polynomials are :class:`UniPoly`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonMonicModulus, NonSquare, NotInvertible, Singular

Q = Fraction


def fr(x) -> Fraction:
    """Coerce ints, strings like ``"p/q"``, or Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def fr_str(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` (``"p"`` when the denominator is 1)."""
    x = fr(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# matrices over Q (lists of lists of Fraction)

def mat(rows) -> list[list[Fraction]]:
    return [[fr(e) for e in row] for row in rows]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def int_identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    assert len(a[0]) == inner
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def mat_vec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def vec_mat(v, a):
    return [sum(v[k] * a[k][j] for k in range(len(v))) for j in range(len(a[0]))]


def _det_bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_exact(m) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss on a row-scaled
    integer matrix, so no intermediate denominator blowup)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is {len(m)}x{len(m[0])}")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in m:
        row = [fr(e) for e in row]
        d = math.lcm(*(e.denominator for e in row))
        scale *= d
        int_rows.append([int(e * d) for e in row])
    return Fraction(_det_bareiss_int(int_rows)) / scale


def solve_linear(m, b):
    """Exact solution x of m x = b for square rational m; raises Singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is {len(m)}x{len(m[0])}")
    a = [[fr(e) for e in row] + [fr(b[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pval = a[col][col]
        a[col] = [e / pval for e in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [e - f * p for e, p in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def mat_inv(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is {len(m)}x{len(m[0])}")
    a = [[fr(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pval = a[col][col]
        a[col] = [e / pval for e in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [e - f * p for e, p in zip(a[i], a[col])]
    return [row[n:] for row in a]


def mat_rank(m) -> int:
    """Exact rank of a rational matrix (Gaussian elimination)."""
    if not m:
        return 0
    a = [[fr(e) for e in row] for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pval = a[rank][col]
        a[rank] = [e / pval for e in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [e - f * p for e, p in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# Hermite normal form (row style, positive pivots)

def hnf(m: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style upper-triangular HNF of an integer matrix.

    Returns (h, u) with u unimodular and u*m = h.  Pivots are positive,
    entries above a pivot are reduced into [0, pivot), zero rows sink last.
    """
    h = [[int(e) for e in row] for row in m]
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = int_identity(nrows)

    def sub(dst, src, q):
        if q == 0:
            return
        h[dst] = [a - q * b for a, b in zip(h[dst], h[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if h[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            for i in nz:
                if i != i0:
                    sub(i, i0, h[i][c] // h[i0][c])
        nz = [i for i in range(r, nrows) if h[i][c] != 0]
        if not nz:
            continue
        i0 = nz[0]
        h[r], h[i0] = h[i0], h[r]
        u[r], u[i0] = u[i0], u[r]
        if h[r][c] < 0:
            h[r] = [-e for e in h[r]]
            u[r] = [-e for e in u[r]]
        for i in range(r):
            sub(i, r, h[i][c] // h[r][c])
        r += 1
    return h, u


def hnf_solve(h: Sequence[Sequence[int]], v: Sequence[int]):
    """Express v as an integer combination of the rows of a square HNF matrix.

    Returns the integer coefficient vector, or None when v is not in the
    row span over Z.  h must be upper triangular with nonzero diagonal.
    """
    n = len(h)
    v = [int(e) for e in v]
    coeffs = [0] * n
    for c in range(n):
        if v[c] == 0:
            continue
        q, rem = divmod(v[c], h[c][c])
        if rem != 0:
            return None
        coeffs[c] = q
        v = [a - q * b for a, b in zip(v, h[c])]
    if any(v):
        return None
    return coeffs


# ---------------------------------------------------------------------------
# exact integer LLL

def lll_int(rows: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)):
    """LLL-reduce linearly independent integer rows (exact rational
    Gram-Schmidt).  Returns (reduced rows, unimodular transform u) with
    u * rows = reduced.
    """
    b = [[int(e) for e in row] for row in rows]
    n = len(b)
    u = int_identity(n)
    if n <= 1:
        return b, u

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [[Fraction(e) for e in b[0]]]
        norms = [Fraction(dot(b[0], b[0]))]
        for i in range(1, n):
            v = [Fraction(e) for e in b[i]]
            for j in range(i):
                mu[i][j] = sum(Fraction(bi) * bs for bi, bs in zip(b[i], bstar[j])) / norms[j]
                v = [a - mu[i][j] * c for a, c in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(sum(e * e for e in v))
        return mu, norms

    mu, norms = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q != 0:
                b[k] = [a - q * c for a, c in zip(b[k], b[j])]
                u[k] = [a - q * c for a, c in zip(u[k], u[j])]
                mu, norms = gso()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            u[k - 1], u[k] = u[k], u[k - 1]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b, u


# ---------------------------------------------------------------------------
# univariate polynomials over Q

class UniPoly:
    """Dense univariate polynomial over Q, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers
    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly([])

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(fr_str(c))
            elif i == 1:
                terms.append(f"{fr_str(c)}*x")
            else:
                terms.append(f"{fr_str(c)}*x^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- ring operations
    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(), UniPoly(rem)
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c != 0:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quo), UniPoly(rem[: other.degree])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly([c / self.coeffs[-1] for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; works for Fraction arguments."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_mod(self, g: "UniPoly", f: "UniPoly") -> "UniPoly":
        """self(g) reduced modulo f (f monic)."""
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = poly_mul_mod(acc, g, f) + UniPoly.const(c)
        return acc % f


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd in Q[x]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_mul_mod(a: UniPoly, b: UniPoly, f: UniPoly) -> UniPoly:
    """Product of a and b reduced to the representative of degree < deg f."""
    if not f.is_monic() or f.degree < 1:
        raise NonMonicModulus("modulus must be monic of degree >= 1")
    return (a * b) % f


def poly_inv_mod(a: UniPoly, f: UniPoly) -> UniPoly:
    """Inverse of a modulo the monic polynomial f (extended Euclid).

    Raises NotInvertible when gcd(a, f) is nontrivial, which for a number
    field context signals a reducible defining polynomial.
    """
    if not f.is_monic() or f.degree < 1:
        raise NonMonicModulus("modulus must be monic of degree >= 1")
    a = a % f
    if a.is_zero():
        raise NotInvertible("zero is not invertible")
    r0, r1 = f, a
    s0, s1 = UniPoly.zero(), UniPoly.const(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise NotInvertible(f"gcd with modulus has degree {r0.degree}")
    return (s0 * (Fraction(1) / r0.coeffs[0])) % f


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant via the Euclidean remainder sequence."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    res = Fraction(1)
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0)
        res *= b.coeffs[-1] ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2 == 1:
            res = -res
        a, b = b, r
    return res * b.coeffs[0] ** a.degree


def poly_discriminant(f: UniPoly) -> Fraction:
    """disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.coeffs[-1]


# ---------------------------------------------------------------------------
# Sturm sequences: exact real root counting and isolation

def sturm_chain(f: UniPoly) -> list[UniPoly]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_changes(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: Sequence[UniPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]; a and b must not be roots."""
    va = _sign_changes([p(a) for p in chain])
    vb = _sign_changes([p(b) for p in chain])
    return va - vb


def _sign_changes_at_inf(chain, positive: bool) -> int:
    vals = []
    for p in chain:
        if p.is_zero():
            continue
        lead = p.coeffs[-1]
        if positive:
            vals.append(lead)
        else:
            vals.append(lead if p.degree % 2 == 0 else -lead)
    return _sign_changes(vals)


def count_real_roots(f: UniPoly) -> int:
    """Exact number of distinct real roots of a squarefree f."""
    chain = sturm_chain(f)
    return _sign_changes_at_inf(chain, False) - _sign_changes_at_inf(chain, True)


def root_bound(f: UniPoly) -> Fraction:
    """Cauchy bound: all complex roots have |z| < bound."""
    lead = abs(f.coeffs[-1])
    m = max((abs(c) for c in f.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def isolate_real_roots(f: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, each containing exactly one real root.

    Assumes f squarefree with no rational roots (callers screen both),
    so no bisection midpoint can be a root.
    """
    chain = sturm_chain(f)
    bound = root_bound(f)
    total = sturm_count(chain, -bound, bound)
    out: list[tuple[Fraction, Fraction]] = []

    def split(lo, hi, k):
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if f(mid) == 0:
            raise AssertionError("rational root escaped the reducibility screen")
        kl = sturm_count(chain, lo, mid)
        split(lo, mid, kl)
        split(mid, hi, k - kl)

    split(-bound, bound, total)
    out.sort()
    return out
