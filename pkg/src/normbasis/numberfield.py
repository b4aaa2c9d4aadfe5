"""Number fields K = Q[X]/(f): construction, element arithmetic, trace,
norm, minimal polynomials, and verified integral bases.

Elements are stored in power-basis coordinates; integral-basis coordinates
are obtained by exact change of basis on demand.  Irreducibility of f is
not certified up front: the squarefree and rational-root screens run
eagerly, deeper reducibility surfaces as NotInvertible during arithmetic
and is converted to ReduciblePolynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import embeddings as emb
from .errors import (BadParameter, InternalNonField, NotAnOrder,
                     ReduciblePolynomial, NotSquarefree)
from .exact import (Q, UniPoly, det_exact, fr, mat, mat_inv, mat_rank,
                    poly_gcd, poly_mul_mod, _det_bareiss_int, solve_linear,
                    count_real_roots)


@dataclass(frozen=True)
class FieldElement:
    """Exact element of K in power-basis coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(fr(c) for c in self.coords))

    def as_poly(self) -> UniPoly:
        return UniPoly(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"FieldElement({list(map(str, self.coords))})"


@dataclass(frozen=True)
class FieldSpec:
    """Input description of a number field: monic integer f, an optional
    integral basis (rows = basis elements in power-basis coordinates)."""

    f: UniPoly
    integral_basis: Optional[Sequence[Sequence[Fraction]]] = None
    label: Optional[str] = None
    maximal: bool = False  # provenance flag: basis known maximal (catalog)

    def validate(self):
        f = self.f
        if not f.is_monic() or f.degree < 1:
            raise BadParameter("defining polynomial must be monic of degree >= 1")
        if any(c.denominator != 1 for c in f.coeffs):
            raise BadParameter("defining polynomial must have integer coefficients")
        g = poly_gcd(f, f.derivative())
        if g.degree > 0:
            raise NotSquarefree(f"gcd(f, f') has degree {g.degree}")


class NumberField:
    """A verified number field (or order when only an order basis is known)."""

    def __init__(self, f: UniPoly, r1: int, r2: int, basis, disc: int,
                 label: str | None, basis_is_maximal: bool, power_basis_used: bool):
        self.f = f
        self.n = f.degree
        self.r1 = r1
        self.r2 = r2
        self.basis = basis                      # rows: basis elements, power coords
        self.basis_inv = mat_inv(basis)
        self.disc = disc
        self.label = label or repr(f)
        self.basis_is_maximal = basis_is_maximal
        self.power_basis_used = power_basis_used
        self._trace_powers = _power_traces(f)
        self._mul_table = None

    # -- element construction -------------------------------------------------
    def element(self, coords) -> FieldElement:
        coords = [fr(c) for c in coords]
        if len(coords) != self.n:
            raise BadParameter(f"expected {self.n} coordinates, got {len(coords)}")
        return FieldElement(tuple(coords))

    def from_poly(self, p: UniPoly) -> FieldElement:
        p = p % self.f
        cs = list(p.coeffs) + [Q(0)] * (self.n - len(p.coeffs))
        return FieldElement(tuple(cs))

    def one(self) -> FieldElement:
        return self.element([1] + [0] * (self.n - 1))

    def zero(self) -> FieldElement:
        return self.element([0] * self.n)

    def gen(self) -> FieldElement:
        """The class of X (the distinguished root theta)."""
        return self.from_poly(UniPoly.x())

    def rational(self, q) -> FieldElement:
        return self.element([fr(q)] + [0] * (self.n - 1))

    # -- arithmetic -----------------------------------------------------------
    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(tuple(x + y for x, y in zip(a.coords, b.coords)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(tuple(x - y for x, y in zip(a.coords, b.coords)))

    def scal(self, q, a: FieldElement) -> FieldElement:
        q = fr(q)
        return FieldElement(tuple(q * x for x in a.coords))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.from_poly(poly_mul_mod(a.as_poly(), b.as_poly(), self.f))

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse; NotInvertible on zero, ReduciblePolynomial
        when a nonzero element shares a factor with f (f was not a field)."""
        from .exact import poly_inv_mod
        from .errors import NotInvertible
        try:
            return self.from_poly(poly_inv_mod(a.as_poly(), self.f))
        except NotInvertible:
            if a.is_zero():
                raise
            raise ReduciblePolynomial(
                "nonzero element is a zero divisor: defining polynomial reducible")

    def pow(self, a: FieldElement, k: int) -> FieldElement:
        if k < 0:
            a = self.inv(a)
            k = -k
        out = self.one()
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def trace(self, a: FieldElement) -> Fraction:
        """Trace via precomputed power sums of the roots of f."""
        return sum(c * p for c, p in zip(a.coords, self._trace_powers))

    def norm(self, a: FieldElement) -> Fraction:
        return det_exact(self.mul_matrix(a))

    def mul_matrix(self, a: FieldElement):
        """Matrix of multiplication by a on the power basis (rows = images)."""
        rows = []
        p = a.as_poly()
        for k in range(self.n):
            img = poly_mul_mod(UniPoly([0] * k + [1]), p, self.f)
            cs = list(img.coeffs) + [Q(0)] * (self.n - len(img.coeffs))
            rows.append(cs)
        return rows

    def minimal_polynomial(self, a: FieldElement) -> UniPoly:
        """Monic least-degree annihilator; its degree divides n."""
        powers = [self.one().coords]
        cur = self.one()
        for _ in range(self.n):
            cur = self.mul(cur, a)
            powers.append(cur.coords)
            rows = [list(p) for p in powers]
            if mat_rank(rows) < len(rows):
                # solve c_0 p_0 + ... + c_{d-1} p_{d-1} = -p_d
                d = len(powers) - 1
                sq = _independent_columns([list(p) for p in powers[:d]])
                rhs = [powers[d][j] for j in sq[1]]
                coeffs = solve_linear(sq[0], rhs)
                poly = UniPoly(list(map(lambda c: -c, coeffs)) + [1])
                if self.n % poly.degree != 0:
                    raise InternalNonField(
                        "minimal polynomial degree does not divide the field degree")
                return poly
        raise InternalNonField("no annihilating polynomial found")

    # -- integral basis -------------------------------------------------------
    def coords_in_basis(self, a: FieldElement) -> list[Fraction]:
        """Coordinates of a on the verified integral basis (exact)."""
        return [sum(a.coords[k] * self.basis_inv[k][j] for k in range(self.n))
                for j in range(self.n)]

    def element_from_basis_coords(self, coords) -> FieldElement:
        coords = [fr(c) for c in coords]
        return FieldElement(tuple(
            sum(coords[i] * self.basis[i][k] for i in range(self.n))
            for k in range(self.n)))

    def basis_elements(self) -> list[FieldElement]:
        return [FieldElement(tuple(row)) for row in self.basis]

    def basis_mul_table(self):
        """Integer coordinates of e_i e_j on the basis, from the order check."""
        if self._mul_table is None:
            els = self.basis_elements()
            table = []
            for ei in els:
                row = []
                for ej in els:
                    row.append([int(c) for c in self.coords_in_basis(self.mul(ei, ej))])
                table.append(row)
            self._mul_table = table
        return self._mul_table

    def __repr__(self):
        return f"NumberField({self.label}, n={self.n}, sig=({self.r1},{self.r2}), disc={self.disc})"


def _independent_columns(rows):
    """Pick a maximal independent column set; return (square matrix of those
    columns transposed for solving, column indices).  rows are independent."""
    d = len(rows)
    n = len(rows[0])
    cols = []
    chosen = []
    for j in range(n):
        cand = cols + [[rows[i][j] for i in range(d)]]
        if mat_rank(cand) == len(cand):
            cols = cand
            chosen.append(j)
            if len(cols) == d:
                break
    # system: sum_i c_i rows[i][j] = rhs_j for chosen j
    sq = [[rows[i][j] for i in range(d)] for j in chosen]
    return sq, chosen


def _power_traces(f: UniPoly) -> list[Fraction]:
    """Tr(theta^k) for k = 0..n-1 via Newton's identities."""
    n = f.degree
    a = list(f.coeffs)  # a[i] = coefficient of X^i, a[n] = 1
    p = [Fraction(n)]
    for k in range(1, n):
        s = -k * a[n - k]
        for j in range(1, k):
            s -= a[n - j] * p[k - j]
        p.append(Fraction(s))
    return p


def _rational_root_screen(f: UniPoly):
    """Reject f with a rational root (reducible for degree > 1).

    Candidates p/q with p | constant term and q | leading coefficient
    (rational root theorem); f monic so q = 1.
    """
    if f.degree <= 1:
        return
    c0 = f.coeffs[0]
    if c0 == 0:
        raise ReduciblePolynomial("X divides the defining polynomial")
    if c0.denominator != 1:
        return
    c0 = abs(int(c0))
    divs = set()
    d = 1
    while d * d <= c0:
        if c0 % d == 0:
            divs.update((d, c0 // d))
        d += 1
    for p in sorted(divs):
        for cand in (p, -p):
            if f(Fraction(cand)) == 0:
                raise ReduciblePolynomial(f"rational root {cand}")


def verify_integral_basis(f: UniPoly, basis_rows) -> int:
    """Certify that basis_rows span an order; return its discriminant.

    Checks: (i) 1 is a Z-combination of the basis, (ii) products e_i e_j
    have integer coordinates on the basis, (iii) all Tr(e_i e_j) are
    integers.  Maximality is not certified here.
    """
    n = f.degree
    basis = mat(basis_rows)
    if len(basis) != n or any(len(r) != n for r in basis):
        raise NotAnOrder("shape", (len(basis), len(basis[0]) if basis else 0))
    if mat_rank(basis) != n:
        raise NotAnOrder("rank", None)
    binv = mat_inv(basis)
    traces = _power_traces(f)

    def to_basis(coords):
        return [sum(coords[k] * binv[k][j] for k in range(n)) for j in range(n)]

    one = to_basis([Q(1)] + [Q(0)] * (n - 1))
    if any(c.denominator != 1 for c in one):
        raise NotAnOrder("one_not_in_span", one)

    def elem_trace(coords):
        return sum(c * p for c, p in zip(coords, traces))

    gram = []
    polys = [UniPoly(row) for row in basis]
    for i in range(n):
        gram_row = []
        for j in range(n):
            prod = poly_mul_mod(polys[i], polys[j], f)
            coords = list(prod.coeffs) + [Q(0)] * (n - len(prod.coeffs))
            in_basis = to_basis(coords)
            if any(c.denominator != 1 for c in in_basis):
                raise NotAnOrder("product_not_integral", (i, j))
            t = elem_trace(coords)
            if t.denominator != 1:
                raise NotAnOrder("trace_not_integral", (i, j))
            gram_row.append(int(t))
        gram.append(gram_row)
    disc = _det_bareiss_int(gram)
    if disc == 0:
        raise NotAnOrder("degenerate_trace_form", None)
    return disc


def make_field(spec: FieldSpec, precision: int = emb.DEFAULT_PRECISION) -> NumberField:
    """Construct and verify a number field from its spec."""
    spec.validate()
    f = spec.f
    _rational_root_screen(f)
    n = f.degree
    r1 = count_real_roots(f)
    if (n - r1) % 2 != 0:
        raise InternalNonField("real root count incompatible with the degree")
    r2 = (n - r1) // 2
    power_basis_used = spec.integral_basis is None
    basis = (mat(spec.integral_basis) if spec.integral_basis is not None
             else mat([[int(i == j) for j in range(n)] for i in range(n)]))
    disc = verify_integral_basis(f, basis)
    return NumberField(f, r1, r2, basis, disc, spec.label,
                       basis_is_maximal=spec.maximal,
                       power_basis_used=power_basis_used)


# ---------------------------------------------------------------------------
# catalog fields with classical (maximal) integral bases

def _cyclotomic_poly(m: int) -> UniPoly:
    """Phi_m by exact division of X^m - 1 by the proper-divisor factors."""
    num = UniPoly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            num = num // _cyclotomic_poly(d)
    return num


def catalog_field(kind: str, param: int, precision: int = emb.DEFAULT_PRECISION) -> NumberField:
    """Classical fields with known maximal orders, re-verified at build time.

    kind "quadratic": Q(sqrt(d)), d squarefree, basis {1, X} or {1, (1+X)/2}.
    kind "cyclotomic": Q(zeta_m) with the power basis of zeta_m over Phi_m.
    """
    if kind == "quadratic":
        d = param
        if d in (0, 1) or _has_square_factor(d):
            raise BadParameter(f"{d} is not a valid squarefree discriminant base")
        f = UniPoly([-d, 0, 1])
        if d % 4 == 1:
            basis = [[Q(1), Q(0)], [Q(1, 2), Q(1, 2)]]
        else:
            basis = [[Q(1), Q(0)], [Q(0), Q(1)]]
        spec = FieldSpec(f, basis, label=f"quadratic({d})", maximal=True)
        return make_field(spec, precision)
    if kind == "cyclotomic":
        m = param
        if m < 3 or m % 4 == 2:
            raise BadParameter("need m >= 3 with m not congruent to 2 mod 4")
        f = _cyclotomic_poly(m)
        spec = FieldSpec(f, None, label=f"cyclotomic({m})", maximal=True)
        return make_field(spec, precision)
    raise BadParameter(f"unknown catalog kind {kind!r}")


def _has_square_factor(d: int) -> bool:
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return True
        k += 1
    return False
