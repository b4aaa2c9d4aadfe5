"""Certified interval arithmetic over exact rational endpoints.

Real intervals and complex boxes carry Fraction endpoints, so ring
operations are exact; only explicitly-rounded steps (``round_out``) and
transcendental enclosures (log, pi, n-th roots) introduce width, and those
always round outward.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from mpmath import iv, libmp

from .exact import fr


def _iv_to_fractions(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    pl, ql = libmp.to_rational(lo)
    ph, qh = libmp.to_rational(hi)
    return Fraction(int(pl), int(ql)), Fraction(int(ph), int(qh))


def _fraction_to_iv(x: Fraction):
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


@dataclass(frozen=True)
class FInterval:
    """Closed real interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "FInterval":
        x = fr(x)
        return FInterval(x, x)

    @staticmethod
    def make(a, b) -> "FInterval":
        a, b = fr(a), fr(b)
        return FInterval(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        other = _as_interval(other)
        return FInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return FInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) + (-self)

    def __mul__(self, other):
        other = _as_interval(other)
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return FInterval(min(prods), max(prods))

    __rmul__ = __mul__

    def inverse(self) -> "FInterval":
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return FInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _as_interval(other).inverse()

    def sqr(self) -> "FInterval":
        if self.contains_zero():
            return FInterval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))
        lo2, hi2 = self.lo * self.lo, self.hi * self.hi
        return FInterval(min(lo2, hi2), max(lo2, hi2))

    def abs(self) -> "FInterval":
        if self.contains_zero():
            return FInterval(Fraction(0), max(-self.lo, self.hi))
        if self.hi < 0:
            return -self
        return self

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x) -> bool:
        x = fr(x)
        return self.lo <= x <= self.hi

    def is_subset(self, other: "FInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersect(self, other: "FInterval") -> "FInterval":
        return FInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "FInterval") -> "FInterval":
        return FInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def round_out(self, bits: int) -> "FInterval":
        """Round endpoints outward to dyadics with denominator 2^bits."""
        s = 1 << bits
        lo = Fraction(_floor_div(self.lo.numerator * s, self.lo.denominator), s)
        hi = Fraction(-_floor_div(-self.hi.numerator * s, self.hi.denominator), s)
        return FInterval(lo, hi)

    # certified order comparisons ("certainly" semantics)
    def certainly_le(self, other) -> bool:
        return self.hi <= _as_interval(other).lo

    def certainly_lt(self, other) -> bool:
        return self.hi < _as_interval(other).lo

    def overlaps(self, other: "FInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __repr__(self):
        return f"FInterval({float(self.lo)!r}, {float(self.hi)!r})"


def _floor_div(a: int, b: int) -> int:
    return a // b


def _as_interval(x) -> FInterval:
    if isinstance(x, FInterval):
        return x
    return FInterval.point(x)


def fi_sqrt(x: FInterval, bits: int = 128) -> FInterval:
    """Outward-rounded enclosure of sqrt over a nonnegative interval."""
    return fi_nthroot(x, 2, bits)


def fi_nthroot(x: FInterval, n: int, bits: int = 128) -> FInterval:
    """Outward-rounded enclosure of the real n-th root, x >= 0."""
    if x.lo < 0:
        raise ValueError("n-th root of a negative interval")
    s = 1 << bits

    def lo_root(v: Fraction) -> Fraction:
        # floor of v^(1/n) * 2^bits, via exact integer n-th root
        t = (v.numerator * s ** n) // v.denominator
        r, _ = gmpy2.iroot(t, n)
        return Fraction(int(r), s)

    def hi_root(v: Fraction) -> Fraction:
        t = -((-v.numerator * s ** n) // v.denominator)  # ceil
        r, exact = gmpy2.iroot(t, n)
        r = int(r)
        if not exact:
            r += 1
        return Fraction(r, s)

    return FInterval(lo_root(x.lo), hi_root(x.hi))


def fi_log(x: FInterval, bits: int = 128) -> FInterval:
    """Enclosure of the natural log of a positive interval (via mpmath iv)."""
    if x.lo <= 0:
        raise ValueError("log of a non-positive interval")
    old = iv.prec
    try:
        iv.prec = bits + 16
        lo, _ = _iv_to_fractions(iv.log(_fraction_to_iv(x.lo)))
        _, hi = _iv_to_fractions(iv.log(_fraction_to_iv(x.hi)))
    finally:
        iv.prec = old
    return FInterval(lo, hi)


def pi_interval(bits: int = 128) -> FInterval:
    old = iv.prec
    try:
        iv.prec = bits + 16
        lo, hi = _iv_to_fractions(iv.pi)
    finally:
        iv.prec = old
    return FInterval(lo, hi)


def fi_max(intervals) -> FInterval:
    """Enclosure of max_i x_i for a nonempty collection of intervals."""
    intervals = list(intervals)
    return FInterval(max(x.lo for x in intervals), max(x.hi for x in intervals))


@dataclass(frozen=True)
class FBox:
    """Axis-aligned complex box re + i*im with interval components."""

    re: FInterval
    im: FInterval

    @staticmethod
    def point(re, im=0) -> "FBox":
        return FBox(FInterval.point(re), FInterval.point(im))

    @property
    def is_real(self) -> bool:
        return self.im.lo == 0 and self.im.hi == 0

    def __add__(self, other):
        other = _as_box(other)
        return FBox(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return FBox(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_box(other))

    def __rsub__(self, other):
        return _as_box(other) + (-self)

    def __mul__(self, other):
        other = _as_box(other)
        return FBox(self.re * other.re - self.im * other.im,
                    self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self) -> "FBox":
        return FBox(self.re, -self.im)

    def abs_sq(self) -> FInterval:
        return self.re.sqr() + self.im.sqr()

    def abs(self, bits: int = 128) -> FInterval:
        return fi_sqrt(self.abs_sq(), bits)

    def __truediv__(self, other):
        other = _as_box(other)
        den = other.abs_sq()
        num = self * other.conj()
        return FBox(num.re / den, num.im / den)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def mid(self) -> tuple[Fraction, Fraction]:
        return self.re.mid, self.im.mid

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def is_subset(self, other: "FBox") -> bool:
        return self.re.is_subset(other.re) and self.im.is_subset(other.im)

    def is_interior_subset(self, other: "FBox") -> bool:
        def strict(a: FInterval, b: FInterval) -> bool:
            if b.lo == b.hi:
                return a.lo == a.hi == b.lo
            return b.lo < a.lo and a.hi < b.hi
        return strict(self.re, other.re) and strict(self.im, other.im)

    def intersect(self, other: "FBox") -> "FBox":
        return FBox(self.re.intersect(other.re), self.im.intersect(other.im))

    def overlaps(self, other: "FBox") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def round_out(self, bits: int) -> "FBox":
        return FBox(self.re.round_out(bits), self.im.round_out(bits))

    def __repr__(self):
        return f"FBox({self.re!r}, {self.im!r})"


def _as_box(x) -> FBox:
    if isinstance(x, FBox):
        return x
    if isinstance(x, FInterval):
        return FBox(x, FInterval.point(0))
    return FBox.point(x)


def box_horner(coeffs, z: FBox) -> FBox:
    """Evaluate a polynomial (ascending Fraction coefficients) at a box."""
    acc = FBox.point(0)
    for c in reversed(list(coeffs)):
        acc = acc * z + FBox.point(c)
    return acc


def interval_horner(coeffs, x: FInterval) -> FInterval:
    acc = FInterval.point(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + FInterval.point(c)
    return acc


def frac_to_decimal_str(x: Fraction) -> str:
    """Exact decimal string for rationals with 2^a 5^b denominators."""
    num, den = x.numerator, x.denominator
    a = 0
    while den % 2 == 0:
        den //= 2
        a += 1
    b = 0
    while den % 5 == 0:
        den //= 5
        b += 1
    if den != 1:
        raise ValueError(f"{x} has no finite decimal expansion")
    shift = max(a, b)
    scaled = num * 2 ** (shift - a) * 5 ** (shift - b)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if shift == 0:
        return f"{sign}{scaled}"
    s = str(scaled).rjust(shift + 1, "0")
    return f"{sign}{s[:-shift]}.{s[-shift:]}"


def interval_to_json(x: FInterval, bits: int) -> dict:
    x = x.round_out(bits)
    return {"lo": frac_to_decimal_str(x.lo), "hi": frac_to_decimal_str(x.hi), "bits": bits}
