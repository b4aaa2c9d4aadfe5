import math
import random
from fractions import Fraction

import pytest

from normbasis.intervals import (FBox, FInterval, box_horner, fi_log, fi_max,
                                 fi_nthroot, fi_sqrt, frac_to_decimal_str,
                                 interval_horner, interval_to_json, pi_interval)


def rand_interval(rng, lo=-10, hi=10):
    a = Fraction(rng.randint(lo * 4, hi * 4), rng.randint(1, 7))
    b = a + Fraction(rng.randint(0, 8), rng.randint(1, 7))
    return FInterval(a, b)


def rand_point(rng, iv):
    if iv.lo == iv.hi:
        return iv.lo
    t = Fraction(rng.randint(0, 64), 64)
    return iv.lo + t * (iv.hi - iv.lo)


def test_arithmetic_containment():
    """Point samples stay inside interval results for +, -, *, /."""
    rng = random.Random(7)
    for _ in range(200):
        x, y = rand_interval(rng), rand_interval(rng)
        px, py = rand_point(rng, x), rand_point(rng, y)
        assert (x + y).lo <= px + py <= (x + y).hi
        assert (x - y).lo <= px - py <= (x - y).hi
        assert (x * y).lo <= px * py <= (x * y).hi
        if not y.contains_zero():
            assert (x / y).lo <= px / py <= (x / y).hi
        sq = x.sqr()
        assert sq.lo <= px * px <= sq.hi and sq.lo >= 0


def test_round_out_widens_only():
    rng = random.Random(8)
    for _ in range(100):
        x = rand_interval(rng)
        r = x.round_out(32)
        assert r.lo <= x.lo and x.hi <= r.hi
        assert r.hi - r.lo <= (x.hi - x.lo) + Fraction(2, 1 << 32) * (1 + abs(x.lo) + abs(x.hi))


def test_sqrt_and_nthroot_enclose():
    rng = random.Random(9)
    for _ in range(100):
        v = Fraction(rng.randint(0, 10 ** 6), rng.randint(1, 100))
        for n in (2, 3, 5):
            enc = fi_nthroot(FInterval.point(v), n, 96)
            assert enc.lo ** n <= v <= enc.hi ** n
            assert enc.hi - enc.lo <= Fraction(1 + enc.hi, 1 << 90)
    assert fi_sqrt(FInterval.point(Fraction(4))).lo <= 2 <= fi_sqrt(FInterval.point(Fraction(4))).hi


def test_log_and_pi_anchor_values():
    e = FInterval.point(Fraction(271828182845904523536, 10 ** 20))
    enc = fi_log(e, 96)
    assert enc.lo < 1 < enc.hi or abs(float(enc.lo) - 1) < 1e-18
    two = fi_log(FInterval.point(2), 96)
    assert float(two.lo) <= math.log(2) <= float(two.hi)
    pi = pi_interval(96)
    assert float(pi.lo) <= math.pi <= float(pi.hi)
    assert pi.hi - pi.lo < Fraction(1, 1 << 90)


def test_fi_max():
    a = FInterval(Fraction(1), Fraction(2))
    b = FInterval(Fraction(3, 2), Fraction(7, 4))
    m = fi_max([a, b])
    assert m.lo == Fraction(3, 2) and m.hi == Fraction(2)


def test_box_arithmetic_containment():
    rng = random.Random(10)
    for _ in range(100):
        bx = FBox(rand_interval(rng), rand_interval(rng))
        by = FBox(rand_interval(rng), rand_interval(rng))
        zx = complex(float(rand_point(rng, bx.re)), float(rand_point(rng, bx.im)))
        zy = complex(float(rand_point(rng, by.re)), float(rand_point(rng, by.im)))
        prod = bx.mul(by) if hasattr(bx, "mul") else bx * by
        z = zx * zy
        assert float(prod.re.lo) - 1e-9 <= z.real <= float(prod.re.hi) + 1e-9
        assert float(prod.im.lo) - 1e-9 <= z.imag <= float(prod.im.hi) + 1e-9
        a = bx.abs_sq()
        assert float(a.lo) - 1e-9 <= abs(zx) ** 2 <= float(a.hi) + 1e-9


def test_horner_containment():
    rng = random.Random(11)
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(5)]
    for _ in range(50):
        x = rand_interval(rng, -3, 3)
        px = rand_point(rng, x)
        val = sum(c * px ** k for k, c in enumerate(coeffs))
        enc = interval_horner(coeffs, x)
        assert enc.lo <= val <= enc.hi
        box = FBox(x, FInterval.point(0))
        benc = box_horner(coeffs, box)
        assert benc.re.lo <= val <= benc.re.hi
        assert benc.im.contains_zero()


def test_decimal_serialization_exact():
    assert frac_to_decimal_str(Fraction(1, 2)) == "0.5"
    assert frac_to_decimal_str(Fraction(-3, 4)) == "-0.75"
    assert frac_to_decimal_str(Fraction(7)) == "7"
    j = interval_to_json(FInterval(Fraction(1, 3), Fraction(1, 2)), 32)
    assert Fraction(j["lo"]) <= Fraction(1, 3) and Fraction(1, 2) <= Fraction(j["hi"])
    assert j["bits"] == 32


def test_invalid_interval_rejected():
    with pytest.raises(Exception):
        FInterval(Fraction(2), Fraction(1))
