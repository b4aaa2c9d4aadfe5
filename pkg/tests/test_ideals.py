import random
from fractions import Fraction

import pytest

from normbasis.errors import ZeroIdeal
from normbasis.ideals import (ideal_equal, ideal_from_generators, ideal_mul,
                              ideal_norm, principal_ideal, ring_of_integers)
from normbasis.numberfield import catalog_field


def test_principal_norm_matches_element_norm():
    rng = random.Random(14)
    for kind, p in (("quadratic", -1), ("quadratic", 5), ("cyclotomic", 5)):
        field = catalog_field(kind, p)
        for _ in range(15):
            coords = [Fraction(rng.randint(-4, 4)) for _ in range(field.n)]
            g = field.element(coords)
            if g.is_zero():
                continue
            ideal = principal_ideal(field, g)
            assert ideal_norm(field, ideal) == abs(field.norm(g))


def test_one_plus_i_anchor():
    field = catalog_field("quadratic", -1)
    p = principal_ideal(field, field.element([1, 1]))
    assert ideal_norm(field, p) == 2
    sq = ideal_mul(field, p, p)
    # (1+i)^2 = 2i, norm 4
    assert ideal_norm(field, sq) == 4
    assert ideal_equal(sq, principal_ideal(field, field.element([0, 2])))


def test_multiplicativity_of_norm():
    rng = random.Random(15)
    field = catalog_field("cyclotomic", 8)
    for _ in range(10):
        a = field.element([Fraction(rng.randint(-3, 3)) for _ in range(4)])
        b = field.element([Fraction(rng.randint(-3, 3)) for _ in range(4)])
        if a.is_zero() or b.is_zero():
            continue
        ia, ib = principal_ideal(field, a), principal_ideal(field, b)
        prod = ideal_mul(field, ia, ib)
        assert ideal_norm(field, prod) == ideal_norm(field, ia) * ideal_norm(field, ib)
        assert ideal_equal(prod, principal_ideal(field, field.mul(a, b)))


def test_ring_of_integers_is_identity():
    field = catalog_field("quadratic", 2)
    o = ring_of_integers(field)
    assert ideal_norm(field, o) == 1
    p = principal_ideal(field, field.element([0, 1]))
    assert ideal_equal(ideal_mul(field, o, p), p)


def test_non_principal_two_generator_ideal():
    # (2, 1 + sqrt(-5)) in Z[sqrt(-5)] has norm 2 and is not principal
    field = catalog_field("quadratic", -5)
    two = field.element([2, 0])
    g = field.element([1, 1])
    ideal = ideal_from_generators(field, [two, g])
    assert ideal_norm(field, ideal) == 2
    sq = ideal_mul(field, ideal, ideal)
    assert ideal_equal(sq, principal_ideal(field, two))


def test_fractional_ideal():
    field = catalog_field("quadratic", -1)
    half = field.element([Fraction(1, 2), Fraction(1, 2)])  # (1+i)/2
    ideal = ideal_from_generators(field, [half])
    assert ideal_norm(field, ideal) == Fraction(1, 2)
    assert ideal.den > 1


def test_hnf_canonical_representation():
    field = catalog_field("quadratic", -1)
    a = ideal_from_generators(field, [field.element([2, 0]), field.element([0, 2])])
    b = ideal_from_generators(field, [field.element([2, 0]),
                                      field.element([2, 2]), field.element([0, 2])])
    assert ideal_equal(a, b)


def test_zero_ideal_rejected():
    field = catalog_field("quadratic", -1)
    with pytest.raises(ZeroIdeal):
        ideal_from_generators(field, [field.zero()])


def test_json_roundtrip():
    field = catalog_field("quadratic", 5)
    ideal = principal_ideal(field, field.element([1, 1]))
    j = ideal.to_json()
    assert set(j) == {"hnf", "den"}
    assert all(isinstance(e, int) for row in j["hnf"] for e in row)
