import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from normbasis import embeddings as emb
from normbasis.errors import PreconditionViolated
from normbasis.exact import mat_rank
from normbasis.ideals import (ideal_from_generators, ideal_mul, ideal_norm,
                              principal_ideal, ring_of_integers)
from normbasis.minima import (check_corollary_bounds, check_product_inequality,
                              minima_family, products_span_check,
                              successive_minima)
from normbasis.numberfield import catalog_field


# ---------------------------------------------------------------------------
# brute-force oracle: direct box enumeration over the HNF basis, no shared
# enumeration code with the library (which goes through LLL + pullback bounds)

def oracle_minima(field, es, ideal, radius=6):
    n = field.n
    els = ideal.basis_elements(field)
    # float preselection over the full box, certified re-evaluation after
    mids = np.array([[complex(float(emb.eval_embedding(es, i, e, 64).re.mid),
                              float(emb.eval_embedding(es, i, e, 64).im.mid))
                      for i in range(1, n + 1)] for e in els])
    grid = np.array(list(itertools.product(range(-radius, radius + 1), repeat=n)))
    grid = grid[np.any(grid != 0, axis=1)]
    norms = np.max(np.abs(grid @ mids), axis=1)
    cutoff = np.partition(norms, 4 * n)[4 * n] * 1.5 + 1e-6
    keep = grid[norms <= cutoff]
    scored = []
    for t in keep:
        el = field.zero()
        for c, e in zip(t, els):
            if c:
                el = field.add(el, field.scal(int(c), e))
        scored.append((emb.sup_norm(es, el, 128), el))
    scored.sort(key=lambda p: p[0].hi)
    lambdas, rows = [], []
    for sn, el in scored:
        cand = rows + [list(el.coords)]
        if mat_rank([list(map(Fraction, r)) for r in cand]) == len(cand):
            rows.append(list(el.coords))
            lambdas.append(sn)
            if len(rows) == n:
                break
    assert len(rows) == n, "oracle radius too small"
    return lambdas


DEG_LE_4 = [("quadratic", -1), ("quadratic", 2), ("quadratic", 5),
            ("quadratic", -3), ("cyclotomic", 5), ("cyclotomic", 8)]


@pytest.mark.parametrize("kind,p", DEG_LE_4)
def test_minima_against_oracle(kind, p):
    field = catalog_field(kind, p)
    es = emb.compute_embeddings(field)
    for gens in ([field.one()], [field.element([2] + [0] * (field.n - 1)),
                                 field.element([1] * field.n)]):
        ideal = ring_of_integers(field) if gens == [field.one()] \
            else ideal_from_generators(field, gens)
        result = successive_minima(field, es, ideal)
        oracle = oracle_minima(field, es, ideal)
        for lib, orc in zip(result.lambdas, oracle):
            # both enclose the same true minimum: intervals must overlap
            assert lib.lo <= orc.hi and orc.lo <= lib.hi
        # witnesses independent
        assert mat_rank([[Fraction(c) for c in w.coords]
                         for w in result.witnesses]) == field.n


def test_zi_anchor():
    field = catalog_field("quadratic", -1)
    es = emb.compute_embeddings(field)
    res = successive_minima(field, es, ring_of_integers(field))
    for lam in res.lambdas:
        assert lam.lo <= 1 <= lam.hi and lam.hi - lam.lo < Fraction(1, 1 << 100)


def test_sqrt2_anchor():
    field = catalog_field("quadratic", 2)
    es = emb.compute_embeddings(field)
    res = successive_minima(field, es, ring_of_integers(field))
    assert res.lambdas[0].lo <= 1 <= res.lambdas[0].hi
    sq = res.lambdas[1].sqr()
    assert sq.lo <= 2 <= sq.hi  # lambda_2 = sqrt2


def test_lambdas_monotone_and_positive():
    field = catalog_field("cyclotomic", 5)
    es = emb.compute_embeddings(field)
    res = successive_minima(field, es, ring_of_integers(field))
    assert res.lambdas[0].lo > 0
    # lower endpoints are monotone (upper endpoints may jitter per witness)
    for a, b in zip(res.lambdas, res.lambdas[1:]):
        assert a.lo <= b.lo and a.lo <= b.hi


def test_product_equality_witness():
    # lambda_2((1+i)^2) = lambda_1(1+i) * lambda_2(1+i) = 2 in Z[i]
    field = catalog_field("quadratic", -1)
    es = emb.compute_embeddings(field)
    p = principal_ideal(field, field.element([1, 1]))
    rep = check_product_inequality(field, es, p, p, 1, 2)
    assert rep.passed
    assert rep.lam_n_ij.lo <= 2 <= rep.lam_n_ij.hi
    prod = rep.lam_k_i * rep.lam_l_j
    assert prod.lo <= 2 <= prod.hi


def test_product_inequality_precondition():
    field = catalog_field("quadratic", -1)
    es = emb.compute_embeddings(field)
    p = principal_ideal(field, field.element([1, 1]))
    with pytest.raises(PreconditionViolated):
        check_product_inequality(field, es, p, p, 1, 1)


def test_corollary_anchor_zi():
    field = catalog_field("quadratic", -1)
    es = emb.compute_embeddings(field)
    rep = check_corollary_bounds(field, es, ring_of_integers(field))
    assert rep.supnorm_pass and rep.minkowski_pass
    # lambda_2^2 = 1 <= (2/pi)^2 * 4 ~ 1.621 and lambda_1 lambda_2 = 1 <= 4/pi
    assert float(rep.supnorm_rhs.lo) <= 1.63 and float(rep.supnorm_rhs.hi) >= 1.62
    assert float(rep.minkowski_rhs.mid) == pytest.approx(4 / 3.14159265, rel=1e-6)


def test_minima_family_sizes():
    field = catalog_field("cyclotomic", 5)
    es = emb.compute_embeddings(field)
    fam = minima_family(field, es, ring_of_integers(field), 3)
    assert len(fam) == 3
    assert mat_rank([[Fraction(c) for c in x.coords] for x in fam]) == 3


def test_products_span():
    rng = random.Random(16)
    field = catalog_field("cyclotomic", 5)
    for _ in range(10):
        def fam(k):
            while True:
                xs = [field.element([Fraction(rng.randint(-3, 3)) for _ in range(4)])
                      for _ in range(k)]
                if mat_rank([list(x.coords) for x in xs]) == k:
                    return xs
        assert products_span_check(field, fam(2), fam(3))
        assert products_span_check(field, fam(4), fam(1))
    with pytest.raises(PreconditionViolated):
        products_span_check(field, fam(2), fam(2))
