import random
from fractions import Fraction

import pytest

from normbasis import embeddings as emb
from normbasis.exact import UniPoly, fr
from normbasis.galois import compute_galois_action
from normbasis.normal_basis import is_normal_basis
from normbasis.numberfield import FieldSpec, catalog_field, make_field

# degree-4 biquadratic field Q(sqrt2, sqrt3): x^4 - 10 x^2 + 1 with its
# maximal order (disc 2304, Klein four group)
BIQUADRATIC_SPEC = FieldSpec(
    UniPoly([1, 0, -10, 0, 1]),
    [[fr(c) for c in row] for row in [
        [1, 0, 0, 0],
        [0, Fraction(-9, 2), 0, Fraction(1, 2)],
        [0, Fraction(11, 2), 0, Fraction(-1, 2)],
        [Fraction(-5, 4), Fraction(-9, 4), Fraction(1, 4), Fraction(1, 4)],
    ]],
    label="Q(sqrt2,sqrt3)", maximal=True)

CORPUS_BUILDERS = {
    "Q(i)": lambda: catalog_field("quadratic", -1),
    "Q(sqrt2)": lambda: catalog_field("quadratic", 2),
    "Q(sqrt5)": lambda: catalog_field("quadratic", 5),
    "Q(sqrt-3)": lambda: catalog_field("quadratic", -3),
    "Q(zeta5)": lambda: catalog_field("cyclotomic", 5),
    "Q(zeta7)": lambda: catalog_field("cyclotomic", 7),
    "Q(zeta8)": lambda: catalog_field("cyclotomic", 8),
    "Q(sqrt2,sqrt3)": lambda: make_field(BIQUADRATIC_SPEC),
}


def power_basis_spec(coeffs, label):
    n = len(coeffs) - 1
    return FieldSpec(UniPoly(coeffs),
                     [[fr(int(i == j)) for j in range(n)] for i in range(n)],
                     label=label, maximal=True)

NON_GALOIS_BUILDERS = {
    "Q(2^(1/3))": lambda: make_field(power_basis_spec([-2, 0, 0, 1], "Q(2^(1/3))")),
    "Q(2^(1/4))": lambda: make_field(power_basis_spec([-2, 0, 0, 0, 1], "Q(2^(1/4))")),
}


@pytest.fixture(scope="session")
def corpus():
    """label -> (field, embeddings, galois action) for the Galois corpus."""
    out = {}
    for label, build in CORPUS_BUILDERS.items():
        field = build()
        es = emb.compute_embeddings(field)
        out[label] = (field, es, compute_galois_action(field, es))
    return out


@pytest.fixture(scope="session")
def non_galois():
    out = {}
    for label, build in NON_GALOIS_BUILDERS.items():
        field = build()
        out[label] = (field, emb.compute_embeddings(field))
    return out


def random_integral_element(field, rng, spread=3):
    """Random nonzero element of the verified order (integral-basis combo)."""
    while True:
        coords = [rng.randint(-spread, spread) for _ in range(field.n)]
        if any(coords):
            return field.element_from_basis_coords(coords)


def random_normal_basis_integer(field, action, rng, spread=3):
    while True:
        beta = random_integral_element(field, rng, spread)
        if is_normal_basis(field, action, beta):
            return beta


@pytest.fixture
def rng():
    return random.Random(20260824)


# one PASS/FAIL line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
