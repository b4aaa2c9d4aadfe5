"""Certified small primitive elements, including non-Galois fields.

The search uses the exact minimal-polynomial-degree criterion, so it works
for any number field; the certified bound is (n-1)|D|^(1/n) on every
embedding of the result.
"""

from fractions import Fraction

from normbasis import (FieldSpec, UniPoly, catalog_field, compute_embeddings,
                       find_primitive_element, make_field)
from normbasis.exact import fr, fr_str


def power_basis(coeffs, label):
    n = len(coeffs) - 1
    return make_field(FieldSpec(UniPoly(coeffs),
                                [[fr(int(i == j)) for j in range(n)]
                                 for i in range(n)],
                                label=label, maximal=True))


fields = [catalog_field("quadratic", 5),
          catalog_field("cyclotomic", 7),
          power_basis([-2, 0, 0, 1], "Q(2^(1/3))"),       # not Galois
          power_basis([-2, 0, 0, 0, 1], "Q(2^(1/4))")]    # not Galois

for field in fields:
    es = compute_embeddings(field)
    cert = find_primitive_element(field, es)
    print(f"=== {field.label}: degree {field.n}, disc {field.disc} ===")
    print(f"  alpha = {[fr_str(c) for c in cert.alpha.coords]} (power basis)")
    print(f"  minimal polynomial: {[fr_str(c) for c in cert.minpoly.coeffs]}"
          f" (degree {cert.minpoly.degree} = n)")
    print(f"  |sigma_i(alpha)| <= (n-1)|D|^(1/n) ~ {float(cert.bound.mid):.4f}:"
          f" status {cert.status}")
    print()
